import pytest
from hypothesis import settings, strategies as st

from twistcong.partition import Partition

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, n=None, max_n=4):
    n = n or draw(st.integers(1, max_n))
    labels = draw(st.lists(st.integers(0, 2 * n - 1), min_size=2 * n, max_size=2 * n))
    return Partition.from_labels(n, labels)


@st.composite
def partition_tuples(draw, k, max_n=4):
    n = draw(st.integers(1, max_n))
    return tuple(draw(partitions(n=n)) for _ in range(k))


ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance(request):
    lines = request.config.stash[ACCEPTANCE_KEY]

    def report(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        print(line)
        lines.append(line)

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash[ACCEPTANCE_KEY]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
