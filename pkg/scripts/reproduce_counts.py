"""Print the lattice-size table, cross-checked against the brute-force oracle where it fits."""

import sys

from twistcong.cli import run

if __name__ == "__main__":
    max_n = sys.argv[1] if len(sys.argv) > 1 else "4"
    max_d = sys.argv[2] if len(sys.argv) > 2 else "3"
    sys.exit(run(["count-table", "--max-n", max_n, "--max-d", max_d, "--oracle"]))
