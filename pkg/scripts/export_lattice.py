"""Write Cong(Ptw(n,d)) as DOT and JSON: export_lattice.py N D OUT_PREFIX."""

import sys

from twistcong.cli import run

if __name__ == "__main__":
    if len(sys.argv) != 4:
        sys.exit(__doc__)
    n, d, prefix = sys.argv[1:]
    sys.exit(run(["lattice", "--n", n, "--d", d, "--dot", f"{prefix}.dot", "--json", f"{prefix}.json", "--rank"]))
