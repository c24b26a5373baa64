#!/usr/bin/env python3
"""Scan <h_PW, alpha> >= -1 over Phi(G/P_beta) for every maximal parabolic and degree.

    python scripts/pw_lift_scan.py A2 G2 Sp4 Spin7 Sp6 Spin8 Spin9 Sp8 F4
"""

import sys

from qhorn.horn import check_pw_lift
from qhorn.rootsys import parse_group


def main(argv):
    groups = argv or ["A2", "G2", "Sp(4)", "Spin(7)", "Sp(6)", "Spin(8)", "Spin(9)", "Sp(8)", "F4"]
    total = 0
    for g in groups:
        rep = check_pw_lift(parse_group(g))
        print("\n".join(rep.lines()))
        total += len(rep.violations)
    print(f"# total violations: {total}")
    return 1 if total else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
