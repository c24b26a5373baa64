#!/usr/bin/env python3
"""Reproduce the inequality/vertex/facet table and diff it against the reference values.

    python scripts/reference_table.py                    # G2, Sp(4), Spin(7), Sp(6)
    python scripts/reference_table.py --groups Spin8     # slower rows
    python scripts/reference_table.py --skip-polytope --groups Spin9 Sp8
"""

from __future__ import annotations

import argparse
import sys
import time

from qhorn.cli import RunConfig, table_rows

REFERENCE = {
    "G2": (103, 82, 79, 48, 30, 48),
    "Sp(4)": (43, 42, 41, 38, 13, 38),
    "Spin(7)": (378, 322, 289, 191, 65, 191),
    "Sp(6)": (363, 329, 296, 200, 66, 200),
    "Spin(8)": (1434, 1347, 1164, 771, 137, 771),
    "Spin(9)": (4940, 3231, 2748, 1046, 385, 1046),
    "Sp(8)": (4679, 3604, 3130, 1204, 444, 1204),
    "Sp(10)": (75665, 44211, 38795, 7310, 3162, 7310),
    "Sp(12)": (1422545, 556383, 500130, 43136, 20839, 43136),
    "Spin(10)": (35590, 27814, 23050, 6538, 1296, 6538),
    "Spin(11)": (79813, 34152, 28636, 5734, 2236, 5734),
    "Spin(12)": (889751, 485229, 407856, 47141, None, None),
    "Spin(13)": (1499669, 356942, 300776, 30753, 12269, 30753),
}
COLUMNS = ("max", "tw", "twbk", "th3", "vertices", "facets")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="+", default=["G2", "Sp(4)", "Spin(7)", "Sp(6)"])
    ap.add_argument("--skip-polytope", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--max-rank", type=int, default=4, help="raise to 5 or 6 for the stretch rows")
    args = ap.parse_args(argv)

    cfg = RunConfig(groups=args.groups, jobs=args.jobs, skip_polytope=args.skip_polytope, max_rank=args.max_rank)
    t0 = time.perf_counter()
    rows = table_rows(cfg)
    mismatches = 0
    print(f"{'group':>8} " + " ".join(f"{c:>9}" for c in COLUMNS) + "  seconds")
    for r in rows:
        ref = REFERENCE.get(r["group"])
        cells = []
        for k, c in enumerate(COLUMNS):
            got = r[c]
            mark = ""
            if got is not None and ref is not None and ref[k] is not None and got != ref[k]:
                mark = f"!={ref[k]}"
                mismatches += c != "twbk"
            cells.append(f"{'?' if got is None else got}{mark}".rjust(9))
        print(f"{r['group']:>8} " + " ".join(cells) + f"  {r['seconds']:7.1f}")
    print(f"total {time.perf_counter() - t0:.1f}s, {mismatches} gated mismatches (TWBK is reported only)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
