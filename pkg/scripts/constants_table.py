"""Print dcd*, d, GD, D, ddiam for a batch of groups.

Desk-scale default: every built-in group of order <= 16 plus the two order-16
catalogue fixtures.  ``--long`` adds larger groups (orders up to 32 and A5,
whose D is skipped); expect hours, and use --cache-dir so runs can resume.

    python scripts/constants_table.py [--long] [--format csv] [--cache-dir DIR]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from geodav.catalog import SMALLGROUP_16_3, SMALLGROUP_16_6, builtin_up_to_16
from geodav.report import ALL_STATS, AnalysisConfig, analyze, render

LONG_GROUPS = [
    "dihedral:18", "dihedral:20", "quaternion:16", "direct:dihedral:6;cyclic:3", "alternating:4",
    "symmetric:4", "dihedral:24", "direct:alternating:4;cyclic:2", "dihedral:32", "quaternion:32",
    "abelian:2,2,2,2,2",
]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--long", action="store_true", help="include the long-running stretch groups")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--cache-dir", type=Path, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timeout", type=float, default=None, help="per group, seconds")
    args = p.parse_args(argv)

    specs = builtin_up_to_16() + [SMALLGROUP_16_3, SMALLGROUP_16_6]
    jobs = [(s, ALL_STATS) for s in specs]
    if args.long:
        jobs += [(s, ALL_STATS) for s in LONG_GROUPS]
        jobs.append(("alternating:5", tuple(s for s in ALL_STATS if s != "D")))
    reports = []
    for spec, stats in jobs:
        config = AnalysisConfig(stats=stats, threads=args.threads, cache_dir=args.cache_dir,
                                timeout=args.timeout)
        r = analyze(spec, config)
        reports.append(r)
        print(f"done {spec}: {r.stats}", file=sys.stderr)
        for msg in r.check_invariants():
            print(f"invariant violated [{spec}]: {msg}", file=sys.stderr)
    print(render(reports, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
