"""Command line: ``geodav analyze | atoms | diameter | oracle-check``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .atoms import enumerate_atoms
from .cayley import NotGeneratedError, digraph_diameter
from .geodesic import diameter_via_ga, geodesic_levels
from .group import GroupError, automorphisms, build_group
from .levels import IncompleteError
from .oracle import GuardRailError
from .report import (ALL_STATS, AnalysisConfig, CacheError, analyze, render)
from .sequences import format_seq

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3
EXIT_INVARIANT = 4
EXIT_CACHE = 5

STAT_ALIASES = {"dcd*": "dcdstar", "dcd_star": "dcdstar"}


def _stats(text: str) -> tuple[str, ...]:
    out = []
    for tok in text.split(","):
        tok = STAT_ALIASES.get(tok.strip(), tok.strip())
        if tok not in ALL_STATS:
            raise argparse.ArgumentTypeError(f"unknown stat {tok!r}; choose from {','.join(ALL_STATS)}")
        out.append(tok)
    return tuple(out)


def _gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--gens expects comma-separated element indices, got {text!r}") from None


def cmd_analyze(args) -> int:
    config = AnalysisConfig(stats=args.stats, max_len=args.max_length, threads=args.threads,
                            cache_dir=Path(args.cache_dir) if args.cache_dir else None,
                            timeout=args.timeout, fmt=args.format)
    reports = [analyze(spec, config) for spec in args.group]
    print(render(reports, args.format))
    status = EXIT_OK
    for r in reports:
        for note in r.notes:
            print(f"note [{r.group_spec}]: {note}", file=sys.stderr)
        broken = r.check_invariants()
        if broken:
            for msg in broken:
                print(f"invariant violated [{r.group_spec}]: {msg}", file=sys.stderr)
            status = EXIT_INVARIANT
        elif not r.complete and status == EXIT_OK:
            status = EXIT_INCOMPLETE
    return status


def cmd_atoms(args) -> int:
    G = build_group(args.group)
    aut = automorphisms(G)
    if args.geodesic:
        _, levels, _ = geodesic_levels(G, aut, max_len=args.max_length)
    else:
        levels = enumerate_atoms(G, aut, max_len=args.max_length)
    label = "geodesic atoms" if args.geodesic else "atoms"
    print(f"# {label} of {args.group} (order {G.order}, |Aut| = {len(aut)})")
    for k in sorted(levels.levels):
        lev = levels.levels[k]
        print(f"length {k}: {len(lev.reps)} reps, {len(lev.orbit_union)} members")
        for S in lev.reps:
            print(f"  {format_seq(S)}")
    if not levels.complete:
        print(f"incomplete: stopped at length {levels.last_closed}", file=sys.stderr)
        return EXIT_INCOMPLETE
    print(f"max length {levels.exhausted_at - 1}")
    return EXIT_OK


def cmd_diameter(args) -> int:
    G = build_group(args.group)
    B = args.gens
    if any(not 0 <= b < G.order for b in B):
        raise GroupError(f"generator indices must lie in 0..{G.order - 1}")
    if args.via_ga:
        _, levels, _ = geodesic_levels(G, automorphisms(G))
        print(diameter_via_ga(G, B, levels))
    else:
        print(digraph_diameter(G, B))
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    from .oracle import (MAX_LENGTH, MAX_ORDER, brute_atoms, brute_dcd_star, brute_ddiam,
                         brute_geodesic_atoms, brute_gd, brute_small_davenport)
    from .atoms import small_davenport
    from .cayley import directed_cayley_diameter
    from .geodesic import dcd_star

    G = build_group(args.group)
    if G.order > MAX_ORDER:
        raise GuardRailError(f"oracle-check is limited to order <= {MAX_ORDER}")
    aut = automorphisms(G)
    L = min(G.order + 1, MAX_LENGTH)
    atoms = enumerate_atoms(G, aut)
    gd, geo, _ = geodesic_levels(G, aut)
    checks = [
        ("atoms", brute_atoms(G, L) == atoms.all_members()),
        ("geodesic atoms", brute_geodesic_atoms(G, L) == geo.all_members()),
        ("d", brute_small_davenport(G) == small_davenport(G, aut)),
        ("D", max(map(len, brute_atoms(G, L))) == atoms.exhausted_at - 1),
        ("GD", brute_gd(G) == gd),
        ("dcd*", brute_dcd_star(G) == dcd_star(G, geo)),
        ("ddiam", brute_ddiam(G) == directed_cayley_diameter(G, aut)),
    ]
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geodav", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true", help="log level progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="compute d, D, GD, dcd*, ddiam for one or more groups")
    a.add_argument("--group", action="append", required=True, help="group spec; repeat for several groups")
    a.add_argument("--stats", type=_stats, default=ALL_STATS, help="comma list from d,D,GD,dcdstar,ddiam")
    a.add_argument("--max-length", type=int, default=None)
    a.add_argument("--threads", type=int, default=1)
    a.add_argument("--cache-dir", default=None)
    a.add_argument("--timeout", type=float, default=None, help="seconds; checked at level boundaries")
    a.add_argument("--format", choices=("table", "json", "csv"), default="table")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("atoms", help="list atom (or geodesic atom) representatives per length")
    t.add_argument("--group", required=True)
    t.add_argument("--geodesic", action="store_true")
    t.add_argument("--max-length", type=int, default=None)
    t.set_defaults(func=cmd_atoms)

    d = sub.add_parser("diameter", help="diameter of Cay(G, B)")
    d.add_argument("--group", required=True)
    d.add_argument("--gens", type=_gens, required=True)
    d.add_argument("--via-ga", action="store_true", help="read the diameter off the geodesic atoms")
    d.set_defaults(func=cmd_diameter)

    o = sub.add_parser("oracle-check", help="compare the engine with brute force (small groups only)")
    o.add_argument("--group", required=True)
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(message)s")
    try:
        return args.func(args)
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except (GroupError, GuardRailError, NotGeneratedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IncompleteError as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
