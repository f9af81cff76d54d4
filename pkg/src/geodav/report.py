"""Per-group analysis reports, level caches, and table/JSON/CSV emission."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .atoms import enumerate_atoms, free_levels
from .cayley import directed_cayley_diameter
from .geodesic import build_index, dcd_star, geodesic_levels
from .group import Automorphisms, Group, automorphisms, build_group
from .levels import Level, LevelSets, orbit_with_rep
from .sequences import format_seq, parse_seq

log = logging.getLogger(__name__)

ALL_STATS = ("d", "D", "GD", "dcdstar", "ddiam")
CACHE_FORMAT = "geodav-levels"
CACHE_VERSION = 1
INCOMPLETE = "incomplete"


class CacheError(RuntimeError):
    pass


class CacheVersionError(CacheError):
    pass


class FingerprintMismatchError(CacheError):
    pass


class TruncatedCacheError(CacheError):
    pass


class InvariantViolation(AssertionError):
    """Computed constants contradict a proven inequality."""


def fingerprint(G: Group) -> str:
    h = hashlib.sha256()
    h.update(b"geodav-table")
    h.update(int(G.order).to_bytes(4, "little"))
    h.update(G.table.astype("<i4").tobytes())
    return h.hexdigest()


# ---------------------------------------------------------------------------
# level caches


def save_levels(levels: LevelSets, path: str | Path, fp: str) -> None:
    """Write reps per closed level; the file is replaced atomically."""
    path = Path(path)
    doc = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "fingerprint": fp,
        "kind": levels.kind,
        "first_level": min(levels.levels, default=1),
        "last_closed": levels.last_closed,
        "exhausted_at": levels.exhausted_at,
        "levels": {str(k): [format_seq(S) for S in levels.levels[k].reps] for k in sorted(levels.levels)},
        "end": True,
    }
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(doc, indent=1))
    os.replace(tmp, path)


def load_levels(path: str | Path, fp: str, aut: Automorphisms):
    """Read a level cache and rebuild orbit unions (and the geodesic index)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise TruncatedCacheError(f"{path}: unreadable cache ({exc})") from exc
    if not isinstance(doc, dict) or doc.get("format") != CACHE_FORMAT:
        raise TruncatedCacheError(f"{path}: not a level cache")
    if doc.get("version") != CACHE_VERSION:
        raise CacheVersionError(f"{path}: cache version {doc.get('version')} != {CACHE_VERSION}")
    if doc.get("fingerprint") != fp:
        raise FingerprintMismatchError(f"{path}: cache belongs to a different group table")
    if not doc.get("end"):
        raise TruncatedCacheError(f"{path}: cache file is truncated")
    try:
        first, last = int(doc["first_level"]), int(doc["last_closed"])
        raw = doc["levels"]
        if sorted(int(k) for k in raw) != list(range(first, last + 1)):
            raise TruncatedCacheError(f"{path}: levels {first}..{last} are not all present")
        levels = LevelSets(doc["kind"], exhausted_at=doc["exhausted_at"])
        for k in range(first, last + 1):
            reps = [parse_seq(t) for t in raw[str(k)]]
            union: set = set()
            for S in reps:
                union.update(orbit_with_rep(aut, S)[1])
            levels.levels[k] = Level(reps, union)
    except (KeyError, TypeError, ValueError) as exc:
        raise TruncatedCacheError(f"{path}: malformed cache ({exc})") from exc
    index = build_index(levels) if levels.kind == "geodesic" else None
    return levels, index


# ---------------------------------------------------------------------------
# analysis


@dataclass
class AnalysisConfig:
    stats: tuple[str, ...] = ALL_STATS
    max_len: int | None = None
    threads: int = 1
    cache_dir: Path | None = None
    timeout: float | None = None
    fmt: str = "table"


@dataclass
class AnalysisReport:
    group_spec: str
    order: int
    fingerprint: str
    stats: dict[str, int | str] = field(default_factory=dict)
    level_counts: dict[str, dict] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)
    engine_version: str = __version__
    notes: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return all(v != INCOMPLETE for v in self.stats.values())

    def check_invariants(self) -> list[str]:
        """Violated inequalities among the complete stats (empty when consistent)."""
        s = {k: v for k, v in self.stats.items() if v != INCOMPLETE}
        bad = []
        chain = [k for k in ("dcdstar", "ddiam", "GD", "D") if k in s]
        val = {"dcdstar": s.get("dcdstar"), "ddiam": s.get("ddiam"),
               "GD": s["GD"] - 1 if "GD" in s else None, "D": s["D"] - 1 if "D" in s else None}
        for a, b in zip(chain, chain[1:]):
            if val[a] > val[b]:
                bad.append(f"{a} <= {b} chain broken ({val[a]} > {val[b]})")
        if "d" in s and "D" in s and s["D"] < s["d"] + 1:
            bad.append(f"D >= d + 1 broken (D={s['D']}, d={s['d']})")
        return bad

    def to_dict(self) -> dict:
        return asdict(self)


def analyze(spec: str, config: AnalysisConfig | None = None) -> AnalysisReport:
    config = config or AnalysisConfig()
    unknown = set(config.stats) - set(ALL_STATS)
    if unknown:
        raise ValueError(f"unknown stats {sorted(unknown)}; choose from {ALL_STATS}")
    G = build_group(spec)
    fp = fingerprint(G)
    report = AnalysisReport(spec, G.order, fp)
    deadline = time.monotonic() + config.timeout if config.timeout else None
    t = time.perf_counter()
    aut = automorphisms(G)
    report.timings["automorphisms"] = time.perf_counter() - t
    report.level_counts["automorphisms"] = {"count": len(aut)}
    wanted = [s for s in ALL_STATS if s in config.stats]

    def searched(kind, fn):
        t0 = time.perf_counter()
        levels = _levels_search(kind, fn, G, aut, fp, config, deadline)
        report.level_counts[kind] = {str(k): v for k, v in levels.counts().items()}
        return levels, time.perf_counter() - t0

    if "d" in wanted:
        levels, dt = searched("free", free_levels)
        report.stats["d"] = levels.exhausted_at - 1 if levels.complete else INCOMPLETE
        report.timings["d"] = dt
    if "D" in wanted:
        levels, dt = searched("atoms", enumerate_atoms)
        report.stats["D"] = levels.exhausted_at - 1 if levels.complete else INCOMPLETE
        report.timings["D"] = dt
    if "GD" in wanted or "dcdstar" in wanted:
        levels, dt = searched("geodesic", _geodesic_only)
        if "GD" in wanted:
            report.stats["GD"] = levels.exhausted_at - 1 if levels.complete else INCOMPLETE
            report.timings["GD"] = dt
        if "dcdstar" in wanted:
            t0 = time.perf_counter()
            report.stats["dcdstar"] = dcd_star(G, levels) if levels.complete else INCOMPLETE
            report.timings["dcdstar"] = dt + time.perf_counter() - t0
    if "ddiam" in wanted:
        if deadline is not None and time.monotonic() > deadline:
            report.stats["ddiam"] = INCOMPLETE
        else:
            t0 = time.perf_counter()
            report.stats["ddiam"] = directed_cayley_diameter(G, aut, threads=config.threads)
            report.timings["ddiam"] = time.perf_counter() - t0
    report.stats = {k: report.stats[k] for k in ALL_STATS if k in report.stats}
    s = report.stats
    if s.get("dcdstar") not in (None, INCOMPLETE) and s.get("ddiam") not in (None, INCOMPLETE) \
            and s["dcdstar"] != s["ddiam"]:
        report.notes.append(f"dcd* = {s['dcdstar']} differs from ddiam = {s['ddiam']}")
    return report


def _geodesic_only(G, aut, max_len, resume, deadline, on_close):
    return geodesic_levels(G, aut, max_len=max_len, resume=resume, deadline=deadline, on_close=on_close)[1]


def _levels_search(kind, fn, G, aut, fp, config, deadline) -> LevelSets:
    path = None
    resume = None
    if config.cache_dir is not None:
        cache_dir = Path(config.cache_dir)
        cache_dir.mkdir(parents=True, exist_ok=True)
        path = cache_dir / f"{fp[:24]}-{kind}.json"
        if path.exists():
            resume, _ = load_levels(path, fp, aut)
            log.info("%s: resuming %s after level %d", G.name, kind, resume.last_closed)
    if resume is not None and resume.complete:
        return resume

    def checkpoint(levels: LevelSets, k: int) -> None:
        if path is not None:
            save_levels(levels, path, fp)

    levels = fn(G, aut, max_len=config.max_len, resume=resume, deadline=deadline, on_close=checkpoint)
    if path is not None:
        save_levels(levels, path, fp)
    return levels


# ---------------------------------------------------------------------------
# output


COLUMNS = ("dcdstar", "d", "GD", "D", "ddiam")


def sort_reports(reports: list[AnalysisReport]) -> list[AnalysisReport]:
    return sorted(reports, key=lambda r: (r.order, r.group_spec))


def format_table(reports: list[AnalysisReport]) -> str:
    rows = [("group", "order") + COLUMNS]
    for r in sort_reports(reports):
        rows.append((r.group_spec, str(r.order)) + tuple(str(r.stats.get(c, "-")) for c in COLUMNS))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) if i == 0 else cell.rjust(w) for i, (cell, w) in enumerate(zip(row, widths)))
             for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def format_csv(reports: list[AnalysisReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("group", "order") + COLUMNS)
    for r in sort_reports(reports):
        w.writerow((r.group_spec, r.order) + tuple(r.stats.get(c, "") for c in COLUMNS))
    return buf.getvalue()


def format_json(reports: list[AnalysisReport]) -> str:
    return json.dumps([r.to_dict() for r in sort_reports(reports)], indent=2)


def render(reports: list[AnalysisReport], fmt: str) -> str:
    if fmt == "table":
        return format_table(reports)
    if fmt == "csv":
        return format_csv(reports)
    if fmt == "json":
        return format_json(reports)
    raise ValueError(f"unknown format {fmt!r}")
