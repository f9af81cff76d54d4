"""Level-wise search over sequences with orbit pruning.

Level ``k`` holds canonical representatives of the accepted sequences of
length ``k`` and the union of their Aut(G)-orbits.  Level ``k+1`` candidates
are produced from level-``k`` representatives only; a candidate is tested once
per orbit and the whole orbit is then filed as accepted or rejected.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .group import Automorphisms
from .sequences import Seq, orbit_images

log = logging.getLogger(__name__)


class IncompleteError(RuntimeError):
    """A constant was requested from levels that were not searched to exhaustion."""


@dataclass
class Level:
    reps: list[Seq]
    orbit_union: set[Seq]

    def __eq__(self, other) -> bool:
        return isinstance(other, Level) and self.reps == other.reps and self.orbit_union == other.orbit_union


@dataclass
class LevelSets:
    kind: str
    levels: dict[int, Level] = field(default_factory=dict)
    exhausted_at: int | None = None
    elapsed: float = 0.0

    @property
    def complete(self) -> bool:
        return self.exhausted_at is not None

    @property
    def last_closed(self) -> int:
        return max(self.levels, default=0)

    def reps(self, k: int) -> list[Seq]:
        lev = self.levels.get(k)
        return lev.reps if lev else []

    def members(self, k: int) -> set[Seq]:
        lev = self.levels.get(k)
        return lev.orbit_union if lev else set()

    def all_members(self) -> set[Seq]:
        out: set[Seq] = set()
        for lev in self.levels.values():
            out |= lev.orbit_union
        return out

    def all_reps(self) -> list[Seq]:
        return [S for k in sorted(self.levels) for S in self.levels[k].reps]

    def max_nonempty(self) -> int:
        return max((k for k, lev in self.levels.items() if lev.reps), default=0)

    def counts(self) -> dict[int, dict[str, int]]:
        return {k: {"reps": len(lev.reps), "members": len(lev.orbit_union)}
                for k, lev in sorted(self.levels.items())}

    def __eq__(self, other) -> bool:
        return (isinstance(other, LevelSets) and self.kind == other.kind
                and self.levels == other.levels and self.exhausted_at == other.exhausted_at)


def orbit_with_rep(aut: Automorphisms, S: Seq) -> tuple[Seq, list[Seq]]:
    """(canonical representative, all orbit members) of ``S``."""
    if len(aut) == 1 or not S:
        return S, [S]
    rows = np.unique(orbit_images(aut, S), axis=0)
    members = [tuple(r) for r in rows.tolist()]
    return members[0], members


def grow(result: LevelSets, aut: Automorphisms,
         candidates: Callable[[Seq], Iterable[Seq]],
         accept: Callable[[Seq, int], bool],
         max_len: int,
         deadline: float | None = None,
         on_close: Callable[[LevelSets, int], None] | None = None) -> LevelSets:
    """Extend ``result`` level by level until an empty level, ``max_len``, or the deadline.

    ``result`` must already hold at least one closed level.  ``on_close`` runs
    after each level closes (index maintenance, checkpointing).
    """
    k = result.last_closed
    t0 = time.perf_counter()
    while result.exhausted_at is None and k < max_len:
        if deadline is not None and time.monotonic() > deadline:
            log.info("%s: deadline reached after level %d", result.kind, k)
            break
        k += 1
        accepted: set[Seq] = set()
        rejected: set[Seq] = set()
        reps: list[Seq] = []
        for S in result.reps(k - 1):
            for C in candidates(S):
                if C in accepted or C in rejected:
                    continue
                rep, members = orbit_with_rep(aut, C)
                if accept(C, k):
                    reps.append(rep)
                    accepted.update(members)
                else:
                    rejected.update(members)
        level = Level(sorted(reps), accepted)
        result.levels[k] = level
        log.info("%s: level %d closed with %d reps (%d members)", result.kind, k, len(reps), len(accepted))
        if not reps:
            result.exhausted_at = k
        if on_close is not None:
            on_close(result, k)
    result.elapsed += time.perf_counter() - t0
    return result


def seed(kind: str, aut: Automorphisms, k: int, members: Iterable[Seq]) -> LevelSets:
    """LevelSets with level ``k`` filled by the orbits of ``members``."""
    reps, union = set(), set()
    for S in members:
        rep, orb = orbit_with_rep(aut, S)
        reps.add(rep)
        union.update(orb)
    out = LevelSets(kind)
    out.levels[k] = Level(sorted(reps), union)
    if not reps:
        out.exhausted_at = k
    return out
