"""Directed geodesic atoms: GD(G), dcd*(G), and Cayley diameters read off the atom list.

A product-one sequence S is a directed geodesic atom when some g in supp(S)
has ``l_B(g^-1) = |S| - 1`` for ``B = supp(S * g^[-1])``.  The level-wise
search keeps, per element g, the inclusion-minimal reduced supports
``supp(T * g^[-1])`` over recorded geodesic atoms T, which is all the
non-geodesic test needs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .cayley import NotGeneratedError, bfs_distances, word_length
from .group import Automorphisms, Group, subgroup_closure
from .levels import IncompleteError, LevelSets, grow, seed
from .sequences import (Seq, is_product_one, remove_one, splittings, support,
                        support_mask)


@dataclass
class GeoIndex:
    """Per element g: antichain of minimal masks ``supp(T * g^[-1])`` with the length of T."""

    minimal: dict[int, list[tuple[int, int]]] = field(default_factory=lambda: defaultdict(list))
    max_length: int = 0

    def add(self, T: Seq) -> None:
        self.max_length = max(self.max_length, len(T))
        for g in set(T):
            self._insert(g, support_mask(remove_one(T, g)), len(T))

    def _insert(self, g: int, mask: int, length: int) -> None:
        chain = self.minimal[g]
        for m, _ in chain:
            if m & ~mask == 0:
                return
        chain[:] = [(m, L) for m, L in chain if mask & ~m != 0]
        chain.append((mask, length))

    def witnessed(self, g: int, mask: int) -> bool:
        """Some recorded T through g has reduced support inside ``mask``."""
        for m, _ in self.minimal.get(g, ()):
            if m & ~mask == 0:
                return True
        return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeoIndex):
            return False
        keys = set(self.minimal) | set(other.minimal)
        return all(sorted(self.minimal.get(g, [])) == sorted(other.minimal.get(g, [])) for g in keys)


def is_directed_geodesic_atom(G: Group, S: Seq) -> bool:
    if not S:
        raise ValueError("empty sequence")
    if not is_product_one(G, S):
        raise ValueError("sequence is not product-one")
    target = len(S) - 1
    for g in set(S):
        dist = bfs_distances(G, support(remove_one(S, g)))[G.inv[g]]
        if dist == target:
            return True
    return False


def ng(G: Group, S_prime: Seq, index: GeoIndex) -> bool:
    """True iff ``S_prime`` is not a directed geodesic atom, judged from shorter recorded ones.

    ``S_prime`` is assumed product-one and ``index`` must hold every geodesic
    atom shorter than it.
    """
    for g in set(S_prime):
        if not index.witnessed(g, support_mask(remove_one(S_prime, g))):
            return False
    return True


def geodesic_levels(G: Group, aut: Automorphisms, max_len: int | None = None,
                    resume: LevelSets | None = None, deadline: float | None = None,
                    on_close=None) -> tuple[int | None, LevelSets, GeoIndex]:
    """Directed geodesic atoms level by level; returns (GD or None if capped, levels, index)."""
    if max_len is None:
        max_len = G.order + 1
    if resume is not None:
        levels = resume
        index = build_index(levels)
    else:
        levels = seed("geodesic", aut, 1, [(0,)])
        index = GeoIndex()
        index.add((0,))

    def close(result: LevelSets, k: int) -> None:
        for T in result.members(k):
            index.add(T)
        if on_close is not None:
            on_close(result, k)

    grow(levels, aut,
         candidates=lambda S: splittings(G, S),
         accept=lambda C, k: not ng(G, C, index),
         max_len=max_len, deadline=deadline, on_close=close)
    gd = levels.exhausted_at - 1 if levels.complete else None
    return gd, levels, index


def build_index(levels: LevelSets) -> GeoIndex:
    index = GeoIndex()
    for k in sorted(levels.levels):
        for T in levels.levels[k].orbit_union:
            index.add(T)
    return index


def geodesic_davenport(levels: LevelSets) -> int:
    if not levels.complete:
        raise IncompleteError("geodesic levels were not searched to exhaustion")
    return levels.exhausted_at - 1


def dcd_star(G: Group, levels: LevelSets) -> int:
    """One less than the longest geodesic atom whose support generates ``G``."""
    if not levels.complete:
        raise IncompleteError("geodesic levels were not searched to exhaustion")
    for k in range(levels.exhausted_at - 1, 0, -1):
        for S in levels.reps(k):
            if len(subgroup_closure(G, S)) == G.order:
                return k - 1
    raise RuntimeError("no geodesic atom with generating support; levels are inconsistent")


def _require_complete(levels: LevelSets) -> None:
    if not levels.complete:
        raise IncompleteError("geodesic levels were not searched to exhaustion")


def ga_for_generating_set(G: Group, B, levels: LevelSets, literal: bool = False) -> set[Seq]:
    """Geodesic atoms whose maximal length gives diam Cay(G, B).

    For each g, keep the shortest atoms S with g in supp(S) and
    ``supp(S * g^[-1])`` inside B; the shortest length is ``l_B(g^-1) + 1``.
    With ``literal=True`` the g in B are not selected per element: every atom
    with support inside B is kept, which can overshoot (C3, B = {1, 2} keeps
    1*1*1 although the diameter is 1).
    """
    _require_complete(levels)
    B = set(B)
    bmask = support_mask(B)
    atoms = levels.all_members()
    chosen: set[Seq] = set()
    if literal:
        chosen = {S for S in atoms if support_mask(S) & ~bmask == 0}
    for g in G.elements:
        if literal and g in B:
            continue
        through = [S for S in atoms if g in S and support_mask(remove_one(S, g)) & ~bmask == 0]
        if through:
            shortest = min(len(S) for S in through)
            chosen.update(S for S in through if len(S) == shortest)
    return chosen


def diameter_via_ga(G: Group, B, levels: LevelSets) -> int:
    B = set(B)
    if len(subgroup_closure(G, B)) != G.order:
        raise NotGeneratedError(f"{sorted(B)} does not generate the group")
    return max(len(S) for S in ga_for_generating_set(G, B, levels)) - 1


def generates_via_ga(G: Group, B, levels: LevelSets) -> bool:
    """Every g lies in a geodesic atom S with ``supp(S * g^[-1])`` inside ``B``."""
    _require_complete(levels)
    bmask = support_mask(set(B))
    index = build_index(levels)
    return all(index.witnessed(g, bmask) for g in G.elements)


def lemma_atom(G: Group, word) -> Seq | None:
    """If the word is geodesic over its own support, the word plus the inverse of its product."""
    word = list(word)
    if not word:
        return None
    h = G.product(word)
    try:
        if word_length(G, set(word), h) != len(word):
            return None
    except NotGeneratedError:
        return None
    return tuple(sorted(word + [G.inv[h]]))
