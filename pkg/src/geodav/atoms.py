"""Atoms of the monoid of product-one sequences and the Davenport constants."""

from __future__ import annotations

from .group import Automorphisms, Group
from .levels import IncompleteError, LevelSets, grow, seed
from .sequences import ProductSets, Seq, remove_one, splittings


def enumerate_atoms(G: Group, aut: Automorphisms, max_len: int | None = None,
                    resume: LevelSets | None = None, deadline: float | None = None,
                    on_close=None) -> LevelSets:
    """All atoms, level by level; level ``k+1`` comes from splittings of level ``k``."""
    if max_len is None:
        max_len = G.order + 1
    ps = ProductSets(G)
    result = resume if resume is not None else seed("atoms", aut, 1, [(0,)])
    return grow(result, aut,
                candidates=lambda S: splittings(G, S),
                accept=lambda C, k: ps.is_atom(C),
                max_len=max_len, deadline=deadline, on_close=on_close)


def large_davenport(levels: LevelSets) -> int:
    """Maximal atom length, certified by the first empty level."""
    if not levels.complete:
        raise IncompleteError(f"atom levels stop at {levels.last_closed} without an empty level")
    return levels.exhausted_at - 1


def _extensions(G: Group, S: Seq):
    for h in range(1, G.order):
        yield tuple(sorted(S + (h,)))


def free_levels(G: Group, aut: Automorphisms, max_len: int | None = None,
                resume: LevelSets | None = None, deadline: float | None = None,
                on_close=None) -> LevelSets:
    """Product-one free sequences, level by level, up to automorphism."""
    if max_len is None:
        max_len = G.order
    ps = ProductSets(G)
    result = resume if resume is not None else seed("free", aut, 1, [(g,) for g in range(1, G.order)])

    def accept(C: Seq, k: int) -> bool:
        # C is free iff each one-shorter subsequence is free and C itself is not product-one
        below = result.members(k - 1)
        return all(remove_one(C, g) in below for g in set(C)) and not ps.has_one(C)

    return grow(result, aut, candidates=lambda S: _extensions(G, S), accept=accept,
                max_len=max_len, deadline=deadline, on_close=on_close)


def small_davenport(G: Group, aut: Automorphisms, levels: LevelSets | None = None) -> int:
    """Maximal length of a product-one free sequence."""
    if levels is None:
        levels = free_levels(G, aut)
    if not levels.complete:
        raise IncompleteError(f"free-sequence levels stop at {levels.last_closed} without an empty level")
    return levels.exhausted_at - 1
