"""Directed Cayley digraphs: word lengths, diameters, and the directed Cayley diameter."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .group import Automorphisms, Group, subgroup_closure
from .sequences import canonical_set


class NotGeneratedError(ValueError):
    """The target is outside the subgroup generated by the given set."""


@dataclass(frozen=True)
class GeneratingSet:
    elements: frozenset[int]
    closure: frozenset[int]
    irredundant: bool

    @classmethod
    def of(cls, G: Group, B: Iterable[int]) -> "GeneratingSet":
        B = frozenset(B)
        H = subgroup_closure(G, B)
        irr = all(subgroup_closure(G, B - {b}) != H for b in B)
        return cls(B, H, irr)


def bfs_distances(G: Group, B: Iterable[int]) -> list[int | None]:
    """Distances from the identity along right-multiplication edges; ``None`` if unreachable."""
    gens = sorted(set(B))
    dist: list[int | None] = [None] * G.order
    dist[0] = 0
    frontier = [0]
    mul = G.mul
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            row = mul[x]
            for b in gens:
                y = row[b]
                if dist[y] is None:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def word_length(G: Group, B: Iterable[int], g: int) -> int:
    """Least number of factors from ``B`` whose product is ``g``."""
    d = bfs_distances(G, B)[g]
    if d is None:
        raise NotGeneratedError(f"element {g} is not in the subgroup generated by {sorted(set(B))}")
    return d


def digraph_diameter(G: Group, B: Iterable[int]) -> int:
    B = list(B)
    dist = bfs_distances(G, B)
    if any(d is None for d in dist):
        raise NotGeneratedError(f"{sorted(set(B))} does not generate the group")
    return max(dist)


def all_pairs_diameter(G: Group, B: Iterable[int]) -> int:
    """Diameter as the maximum over every source vertex (no vertex-transitivity shortcut)."""
    gens = sorted(set(B))
    best = 0
    mul = G.mul
    for s in G.elements:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for b in gens:
                    y = mul[x][b]
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if len(dist) < G.order:
            raise NotGeneratedError(f"{gens} does not generate the group")
        best = max(best, max(dist.values()))
    return best


def irredundant_generating_sets(G: Group, aut: Automorphisms) -> Iterator[tuple[int, ...]]:
    """One representative per Aut(G)-orbit of irredundant generating sets.

    Subsets are grown one element at a time, always by an element outside the
    current closure, and deduplicated up to automorphism at every size.
    """
    n = G.order
    if n == 1:
        yield ()
        return
    level: list[tuple[int, ...]] = [()]
    while level:
        seen: set[tuple[int, ...]] = set()
        nxt = []
        for B in level:
            H = subgroup_closure(G, B)
            for x in range(1, n):
                if x in H:
                    continue
                C = canonical_set(aut, B + (x,))
                if C in seen:
                    continue
                seen.add(C)
                if len(subgroup_closure(G, C)) == n:
                    if GeneratingSet.of(G, C).irredundant:
                        yield C
                else:
                    nxt.append(C)
        level = sorted(nxt)


def directed_cayley_diameter(G: Group, aut: Automorphisms, threads: int = 1) -> int:
    """Maximum Cayley-digraph diameter over all generating sets of ``G``."""
    sets = list(irredundant_generating_sets(G, aut))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            diams = list(pool.map(lambda B: digraph_diameter(G, B), sets))
    else:
        diams = [digraph_diameter(G, B) for B in sets]
    return max(diams)
