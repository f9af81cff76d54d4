"""Definition-level brute force, for tests only.

Nothing here shares search code with the engine: product sets are built by
naive recursion over orderings, word lengths by a local BFS, and every
multiset or subset is enumerated outright.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .group import Group, subgroup_as_group

MAX_ORDER = 12
MAX_LENGTH = 12
MAX_DDIAM_ORDER = 16


class GuardRailError(ValueError):
    """Input too large for exhaustive search."""


def _guard(G: Group, L: int | None = None, max_order: int = MAX_ORDER) -> None:
    if G.order > max_order:
        raise GuardRailError(f"oracle limited to order <= {max_order}, got {G.order}")
    if L is not None and L > MAX_LENGTH:
        raise GuardRailError(f"oracle limited to length <= {MAX_LENGTH}, got {L}")


@lru_cache(maxsize=None)
def product_set(G: Group, S: tuple[int, ...]) -> frozenset[int]:
    """Products over all orderings of the sorted tuple ``S``: pick the first factor, recurse."""
    if not S:
        return frozenset([0])
    out = set()
    for i in range(len(S)):
        if i and S[i] == S[i - 1]:
            continue
        head = S[i]
        for p in product_set(G, S[:i] + S[i + 1:]):
            out.add(G.mul[head][p])
    return frozenset(out)


def _splits(S: tuple[int, ...]):
    """All ways to write S = T * U as sorted tuples (T, U)."""
    idx = range(len(S))
    seen = set()
    for r in range(len(S) + 1):
        for pick in itertools.combinations(idx, r):
            T = tuple(S[i] for i in pick)
            if T in seen:
                continue
            seen.add(T)
            U = tuple(S[i] for i in idx if i not in pick)
            yield T, U


def oracle_is_product_one(G: Group, S) -> bool:
    return 0 in product_set(G, tuple(sorted(S)))


def oracle_is_atom(G: Group, S) -> bool:
    S = tuple(sorted(S))
    if not S or not oracle_is_product_one(G, S):
        return False
    for T, U in _splits(S):
        if T and U and oracle_is_product_one(G, T) and oracle_is_product_one(G, U):
            return False
    return True


def oracle_is_free(G: Group, S) -> bool:
    S = tuple(sorted(S))
    return not any(T and oracle_is_product_one(G, T) for T, _ in _splits(S))


def _lengths(G: Group, B) -> dict[int, int]:
    dist = {0: 0}
    queue = [0]
    for x in queue:
        for b in B:
            y = G.mul[x][b]
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def oracle_is_geodesic_atom(G: Group, S) -> bool:
    S = tuple(sorted(S))
    if not oracle_is_product_one(G, S):
        return False
    for g in set(S):
        rest = list(S)
        rest.remove(g)
        if _lengths(G, set(rest)).get(G.inv[g]) == len(S) - 1:
            return True
    return False


def _multisets(G: Group, L: int):
    for k in range(1, L + 1):
        yield from itertools.combinations_with_replacement(range(G.order), k)


def brute_atoms(G: Group, L: int) -> set[tuple[int, ...]]:
    _guard(G, L)
    return {S for S in _multisets(G, L) if oracle_is_atom(G, S)}


def brute_geodesic_atoms(G: Group, L: int) -> set[tuple[int, ...]]:
    _guard(G, L)
    return {S for S in _multisets(G, L) if oracle_is_geodesic_atom(G, S)}


def brute_small_davenport(G: Group) -> int:
    """Longest free multiset; lengths beyond |G| - 1 cannot be free."""
    _guard(G, G.order - 1)
    best = 0
    for S in _multisets(G, G.order):
        if len(S) > best and oracle_is_free(G, S):
            best = len(S)
    return best


def _generates(G: Group, B) -> bool:
    return len(_lengths(G, B)) == G.order


def brute_ddiam(G: Group) -> int:
    """Maximum digraph diameter over every generating subset of G minus the identity."""
    _guard(G, max_order=MAX_DDIAM_ORDER)
    if G.order == 1:
        return 0
    best = 0
    rest = range(1, G.order)
    for r in range(1, G.order):
        for B in itertools.combinations(rest, r):
            dist = _lengths(G, B)
            if len(dist) == G.order:
                best = max(best, max(dist.values()))
    return best


def brute_subgroups(G: Group) -> list[frozenset[int]]:
    """Every subgroup, as the closure of every subset (deduplicated)."""
    _guard(G, max_order=MAX_DDIAM_ORDER)
    subs = set()
    for r in range(G.order + 1):
        for X in itertools.combinations(range(G.order), r):
            subs.add(frozenset(_lengths(G, X)))
    return sorted(subs, key=lambda H: (len(H), sorted(H)))


def brute_gd(G: Group) -> int:
    _guard(G)
    return max(len(S) for S in brute_geodesic_atoms(G, G.order + 1 if G.order < MAX_LENGTH else MAX_LENGTH))


def brute_dcd_star(G: Group, L: int | None = None) -> int:
    _guard(G)
    L = L or min(G.order + 1, MAX_LENGTH)
    return max(len(S) for S in brute_geodesic_atoms(G, L) if _generates(G, set(S))) - 1


def brute_max_subgroup_ddiam(G: Group) -> int:
    return max(brute_ddiam(subgroup_as_group(G, H)) for H in brute_subgroups(G))
