"""Sequences over a finite group (elements of the free abelian monoid on G).

A sequence is stored as a sorted tuple of element indices, so equal multisets
are equal tuples.  Text form is ``"3^2,5^1"``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable

import numpy as np

from .group import Automorphisms, Group

Seq = tuple[int, ...]


def seq(elems: Iterable[int]) -> Seq:
    return tuple(sorted(elems))


def entries(S: Seq) -> list[tuple[int, int]]:
    """Sorted ``(element, multiplicity)`` pairs."""
    return sorted(Counter(S).items())


def from_entries(pairs: Iterable[tuple[int, int]]) -> Seq:
    out = []
    for g, m in pairs:
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m} for {g}")
        out += [g] * m
    return seq(out)


def support(S: Seq) -> list[int]:
    return sorted(set(S))


def support_mask(S: Iterable[int]) -> int:
    m = 0
    for g in S:
        m |= 1 << g
    return m


def mask_elements(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def multiplicity(S: Seq, g: int) -> int:
    return S.count(g)


def remove_one(S: Seq, g: int) -> Seq:
    """``S * g^[-1]``."""
    i = S.index(g)
    return S[:i] + S[i + 1:]


def concat(S: Seq, T: Seq) -> Seq:
    return seq(S + T)


def format_seq(S: Seq) -> str:
    return ",".join(f"{g}^{m}" for g, m in entries(S))


def parse_seq(text: str) -> Seq:
    text = text.strip()
    if not text:
        return ()
    pairs = []
    for tok in text.split(","):
        g, _, m = tok.strip().partition("^")
        try:
            pairs.append((int(g), int(m) if m else 1))
        except ValueError:
            raise ValueError(f"bad sequence token {tok!r}") from None
    if any(a >= b for (a, _), (b, _) in zip(pairs, pairs[1:])):
        raise ValueError(f"sequence entries must be strictly increasing: {text!r}")
    return from_entries(pairs)


def _counts(S: Seq) -> tuple[list[int], list[int]]:
    e = entries(S)
    return [g for g, _ in e], [m for _, m in e]


# ---------------------------------------------------------------------------
# product-one predicates (memoized depth-first search)


def is_product_one(G: Group, S: Seq) -> bool:
    """Some ordering of ``S`` multiplies to the identity."""
    if G.is_abelian:
        return G.product(S) == 0
    elems, mults = _counts(S)
    mul = G.mul
    seen = set()
    stack = [(tuple(mults), 0)]
    while stack:
        state = stack.pop()
        rem, x = state
        if not any(rem):
            if x == 0:
                return True
            continue
        for i, c in enumerate(rem):
            if c:
                nxt = (rem[:i] + (c - 1,) + rem[i + 1:], mul[x][elems[i]])
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return False


def is_product_one_free(G: Group, S: Seq) -> bool:
    """No nonempty subsequence of ``S`` is product-one."""
    if 0 in S:
        return False
    mul = G.mul
    if G.is_abelian:
        sums: set[int] = set()
        for g in S:
            sums |= {mul[x][g] for x in sums}
            sums.add(g)
            if 0 in sums:
                return False
        return True
    elems, mults = _counts(S)
    start = (tuple(mults), 0)
    seen = {start}
    stack = [start]
    while stack:
        rem, x = stack.pop()
        for i, c in enumerate(rem):
            if c:
                y = mul[x][elems[i]]
                if y == 0:
                    return False
                nxt = (rem[:i] + (c - 1,) + rem[i + 1:], y)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return True


def sub_multisets(S: Seq) -> Iterable[Seq]:
    elems, mults = _counts(S)
    for cs in itertools.product(*[range(m + 1) for m in mults]):
        yield tuple(g for g, c in zip(elems, cs) for _ in range(c))


def is_atom(G: Group, S: Seq) -> bool:
    """``S`` is product-one and not a product of two nonempty product-one sequences."""
    if not S or not is_product_one(G, S):
        return False
    if len(S) == 1:
        return True
    if 0 in S:
        return False
    if G.is_abelian:
        # minimal zero-sum: dropping one term leaves a zero-sum free sequence
        return is_product_one_free(G, S[1:])
    full = Counter(S)
    for T in sub_multisets(S):
        if 0 < len(T) < len(S) and T[0] == S[0]:
            U = seq((full - Counter(T)).elements())
            if is_product_one(G, T) and is_product_one(G, U):
                return False
    return True


def splittings(G: Group, S: Seq) -> set[Seq]:
    """All ``S * g^[-1] * x * (x^-1 g)`` with ``g`` in supp(S), ``x`` not in {1, g}."""
    out = set()
    mul, inv = G.mul, G.inv
    for g in support(S):
        rest = remove_one(S, g)
        for x in range(1, G.order):
            if x != g:
                out.add(seq(rest + (x, mul[inv[x]][g])))
    return out


# ---------------------------------------------------------------------------
# orbits under Aut(G)


def orbit_images(aut: Automorphisms, S: Seq) -> np.ndarray:
    """Sorted images ``alpha(S)`` as rows, one per automorphism (with repeats)."""
    imgs = aut.perms[:, list(S)] if S else np.zeros((len(aut), 0), dtype=np.int64)
    imgs.sort(axis=1)
    return imgs


def _lex_min_row(rows: np.ndarray) -> np.ndarray:
    cand = np.arange(len(rows))
    for col in range(rows.shape[1]):
        vals = rows[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    return rows[cand[0]]


def canonical_rep(aut: Automorphisms, S: Seq) -> Seq:
    """Lexicographically least sorted image of ``S`` under the automorphism group."""
    if len(aut) == 1 or not S:
        return S
    return tuple(int(x) for x in _lex_min_row(orbit_images(aut, S)))


def orbit(aut: Automorphisms, S: Seq) -> set[Seq]:
    if len(aut) == 1 or not S:
        return {S}
    imgs = np.unique(orbit_images(aut, S), axis=0)
    return {tuple(int(x) for x in row) for row in imgs}


def canonical_set(aut: Automorphisms, X: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of an element subset (same ordering as for sequences)."""
    return canonical_rep(aut, seq(set(X)))


class ProductSets:
    """Cached product sets ``P(T)`` (all products over orderings of ``T``) as bitmasks.

    This is the fast path used by the level-wise enumerations; the plain
    predicates above are the reference it is tested against.
    """

    def __init__(self, G: Group):
        self.G = G
        self.n = G.order
        self.abelian = G.is_abelian
        self._cache: dict[Seq, int] = {(): 1}
        self._tables: list[list[list[int]]] | None = None

    def _build_tables(self) -> list[list[list[int]]]:
        mul, n = self.G.mul, self.n
        nchunks = (n + 7) // 8
        tables = []
        for g in range(n):
            per_chunk = []
            for c in range(nchunks):
                col = [1 << mul[8 * c + b][g] if 8 * c + b < n else 0 for b in range(8)]
                row = [0] * 256
                for byte in range(1, 256):
                    low = byte & -byte
                    row[byte] = row[byte ^ low] | col[low.bit_length() - 1]
                per_chunk.append(row)
            tables.append(per_chunk)
        return tables

    def rmul(self, mask: int, g: int) -> int:
        """``{x g : x in mask}``."""
        if self._tables is None:
            self._tables = self._build_tables()
        out = 0
        for row in self._tables[g]:
            if mask & 255:
                out |= row[mask & 255]
            mask >>= 8
            if not mask:
                break
        return out

    def products(self, T: Seq) -> int:
        cache = self._cache
        hit = cache.get(T)
        if hit is not None:
            return hit
        if self.abelian:
            out = 1 << self.G.product(T)
        else:
            out = 0
            prev = None
            for i, g in enumerate(T):
                if g != prev:
                    out |= self.rmul(self.products(T[:i] + T[i + 1:]), g)
                    prev = g
        cache[T] = out
        return out

    def has_one(self, T: Seq) -> bool:
        return bool(self.products(T) & 1)

    def is_free(self, S: Seq) -> bool:
        if 0 in S:
            return False
        return not any(T and self.has_one(T) for T in sub_multisets(S))

    def extension_is_free(self, S: Seq, h: int) -> bool:
        """``S * h`` is product-one free, given that ``S`` is."""
        if h == 0:
            return False
        return not any(self.has_one(seq(T + (h,))) for T in sub_multisets(S))

    def is_atom(self, S: Seq) -> bool:
        if not S or not self.has_one(S):
            return False
        if len(S) == 1:
            return True
        if 0 in S:
            return False
        if self.abelian:
            return is_product_one_free(self.G, S[1:])
        full = Counter(S)
        first = S[0]
        for T in sub_multisets(S):
            if 0 < len(T) < len(S) and T[0] == first and self.has_one(T):
                U = seq((full - Counter(T)).elements())
                if self.has_one(U):
                    return False
        return True
