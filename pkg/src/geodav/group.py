"""Finite groups as multiplication tables.

Elements are the integers ``0..n-1`` with ``0`` the identity.  ``mul[i][j]``
is the product of ``i`` (left) by ``j`` (right).
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Hashable, Iterable, Sequence

import numpy as np

DEFAULT_AUT_CAP = 64
DEFAULT_PERM_CAP = 100_000


class GroupError(ValueError):
    """Malformed group spec or invalid multiplication table."""


@dataclass(frozen=True, eq=False)
class Group:
    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    elem_order: tuple[int, ...]
    labels: tuple[Hashable, ...] = field(default=(), repr=False)
    name: str = ""

    identity = 0

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def table(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return bool((t == t.T).all())

    def index_of(self, label: Hashable) -> int:
        return self.labels.index(label)

    def power(self, g: int, m: int) -> int:
        x = 0
        for _ in range(m):
            x = self.mul[x][g]
        return x

    def product(self, word: Iterable[int]) -> int:
        x = 0
        for g in word:
            x = self.mul[x][g]
        return x

    def __repr__(self) -> str:
        return f"Group({self.name or '?'}, order={self.order})"


@dataclass(frozen=True, eq=False)
class Automorphisms:
    """All automorphisms of a group, one permutation of ``0..n-1`` per row.

    Row 0 is the identity permutation.
    """

    perms: np.ndarray

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self):
        return (tuple(int(x) for x in row) for row in self.perms)

    @classmethod
    def trivial(cls, n: int) -> "Automorphisms":
        return cls(np.arange(n, dtype=np.int64).reshape(1, n))


# ---------------------------------------------------------------------------
# construction from tables


def group_from_table(rows: Sequence[Sequence[int]], labels: Sequence[Hashable] = (),
                     name: str = "", check_assoc: bool = True) -> Group:
    """Validate a Cayley table and relabel so that the identity is element 0."""
    t = np.asarray(rows, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise GroupError(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries out of range")
    ref = np.arange(n)
    if not ((np.sort(t, axis=1) == ref).all() and (np.sort(t, axis=0) == ref[:, None]).all()):
        raise GroupError("table is not a Latin square")
    ids = [e for e in range(n) if (t[e] == ref).all() and (t[:, e] == ref).all()]
    if not ids:
        raise GroupError("table has no identity element")
    e = ids[0]
    if check_assoc and not (t[t] == t[:, t]).all():
        # t[t][i, j, k] = (ij)k and t[:, t][i, j, k] = i(jk)
        raise GroupError("table is not associative")
    if e != 0:
        # swap e and 0
        perm = np.arange(n)
        perm[0], perm[e] = e, 0
        t = perm[t[np.ix_(perm, perm)]]
        labels = [labels[i] for i in perm] if labels else labels
    return _finish(t, labels, name)


def _finish(t: np.ndarray, labels: Sequence[Hashable], name: str) -> Group:
    n = t.shape[0]
    inv = [int(np.flatnonzero(t[i] == 0)[0]) for i in range(n)]
    orders = []
    for i in range(n):
        x, m = i, 1
        while x != 0:
            x = int(t[x, i])
            m += 1
        orders.append(m)
    mul = tuple(tuple(int(v) for v in row) for row in t)
    return Group(n, mul, tuple(inv), tuple(orders), tuple(labels), name)


def _group_from_product(elements: Sequence[Hashable], op, name: str) -> Group:
    """Table of a closed set of labelled elements; ``elements[0]`` is the identity."""
    index = {x: i for i, x in enumerate(elements)}
    rows = [[index[op(a, b)] for b in elements] for a in elements]
    return _finish(np.array(rows, dtype=np.int64), elements, name)


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic order must be positive")
    return _group_from_product(list(range(n)), lambda a, b: (a + b) % n, f"cyclic:{n}")


def abelian(moduli: Sequence[int]) -> Group:
    """Direct sum of cyclic groups; elements are coordinate tuples in lex order."""
    if any(m < 1 for m in moduli):
        raise GroupError("abelian moduli must be positive")
    elems = list(itertools.product(*[range(m) for m in moduli]))
    op = lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli))
    return _group_from_product(elems, op, "abelian:" + ",".join(map(str, moduli)))


def dihedral(m: int) -> Group:
    """Dihedral group of order ``m``; element ``(i, s)`` is ``r^i s^s``."""
    if m < 6 or m % 2:
        raise GroupError("dihedral order must be even and at least 6")
    k = m // 2
    elems = [(i, s) for s in range(2) for i in range(k)]

    def op(a, b):
        (i, s), (j, t) = a, b
        return ((i + (-j if s else j)) % k, (s + t) % 2)

    return _group_from_product(elems, op, f"dihedral:{m}")


def quaternion(m: int) -> Group:
    """Generalized quaternion group of order ``m``; ``(i, s)`` is ``x^i y^s``."""
    if m not in (8, 16, 32):
        raise GroupError("quaternion order must be 8, 16 or 32")
    k = m // 4
    elems = [(i, s) for s in range(2) for i in range(2 * k)]

    def op(a, b):
        (i, s), (j, t) = a, b
        if not s:
            return ((i + j) % (2 * k), t)
        if not t:
            return ((i - j) % (2 * k), 1)
        return ((i - j + k) % (2 * k), 0)  # y^2 = x^k

    return _group_from_product(elems, op, f"quaternion:{m}")


def direct_product(g1: Group, g2: Group) -> Group:
    n2 = g2.order
    t1, t2 = g1.table, g2.table
    t = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(g1.order * n2, g1.order * n2)
    l1 = g1.labels or tuple(range(g1.order))
    l2 = g2.labels or tuple(range(n2))
    labels = [(a, b) for a in l1 for b in l2]
    return _finish(t, labels, f"direct:{g1.name};{g2.name}")


# ---------------------------------------------------------------------------
# permutation groups


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Disjoint-cycle notation on points 1..k, e.g. ``(1,2,3)(4,5)``, as a 0-based image tuple."""
    text = text.replace(" ", "")
    if text in ("", "()"):
        return tuple(range(degree or 0))
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", text):
        raise GroupError(f"bad cycle notation: {text!r}")
    cycles = [[int(p) for p in c.split(",")] for c in re.findall(r"\(([^)]*)\)", text)]
    pts = [p for c in cycles for p in c]
    if min(pts) < 1 or len(set(pts)) != len(pts):
        raise GroupError(f"cycles must be disjoint on points >= 1: {text!r}")
    k = max(max(pts), degree or 0)
    img = list(range(k))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def _pad(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    return p + tuple(range(len(p), k))


def permutation_group(gens: Sequence[tuple[int, ...]], name: str = "",
                      cap: int = DEFAULT_PERM_CAP) -> Group:
    """Close permutation generators by breadth-first multiplication.

    Elements are numbered by (element order, first occurrence in the BFS).
    Composition is left-to-right: ``(p*q)(x) = q(p(x))``.
    """
    k = max([len(g) for g in gens] + [1])
    gens = [_pad(tuple(g), k) for g in gens]
    ident = tuple(range(k))
    seen = {ident: 0}
    order = [ident]
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[x] for x in p)
            if q not in seen:
                seen[q] = len(order)
                order.append(q)
                queue.append(q)
                if len(order) > cap:
                    raise GroupError(f"permutation group exceeds order cap {cap}")

    def compose(p, q):
        return tuple(q[x] for x in p)

    def perm_order(p):
        m, x = 1, p
        while x != ident:
            x = compose(x, p)
            m += 1
        return m

    ranked = sorted(range(len(order)), key=lambda i: (perm_order(order[i]), i))
    elems = [order[i] for i in ranked]
    return _group_from_product(elems, compose, name)


def symmetric(k: int) -> Group:
    if k < 1:
        raise GroupError("symmetric degree must be positive")
    gens = [tuple(range(1, k)) + (0,)] if k > 1 else []
    if k > 2:
        gens.append((1, 0) + tuple(range(2, k)))
    return permutation_group(gens or [(0,)], f"symmetric:{k}")


def alternating(k: int) -> Group:
    if k < 1:
        raise GroupError("alternating degree must be positive")
    gens = []
    for i in range(k - 2):
        p = list(range(k))
        p[i], p[i + 1], p[i + 2] = i + 1, i + 2, i
        gens.append(tuple(p))
    return permutation_group(gens or [(0,)], f"alternating:{k}")


# ---------------------------------------------------------------------------
# spec strings


def read_table(path: str | Path) -> list[list[int]]:
    """Read a Cayley-table file: ``n`` on the first line, then ``n`` rows."""
    try:
        tokens = Path(path).read_text().split()
    except OSError as exc:
        raise GroupError(f"cannot read table file {path}: {exc}") from exc
    try:
        vals = [int(x) for x in tokens]
    except ValueError as exc:
        raise GroupError(f"non-integer entry in table file {path}") from exc
    if not vals:
        raise GroupError(f"empty table file {path}")
    n = vals[0]
    if n < 1 or len(vals) != 1 + n * n:
        raise GroupError(f"table file {path}: expected {n * n} entries, got {len(vals) - 1}")
    return [vals[1 + i * n: 1 + (i + 1) * n] for i in range(n)]


def write_table(G: Group, path: str | Path) -> None:
    lines = [str(G.order)] + [" ".join(map(str, row)) for row in G.mul]
    Path(path).write_text("\n".join(lines) + "\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise GroupError(f"expected comma-separated integers, got {text!r}") from exc


def _one_int(text: str) -> int:
    vals = _ints(text)
    if len(vals) != 1:
        raise GroupError(f"expected one integer, got {text!r}")
    return vals[0]


def build_group(spec: str, perm_cap: int = DEFAULT_PERM_CAP) -> Group:
    """Build a validated group from a spec string such as ``"dihedral:12"``."""
    kind, sep, arg = spec.strip().partition(":")
    if not sep:
        raise GroupError(f"group spec needs 'kind:args', got {spec!r}")
    kind = kind.strip().lower()
    if kind == "cyclic":
        G = cyclic(_one_int(arg))
    elif kind == "abelian":
        mods = _ints(arg)
        if not mods:
            raise GroupError("abelian spec needs at least one modulus")
        G = abelian(mods)
    elif kind == "dihedral":
        G = dihedral(_one_int(arg))
    elif kind == "quaternion":
        G = quaternion(_one_int(arg))
    elif kind == "symmetric":
        G = symmetric(_one_int(arg))
    elif kind == "alternating":
        G = alternating(_one_int(arg))
    elif kind == "direct":
        parts = [p for p in arg.split(";") if p.strip()]
        if len(parts) < 2:
            raise GroupError("direct spec needs at least two factors separated by ';'")
        G = build_group(parts[0], perm_cap)
        for p in parts[1:]:
            G = direct_product(G, build_group(p, perm_cap))
    elif kind == "perm":
        gens = [parse_cycles(c) for c in arg.split("|")]
        G = permutation_group(gens, cap=perm_cap)
    elif kind == "table":
        G = group_from_table(read_table(arg))
    else:
        raise GroupError(f"unknown group kind {kind!r}")
    object.__setattr__(G, "name", spec.strip())
    return G


# ---------------------------------------------------------------------------
# structure


def subgroup_closure(G: Group, X: Iterable[int]) -> frozenset[int]:
    gens = sorted(set(X) - {0})
    seen = {0}
    stack = [0]
    mul = G.mul
    while stack:
        x = stack.pop()
        row = mul[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def commutator_subgroup(G: Group) -> frozenset[int]:
    mul, inv = G.mul, G.inv
    comms = {mul[mul[mul[i][j]][inv[i]]][inv[j]] for i in G.elements for j in G.elements}
    return subgroup_closure(G, comms)


def greedy_generators(G: Group) -> list[int]:
    """A small generating tuple: repeatedly add an element of maximal order outside the closure."""
    by_order = sorted(G.elements, key=lambda g: (-G.elem_order[g], g))
    gens: list[int] = []
    H = frozenset([0])
    while len(H) < G.order:
        g = next(x for x in by_order if x not in H)
        gens.append(g)
        H = subgroup_closure(G, gens)
    return gens


def automorphisms(G: Group, cap: int = DEFAULT_AUT_CAP) -> Automorphisms:
    """Every automorphism of ``G`` exactly once, by backtracking over generator images."""
    n = G.order
    if n > cap:
        raise GroupError(f"automorphism search is capped at order {cap} (group has order {n})")
    mul, eo = G.mul, G.elem_order
    gens = greedy_generators(G)
    found: list[list[int]] = []

    def extend(phi: list[int], domain: list[int], imgs: list[int]) -> list[int] | None:
        # close the partial homomorphism over <gens[:len(imgs)]>
        phi = phi[:]
        used = set(phi[x] for x in domain)
        dom = list(domain)
        pairs = list(zip(gens, imgs))
        i = 0
        while i < len(dom):
            x = dom[i]
            px = phi[x]
            for g, c in pairs:
                y = mul[x][g]
                img = mul[px][c]
                if phi[y] < 0:
                    if img in used:
                        return None
                    phi[y] = img
                    used.add(img)
                    dom.append(y)
                elif phi[y] != img:
                    return None
            i += 1
        return phi

    def search(depth: int, phi: list[int], imgs: list[int]):
        if depth == len(gens):
            found.append(phi)
            return
        g = gens[depth]
        domain = [x for x in range(n) if phi[x] >= 0]
        img_closure = subgroup_closure(G, imgs)
        for c in range(n):
            if eo[c] != eo[g] or c in img_closure:
                continue
            nxt = extend(phi, domain, imgs + [c])
            if nxt is not None:
                search(depth + 1, nxt, imgs + [c])

    phi0 = [-1] * n
    phi0[0] = 0
    search(0, phi0, [])
    perms = np.array(sorted(found), dtype=np.int64).reshape(len(found), n)
    return Automorphisms(perms)


def is_automorphism(G: Group, perm: Sequence[int]) -> bool:
    p = np.asarray(perm)
    t = G.table
    return sorted(p.tolist()) == list(range(G.order)) and bool((p[t] == t[np.ix_(p, p)]).all())


def _primes(n: int) -> list[int]:
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def abelian_invariants(G: Group) -> list[int]:
    """Invariant factors ``[n1, ..., nr]`` with ``n1 | n2 | ... | nr``."""
    if not G.is_abelian:
        raise GroupError("abelian_invariants needs an abelian group")
    eo = G.elem_order
    primary: dict[int, list[int]] = {}
    for p in _primes(G.order):
        # |ker(x -> p^k x)| = p^(s_k); s_k - s_{k-1} factors have exponent >= k
        sizes = [0]
        k = 1
        while True:
            ker = sum(1 for o in eo if p ** k % o == 0)
            s = 0
            while p ** s < ker:
                s += 1
            if s == sizes[-1]:
                break
            sizes.append(s)
            k += 1
        at_least = [sizes[i] - sizes[i - 1] for i in range(1, len(sizes))]
        exps = []
        for e in range(len(at_least), 0, -1):
            count = at_least[e - 1] - (at_least[e] if e < len(at_least) else 0)
            exps += [e] * count
        primary[p] = exps  # descending
    r = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(r):
        f = 1
        for p, exps in primary.items():
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return sorted(factors)


def d_star(G: Group) -> int:
    return sum(m - 1 for m in abelian_invariants(G))


def subgroup_as_group(G: Group, H: Iterable[int]) -> Group:
    """The subgroup ``H`` as a standalone group (identity first, then increasing index)."""
    elems = sorted(H)
    if elems[0] != 0:
        raise GroupError("subgroup must contain the identity")
    pos = {x: i for i, x in enumerate(elems)}
    try:
        rows = [[pos[G.mul[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise GroupError("element set is not closed under multiplication") from None
    labels = [G.labels[x] for x in elems] if G.labels else elems
    return _finish(np.array(rows, dtype=np.int64), labels, f"subgroup of {G.name}")
