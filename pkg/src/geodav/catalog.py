"""Named group specs used by tests and scripts.

Catalogue groups without a built-in constructor are given as permutation
generators; each one is pinned down by invariants checked in the tests
(element-order statistics, centre, derived subgroup).
"""

from __future__ import annotations


# (C4 x C2) : C2 = <a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, bc = cb, cac = ab>,
# acting on the cosets of <c>
SMALLGROUP_16_3 = "perm:(1,3,5,7)(2,4,6,8)|(3,4)(7,8)"
# modular group M16 = <a, b | a^8 = b^2 = 1, bab = a^5>, as x -> x + 1, x -> 5x on Z/8
SMALLGROUP_16_6 = "perm:(1,2,3,4,5,6,7,8)|(2,6)(4,8)"
# dicyclic group of order 12 = C3 : C4
DICYCLIC_12 = "perm:(1,2,3)|(2,3)(4,5,6,7)"

EXAMPLE_3333_6 = "abelian:3,3,3,6"


def invariant_shapes(max_order: int) -> list[list[int]]:
    """Every invariant-factor list ``n1 | n2 | ... | nr`` (n1 >= 2) with product <= max_order."""
    out: list[list[int]] = [[]]

    def extend(shape: list[int], prod: int) -> None:
        last = shape[-1]
        m = last
        while prod * m <= max_order:
            if m % last == 0:
                out.append(shape + [m])
                extend(shape + [m], prod * m)
            m += last

    for n1 in range(2, max_order + 1):
        out.append([n1])
        extend([n1], n1)
    return sorted(out, key=lambda s: (_prod(s), s))


def _prod(xs) -> int:
    p = 1
    for x in xs:
        p *= x
    return p


def abelian_specs(max_order: int) -> list[str]:
    return ["cyclic:1"] + ["abelian:" + ",".join(map(str, s)) for s in invariant_shapes(max_order) if s]


def groups_up_to_12() -> list[str]:
    """One spec per isomorphism class of groups of order at most 12 (24 groups)."""
    nonabelian = ["dihedral:6", "dihedral:8", "quaternion:8", "dihedral:10", "dihedral:12",
                  "alternating:4", DICYCLIC_12]
    return abelian_specs(12) + nonabelian


def builtin_up_to_16() -> list[str]:
    """Groups of order at most 16 reachable from the built-in constructors."""
    nonabelian = ["dihedral:6", "dihedral:8", "quaternion:8", "dihedral:10", "dihedral:12",
                  "alternating:4", "direct:dihedral:6;cyclic:2", "dihedral:14", "dihedral:16",
                  "quaternion:16", "direct:dihedral:8;cyclic:2", "direct:quaternion:8;cyclic:2"]
    return abelian_specs(16) + nonabelian


