import itertools

import pytest
from hypothesis import given, settings, strategies as st

from geodav.catalog import DICYCLIC_12, SMALLGROUP_16_3, SMALLGROUP_16_6, groups_up_to_12
from geodav.group import (GroupError, abelian, abelian_invariants, automorphisms, build_group,
                          commutator_subgroup, cyclic, d_star, dihedral, direct_product,
                          group_from_table, is_automorphism, read_table, subgroup_as_group,
                          subgroup_closure, write_table)

from _support import group


def brute_aut_count(G):
    n = G.order
    return sum(1 for p in itertools.permutations(range(n))
               if all(p[G.mul[i][j]] == G.mul[p[i]][p[j]] for i in range(n) for j in range(n)))


# --- construction -----------------------------------------------------------

@pytest.mark.parametrize("spec,order", [
    ("cyclic:1", 1), ("cyclic:7", 7), ("abelian:2,2", 4), ("abelian:3,3,3,6", 162),
    ("dihedral:12", 12), ("quaternion:8", 8), ("quaternion:16", 16), ("symmetric:3", 6),
    ("alternating:5", 60), ("direct:dihedral:6;cyclic:2", 12), ("perm:(1,2)|(1,2,3)", 6),
])
def test_orders(spec, order):
    G = build_group(spec)
    assert G.order == order
    assert G.mul[0] == tuple(range(order))


def test_dihedral_presentation():
    G = dihedral(12)
    r = G.index_of((1, 0))
    s = G.index_of((0, 1))
    assert G.elem_order[r] == 6 and G.elem_order[s] == 2
    # s r s = r^-1
    assert G.product([s, r, s]) == G.inv[r]


def test_quaternion_has_single_involution():
    G = build_group("quaternion:8")
    assert sum(1 for o in G.elem_order if o == 2) == 1
    assert not G.is_abelian


@pytest.mark.parametrize("bad", ["cyclic:0", "dihedral:5", "dihedral:4", "quaternion:12", "nope:3",
                                 "abelian:", "cyclic:x", "perm:(1,1)"])
def test_bad_specs(bad):
    with pytest.raises(GroupError):
        build_group(bad)


def test_table_relabels_identity(tmp_path):
    # C3 with identity placed at index 2
    rows = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = group_from_table(rows)
    assert G.mul[0] == (0, 1, 2)
    assert G.order == 3 and G.is_abelian


def test_table_file_round_trip(tmp_path):
    G = dihedral(8)
    path = tmp_path / "d8.txt"
    write_table(G, path)
    H = build_group(f"table:{path}")
    assert H.mul == G.mul
    assert read_table(path) == [list(r) for r in G.mul]


@pytest.mark.parametrize("text,why", [
    ("2\n0 1\n1 1\n", "latin"),
    ("2\n0 1\n", "rows"),
    ("2\n0 1\n1 5\n", "range"),
    ("3\n1 0 2\n0 1 2\n2 2 2\n", "latin"),
])
def test_table_file_errors(tmp_path, text, why):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(GroupError):
        build_group(f"table:{path}")


def test_nonassociative_table_rejected():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    rows = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        group_from_table(rows)


def test_missing_table_file():
    with pytest.raises(GroupError):
        build_group("table:/nonexistent/table.txt")


# --- automorphisms -----------------------------------------------------------

def test_trivial_group_automorphisms():
    assert len(automorphisms(cyclic(1))) == 1


@pytest.mark.parametrize("spec", ["abelian:2,2", "symmetric:3"])
def test_automorphism_count_matches_brute_force(spec):
    G = build_group(spec)
    assert len(automorphisms(G)) == brute_aut_count(G) == 6


@pytest.mark.parametrize("spec,count", [("abelian:2,2,2,2", 20160), ("quaternion:8", 24),
                                        ("dihedral:8", 8), ("cyclic:12", 4), ("alternating:5", 120),
                                        (SMALLGROUP_16_6, 16)])
def test_automorphism_counts(spec, count):
    assert len(automorphisms(build_group(spec))) == count


@pytest.mark.parametrize("spec", ["dihedral:10", "quaternion:8", "alternating:4", DICYCLIC_12])
def test_automorphisms_are_homomorphisms(spec):
    G = build_group(spec)
    aut = automorphisms(G)
    t = G.table
    for row in aut.perms:
        assert (row[t] == t[row][:, row]).all()
        assert is_automorphism(G, row)
    assert tuple(aut.perms[0]) == tuple(range(G.order))
    assert len({tuple(r) for r in aut.perms}) == len(aut)


def test_automorphism_cap():
    with pytest.raises(GroupError):
        automorphisms(cyclic(65))


# --- closure and commutators -------------------------------------------------

def test_closure_examples():
    S3 = group("symmetric:3")
    assert subgroup_closure(S3, []) == {0}
    invol = [g for g in S3.elements if S3.elem_order[g] == 2]
    assert len(subgroup_closure(S3, invol[:1])) == 2
    assert len(subgroup_closure(S3, invol[:2])) == 6


def test_commutator_examples():
    assert commutator_subgroup(group("abelian:2,6")) == {0}
    assert len(commutator_subgroup(group("symmetric:3"))) == 3
    assert len(commutator_subgroup(group("quaternion:8"))) == 2


@settings(max_examples=60, deadline=None)
@given(spec=st.sampled_from(groups_up_to_12()), data=st.data())
def test_closure_properties(spec, data):
    G = group(spec)
    X = data.draw(st.sets(st.integers(0, G.order - 1), max_size=4))
    Y = data.draw(st.sets(st.integers(0, G.order - 1), max_size=2))
    H = subgroup_closure(G, X)
    assert subgroup_closure(G, H) == H
    assert H <= subgroup_closure(G, X | Y)
    assert G.order % len(H) == 0
    assert all(G.mul[a][b] in H for a in H for b in H)


def test_subgroup_as_group():
    G = build_group(SMALLGROUP_16_6)
    a = next(g for g in G.elements if G.elem_order[g] == 8)
    H = subgroup_as_group(G, subgroup_closure(G, [a]))
    assert H.order == 8 and H.is_abelian and max(H.elem_order) == 8


# --- abelian invariants ------------------------------------------------------

@pytest.mark.parametrize("spec,inv", [("cyclic:1", []), ("abelian:2,2", [2, 2]), ("abelian:4,6", [2, 12]),
                                      ("abelian:2,3", [6]), ("cyclic:6", [6]), ("abelian:2,4,8", [2, 4, 8]),
                                      ("abelian:6,10,15", [30, 30])])
def test_abelian_invariants(spec, inv):
    assert abelian_invariants(build_group(spec)) == inv


@pytest.mark.parametrize("spec,value", [("cyclic:1", 0), ("cyclic:6", 5), ("abelian:3,3,3,6", 11)])
def test_d_star(spec, value):
    assert d_star(build_group(spec)) == value


def test_invariants_reject_nonabelian():
    with pytest.raises(GroupError):
        abelian_invariants(group("symmetric:3"))
    with pytest.raises(GroupError):
        d_star(group("symmetric:3"))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3), st.lists(st.integers(1, 6), min_size=1, max_size=2))
def test_d_star_superadditive_on_direct_products(a, b):
    A, B = abelian(a), abelian(b)
    if A.order * B.order > 216:
        return
    P = direct_product(A, B)
    assert d_star(P) >= d_star(A) + d_star(B)
    # the invariant factors are a normal form of the constructor input
    assert abelian_invariants(abelian(abelian_invariants(P) or [1])) == abelian_invariants(P)


# --- catalogue fixtures ------------------------------------------------------

def test_fixture_16_3():
    G = build_group(SMALLGROUP_16_3)
    assert G.order == 16 and not G.is_abelian
    assert max(G.elem_order) == 4
    assert sum(1 for o in G.elem_order if o == 2) == 7
    assert len(commutator_subgroup(G)) == 2


def test_fixture_16_6():
    G = build_group(SMALLGROUP_16_6)
    assert G.order == 16 and not G.is_abelian
    assert sum(1 for o in G.elem_order if o == 8) == 8
    assert sum(1 for o in G.elem_order if o == 2) == 3


def test_fixture_dicyclic_12():
    G = build_group(DICYCLIC_12)
    assert G.order == 12 and not G.is_abelian
    assert sum(1 for o in G.elem_order if o == 2) == 1


def test_catalogue_up_to_12_is_pairwise_distinct():
    def signature(spec):
        G = group(spec)
        return (G.order, G.is_abelian, tuple(sorted(G.elem_order)), len(commutator_subgroup(G)))
    specs = groups_up_to_12()
    assert len(specs) == 24
    assert len({signature(s) for s in specs}) == 24
