"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line."""

import random
import time

from geodav.catalog import (SMALLGROUP_16_3, SMALLGROUP_16_6, abelian_specs, builtin_up_to_16,
                            groups_up_to_12)
from geodav.cayley import digraph_diameter, directed_cayley_diameter, word_length
from geodav.geodesic import dcd_star, diameter_via_ga, generates_via_ga, is_directed_geodesic_atom
from geodav.group import automorphisms, commutator_subgroup, d_star, subgroup_as_group, subgroup_closure
from geodav.oracle import (brute_atoms, brute_dcd_star, brute_ddiam, brute_gd, brute_geodesic_atoms,
                           brute_max_subgroup_ddiam, brute_small_davenport)
from geodav.sequences import is_atom, is_product_one_free, seq

from _support import atoms, aut, constants, certificate_group, geodesic, group

MINUTE = 60.0


def test_criterion_1_abelian_ddiam_equals_d_star(criterion):
    specs = abelian_specs(24)
    with criterion(1, f"ddiam = d* on all {len(specs)} abelian groups of order <= 24"):
        t0 = time.perf_counter()
        bad = [s for s in specs if directed_cayley_diameter(group(s), aut(s)) != d_star(group(s))]
        assert not bad, bad
        assert time.perf_counter() - t0 < 10 * MINUTE


def test_criterion_2_dihedral_row(criterion):
    with criterion(2, "ddiam(D2n) = n for n = 3..8"):
        t0 = time.perf_counter()
        got = {n: directed_cayley_diameter(group(f"dihedral:{2 * n}"), aut(f"dihedral:{2 * n}"))
               for n in range(3, 9)}
        assert got == {n: n for n in range(3, 9)}, got
        assert time.perf_counter() - t0 < 10 * MINUTE


ORACLE_GROUPS = ["cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "abelian:2,2",
                 "symmetric:3", "dihedral:8", "quaternion:8"]


def test_criterion_3_oracle_equivalence(criterion):
    with criterion(3, "engine = brute force on C2..C6, C2xC2, S3, D8, Q8 (sets per level and all constants)"):
        t0 = time.perf_counter()
        for spec in ORACLE_GROUPS:
            G = group(spec)
            L = G.order + 1
            ba, bg = brute_atoms(G, L), brute_geodesic_atoms(G, L)
            at, geo = atoms(spec), geodesic(spec)[1]
            for k in range(1, L + 1):
                assert at.members(k) == {S for S in ba if len(S) == k}, (spec, "atoms", k)
                assert geo.members(k) == {S for S in bg if len(S) == k}, (spec, "geodesic", k)
            c = constants(spec)
            brute = {"d": brute_small_davenport(G), "D": max(map(len, ba)), "GD": brute_gd(G),
                     "dcdstar": brute_dcd_star(G), "ddiam": brute_ddiam(G)}
            assert c == brute, (spec, c, brute)
        assert time.perf_counter() - t0 < 15 * MINUTE


def test_criterion_4_cyclic_index_two_formulas(criterion):
    with criterion(4, "d = |G|/2 and D = d + |G'| for D6, D8, D10, D12, Q8"):
        for spec in ["dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "quaternion:8"]:
            G, c = group(spec), constants(spec)
            assert c["d"] == G.order // 2, spec
            assert c["D"] == c["d"] + len(commutator_subgroup(G)), spec
        assert constants("quaternion:8")["d"] == 4 and constants("quaternion:8")["D"] == 6


def test_criterion_5_inequality_chain(criterion):
    specs = builtin_up_to_16()
    with criterion(5, f"dcd* <= ddiam <= GD-1 <= D-1 and D >= d+1 on {len(specs)} groups of order <= 16"):
        for spec in specs:
            c = constants(spec)
            assert c["dcdstar"] <= c["ddiam"] <= c["GD"] - 1 <= c["D"] - 1, (spec, c)
            assert c["D"] >= c["d"] + 1, (spec, c)


def test_criterion_6_example_certificates(criterion):
    with criterion(6, "C3+C3+C3+C6: free 12-term sequence, non-geodesic 13-term atom, path of length <= 8"):
        G, g, twelve = certificate_group()
        assert len(twelve) == 12 and is_product_one_free(G, twelve)
        thirteen = seq(twelve + (g[8],))
        assert is_atom(G, thirteen)
        assert not is_directed_geodesic_atom(G, thirteen)
        B = [g[i] for i in range(1, 8)]
        assert word_length(G, B, G.product(twelve)) <= 8


def test_criterion_7_ga_diameter_and_generation(criterion):
    with criterion(7, "diameter via GA on 100 generating sets; generation via GA on 200 subsets"):
        rng = random.Random(20261019)
        specs = [s for s in groups_up_to_12() if group(s).order > 1]
        diam_checked = gen_checked = 0
        while diam_checked < 100:
            spec = rng.choice(specs)
            G = group(spec)
            B = set(rng.sample(range(G.order), rng.randint(1, min(5, G.order))))
            if len(subgroup_closure(G, B)) != G.order:
                continue
            assert diameter_via_ga(G, B, geodesic(spec)[1]) == digraph_diameter(G, B), (spec, B)
            diam_checked += 1
        while gen_checked < 200:
            spec = rng.choice(specs)
            G = group(spec)
            B = set(rng.sample(range(G.order), rng.randint(0, min(4, G.order))))
            expected = len(subgroup_closure(G, B)) == G.order
            assert generates_via_ga(G, B, geodesic(spec)[1]) == expected, (spec, B)
            gen_checked += 1


def test_criterion_8_subgroup_lemma(criterion):
    specs = groups_up_to_12()
    with criterion(8, f"GD - 1 = max ddiam over subgroups, on all {len(specs)} groups of order <= 12"):
        for spec in specs:
            assert geodesic(spec)[0] - 1 == brute_max_subgroup_ddiam(group(spec)), spec


def test_criterion_9_non_monotonicity(criterion):
    with criterion(9, "[16,6]: ddiam 6, cyclic C8 subgroup ddiam 7, GD - 1 = 7; [16,3]: ddiam > d"):
        G = group(SMALLGROUP_16_6)
        assert constants(SMALLGROUP_16_6)["ddiam"] == 6
        a = next(x for x in G.elements if G.elem_order[x] == 8)
        H = subgroup_as_group(G, subgroup_closure(G, [a]))
        assert H.order == 8 and max(H.elem_order) == 8
        assert directed_cayley_diameter(H, automorphisms(H)) == 7
        assert geodesic(SMALLGROUP_16_6)[0] - 1 == 7
        c = constants(SMALLGROUP_16_3)
        assert c["ddiam"] > c["d"], c
        assert dcd_star(group(SMALLGROUP_16_3), geodesic(SMALLGROUP_16_3)[1]) <= c["ddiam"]
