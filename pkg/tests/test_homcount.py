"""Homomorphism counting engine against the brute-force oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tournhom.digraphs import (
    Digraph,
    QuantumDigraph,
    RootedDigraph,
    disjoint_union,
    random_tournament,
    transitive_tournament,
)
from tournhom.errors import BudgetExceededError, EnumerationCapError
from tournhom.homcount import (
    conditional_density,
    count_hom,
    count_hom_bruteforce,
    count_hom_rooted,
    count_hom_rooted_bruteforce,
    density,
    eval_quantum,
    is_hom,
    iter_homs,
    rooted_count_matrix,
)

CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
# the reverse orientation, where 0 -> 2 -> 1 is a path
CYCLE3_REV = Digraph(3, [(0, 2), (2, 1), (1, 0)])
SINGLE = Digraph(1, [])
ARC = Digraph(2, [(0, 1)])
# roots 0, 1 with a middle vertex 2: 0 -> 2 -> 1
PATH_GADGET = RootedDigraph(Digraph(3, [(0, 2), (2, 1)]), (0, 1))


def random_digraph(n, p_num, p_den, seed):
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.randrange(p_den) < p_num
    ]
    return Digraph(n, arcs)


class TestCountHom:
    def test_single_vertex(self):
        for n in (1, 4, 7):
            assert count_hom(SINGLE, random_tournament(n, 0)) == n

    def test_single_arc_counts_pairs(self):
        for n in (2, 5, 8):
            assert count_hom(ARC, random_tournament(n, 1)) == n * (n - 1) // 2

    def test_cycle_into_transitive_is_zero(self):
        assert count_hom(CYCLE3, transitive_tournament(4)) == 0

    def test_cycle_into_cycle(self):
        assert count_hom(CYCLE3, CYCLE3) == 3
        assert count_hom_bruteforce(CYCLE3, CYCLE3) == 3

    def test_empty_pattern_counts_one(self):
        assert count_hom(Digraph(0, []), random_tournament(3, 0)) == 1

    def test_oracle_agreement_random_pairs(self):
        rng = random.Random(20240901)
        for _ in range(60):
            F = random_digraph(rng.randint(1, 4), 1, 2, rng.randrange(2**30))
            T = random_tournament(rng.randint(1, 6), rng.randrange(2**30))
            assert count_hom(F, T) == count_hom_bruteforce(F, T)

    def test_oracle_agreement_digraph_hosts(self):
        rng = random.Random(7)
        for _ in range(30):
            F = random_digraph(rng.randint(1, 4), 1, 3, rng.randrange(2**30))
            T = random_digraph(rng.randint(1, 5), 2, 3, rng.randrange(2**30))
            assert count_hom(F, T) == count_hom_bruteforce(F, T)

    def test_two_isolated_vertices(self):
        two = Digraph(2, [])
        for n in (3, 6):
            assert count_hom(two, random_tournament(n, 2)) == n * n

    def test_arc_plus_isolated(self):
        g = Digraph(3, [(0, 1)])
        for n in (3, 5):
            assert count_hom(g, random_tournament(n, 4)) == n * n * (n - 1) // 2

    def test_budget_error(self):
        with pytest.raises(BudgetExceededError):
            count_hom_bruteforce(random_tournament(8, 0), random_tournament(12, 1), budget=10)


class TestRootedCounts:
    def test_path_gadget_forced_middle(self):
        assert count_hom_rooted(PATH_GADGET, CYCLE3_REV, 0, 1) == 1
        assert count_hom_rooted_bruteforce(PATH_GADGET, CYCLE3_REV, 0, 1) == 1

    def test_path_gadget_equal_roots(self):
        assert count_hom_rooted(PATH_GADGET, CYCLE3_REV, 0, 0) == 0

    def test_no_free_vertices(self):
        bare = RootedDigraph(Digraph(2, []), (0, 1))
        t = random_tournament(4, 3)
        for x in range(4):
            for y in range(4):
                assert count_hom_rooted(bare, t, x, y) == 1

    def test_adjacent_roots_respect_host_arc(self):
        rooted_arc = RootedDigraph(ARC, (0, 1))
        t = transitive_tournament(3)
        assert count_hom_rooted(rooted_arc, t, 0, 1) == 1
        assert count_hom_rooted(rooted_arc, t, 1, 0) == 0
        assert count_hom_rooted(rooted_arc, t, 0, 0) == 0

    def test_oracle_agreement(self):
        rng = random.Random(99)
        for _ in range(30):
            n_f = rng.randint(2, 4)
            F = random_digraph(n_f, 1, 2, rng.randrange(2**30))
            roots = rng.sample(range(n_f), 2)
            rooted = RootedDigraph(F, tuple(roots))
            T = random_tournament(rng.randint(1, 5), rng.randrange(2**30))
            x, y = rng.randrange(T.n), rng.randrange(T.n)
            assert count_hom_rooted(rooted, T, x, y) == count_hom_rooted_bruteforce(
                rooted, T, x, y
            )

    def test_conditional_sum_equals_total(self):
        rng = random.Random(5)
        for _ in range(20):
            F = random_digraph(4, 1, 2, rng.randrange(2**30))
            if F.has_arc(0, 1) or F.has_arc(1, 0):
                continue
            rooted = RootedDigraph(F, (0, 1))
            T = random_tournament(rng.randint(1, 5), rng.randrange(2**30))
            total = sum(
                count_hom_rooted(rooted, T, x, y)
                for x in range(T.n)
                for y in range(T.n)
            )
            assert total == count_hom(F, T)


class TestDensity:
    def test_arc_density(self):
        for n in (2, 5, 9):
            assert density(ARC, random_tournament(n, 6)) == Fraction(n - 1, 2 * n)

    def test_cycle_density_zero(self):
        assert density(CYCLE3, transitive_tournament(5)) == 0

    def test_cycle_density_ninth(self):
        assert density(CYCLE3, CYCLE3) == Fraction(1, 9)

    def test_empty_host_rejected(self):
        with pytest.raises(ValueError):
            density(ARC, Digraph(0, []))

    def test_conditional_density_third(self):
        assert conditional_density(PATH_GADGET, CYCLE3_REV, 0, 1) == Fraction(1, 3)

    @given(st.integers(0, 2**30), st.integers(0, 2**30), st.integers(2, 7), st.integers(0, 2**30))
    @settings(max_examples=40, deadline=None)
    def test_multiplicativity(self, s1, s2, n, s3):
        F1 = random_digraph(random.Random(s1).randint(1, 4), 1, 2, s1)
        F2 = random_digraph(random.Random(s2).randint(1, 4), 1, 2, s2)
        T = random_tournament(n, s3)
        assert density(disjoint_union(F1, F2), T) == density(F1, T) * density(F2, T)


class TestEvalQuantum:
    def test_single_vertex_is_one(self):
        q = QuantumDigraph.of([(1, SINGLE)])
        for seed in range(3):
            assert eval_quantum(q, random_tournament(4, seed)) == 1

    def test_cancellation(self):
        q = QuantumDigraph.of([(1, ARC), (-1, ARC)])
        assert eval_quantum(q, random_tournament(5, 0)) == 0

    def test_square_identity(self):
        q = QuantumDigraph.of([(1, disjoint_union(ARC, ARC)), (-1, ARC)])
        for seed in range(5):
            t = random_tournament(6, seed)
            d = density(ARC, t)
            assert eval_quantum(q, t) == d * d - d


class TestEnumeration:
    def test_maps_are_homs_and_count_matches(self):
        rng = random.Random(11)
        for _ in range(10):
            F = random_digraph(3, 1, 2, rng.randrange(2**30))
            T = random_tournament(4, rng.randrange(2**30))
            maps = list(iter_homs(F, T))
            assert len(maps) == count_hom(F, T)
            assert len(set(maps)) == len(maps)
            for m in maps:
                assert is_hom(F, T, m)

    def test_rooted_enumeration(self):
        maps = list(iter_homs(PATH_GADGET.graph, CYCLE3_REV, root_images={0: 0, 1: 1}))
        assert maps == [(0, 1, 2)]

    def test_cap_error(self):
        with pytest.raises(EnumerationCapError):
            list(iter_homs(SINGLE, random_tournament(5, 0), cap=3))

    def test_cap_not_hit(self):
        assert len(list(iter_homs(SINGLE, random_tournament(5, 0), cap=5))) == 5


class TestRootedCountMatrix:
    def test_matches_per_pair_counts(self):
        rng = random.Random(42)
        for _ in range(15):
            n_f = rng.randint(3, 5)
            F = random_digraph(n_f, 1, 2, rng.randrange(2**30))
            z, w = 0, 1
            if F.has_arc(z, w) or F.has_arc(w, z):
                continue
            rooted = RootedDigraph(F, (z, w))
            T = random_tournament(rng.randint(2, 6), rng.randrange(2**30))
            S = rooted_count_matrix(rooted, T)
            for x in range(T.n):
                for y in range(T.n):
                    assert S[x][y] == count_hom_rooted(rooted, T, x, y)

    def test_requires_nonadjacent_roots(self):
        with pytest.raises(ValueError):
            rooted_count_matrix(RootedDigraph(ARC, (0, 1)), random_tournament(3, 0))
