"""Core digraph/tournament type behaviour and serialization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tournhom.digraphs import (
    Digraph,
    QuantumDigraph,
    RootedDigraph,
    Tournament,
    are_isomorphic,
    disjoint_union,
    format_digraph,
    induced_subdigraph,
    is_acyclic,
    load_quantum,
    load_rooted,
    load_tournament,
    make_tournament,
    parse_digraph,
    random_tournament,
    save_digraph,
    save_quantum,
    transitive_tournament,
)

CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def tournaments_strategy(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(0, 2**30).map(lambda s: random_tournament(n, s))
    )


class TestDigraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Digraph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Digraph(2, [(0, 5)])

    def test_adjacency_views_match_arcs(self):
        g = Digraph(4, [(0, 1), (0, 2), (3, 0)])
        assert g.out_neighbors(0) == {1, 2}
        assert g.in_neighbors(0) == {3}
        assert g.out_degree(0) == 2 and g.in_degree(0) == 1
        assert g.has_arc(3, 0) and not g.has_arc(0, 3)

    def test_equality_is_label_sensitive(self):
        a = Digraph(2, [(0, 1)])
        b = Digraph(2, [(1, 0)])
        assert a != b
        assert a == Digraph(2, [(0, 1)])
        assert are_isomorphic(a, b)


class TestMakeTournament:
    def test_single_pair(self):
        t = make_tournament({(0, 1)}, 2)
        assert t.has_arc(0, 1)

    def test_cyclic_triangle_is_valid(self):
        t = make_tournament({(0, 1), (1, 2), (2, 0)}, 3)
        assert len(t.arcs) == 3

    def test_double_orientation_names_pair(self):
        with pytest.raises(ValueError, match=r"\(0, 1\)"):
            make_tournament({(0, 1), (1, 0), (1, 2), (2, 0)}, 3)

    def test_missing_pair_names_pair(self):
        with pytest.raises(ValueError, match=r"missing arc on pair \(0, 2\)"):
            make_tournament({(0, 1), (1, 2)}, 3)


class TestTransitiveTournament:
    def test_n1_empty(self):
        assert transitive_tournament(1).arcs == frozenset()

    def test_n3_definition(self):
        assert transitive_tournament(3).arcs == {(0, 1), (0, 2), (1, 2)}

    def test_n4_acyclic(self):
        assert is_acyclic(transitive_tournament(4))


class TestRandomTournament:
    def test_deterministic_in_seed(self):
        assert random_tournament(5, 7) == random_tournament(5, 7)

    def test_handshake_identity(self):
        t = random_tournament(1000, 3)
        assert sum(t.out_degree(v) for v in range(1000)) == 1000 * 999 // 2

    def test_different_seeds_both_valid(self):
        a = random_tournament(5, 7)
        b = random_tournament(5, 8)
        assert isinstance(a, Tournament) and isinstance(b, Tournament)


class TestDisjointUnion:
    def test_arc_shift(self):
        arc = Digraph(2, [(0, 1)])
        u = disjoint_union(arc, arc)
        assert u.n == 4 and u.arcs == {(0, 1), (2, 3)}

    def test_empty_identity(self):
        g = CYCLE3
        assert disjoint_union(g, Digraph(0, [])) == g

    @given(st.integers(0, 2**30), st.integers(0, 2**30), st.integers(0, 2**30))
    @settings(max_examples=25)
    def test_counts_add_and_associative(self, s1, s2, s3):
        a, b, c = (random_tournament(3, s) for s in (s1, s2, s3))
        u = disjoint_union(disjoint_union(a, b), c)
        v = disjoint_union(a, disjoint_union(b, c))
        assert u.n == a.n + b.n + c.n
        assert len(u.arcs) == len(a.arcs) + len(b.arcs) + len(c.arcs)
        assert u == v  # same labels either way for this layout


class TestInducedSubdigraph:
    def test_triangle_pair(self):
        sub = induced_subdigraph(CYCLE3, {0, 1})
        assert sub.n == 2 and sub.arcs == {(0, 1)}

    def test_full_subset_identity(self):
        assert induced_subdigraph(CYCLE3, {0, 1, 2}) == CYCLE3

    def test_transitive_relabel(self):
        sub = induced_subdigraph(transitive_tournament(4), {1, 3})
        assert sub.arcs == {(0, 1)}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subdigraph(CYCLE3, {0, 9})


class TestIsAcyclic:
    def test_transitive_true(self):
        assert is_acyclic(transitive_tournament(5))

    def test_cycle_false(self):
        assert not is_acyclic(CYCLE3)

    def test_empty_true(self):
        assert is_acyclic(Digraph(3, []))

    @given(tournaments_strategy())
    @settings(max_examples=30)
    def test_acyclic_tournaments_are_transitive(self, t):
        if is_acyclic(t):
            order = sorted(range(t.n), key=lambda v: -t.out_degree(v))
            for i, u in enumerate(order):
                for v in order[i + 1 :]:
                    assert t.has_arc(u, v)


class TestTextFormat:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "g.txt"
        save_digraph(path, CYCLE3)
        g, roots = parse_digraph(path.read_text())
        assert g == CYCLE3 and roots is None

    def test_roots_round_trip(self, tmp_path):
        path = tmp_path / "r.txt"
        save_digraph(path, CYCLE3, roots=(0, 2))
        r = load_rooted(path)
        assert r.roots == (0, 2) and r.graph == CYCLE3

    def test_tournament_load_validates(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("digraph 3\n0 1\n1 2\n")
        with pytest.raises(ValueError, match="missing arc"):
            load_tournament(path)

    def test_format_is_lf_terminated_and_sorted(self):
        text = format_digraph(Digraph(3, [(2, 0), (0, 1)]))
        assert text == "digraph 3\n0 1\n2 0\n"


class TestQuantumDigraph:
    def test_json_round_trip_inline(self, tmp_path):
        q = QuantumDigraph.of([(1, CYCLE3), (-2, Digraph(2, [(0, 1)]))])
        path = tmp_path / "q.json"
        save_quantum(path, q)
        assert load_quantum(path) == q

    def test_json_graph_by_path(self, tmp_path):
        save_digraph(tmp_path / "c3.txt", CYCLE3)
        (tmp_path / "q.json").write_text(
            '{"terms": [{"coef": "1/3", "graph": "c3.txt"}]}'
        )
        q = load_quantum(tmp_path / "q.json")
        assert q.terms[0][1] == CYCLE3

    def test_normalized_merges_isomorphic_terms(self):
        reversed_cycle = Digraph(3, [(0, 2), (2, 1), (1, 0)])
        transitive = Digraph(3, [(1, 0), (2, 0), (2, 1)])
        q = QuantumDigraph.of([(1, CYCLE3), (2, reversed_cycle), (5, transitive)])
        merged = q.normalized()
        assert len(merged.terms) == 2
        coefs = sorted(c for c, _ in merged.terms)
        assert coefs == [3, 5]

    def test_normalized_drops_cancelling_terms(self):
        arc = Digraph(2, [(0, 1)])
        q = QuantumDigraph.of([(1, arc), (-1, arc)])
        assert q.normalized().terms == ()


class TestRootedDigraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            RootedDigraph(CYCLE3, (1, 1))
        with pytest.raises(ValueError):
            RootedDigraph(CYCLE3, (0, 5))

    def test_roots_nonadjacent(self):
        assert not RootedDigraph(CYCLE3, (0, 1)).roots_nonadjacent()
        g = Digraph(4, [(0, 2), (2, 1), (3, 0)])
        assert RootedDigraph(g, (0, 1)).roots_nonadjacent()
