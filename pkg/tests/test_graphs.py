from collections import Counter
from itertools import permutations

import pytest

from dualequiv.graphs import (
    ClosureError,
    HypothesisViolation,
    Morphism,
    SignedColoredGraph,
    _propagate,
    build_gn,
    build_gn_tau,
    build_skew_deg,
    build_standard_deg,
    check_morphism,
    color_reverse,
    component_sets,
    components,
    graph_from_moves,
    induced,
    induced_P_morphism,
    isomorphic,
    restrict,
    syam_schur_expansion,
    upward_restrict,
)
from dualequiv.shapes import SkewShape, count_syt, partitions, row_reading_word, signature
from dualequiv.words import rsk_shape


def edge_set(g):
    out = {}
    for c, pairs in g.edges.items():
        for a, b in pairs:
            out.setdefault(frozenset((g.labels[a], g.labels[b])), set()).add(c)
    return out


def test_golden_chain_for_32():
    dot = build_standard_deg((3, 2)).to_dot()
    assert dot == (
        "graph G {\n"
        '  v0 [label="24/135\\n-+-+"];\n'
        '  v1 [label="25/134\\n-++-"];\n'
        '  v2 [label="34/125\\n+-++"];\n'
        '  v3 [label="35/124\\n+-+-"];\n'
        '  v4 [label="45/123\\n++-+"];\n'
        '  v0 -- v1 [label="4"];\n'
        '  v0 -- v2 [label="2,3"];\n'
        '  v1 -- v3 [label="2"];\n'
        '  v3 -- v4 [label="3,4"];\n'
        "}\n"
    )


def test_single_row_graph():
    g = build_standard_deg((4,))
    assert len(g) == 1 and g.num_edges() == 0 and g.sigs == ("+++",)


def test_square_graph():
    g = build_standard_deg((2, 2))
    assert len(g) == 2
    assert sorted(g.edges) == [2, 3]
    assert all(len(p) == 1 for p in g.edges.values())


def test_small_skew_graph():
    g = build_skew_deg(SkewShape((2, 1), (1,)))
    assert len(g) == 2 and g.num_edges() == 0


def test_skew_component_count_matches_yamanouchi_count():
    g = build_skew_deg(SkewShape((2, 2, 1), (1, 1)))
    counts = syam_schur_expansion(row_reading_word(t) for t in g.labels)
    assert len(component_sets(g)) == sum(counts.values())


def test_g3_edges():
    # d_2 always moves the value 2, and dual equivalent words share Q
    g = build_gn(3)
    assert edge_set(g) == {
        frozenset({(1, 3, 2), (2, 3, 1)}): {2},
        frozenset({(2, 1, 3), (3, 1, 2)}): {2},
    }


@pytest.mark.parametrize("n", range(2, 6))
def test_identity_tau_recovers_gn(n):
    assert build_gn_tau(tuple(range(1, n + 1))) == build_gn(n)


def test_golden_edge_with_two_colors():
    g = build_gn_tau((5, 6, 6, 6, 6, 6))
    assert edge_set(g)[frozenset({(3, 1, 2, 6, 5, 4), (4, 1, 2, 6, 5, 3)})] == {3, 4}


def test_g5_component_count():
    assert len(component_sets(build_gn(5))) == 26


def test_components_of_edgeless_graph():
    g = build_standard_deg((1,))
    assert len(components(g)) == 1


def test_color_reversal_is_an_involution_and_an_isomorphism():
    for n in range(1, 7):
        for la in partitions(n):
            g = build_standard_deg(la)
            r = color_reverse(g)
            assert color_reverse(r) == g
            assert isomorphic(g, r) is not None


def test_restriction_identity_and_upward_shift():
    g = build_standard_deg((3, 2, 1))
    assert restrict(g, g.n, g.N) == g
    up = upward_restrict(g, 1)
    assert up.type_params == (1, 5, 5)
    assert all(s == t[1:] for s, t in zip(up.sigs, g.sigs))
    assert set(up.edges) <= {2, 3, 4}


def test_restriction_out_of_range():
    with pytest.raises(ValueError):
        restrict(build_standard_deg((2, 1)), 5, 5)


def test_isomorphism_examples():
    g = build_standard_deg((3, 2))
    phi = isomorphic(g, g)
    assert phi is not None and check_morphism(phi, g, g)
    assert isomorphic(build_standard_deg((2, 1)), build_standard_deg((1, 1, 1))) is None


def test_color_shift_isomorphism():
    g = build_standard_deg((2, 2))
    shifted = g.with_edges({c + 2: p for c, p in g.edges.items()}, m=3, n=6, N=6, sigs=["++" + s for s in g.sigs])
    assert isomorphic(g, shifted, allow_color_shift=True, signed=False) is not None
    assert isomorphic(g, shifted) is None


def test_standard_graphs_have_only_the_identity_automorphism():
    for n in range(1, 6):
        graphs = {la: build_standard_deg(la) for la in partitions(n)}
        for la, g in graphs.items():
            for mu, h in graphs.items():
                if la != mu:
                    assert isomorphic(g, h) is None
            vs = list(g.vertices)
            autos = [_propagate(g, vs, g, vs, 0, h0, True, 0) for h0 in vs]
            autos = [a for a in autos if a is not None]
            assert autos == [{v: v for v in vs}]


def test_json_roundtrip():
    g = build_gn(4)
    back = SignedColoredGraph.from_json(g.to_json())
    assert back.sigs == g.sigs and back.edges == g.edges


@pytest.mark.parametrize("n", range(2, 7))
def test_insertion_tableau_is_an_isomorphism_on_components(n):
    g = build_gn(n)
    phi, target = induced_P_morphism(g)
    assert check_morphism(phi, g, target)
    for vs in component_sets(g):
        image = {phi(v) for v in vs}
        la = rsk_shape(g.labels[vs[0]])
        assert len(image) == len(vs) == count_syt(la)


def test_morphism_check_rejects_bad_maps():
    g = build_standard_deg((3, 2))
    assert not check_morphism(Morphism({v: 0 for v in g.vertices}), g, g)


def test_hypothesis_violation_reported():
    words = [(1, 2, 3), (3, 2, 1)]
    g = SignedColoredGraph(tuple(words), tuple(signature(w) for w in words), {2: [(0, 1)]}, 1, 3, 3)
    with pytest.raises(HypothesisViolation):
        induced_P_morphism(g)


def test_move_closure_enforced():
    words = [(1, 3, 2)]
    with pytest.raises(ClosureError):
        graph_from_moves(words, [signature(w) for w in words], {2: lambda w: (3, 1, 2)}, 1, 3, 3)


def test_induced_subgraph_keeps_type():
    g = build_gn(4)
    vs = component_sets(g)[0]
    sub = induced(g, vs)
    assert sub.type_params == g.type_params and len(sub) == len(vs)


def test_syam_expansion_of_all_permutations():
    counts = syam_schur_expansion(permutations(range(1, 4)))
    assert counts == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
