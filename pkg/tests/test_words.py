from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from dualequiv.graphs import build_gn, component_sets
from dualequiv.shapes import signature
from dualequiv.words import (
    check_tau,
    d_tau_move,
    dual_move,
    inverse,
    knuth_move,
    longest_increasing,
    p_tableau,
    q_tableau,
    rsk,
    rsk_shape,
    syam_member,
    twisted_move,
)


def perms(n):
    return list(permutations(range(1, n + 1)))


def w(text):
    return tuple(int(c) for c in text)


def s(word):
    return "".join(map(str, word))


def test_rsk_shape_example():
    assert rsk_shape(w("15342")) == (3, 1, 1)


def test_rsk_identity():
    p, q = rsk(w("12345"))
    assert p.rows == q.rows == ((1, 2, 3, 4, 5),)


def test_recording_is_insertion_of_inverse_example():
    word = w("534826179")
    assert q_tableau(word).rows == p_tableau(inverse(word)).rows


def test_rsk_duality_on_s6():
    for word in perms(6):
        assert q_tableau(word).rows == p_tableau(inverse(word)).rows


def test_rsk_is_a_bijection_on_s5():
    pairs = {(p.rows, q.rows) for p, q in map(rsk, perms(5))}
    assert len(pairs) == 120


def test_longest_increasing_is_first_row_on_s7():
    for word in perms(7):
        assert longest_increasing(word) == rsk_shape(word)[0]


def test_inverse_examples():
    assert inverse(w("21345")) == w("21345")
    # 15342 swaps the values 2 and 5, so it is its own inverse
    assert s(inverse(w("15342"))) == "15342"
    assert s(inverse(w("23451"))) == "51234"


def test_knuth_examples():
    assert knuth_move(w("123"), 2) == w("123")
    assert knuth_move(w("213"), 2) == w("231")
    assert knuth_move(w("132"), 2) == w("312")
    for a in ("213", "132"):
        assert p_tableau(knuth_move(w(a), 2)).rows == p_tableau(w(a)).rows


def test_dual_move_chain():
    word = w("21345")
    seen = []
    for i in (2, 3, 4):
        word = dual_move(word, i)
        seen.append(s(word))
    assert seen == ["31245", "41235", "51234"]


def test_dual_move_fixes_middle_value_between_neighbors():
    assert dual_move(w("12345"), 3) == w("12345")
    assert dual_move(w("43215"), 3) == w("43215")
    assert dual_move(w("13245"), 3) == w("14235")


def test_twisted_examples():
    assert twisted_move(w("4123"), 2) == w("4123")
    assert s(twisted_move(w("4123"), 3)) == "3142"


def test_tau_move_examples():
    tau = check_tau(w("456667899"))
    word = w("534826179")
    assert s(d_tau_move(word, 3, tau)) == "542836179"
    assert s(d_tau_move(word, 5, tau)) == "634825179"


def test_full_tau_gives_twisted_moves():
    tau = (4, 4, 4, 4)
    for word in perms(4):
        for i in (2, 3):
            assert d_tau_move(word, i, tau) == twisted_move(word, i)


def test_moves_are_involutions():
    for word in perms(5):
        for i in range(2, 5):
            assert dual_move(dual_move(word, i), i) == word
            assert twisted_move(twisted_move(word, i), i) == word
    for word in perms(4):
        for i in (2, 3):
            assert twisted_move(twisted_move(word, i), i) == word


def test_knuth_and_dual_moves_commute_on_s6():
    for word in perms(6):
        for i in range(2, 6):
            d = dual_move(word, i)
            for j in range(2, 6):
                k = knuth_move(word, j)
                assert knuth_move(d, j) == dual_move(k, i)
                assert signature(k) == signature(word)
                assert p_tableau(k).rows == p_tableau(word).rows


def test_dual_move_is_conjugated_knuth_move_on_s6():
    for word in perms(6):
        for i in range(2, 6):
            assert dual_move(word, i) == inverse(knuth_move(inverse(word), i))


def test_recording_tableau_constant_under_dual_moves_on_s7():
    for word in perms(7):
        q = q_tableau(word).rows
        for i in range(2, 7):
            assert q_tableau(dual_move(word, i)).rows == q


@pytest.mark.parametrize("n", range(2, 7))
def test_dual_classes_are_recording_fibers(n):
    g = build_gn(n)
    classes = {frozenset(g.labels[v] for v in vs) for vs in component_sets(g)}
    fibers = {}
    for word in perms(n):
        fibers.setdefault(q_tableau(word).rows, set()).add(word)
    assert classes == {frozenset(f) for f in fibers.values()}


def test_syam_examples():
    assert syam_member(w("132"), (2, 1))
    assert not syam_member(w("123"), (2, 1))
    assert syam_member(w("1234"), (4,))


@pytest.mark.parametrize("bad", [1, 5, 0])
def test_out_of_range_index_is_an_error(bad):
    with pytest.raises(ValueError):
        dual_move(w("12345"), bad)
    with pytest.raises(ValueError):
        knuth_move(w("12345"), bad)


def test_malformed_tau_rejected():
    for bad in [(2, 1, 3), (1, 2, 2), (3, 3, 4)]:
        with pytest.raises(ValueError):
            check_tau(bad)


@given(st.permutations(list(range(1, 9))))
def test_inverse_is_an_involution(word):
    word = tuple(word)
    assert inverse(inverse(word)) == word
