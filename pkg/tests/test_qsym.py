import pytest
from hypothesis import given, strategies as st

from dualequiv.qsym import (
    FExpansion,
    NotSchurPositive,
    QTPoly,
    SchurExpansion,
    extract_schur,
    f_equal,
    schur_basis_rank,
    schur_to_f,
)
from dualequiv.shapes import SkewShape, count_syt, partitions

ONE = QTPoly.monomial()


def test_small_schur_functions():
    assert schur_to_f((3,)) == FExpansion(3, {"++": ONE})
    assert schur_to_f((1, 1, 1)) == FExpansion(3, {"--": ONE})
    assert schur_to_f((2, 1)) == FExpansion(3, {"+-": ONE, "-+": ONE})


@pytest.mark.parametrize("n", range(1, 8))
def test_schur_functions_have_syt_many_terms(n):
    for la in partitions(n):
        assert sum(p.at_one() for p in schur_to_f(la).terms.values()) == count_syt(la)


@pytest.mark.parametrize("n", range(1, 9))
def test_schur_functions_are_independent(n):
    assert schur_basis_rank(n) == len(partitions(n))


@pytest.mark.parametrize("method", ["solve", "peel"])
@pytest.mark.parametrize("n", range(1, 7))
def test_extract_recovers_each_schur_function(n, method):
    for la in partitions(n):
        assert extract_schur(schur_to_f(la), method) == SchurExpansion(n, {la: ONE})


def test_skew_schur_expands_by_littlewood_richardson():
    f = schur_to_f(SkewShape((2, 1), (1,)))
    assert extract_schur(f) == SchurExpansion(2, {(2,): ONE, (1, 1): ONE})


def test_non_schur_combination_rejected():
    with pytest.raises(NotSchurPositive):
        extract_schur(FExpansion(3, {"+-": ONE}))
    with pytest.raises(NotSchurPositive):
        extract_schur(schur_to_f((2, 1)).scale(QTPoly.monomial(c=-1)))


def test_comparison_witness_order():
    cmp = f_equal(schur_to_f((2, 1)), schur_to_f((1, 1, 1)))
    assert not cmp and cmp.witness == "--"
    assert f_equal(schur_to_f((2, 1)), schur_to_f((2, 1)))


def test_degree_mismatch_is_an_error():
    with pytest.raises(ValueError):
        f_equal(FExpansion(2), FExpansion(3))


def test_polynomial_arithmetic():
    a = QTPoly.parse_terms([{"q": 1, "c": 2}, {"t": 1, "c": 1}])
    b = QTPoly.monomial(q=1)
    assert str(a) == "t + 2q"
    assert a - b == QTPoly({(1, 0): 1, (0, 1): 1})
    assert (a * b).coeff(2, 0) == 2
    assert a.swap().coeff(0, 1) == 2
    assert QTPoly.monomial(q=-1) * b == ONE
    assert a.at_one() == 3


def test_json_roundtrips():
    s = SchurExpansion(3, {(2, 1): QTPoly.monomial(q=1, t=2, c=3), (3,): ONE})
    assert SchurExpansion.from_json(s.to_json()) == s
    assert s.to_json()["terms"][0] == {"lambda": [3], "coeff": [{"q": 0, "t": 0, "c": 1}]}
    f = s.to_f()
    assert FExpansion.from_json(f.to_json()) == f


def test_invalid_signature_rejected():
    with pytest.raises(ValueError):
        FExpansion(3, {"+": ONE})


combos = st.dictionaries(
    st.sampled_from(partitions(5)),
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 4), min_size=1, max_size=3),
    min_size=1,
    max_size=4,
)


@given(combos)
def test_extraction_inverts_expansion(data):
    s = SchurExpansion(5, {la: QTPoly(terms) for la, terms in data.items()})
    f = s.to_f()
    assert extract_schur(f, "solve") == s
    assert extract_schur(f, "peel") == s
