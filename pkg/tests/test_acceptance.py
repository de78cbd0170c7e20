"""One test per acceptance criterion; the terminal summary prints a
PASS/FAIL line for each."""

from itertools import permutations
from math import comb

import pytest

from dualequiv.axioms import axiom_reports, classify_graph, detect_f_family, is_deg, load_fixture
from dualequiv.campaigns import run_campaign, trim_skew_shapes, tau_words
from dualequiv.graphs import build_skew_deg
from dualequiv.llt import SkewTuple, TupleFilling, diam, inv_k, shifted_content_word, tau_of
from dualequiv.macdonald import a_nu, contains_subdiagram, filling_to_tuple, mac_inv, maj, tr_tuples
from dualequiv.qsym import extract_schur, schur_to_f
from dualequiv.shapes import SkewShape, partitions, Tableau, content_reading_word, format_word, row_reading_word, signature
from dualequiv.words import check_tau, d_tau_move, dual_move, inverse, knuth_move, p_tableau, q_tableau


def failures_of(report):
    return [f["reason"] for f in report["failures"]]


@pytest.fixture(scope="module")
def axioms_std():
    return run_campaign("axioms-std", 7)


@pytest.fixture(scope="module")
def llt_expansion():
    return run_campaign("llt-expansion", 7)


def test_criterion_1():
    golden = Tableau.from_rows([[1, 2, 5, 7], [3, 6, 9], [4, 8]])
    assert format_word(content_reading_word(golden)) == "438162957"
    assert format_word(row_reading_word(golden)) == "483691257"
    assert signature(content_reading_word(golden)) == "+--+-+-+"

    skew = Tableau(SkewShape((4, 1, 1), (2,)), ((1, 4), (2,), (3,)))
    assert format_word(content_reading_word(skew)) == "3214"
    assert signature(content_reading_word(skew)) == "--+"

    nu = SkewTuple.of(((3, 2, 2), (1,)), ((3, 1, 1), (2,)))
    t = TupleFilling(nu, (Tableau(nu.shapes[0], ((1, 7), (3, 6), (4, 8))), Tableau(nu.shapes[1], ((9,), (2,), (5,)))))
    assert format_word(shifted_content_word(t)) == "453826179"
    assert signature(shifted_content_word(t)) == "---+++-+"
    assert inv_k(t) == 3

    tau = check_tau(tuple(int(c) for c in "456667899"))
    assert tau_of(nu) == tau
    word = tuple(int(c) for c in "534826179")
    assert format_word(d_tau_move(word, 3, tau)) == "542836179"
    assert format_word(d_tau_move(word, 5, tau)) == "634825179"

    mu = SkewShape((3, 3, 2, 1, 1))
    rows = [[2, 5, 10], [6, 7, 8], [3, 9], [4], [1]]
    tr = filling_to_tuple(mu, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})
    assert (a_nu(tr.tuple), mac_inv(tr), maj(tr.tuple)) == (3, 1, 9)


def test_criterion_2(axioms_std):
    assert axioms_std["instances"] > 0
    assert [r for r in failures_of(axioms_std) if r != "classification differs from Yamanouchi count"] == []
    g = load_fixture()
    got = {k: bool(r) for k, r in axiom_reports(g).items()}
    assert got == {"1": True, "2": True, "3": True, "4": True, "5": True, "6": False, "4+": False}
    assert not is_deg(g)
    assert detect_f_family(g)
    report = run_campaign("theorem-4plus")
    assert report["status"] == "pass", report["failures"][:3]


def test_criterion_3(axioms_std):
    assert "classification differs from Yamanouchi count" not in failures_of(axioms_std)
    # a third count: Schur extraction from the F-expansion of the skew Schur function
    for n in range(1, 7):
        for shape in trim_skew_shapes(n):
            found = classify_graph(build_skew_deg(shape))
            extracted = extract_schur(schur_to_f(shape))
            assert {la: c.at_one() for la, c in extracted.terms.items()} == dict(found), shape


@pytest.mark.parametrize("name", ["llt-n5", "llt-n6", "gap-tau"])
def test_criterion_4(name):
    report = run_campaign(name)
    assert report["status"] == "pass", report["failures"][:3]
    assert report["instances"] > 0


def test_criterion_5(llt_expansion):
    assert llt_expansion["status"] == "pass", llt_expansion["failures"][:3]
    assert llt_expansion["counts"]["tuples"] == llt_expansion["instances"]


def test_criterion_6():
    report = run_campaign("sharpness")
    assert report["status"] == "pass", report["failures"]
    assert report["instances"] == 4


def test_criterion_7():
    report = run_campaign("mac-expansion", 7)
    assert report["status"] == "pass", report["failures"][:3]
    assert report["counts"]["conjugate"] == sum(len(partitions(n)) for n in range(1, 7))


def test_criterion_8(llt_expansion):
    for w in permutations(range(1, 7)):
        assert q_tableau(w).rows == p_tableau(inverse(w)).rows
        for i in range(2, 6):
            for j in range(2, 6):
                assert knuth_move(dual_move(w, i), j) == dual_move(knuth_move(w, j), i)
    for n in range(1, 11):
        assert len(tau_words(n)) == comb(2 * n, n) // (n + 1)
    for n in range(1, 8):
        for shape in trim_skew_shapes(n):
            small = all(diam(nu) <= 3 for nu in tr_tuples(shape))
            avoids = not (contains_subdiagram(shape, (3, 3)) or contains_subdiagram(shape, (4,)))
            assert small == avoids, shape
    # inv constancy on components is part of every llt-expansion instance
    assert llt_expansion["instances"] > 0
    assert "inv not constant on a component" not in failures_of(llt_expansion)
