import pytest

from dualequiv.campaigns import SHARPNESS, check_sharpness, sharpness_values, trim_skew_shapes
from dualequiv.llt import diam, inv_k
from dualequiv.macdonald import (
    ShapeNotCovered,
    a_nu,
    arm,
    contains_subdiagram,
    des,
    filling_to_tuple,
    iter_fillings,
    leg,
    mac_inv,
    macdonald_f_expansion,
    macdonald_llt_form,
    macdonald_schur_expansion,
    maj,
    tr_tuples,
    tuple_to_filling,
)
from dualequiv.qsym import QTPoly, SchurExpansion, extract_schur, f_equal
from dualequiv.shapes import SkewShape, partitions

GOLDEN_SHAPE = SkewShape((3, 3, 2, 1, 1))
GOLDEN_ROWS = [[2, 5, 10], [6, 7, 8], [3, 9], [4], [1]]


def poly(*monos):
    out = QTPoly()
    for q, t in monos:
        out = out + QTPoly.monomial(q, t)
    return out


@pytest.fixture
def golden():
    f = {(r, c): v for r, row in enumerate(GOLDEN_ROWS) for c, v in enumerate(row)}
    return filling_to_tuple(GOLDEN_SHAPE, f)


def test_golden_statistics(golden):
    assert sorted(golden.entries[x] for x in des(golden.tuple)) == [4, 6, 7, 9]
    assert a_nu(golden.tuple) == 3
    assert inv_k(golden) == 4
    assert mac_inv(golden) == 1
    assert maj(golden.tuple) == 9


def test_golden_arm_and_leg(golden):
    x = next(x for x, v in golden.entries.items() if v == 6)
    assert (arm(x, golden.tuple), leg(x, golden.tuple)) == (2, 3)


def test_transfer_round_trip():
    mu = SkewShape((3, 2, 1))
    for f in iter_fillings(mu):
        t = filling_to_tuple(mu, f)
        assert t.is_valid()
        assert tuple_to_filling(t) == f


@pytest.mark.parametrize(
    "mu, expected",
    [
        ((1, 1), {(2,): poly((0, 0)), (1, 1): poly((0, 1))}),
        ((2,), {(2,): poly((0, 0)), (1, 1): poly((1, 0))}),
        ((2, 1), {(3,): poly((0, 0)), (2, 1): poly((1, 0), (0, 1)), (1, 1, 1): poly((1, 1))}),
        ((3,), {(3,): poly((0, 0)), (2, 1): poly((1, 0), (2, 0)), (1, 1, 1): poly((3, 0))}),
        (
            (2, 2),
            {
                (4,): poly((0, 0)),
                (3, 1): poly((1, 0), (0, 1), (1, 1)),
                (2, 2): poly((2, 0), (0, 2)),
                (2, 1, 1): poly((1, 1), (2, 1), (1, 2)),
                (1, 1, 1, 1): poly((2, 2)),
            },
        ),
    ],
)
def test_known_expansions(mu, expected):
    n = sum(mu)
    assert macdonald_schur_expansion(mu) == SchurExpansion(n, expected)


def test_forbidden_shapes_raise():
    with pytest.raises(ShapeNotCovered):
        macdonald_schur_expansion((4,))
    with pytest.raises(ShapeNotCovered):
        macdonald_schur_expansion((3, 3))
    with pytest.raises(ShapeNotCovered):
        macdonald_schur_expansion((1, 1, 1, 1), "conjugate")


def test_conjugate_mode_covers_a_row():
    assert macdonald_schur_expansion((4,), "conjugate") == extract_schur(macdonald_f_expansion((4,)))


def test_direct_matches_extraction():
    assert macdonald_schur_expansion((3, 2)) == extract_schur(macdonald_f_expansion((3, 2)))


@pytest.mark.parametrize("mu", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 1, 1)])
def test_llt_form_equals_f_expansion(mu):
    assert f_equal(macdonald_llt_form(mu), macdonald_f_expansion(mu))


@pytest.mark.parametrize("mu", partitions(5))
def test_inversion_statistic_is_nonnegative(mu):
    for f in iter_fillings(mu):
        assert mac_inv(filling_to_tuple(mu, f)) >= 0


@pytest.mark.parametrize("mu", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 1, 1)])
def test_conjugate_symmetry(mu):
    left = macdonald_f_expansion(mu).swap_qt()
    assert f_equal(left, macdonald_f_expansion(SkewShape(mu).conjugate()))


def test_subdiagram_containment():
    assert contains_subdiagram((4, 1), (4,))
    assert not contains_subdiagram((3, 3, 1), (4,))
    assert contains_subdiagram(SkewShape((4, 4), (1,)), (3, 3))
    assert not contains_subdiagram(SkewShape((4, 3), (1,)), (3, 3))


def test_tr_diameter_criterion():
    for n in range(1, 8):
        for shape in trim_skew_shapes(n):
            small = all(diam(nu) <= 3 for nu in tr_tuples(shape))
            avoids = not contains_subdiagram(shape, (3, 3)) and not contains_subdiagram(shape, (4,))
            assert small == avoids, shape


@pytest.mark.parametrize("inst", SHARPNESS, ids=lambda i: i["family"] + str(i.get("mu", i.get("tuple"))))
def test_sharpness(inst):
    assert sharpness_values(inst) == (1, 0)
    assert check_sharpness(inst)["ok"]
