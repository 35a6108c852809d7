"""Exact integer polynomial arithmetic and formatting."""

from fractions import Fraction

import pytest

from quatmoments.polynomial import MomentPoly


def test_canonical_form_drops_zeros():
    p = MomentPoly({(2, ()): 0, (1, ()): 3})
    assert p.terms == {(1, ()): 3}


def test_equality_is_coefficientwise():
    p = MomentPoly({(2, ()): 4, (1, ()): -2})
    q = MomentPoly({(1, ()): -2, (2, ()): 4})
    assert p == q
    assert p != MomentPoly({(2, ()): 4})


def test_add_sub_scale():
    p = MomentPoly({(2, ()): 1})
    q = MomentPoly({(2, ()): -1, (0, ()): 5})
    assert (p + q).terms == {(0, ()): 5}
    assert (p - p) == MomentPoly.zero()
    assert p.scale(3).terms == {(2, ()): 3}
    assert not MomentPoly.zero()


def test_fraction_coefficients_must_be_integral():
    assert MomentPoly({(1, ()): Fraction(4, 2)}).terms == {(1, ()): 2}
    with pytest.raises(ValueError):
        MomentPoly({(1, ()): Fraction(1, 2)})


def test_evaluate():
    p = MomentPoly({(2, (1,)): 16, (1, (2,)): 16, (1, (1,)): -8}, 1)
    assert p.evaluate(3, (4,)) == 16 * 9 * 4 + 16 * 3 * 16 - 8 * 12


def test_substitute_scaled():
    p = MomentPoly({(2, ()): 1, (1, ()): 1})
    assert p.substitute_scaled(-2).terms == {(2, ()): 4, (1, ()): -2}


def test_from_univariate():
    p = MomentPoly.from_univariate([0, -2, 4])
    assert p == MomentPoly({(1, ()): -2, (2, ()): 4})


def test_str_single_variable():
    p = MomentPoly({(2, ()): 4, (1, ()): -2})
    assert str(p) == "4*N^2 - 2*N"
    assert str(MomentPoly.zero()) == "0"
    assert str(MomentPoly({(0, ()): 7})) == "7"
    assert str(MomentPoly({(1, ()): 1})) == "N"
    assert str(MomentPoly({(1, ()): -1})) == "-N"


def test_str_wishart_order():
    p = MomentPoly({(1, (2,)): 16, (2, (1,)): 16, (1, (1,)): -8}, 1)
    assert str(p) == "16*M^2*N + 16*M*N^2 - 8*M*N"


def test_str_multicolor():
    p = MomentPoly({(1, (0, 1)): 4}, 2)
    assert str(p) == "4*M2*N"


def test_lambda_presentation():
    p = MomentPoly({(1, (2,)): 16, (2, (1,)): 16, (1, (1,)): -8}, 1)
    assert p.lambda_str() == "16*lam^2*N^3 + 16*lam*N^3 - 8*lam*N^2"
    assert MomentPoly.zero(1).lambda_str() == "0"


def test_json_dict_round_shape():
    p = MomentPoly({(1, (1,)): 4}, 1)
    d = p.to_json_dict()
    assert d["variables"] == ["N", "M"]
    assert d["terms"] == [{"coeff": 4, "exponents": {"N": 1, "M": 1}}]
    assert d["pretty"] == "4*M*N"


def test_mixed_arity_rejected():
    p = MomentPoly({(1, (1,)): 1}, 1)
    q = MomentPoly({(1, ()): 1})
    with pytest.raises(ValueError):
        p + q
    with pytest.raises(ValueError):
        MomentPoly({(1, (1, 2)): 1}, 1)
