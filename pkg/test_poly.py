# test_poly.py

"""
Tests für multivariate und univariate Polynome über F_p.
"""
import numpy as np
import pytest

from errors import BothZero, FieldMismatch, InvalidParameters
from poly import (
    MultiPoly,
    UniPoly,
    dehomogenize,
    evaluate,
    format_poly,
    gcd_univariate,
    homogenize,
    substitute_linear_forms,
)


@pytest.fixture
def xs(small_field):
    return [MultiPoly.variable(small_field, 3, i) for i in range(3)]


@pytest.fixture
def conic(xs):
    x0, x1, x2 = xs
    return x0 * x2 - x1 ** 2


def test_evaluate(small_field, conic):
    assert evaluate(conic, (1, 1, 3)) == small_field(2)
    assert evaluate(conic, (1, 2, 4)) == small_field(0)
    assert evaluate(conic, (3, 0, 6)) == small_field(18)
    with pytest.raises(InvalidParameters):
        evaluate(conic, (1, 1))


def test_arithmetic(small_field, xs):
    x0, x1, _ = xs
    square = (x0 + x1) ** 2
    assert square == x0 ** 2 + 2 * x0 * x1 + x1 ** 2
    assert (x0 - x0).is_zero()
    assert (x0 + 1).degree() == 1
    assert MultiPoly.zero(small_field, 3).degree() == -1
    assert (x0 * 101).is_zero()


def test_mixed_fields_rejected(small_field, tiny_field):
    a = MultiPoly.variable(small_field, 2, 0)
    b = MultiPoly.variable(tiny_field, 2, 0)
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(InvalidParameters):
        a + MultiPoly.variable(small_field, 3, 0)


def test_homogeneity(conic, xs):
    assert conic.is_homogeneous()
    assert not (xs[0] + 1).is_homogeneous()
    assert xs[2].is_linear_form()
    assert not conic.is_linear_form()


def test_homogenize_and_back(small_field):
    x1, x2 = (MultiPoly.variable(small_field, 2, i) for i in range(2))
    hyperbola = x1 * x2 - 1
    H = homogenize(hyperbola)
    assert H.num_vars == 3
    assert H.terms == {(0, 1, 1): 1, (2, 0, 0): 100}
    assert H.is_homogeneous()
    assert dehomogenize(H) == hyperbola

    line = x1 + 3
    assert homogenize(line).terms == {(0, 1, 0): 1, (1, 0, 0): 3}


def random_poly(rng, field, num_vars, max_exp, count):
    exps = rng.integers(0, max_exp + 1, size=(count, num_vars))
    coeffs = rng.integers(1, field.prime, size=count)
    return MultiPoly(field, num_vars, {tuple(int(e) for e in exp): int(c) for exp, c in zip(exps, coeffs)})


@pytest.mark.parametrize("seed", range(40))
def test_homogenize_agrees_on_chart(small_field, seed):
    rng = np.random.default_rng(seed)
    num_vars = int(rng.integers(1, 5))
    f = random_poly(rng, small_field, num_vars, 3, int(rng.integers(1, 7)))
    F = homogenize(f)
    assert F.is_homogeneous()
    assert dehomogenize(F) == f
    for point in rng.integers(0, 101, size=(5, num_vars)):
        a = tuple(int(x) for x in point)
        assert evaluate(F, (1,) + a) == evaluate(f, a)


def test_linear_coefficients(small_field, conic):
    affine = MultiPoly.from_linear(small_field, (3, 1, 2), constant_first=True)
    assert affine.num_vars == 2
    assert affine.affine_coeffs() == (3, 1, 2)
    with pytest.raises(InvalidParameters):
        affine.linear_coeffs()

    form = MultiPoly.from_linear(small_field, (0, 5, 100))
    assert form.linear_coeffs() == (0, 5, 100)
    with pytest.raises(InvalidParameters):
        conic.affine_coeffs()


def test_embed(small_field):
    x0 = MultiPoly.variable(small_field, 2, 0)
    assert x0.embed(4, offset=1).terms == {(0, 1, 0, 0): 1}
    with pytest.raises(InvalidParameters):
        x0.embed(2, offset=1)


def test_format_poly(small_field, conic):
    assert format_poly(conic) == "-x1^2 + x0*x2"
    x1, x2 = (MultiPoly.variable(small_field, 2, i) for i in range(2))
    assert format_poly(x1 * x2 - 1, offset=1) == "x1*x2 - 1"
    assert format_poly(2 * x1 + 100) == "2*x0 - 1"
    assert format_poly(MultiPoly.zero(small_field, 2)) == "0"


def test_substitute_rational_normal_curve(small_field, conic):
    one = UniPoly.of(small_field, [1])
    t = UniPoly.monomial(small_field, 1)
    t2 = UniPoly.monomial(small_field, 2)
    assert substitute_linear_forms(conic, [one, t, t2]).is_zero()

    x0, x1 = (MultiPoly.variable(small_field, 2, i) for i in range(2))
    result = substitute_linear_forms(x0 ** 2 + x1 ** 2, [one, t])
    assert result.coeffs == (1, 0, 1)
    assert substitute_linear_forms(x1, [one, t]) == t
    with pytest.raises(InvalidParameters):
        substitute_linear_forms(conic, [one, t])


def test_unipoly_division(small_field):
    a = UniPoly.of(small_field, [100, 0, 1])
    b = UniPoly.of(small_field, [100, 1])
    q, r = a.divmod(b)
    assert q.coeffs == (1, 1)
    assert r.is_zero()
    assert UniPoly.of(small_field, [3, 0, 0]).degree() == 0
    assert a.evaluate(1) == 0
    assert a.evaluate(2) == 3


def test_gcd(small_field):
    def P(*coeffs):
        return UniPoly.of(small_field, coeffs)

    assert gcd_univariate(P(100, 0, 1), P(100, 1)).coeffs == (100, 1)
    assert gcd_univariate(P(0, 1), P(1, 1)).coeffs == (1,)
    assert gcd_univariate(P(0, 2, 2), P(0, 1, 1)).coeffs == (0, 1, 1)
    assert gcd_univariate(P(), P(0, 3)).coeffs == (0, 1)
    with pytest.raises(BothZero):
        gcd_univariate(P(), P())
