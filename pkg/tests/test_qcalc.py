import cmath
import math

import numpy as np
import pytest

from qonkit import (
    DegenerateParameterError,
    DivergenceError,
    QParams,
    Scheme,
    SingularPointError,
    TruncationError,
    convergence_radius,
    jackson_exp_moment,
    jackson_integral,
    qderivative,
    qexp,
    qexp_product,
    qexp_reciprocal,
    qfactorial,
    qnumber,
)


def test_one_param_bracket_values():
    p = QParams.one_param(0.5)
    # hand-evaluated: (1 - 0.5^3) / 0.5
    assert qnumber(3, p) == pytest.approx(1.75)
    assert qnumber(0, p) == 0
    assert qnumber(1, p) == 1
    assert qfactorial(3, p) == pytest.approx(2.625)
    assert qfactorial(4, p) == pytest.approx(4.921875)


def test_bracket_recurrences():
    rng = np.random.RandomState(7)
    for _ in range(20):
        q = complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5))
        p = complex(rng.uniform(0.3, 2.0), rng.uniform(-0.3, 0.3))
        one = QParams.one_param(q)
        two = QParams.two_param(q, p)
        sym = QParams.symmetric(q if q != 0 else 0.7)
        for n in range(6):
            assert qnumber(n + 1, one) - q * qnumber(n, one) == pytest.approx(1)
            assert qnumber(n + 1, two) - q * qnumber(n, two) == pytest.approx(p ** -n)
            qq = sym.q
            assert qnumber(n + 1, sym) - qq * qnumber(n, sym) == pytest.approx(qq ** -n)


def test_classical_limit_returns_integer():
    for scheme in (QParams.one_param(1.0), QParams.two_param(1.0, 1.0),
                   QParams.symmetric(1.0)):
        for n in range(8):
            assert qnumber(n, scheme) == n


def test_symmetric_bracket_roots_of_unity():
    w = QParams.symmetric(cmath.exp(2j * cmath.pi / 3))
    assert qnumber(2, w) == pytest.approx(-1)
    assert abs(qnumber(3, w)) < 1e-12
    # order-4 root: [2] already vanishes
    assert abs(qnumber(2, QParams.symmetric(1j))) < 1e-12
    # at q = -1 the sum form gives the alternating limit
    assert qnumber(3, QParams.symmetric(-1.0)) == pytest.approx(3)
    assert qnumber(2, QParams.symmetric(-1.0)) == pytest.approx(-2)


def test_two_param_degenerate_point_uses_sum():
    # q = 1/p: closed form is 0/0, sum gives n * q^(n-1)
    tp = QParams.two_param(0.5, 2.0)
    assert qnumber(3, tp) == pytest.approx(3 * 0.25)
    assert qnumber(5, tp) == pytest.approx(5 * 0.5 ** 4)


def test_two_param_heading_variant():
    tp = QParams.two_param(0.7, 1.3)
    got = qnumber(2, tp, heading_variant=True)
    assert got == pytest.approx((0.7 ** 2 - 1.3 ** 2) / (0.7 - 1 / 1.3))
    with pytest.raises(DegenerateParameterError):
        qnumber(2, QParams.one_param(0.7), heading_variant=True)


def test_param_validation():
    with pytest.raises(DegenerateParameterError):
        QParams(Scheme.TWO_PARAM, 0.5)
    with pytest.raises(DegenerateParameterError):
        QParams.two_param(0.5, 0.0)
    with pytest.raises(DegenerateParameterError):
        QParams(Scheme.ONE_PARAM, 0.5, p=2.0)
    with pytest.raises(DegenerateParameterError):
        qnumber(2, QParams.symmetric(0.0))
    with pytest.raises(ValueError):
        qnumber(-1, QParams.one_param(0.5))
    rou = QParams.root_of_unity(5)
    assert rou.k == 5
    assert abs(rou.q ** 5 - 1) < 1e-12


def test_convergence_radius():
    assert convergence_radius(QParams.one_param(0.5)) == pytest.approx(2.0)
    assert convergence_radius(QParams.one_param(2.0)) == math.inf
    assert convergence_radius(QParams.one_param(1j)) == 0.0
    assert convergence_radius(QParams.two_param(0.5, 2.0)) == math.inf
    assert convergence_radius(QParams.two_param(0.7, 1.1)) == pytest.approx(
        1 / abs(0.7 - 1 / 1.1))
    assert convergence_radius(QParams.symmetric(0.5)) == math.inf
    assert convergence_radius(QParams.symmetric(1j)) == 0.0


def test_qexp_series_and_product_agree():
    for q in (0.3, 0.5, 0.9):
        p = QParams.one_param(q)
        for x in (0.2, 0.7, -0.4, 0.3 + 0.2j):
            assert qexp(x, p) == pytest.approx(qexp_product(x, q), rel=1e-10)


def test_qexp_reciprocal_is_entire():
    # product representation is valid beyond the series radius
    val = qexp_reciprocal(5.0, 0.5)
    # first factor 1 - (1-q) x = -1.5
    assert val.real < 0 or val.real > 0
    with pytest.raises(DivergenceError):
        qexp(5.0, QParams.one_param(0.5))


def test_qexp_type2_uses_absolute_brackets():
    p = QParams.symmetric(0.8)
    t1 = qexp(0.5, p, variant="type1")
    t2 = qexp(0.5, p, variant="type2")
    # symmetric brackets are positive at real q > 0, both types coincide
    assert t1 == pytest.approx(t2)
    # one-param q = -2 has [2] = -1, so the absolute-value series differs
    p2 = QParams.one_param(-2.0)
    assert qexp(0.3, p2, variant="type1") != pytest.approx(
        qexp(0.3, p2, variant="type2"))


def test_qexp_truncation_error():
    with pytest.raises(TruncationError):
        qexp(1.99, QParams.one_param(0.5), trunc=5)


def test_qderivative():
    # monomial rule: D_q x^2 = [2] x at x = 1
    got = qderivative(lambda x: x * x, 1.0, 0.5)
    assert got == pytest.approx(1.5)
    with pytest.raises(SingularPointError):
        qderivative(lambda x: x, 0.0, 0.5)
    with pytest.raises(DegenerateParameterError):
        qderivative(lambda x: x, 1.0, 1.0)


def test_qexp_eigenfunction_of_qderivative():
    p = QParams.one_param(0.5)
    for x in (0.3, 0.9, 1.5):
        lhs = qderivative(lambda t: qexp(t, p), x, 0.5)
        assert lhs == pytest.approx(qexp(x, p), rel=1e-9)


def test_jackson_integral_basics():
    # constant: sum of the geometric weights telescopes to a
    got = jackson_integral(lambda x: 1.0, 1.0, 0.5)
    assert got == pytest.approx(1.0, rel=1e-10)
    # linear: a^2 (1-q) / (1-q^2) = a^2 / (1+q)
    got = jackson_integral(lambda x: x, 2.0, 0.9)
    assert got == pytest.approx(4 / 1.9, rel=1e-10)
    with pytest.raises(DegenerateParameterError):
        jackson_integral(lambda x: x, 1.0, 1.5)
    with pytest.raises(ValueError):
        jackson_integral(lambda x: x, -1.0, 0.5)


def test_jackson_moments_match_bracket_factorial():
    for q in (0.3, 0.5, 0.9):
        p = QParams.one_param(q)
        for n in range(8):
            got = jackson_exp_moment(n, q)
            assert got == pytest.approx(qfactorial(n, p), rel=1e-9), (n, q)


def test_jackson_moment_frozen_value():
    # n = 4, q = 0.5: [4]! = 1 * 1.5 * 1.75 * 1.875
    assert jackson_exp_moment(4, 0.5) == pytest.approx(4.921875, rel=1e-10)


def test_jackson_unshifted_weight_scales_by_power_of_q():
    # sampling the weight on the grid itself drags in one extra power of q
    # per moment order plus one; the shifted grid restores the factorial
    q = 0.5
    a = 1 / (1 - q)
    for n in range(5):
        un = jackson_integral(lambda x: x ** n * qexp_reciprocal(x, q), a, q)
        expect = q ** (n + 1) * qfactorial(n, QParams.one_param(q))
        assert un == pytest.approx(expect, rel=1e-9)


def test_jackson_moment_upper_limit_insensitive():
    # atoms beyond the radius carry zero weight, doubling a changes nothing
    q, n = 0.5, 4
    a = 1 / (1 - q)
    wide = jackson_integral(lambda x: x ** n * qexp_reciprocal(q * x, q), 2 * a, q)
    assert wide == pytest.approx(4.921875, rel=1e-9)
