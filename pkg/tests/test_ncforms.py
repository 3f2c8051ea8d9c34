import numpy as np
import pytest

from qonkit.braid import reciprocal_phase_matrix
from qonkit.errors import ConventionError, DegenerateParameterError
from qonkit.ncforms import (
    CoordinateAlgebra,
    NCForm,
    NCPolynomial,
    derivative,
    exterior_derivative,
    generators,
    normal_order,
)


def random_algebra(d, seed, p=None):
    rng = np.random.RandomState(seed)
    if p is None:
        p = rng.uniform(0.2, 1.5, d)
    return CoordinateAlgebra(reciprocal_phase_matrix(d, seed=seed), p=p)


def random_poly(alg, seed, nterms=5, maxdeg=4):
    rng = np.random.RandomState(seed)
    terms = {tuple(rng.randint(0, maxdeg, alg.d)): complex(rng.randn(), rng.randn())
             for _ in range(nterms)}
    return NCPolynomial(alg, terms)


def test_algebra_validation():
    with pytest.raises(DegenerateParameterError):
        CoordinateAlgebra([[1, 2], [3, 1]])
    with pytest.raises(DegenerateParameterError):
        CoordinateAlgebra([[2, 1], [1, 1]])
    alg = CoordinateAlgebra(np.ones((3, 3)), p=0.5)
    assert alg.d == 3
    assert np.allclose(alg.p, 0.5)


def test_generator_exchange():
    alg = random_algebra(3, seed=1)
    xs = generators(alg)
    for i in range(3):
        for j in range(3):
            lhs = xs[i] * xs[j]
            rhs = alg.q[i, j] * (xs[j] * xs[i])
            assert (lhs - rhs).is_zero(1e-13)


def test_normal_order_counts_crossings():
    alg = random_algebra(3, seed=9, p=1.0)
    q = alg.q
    phase, mu = normal_order(alg, [2, 0, 1, 2, 0])
    assert mu == (2, 1, 2)
    # inversion pairs of the word: (2,0) three times, (2,1), (1,0)
    manual = q[2, 0] ** 3 * q[2, 1] * q[1, 0]
    assert phase == pytest.approx(manual)
    # reduction path independence: reversed word has complementary crossings
    back, mu2 = normal_order(alg, [0, 2, 1, 0, 2])
    assert mu2 == mu
    assert phase * np.prod([q[2, 0] ** 3, q[2, 1], q[1, 0]]) != 0


def test_product_matches_word_reduction():
    alg = random_algebra(3, seed=4)
    xs = generators(alg)
    lhs = xs[2] * xs[0] * xs[1] * xs[2] * xs[0]
    rhs = NCPolynomial.from_word(alg, [2, 0, 1, 2, 0])
    assert (lhs - rhs).is_zero(1e-13)


def test_derivative_monomial_rule():
    # one direction at work: d_0 x_0^m = [m] x_0^(m-1)
    alg = random_algebra(2, seed=5, p=[0.7, 1.3])
    x0, x1 = generators(alg)
    f = x0 * x0 * x0
    got = derivative(f, 0)
    bracket3 = (1 - 0.7 ** 3) / (1 - 0.7)
    assert got.terms[(2, 0)] == pytest.approx(bracket3)
    # crossing phase: d_1 picks up inverse phases from coordinates on its left
    g = x0 * x1
    got = derivative(g, 1)
    assert got.terms[(1, 0)] == pytest.approx(alg.q[1, 0] ** -1)
    assert derivative(x1, 0).is_zero()


def test_second_derivatives_frozen_example():
    alg = random_algebra(2, seed=1, p=1.0)
    x0, x1 = generators(alg)
    f = x0 * x1
    a = derivative(derivative(f, 1), 0)
    b = derivative(derivative(f, 0), 1)
    assert a.terms[(0, 0)] == pytest.approx(alg.q[0, 1])
    assert b.terms[(0, 0)] == pytest.approx(1.0)


def test_derivative_exchange_rule():
    # d_j d_i = q[j,i] d_i d_j on random polynomials
    for d in (2, 3):
        alg = random_algebra(d, seed=d + 10)
        for t in range(5):
            poly = random_poly(alg, seed=100 * d + t)
            for i in range(d):
                for j in range(d):
                    lhs = derivative(derivative(poly, i), j)
                    rhs = alg.q[j, i] * derivative(derivative(poly, j), i)
                    assert (lhs - rhs).is_zero(1e-12)


def test_differential_word_canonicalization():
    alg = random_algebra(3, seed=7)
    mu = (0, 0, 0)
    # out-of-order pair picks up -q[a,b]
    form = NCForm(alg, {(mu, (2, 1)): 1.0})
    assert form.terms == {(mu, (1, 2)): pytest.approx(-alg.q[1, 2])}
    # repeated differential dies
    assert NCForm(alg, {(mu, (1, 1)): 1.0}).is_zero()
    assert NCForm(alg, {(mu, (2, 0, 2)): 1.0}).is_zero()


def test_exterior_derivative_classical_limit():
    # all phases one, p = 1: compare against plain polynomial calculus
    alg = CoordinateAlgebra(np.ones((2, 2)), p=1.0)
    x, y = generators(alg)
    g = x * x * y + 3 * y
    dg = exterior_derivative(g)
    assert dg.terms[((1, 1), (0,))] == pytest.approx(2.0)
    assert dg.terms[((2, 0), (1,))] == pytest.approx(1.0)
    assert dg.terms[((0, 0), (1,))] == pytest.approx(3.0)
    assert len(dg.terms) == 3


def test_d_squared_vanishes():
    count = 0
    for d in (2, 3, 4):
        for t in range(6):
            alg = random_algebra(d, seed=31 * d + t)
            poly = random_poly(alg, seed=17 * d + t)
            assert exterior_derivative(exterior_derivative(poly)).is_zero(1e-12)
            rng = np.random.RandomState(t)
            form = NCForm(alg, {(tuple(rng.randint(0, 3, d)), (rng.randint(0, d),)):
                                complex(rng.randn(), rng.randn())})
            assert exterior_derivative(exterior_derivative(form)).is_zero(1e-12)
            count += 2
    assert count >= 36


def test_left_module_action():
    alg = random_algebra(2, seed=3)
    x0, x1 = generators(alg)
    form = exterior_derivative(x1)
    lifted = form.left_multiply(x0)
    assert lifted.terms == {((1, 0), (1,)): pytest.approx(1.0)}


def test_mixed_algebras_rejected():
    a = random_algebra(2, seed=1)
    b = random_algebra(2, seed=2)
    with pytest.raises(ConventionError):
        generators(a)[0] * generators(b)[0]
    with pytest.raises(ConventionError):
        NCForm.from_polynomial(generators(a)[0]) + NCForm.from_polynomial(generators(b)[0])
