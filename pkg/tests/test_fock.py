import numpy as np
import pytest

from qonkit.fock import build_rep, nilpotency_residual, verify_algebra
from qonkit.qcalc import QParams, Scheme, qnumber


def test_matrix_elements():
    params = QParams.one_param(0.5)
    rep = build_rep(params, 5)
    assert rep.a[2, 3] == pytest.approx(np.sqrt(1.75))
    assert rep.a_dag[3, 2] == pytest.approx(np.sqrt(1.75))
    assert np.allclose(np.diag(rep.q_num_op), [qnumber(n, params) for n in range(5)])
    # step diagonal is constant one for the one-param scheme
    assert np.allclose(np.diag(rep.q_num_step), 1.0)
    two = build_rep(QParams.two_param(0.7, 1.4), 5)
    assert np.allclose(np.diag(two.q_num_step), [1.4 ** -n for n in range(5)])
    sym = build_rep(QParams.symmetric(0.8), 5)
    assert np.allclose(np.diag(sym.q_num_step), [0.8 ** -n for n in range(5)])


def test_number_operator_products():
    rep = build_rep(QParams.one_param(0.3), 8)
    assert np.allclose(rep.a_dag @ rep.a, rep.q_num_op, atol=1e-13)
    upper = rep.a @ rep.a_dag
    shifted = [qnumber(n + 1, rep.params) for n in range(7)]
    assert np.allclose(np.diag(upper)[:7], shifted, atol=1e-13)


def test_relations_random_parameters():
    rng = np.random.RandomState(42)
    for _ in range(20):
        kind = rng.randint(3)
        if kind == 0:
            params = QParams.one_param(complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 0.5)))
        elif kind == 1:
            params = QParams.two_param(complex(rng.uniform(0.2, 1.8), rng.uniform(-0.3, 0.3)),
                                       complex(rng.uniform(0.4, 1.6), rng.uniform(-0.3, 0.3)))
        else:
            params = QParams.symmetric(complex(rng.uniform(0.3, 1.7), rng.uniform(-0.4, 0.4)))
        rep = build_rep(params, 16)
        for name, res in verify_algebra(rep).items():
            assert res < 1e-12, (name, params)


def test_truncation_shows_only_in_top_corner():
    rep = build_rep(QParams.one_param(0.5), 6)
    q = 0.5
    full = rep.a @ rep.a_dag - q * rep.a_dag @ rep.a - rep.q_num_step
    assert np.max(np.abs(full[:5, :5])) < 1e-13
    assert abs(full[5, 5]) > 0.5


def test_warnings_for_indefinite_brackets():
    assert build_rep(QParams.one_param(-2.0), 6).warnings
    assert not build_rep(QParams.one_param(0.5), 6).warnings
    assert not build_rep(QParams.symmetric(0.5 + 0.1j), 6).warnings


def test_nilpotency_at_roots_of_unity():
    for k in range(2, 9):
        assert nilpotency_residual(k) < 1e-12
    for k in range(3, 9):
        assert nilpotency_residual(k, scheme=Scheme.SYMMETRIC) < 1e-12
    # the symmetric scheme degenerates at order two: brackets grow, no cutoff
    assert nilpotency_residual(2, scheme=Scheme.SYMMETRIC) > 1.0


def test_even_roots_truncate_at_half_order():
    # symmetric scheme: the bracket [k/2] vanishes, so a^(k/2) already dies
    for k in (4, 6, 8):
        assert nilpotency_residual(k, scheme=Scheme.SYMMETRIC, exponent=k // 2) < 1e-12
    # odd roots need the full power
    assert nilpotency_residual(5, scheme=Scheme.SYMMETRIC, exponent=2) > 0.1


def test_one_param_root_keeps_full_chain():
    # one-param brackets at the k-th root stay nonzero below k
    k = 5
    params = QParams.root_of_unity(k, Scheme.ONE_PARAM)
    for n in range(1, k):
        assert abs(qnumber(n, params)) > 1e-6
    assert qnumber(k, params) == 0
    assert nilpotency_residual(k, exponent=k - 1) > 0.1


def test_no_nilpotency_off_the_unit_circle():
    params = QParams.one_param(0.5)
    rep = build_rep(params, 12)
    assert np.max(np.abs(np.linalg.matrix_power(rep.a, 6))) > 1e-3
