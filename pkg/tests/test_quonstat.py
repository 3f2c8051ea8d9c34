import cmath
import math

import numpy as np
import pytest

from qonkit.errors import DivergenceError, SingularPointError
from qonkit.quonstat import (
    ModeSpec,
    gas_scan,
    occupation,
    occupation_finite_sum,
    occupation_series,
    partition_mode,
)


def test_partition_values():
    spec = ModeSpec(0.7, 0.5, k=3)
    x = math.exp(-0.7)
    assert partition_mode(spec) == pytest.approx((1 - x ** 3) / (1 - x))
    assert partition_mode(ModeSpec(0.7, 0.5)) == pytest.approx(1 / (1 - x))
    with pytest.raises(ValueError):
        ModeSpec(-0.1, 0.5)
    with pytest.raises(ValueError):
        ModeSpec(0.5, 0.5, k=1)


def test_three_classical_limits():
    eta = 0.9
    assert occupation(ModeSpec(eta, 1.0)) == pytest.approx(1 / (math.exp(eta) - 1))
    assert occupation(ModeSpec(eta, -1.0)) == pytest.approx(1 / (math.exp(eta) + 1))
    assert occupation(ModeSpec(eta, 0.0)) == pytest.approx(math.exp(-eta))


def test_series_matches_closed_form():
    for q in (0.7, -0.4, 0.3 + 0.5j, -1.0):
        for eta in (0.3, 1.0, 2.5):
            spec = ModeSpec(eta, q)
            got = occupation_series(spec)
            assert got.value == pytest.approx(occupation(spec), abs=1e-12)
            assert got.tail_bound < 1e-12
    with pytest.raises(DivergenceError):
        occupation_series(ModeSpec(0.1, 1.2))


def test_fermion_series_alternates():
    spec = ModeSpec(0.5, -1.0)
    x = math.exp(-0.5)
    partial = sum((-1) ** j * x ** (j + 1) for j in range(200))
    assert occupation_series(spec).value == pytest.approx(partial)


def test_finite_ladder_exact_at_roots():
    for k in range(2, 7):
        q = cmath.exp(2j * cmath.pi / k)
        for eta in (0.4, 1.1):
            res = occupation_finite_sum(ModeSpec(eta, q, k=k))
            assert res.residual < 1e-12, (k, eta)
    # non-primitive root q = 1 is the truncated boson and genuinely differs
    res = occupation_finite_sum(ModeSpec(0.4, 1.0, k=4))
    assert res.residual > 1e-3
    with pytest.raises(ValueError):
        occupation_finite_sum(ModeSpec(0.4, 1.0))


def test_fermi_ladder_is_two_levels():
    eta = 0.8
    res = occupation_finite_sum(ModeSpec(eta, -1.0, k=2))
    assert res.value == pytest.approx(1 / (math.exp(eta) + 1))
    assert res.residual < 1e-15


def test_occupation_singularity():
    with pytest.raises(SingularPointError):
        occupation(ModeSpec(math.log(0.5), 0.5, k=3))


def test_gas_scan_shape_and_content():
    etas = np.arange(0.1, 1.01, 0.1)
    rows = gas_scan(etas, 0.5)
    assert rows.shape == (10, 3)
    assert rows[0, 0] == pytest.approx(0.1)
    assert rows[3, 2] == pytest.approx(occupation(ModeSpec(float(etas[3]), 0.5)))
    with_k = gas_scan(etas, -1.0, k=2)
    assert with_k[2, 1] == pytest.approx(1 + math.exp(-0.3))
