import json
import math

import numpy as np
import pytest

import xpoincare as xp


def test_generators_and_constants():
    names = xp.generator_names()
    assert names[0] == "J1" and names[-1] == "Gs" and len(names) == 15
    rows = xp.structure_constants()
    assert ("Gam1", "P1", "Gs", -1) in rows
    assert len(xp.structure_constants(both_orders=True)) == 2 * len(rows)
    assert xp.jacobi_max_violation() == 0.0


def test_commutator_and_exp_ad():
    e = np.eye(15)
    assert np.array_equal(xp.commutator(e[0], e[1]), e[2])
    x = np.zeros(15)
    x[6] = math.pi / 3
    assert xp.exp_ad(x)[14, 14] == pytest.approx(0.5)
    assert np.array_equal(xp.exp_ad(np.zeros(15)), np.eye(15))
    assert xp.ad_matrix("P0")[6, 14] == 1.0
    with pytest.raises(ValueError):
        xp.ad_matrix("P9")


def test_compose_inverse_round_trip():
    g = {"alpha": 0.3, "a": [1, -2, 0.5, 0.1], "omega": [0.2, 0.1, -0.3, 0.2], "u": [0.3, -0.2, 0.1], "theta": [0.5, 1, -0.2]}
    e = xp.compose(xp.inverse(g), g)
    assert np.allclose(xp.affine_matrix(e), np.eye(6), atol=1e-12)
    assert xp.compose({"a": [1, 0, 0, 0]}, {"a": [0, 2, 0, 0]})["a"] == [1, 2, 0, 0]


def test_oplus_and_theta():
    assert np.array_equal(xp.oplus({}), np.eye(15))
    assert xp.oplus({"a": [0, 0, 5, 0]})[8, 14] == 5
    assert np.allclose(xp.theta_numeric({}), np.eye(15), atol=1e-6)
    value, known = xp.theta_closed({"a": [7, 0, 0, 2]})
    assert value[6, 14] == 7 and known[6, 14] and not known[0, 0]
    g = {"alpha": 1.1, "a": [0.3, 0.2, -0.4, 1.0], "omega": [0.1, 0, 0.2, 0], "u": [0.2, 0, 0.1], "theta": [0.3, 0.2, 0.1]}
    value, known = xp.theta_closed(g)
    numeric = xp.theta_numeric(g)
    assert np.max(np.abs(value - numeric)[known]) < 1e-6


def test_matrices_and_decomposition():
    l = xp.lorentz_matrix([0.75, 0, 0], [0, 0, 0])
    assert l[0, 0] == pytest.approx(1.25)
    u, theta = xp.lorentz_decompose(l)
    assert u == pytest.approx([0.75, 0, 0])
    d = xp.dirac_boost([math.pi / 2, 0, 0, 0])
    assert abs(d[4, 4]) < 1e-15
    g = {"omega": [0.2, -0.1, 0.3, 0.0], "u": [0.4, 0.1, -0.2], "theta": [1.0, -0.5, 0.2]}
    m = xp.xl_matrix(g)
    assert np.allclose(xp.xl_matrix(xp.xl_decompose(m)), m, atol=1e-10)
    bad = np.eye(5)
    bad[4, 4] = -2
    with pytest.raises(xp.DecompositionError):
        xp.xl_decompose(bad)
    with pytest.raises(ValueError):
        xp.compose({"beta": 1}, {})


def test_check_report():
    report = json.loads(xp.check("jacobi"))
    assert report["pass"] is True
    small = xp.check("theta", trials=10, seed=1)
    assert small == xp.check("theta", trials=10, seed=1)
