"""Truncated representations and the numeric witnesses."""

import math
import random

import numpy as np
import pytest

from qhopf.scalars import Q
from qhopf.s3core import AlgElement, BasisMonomial, mul
from qhopf.numrep import (build_rep, classical_maps_check, evaluate,
                          faithfulness_probe, homomorphism_defect,
                          mvn_witness_check, numeric_trace,
                          polar_isometry_check, relation_defects,
                          spectrum_check, trace_tail_bound)
from qhopf.verify import random_element

P_VAL, Q_VAL = 0.5, 1.0 / 3.0


def test_build_rep_weights():
    rep = build_rep("rho1theta", (0.0,), 3, P_VAL, Q_VAL)
    b = rep.gen("b")
    assert b[1, 0] == pytest.approx(math.sqrt(1 - P_VAL))
    assert b[2, 1] == pytest.approx(math.sqrt(1 - P_VAL ** 2))
    assert np.allclose(rep.gen("a"), np.eye(3))
    assert np.allclose(rep.gen("a*"), rep.gen("a").conj().T)
    assert np.allclose(rep.gen("b*"), b.conj().T)


def test_build_rep_families_and_errors():
    rep = build_rep("classical", (0.4, 1.3), 2, P_VAL, Q_VAL)
    assert rep.dim == 1
    assert rep.gen("a")[0, 0] == pytest.approx(np.exp(0.4j))
    assert rep.gen("b")[0, 0] == pytest.approx(np.exp(1.3j))
    rep2 = build_rep("rho2theta", (0.7,), 8, P_VAL, Q_VAL)
    bbs = rep2.gen("b") @ rep2.gen("b*")
    assert np.allclose(bbs, np.eye(8))
    with pytest.raises(ValueError):
        build_rep("rho3", (0.0,), 4, P_VAL, Q_VAL)
    with pytest.raises(ValueError):
        build_rep("rho1theta", (0.0,), 4, 1.5, Q_VAL)
    with pytest.raises(ValueError):
        build_rep("rho1theta", (0.0,), 1, P_VAL, Q_VAL)
    with pytest.raises(ValueError):
        build_rep("classical", (0.0,), 4, P_VAL, Q_VAL)


def test_evaluate_flag_diagonal():
    rep = build_rep("rho1theta", (0.0,), 6, P_VAL, Q_VAL)
    flag = AlgElement.from_monomial(BasisMonomial(0, 0, 1, 0))
    got = np.diag(evaluate(flag, rep)).real
    assert np.allclose(got, [P_VAL ** k for k in range(6)])
    assert np.allclose(evaluate(AlgElement.zero(), rep), 0.0)


def test_relation_defects_small_on_safe_blocks():
    rng = random.Random(31)
    for n in (10, 50, 200):
        for family in ("rho1theta", "rho2theta"):
            for _ in range(5):
                rep = build_rep(family, (2 * math.pi * rng.random(),), n,
                                P_VAL, Q_VAL)
                assert max(relation_defects(rep).values()) <= 1e-12
    rep = build_rep("classical", (0.1, 0.7), 2, P_VAL, Q_VAL)
    assert max(relation_defects(rep).values()) <= 1e-12


def test_homomorphism_oracle():
    rng = random.Random(37)
    rep = build_rep("rho2theta", (1.9,), 30, P_VAL, Q_VAL)
    for _ in range(60):
        x, y = random_element(rng), random_element(rng)
        assert homomorphism_defect(x, y, rep) <= 1e-10


def test_numeric_trace_anchors():
    one = AlgElement.one()
    res = numeric_trace(one, 300, P_VAL, Q_VAL)
    assert abs(res.value) == 0.0
    beta = AlgElement.from_monomial(BasisMonomial(0, 1, 0, 0))
    res = numeric_trace(beta, 300, P_VAL, Q_VAL)
    assert res.value.real == pytest.approx(1.0 / (1.0 - Q_VAL), abs=1e-9)
    assert res.tail_bound <= 1e-9
    with pytest.raises(ValueError):
        numeric_trace(AlgElement.generator("a"), 10, P_VAL, Q_VAL)


def test_numeric_trace_of_the_idempotent_trace():
    from qhopf.chern import idempotent, matrix_trace
    tr = matrix_trace(idempotent(-1))
    res = numeric_trace(tr, 300, P_VAL, Q_VAL)
    assert res.value.real == pytest.approx(-1.0, abs=1e-9)


def test_tail_bound_is_honest():
    # compare the N = 40 truncation against N = 400 ("converged") values
    rng = random.Random(41)
    from qhopf.verify import random_coinvariant
    for _ in range(10):
        x = random_coinvariant(rng)
        small = numeric_trace(x, 40, P_VAL, Q_VAL)
        big = numeric_trace(x, 400, P_VAL, Q_VAL)
        assert abs(small.value - big.value) <= small.tail_bound + 1e-9
        assert trace_tail_bound(x, 40, P_VAL, Q_VAL) == small.tail_bound


def test_spectrum_checks():
    for n in (2, 10, 50, 200):
        rep = build_rep("rho1theta", (0.0,), n, P_VAL, Q_VAL)
        res = spectrum_check(rep)
        assert res["max_error"] <= 1e-10
        assert res["simple"]
        rep = build_rep("rho2theta", (0.5,), n, P_VAL, Q_VAL)
        res = spectrum_check(rep)
        assert res["max_error"] <= 1e-10
        assert res["simple"]
    with pytest.raises(ValueError):
        spectrum_check(build_rep("classical", (0, 0), 2, P_VAL, Q_VAL))


def test_polar_isometry():
    rep = build_rep("rho2theta", (0.0,), 100, P_VAL, 0.3)
    res = polar_isometry_check(rep, "a")
    assert res["min_eig"] >= 0.7 - 1e-10
    assert res["isometry_defect"] <= 1e-10
    # a is a phase in family 1: exactly isometric already
    rep = build_rep("rho1theta", (1.1,), 100, P_VAL, 0.3)
    res = polar_isometry_check(rep, "a")
    assert res["min_eig"] >= 1.0 - 1e-12
    assert res["isometry_defect"] <= 1e-10
    res = polar_isometry_check(rep, "b")
    assert res["min_eig"] >= 1 - P_VAL - 1e-10
    assert res["isometry_defect"] <= 1e-10
    with pytest.raises(ValueError):
        polar_isometry_check(rep, "c")


def test_mvn_witness():
    res = mvn_witness_check(10)
    assert res["max_defect"] <= 1e-12
    assert res["projection_rank"] == 1
    assert res["partial_isometry_defect"] <= 1e-12
    with pytest.raises(ValueError):
        mvn_witness_check(1)


def test_classical_maps():
    res = classical_maps_check(1000, seed=7)
    assert res["max_error"] <= 1e-12
    with pytest.raises(ValueError):
        classical_maps_check(0)


def test_classical_maps_pole_points():
    from qhopf.numrep import _f_map, _g_map
    assert _g_map(1.0, 0.0) == (pytest.approx(1.0), pytest.approx(0.0))
    assert _f_map(1.0, 0.0) == (pytest.approx(1.0), pytest.approx(0.0))


def test_faithfulness_probe():
    assert faithfulness_probe(AlgElement.zero())
    # an element that normalizes to zero offers no witness at all
    a, ast = AlgElement.generator("a"), AlgElement.generator("a*")
    one = AlgElement.one()
    beta = one - mul(a, ast)
    rel = mul(ast, a) - one + Q * beta
    assert rel.is_zero()
    assert faithfulness_probe(rel)
    rep = build_rep("rho2theta", (0.77,), 20, P_VAL, Q_VAL)
    assert np.linalg.norm(evaluate(rel, rep), 2) <= 1e-12
    # random nonzero elements always get a witness
    rng = random.Random(43)
    for i in range(60):
        x = random_element(rng)
        if x.is_zero():
            continue
        assert faithfulness_probe(x, seed=i)
