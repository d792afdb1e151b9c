"""Idempotents, the exact trace, and the pairing."""

import random
from fractions import Fraction

import pytest

from qhopf.scalars import ONE, P, Q, scalar
from qhopf.chern import (CoinvariantMatrix, idempotent, matrix_trace, pairing,
                         trace_functional)
from qhopf.s3core import AlgElement, BasisMonomial, mul
from qhopf import numrep
from qhopf.verify import random_coinvariant

A = AlgElement.generator("a")
AS = AlgElement.generator("a*")
B = AlgElement.generator("b")
BS = AlgElement.generator("b*")
ONE_EL = AlgElement.one()
BETA = ONE_EL - mul(A, AS)
GAMMA = ONE_EL - mul(B, BS)


def test_idempotent_winding_minus_one_matches_published_matrix():
    e = idempotent(-1)
    assert e.shape == (2, 2)
    want = [
        [mul(A, AS), Q * mul(mul(A, BETA), B)],
        [mul(AS, BS), Q * mul(mul(BETA, BS), B)],
    ]
    assert e.entries == want


def test_idempotent_squared():
    for mu in (-1, 1, -2, 2, -3, 3):
        e = idempotent(mu)
        assert (e @ e - e).is_zero(), mu
        assert e.all_coinvariant()
        assert e.shape == (abs(mu) + 1, abs(mu) + 1)
    with pytest.raises(ValueError):
        idempotent(0)


def test_idempotent_winding_minus_two_corner_entries():
    # corners of the 3x3 matrix: products of the outer legs of the
    # degree-2 connection value
    e = idempotent(-2)
    assert e.entries[0][0] == mul(mul(A, A), mul(AS, AS))
    corner = Q * Q * mul(mul(BS, BS), mul(mul(BETA, BETA), mul(B, B)))
    assert e.entries[2][2] == corner


def test_matrix_trace():
    e = idempotent(-1)
    want = mul(A, AS) + Q * mul(mul(BETA, BS), B)
    assert matrix_trace(e) == want
    # published spelling of the same trace
    assert want == mul(A, AS) + Q * mul(BETA, mul(BS, B))
    ident = CoinvariantMatrix([[ONE_EL, AlgElement.zero()],
                               [AlgElement.zero(), ONE_EL]])
    assert matrix_trace(ident) == scalar(2) * ONE_EL
    with pytest.raises(ValueError):
        matrix_trace(CoinvariantMatrix([[ONE_EL, ONE_EL]]))


def test_trace_anchor_values():
    assert trace_functional(ONE_EL).is_zero()
    assert trace_functional(BETA) == ONE / (ONE - Q)
    assert trace_functional(
        AlgElement.from_monomial(BasisMonomial(0, 0, 2, 0))) == \
        -(ONE / (ONE - P * P))
    # shift-type winding-zero monomials vanish
    assert trace_functional(
        AlgElement.from_monomial(BasisMonomial(2, 0, 0, 2))).is_zero()


def test_trace_rejects_noncoinvariant():
    with pytest.raises(ValueError):
        trace_functional(A)


def test_trace_derivation_via_the_embedding():
    # the base element f0 - f1 f1* maps to 1 - aa* exactly
    from qhopf.s3core import iota_image
    f0, f1, f1s = (iota_image(k) for k in ("f0", "f1", "f1*"))
    assert f0 - mul(f1, f1s) == BETA
    assert trace_functional(f0 - mul(f1, f1s)) == ONE / (ONE - Q)


def test_trace_matches_numeric_oracle():
    rng = random.Random(23)
    p_val, q_val = 0.5, 0.3
    N = 300
    reps = (numrep.build_rep("rho1theta", (0.0,), N, p_val, q_val),
            numrep.build_rep("rho2theta", (0.0,), N, p_val, q_val))
    global_tail = p_val ** N / (1 - p_val) + q_val ** N / (1 - q_val)
    for _ in range(25):
        x = random_coinvariant(rng)
        sym = trace_functional(x).evaluate(p_val, q_val)
        got = numrep.numeric_trace(x, N, p_val, q_val, reps=reps)
        assert abs(got.value - sym) <= global_tail + 1e-9


def test_trace_is_tracial():
    rng = random.Random(29)
    for _ in range(120):
        x, y = random_coinvariant(rng), random_coinvariant(rng)
        assert trace_functional(mul(x, y)) == trace_functional(mul(y, x))


def test_pairing_winding_minus_one_is_exactly_minus_one():
    val = pairing(-1)
    assert val == -ONE
    assert val.is_integer()
    assert val.as_fraction() == Fraction(-1)


def test_pairing_values_are_integers():
    values = {}
    for mu in range(-5, 6):
        if mu == 0:
            continue
        v = pairing(mu)
        assert v.is_integer(), (mu, str(v))
        values[mu] = v.as_fraction()
    # computed, not asserted from a formula: report-style sanity checks
    assert values[-1] == -1
    # mirrored windings pair to opposite integers in this computation
    for mu in range(1, 6):
        assert values[mu] == -values[-mu]


def test_pairing_cross_checked_numerically():
    p_val, q_val = 0.5, 1.0 / 3.0
    N = 300
    reps = (numrep.build_rep("rho1theta", (0.0,), N, p_val, q_val),
            numrep.build_rep("rho2theta", (0.0,), N, p_val, q_val))
    for mu in (-3, -2, -1, 1, 2, 3):
        sym = pairing(mu).evaluate(p_val, q_val)
        tr = matrix_trace(idempotent(mu))
        got = numrep.numeric_trace(tr, N, p_val, q_val, reps=reps)
        assert abs(got.value - sym) <= got.tail_bound + 1e-9


def test_pairing_error_propagation():
    with pytest.raises(ValueError):
        pairing(0)


def test_coinvariant_matrix_validation():
    with pytest.raises(ValueError):
        CoinvariantMatrix([[A]])
    with pytest.raises(ValueError):
        CoinvariantMatrix([])
    m = CoinvariantMatrix([[ONE_EL, BETA]])
    assert m.shape == (1, 2)
    assert not m.is_square()
