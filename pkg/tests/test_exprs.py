"""Expression parser, evaluator, and print round-trips."""

import random

import pytest

from qhopf.exprs import (Div, ExprError, Mul, Num, Pow, Star, Sub, Sym,
                         evaluate, evaluate_algebra, evaluate_scalar, parse)
from qhopf.scalars import ONE, P, Q, scalar
from qhopf.hopf import LaurentElement
from qhopf.s3core import AlgElement, BasisMonomial, mul
from qhopf.verify import random_element


def test_parse_shapes():
    assert parse("a^* * a") == Mul(Star(Sym("a")), Sym("a"))
    assert parse("(1 - a*a^*)^2") == \
        Pow(Sub(Num(1), Mul(Sym("a"), Star(Sym("a")))), 2)
    assert parse("1/2") == Div(Num(1), Num(2))
    assert parse("u^-3") == Pow(Sym("u"), -3)
    assert parse("a^*^2") == Pow(Star(Sym("a")), 2)


def test_parse_errors_carry_positions():
    with pytest.raises(ExprError) as err:
        parse("a + * b")
    assert "position 4" in str(err.value)
    with pytest.raises(ExprError):
        parse("a +")
    with pytest.raises(ExprError):
        parse("(a")
    with pytest.raises(ExprError):
        parse("a $ b")
    with pytest.raises(ExprError):
        parse("zz + 1")
    with pytest.raises(ExprError):
        parse("a ^ q")


def test_evaluate_connection_leg():
    got = evaluate("q * b * (1 - a * a^*)")
    want = Q * AlgElement.from_monomial(BasisMonomial(0, 1, 0, 1))
    assert got == want


def test_evaluate_scalars_and_promotions():
    assert evaluate_scalar("1/2 + p*q") == scalar(1) / 2 + P * Q
    x = evaluate_algebra("1 - a*a^*")
    assert x == AlgElement.one() - mul(AlgElement.generator("a"),
                                       AlgElement.generator("a*"))
    # scalar-valued input lands on a multiple of the unit
    assert evaluate_algebra("p") == AlgElement.one().scale(P)


def test_evaluate_base_generators_route_through_embedding():
    from qhopf.s3core import iota_image
    assert evaluate("f0") == iota_image("f0")
    got = evaluate("f1^* * f1 - q * f1 * f1^* - (p - q) * f0 - (1 - p)")
    assert got.is_zero()


def test_family_mixing_is_rejected():
    with pytest.raises(ExprError):
        evaluate("f0 + a")
    with pytest.raises(ExprError):
        evaluate("u * a")
    with pytest.raises(ExprError):
        evaluate("f1 * u")


def test_negative_powers_only_on_circle_monomials():
    assert evaluate("u^-3") == LaurentElement.u_power(-3)
    assert evaluate("(2 * u)^-1") == LaurentElement({-1: scalar(1) / 2})
    for bad in ("a^-1", "p^-2", "(u + 1)^-1"):
        with pytest.raises(ExprError):
            evaluate(bad)


def test_division_rules():
    assert evaluate_scalar("(1 - q^2)/(1 - q)") == ONE + Q
    got = evaluate("a / 2")
    assert got == AlgElement.generator("a").scale(scalar(1) / 2)
    with pytest.raises(ExprError):
        evaluate("1 / a")
    with pytest.raises(ZeroDivisionError):
        evaluate("1 / (1 - 1)")


def test_star_evaluation():
    assert evaluate("a^*") == AlgElement.generator("a*")
    assert evaluate("u^*") == LaurentElement.u_power(-1)
    assert evaluate_scalar("p^*") == P
    assert evaluate("(a * b)^*") == mul(AlgElement.generator("b*"),
                                        AlgElement.generator("a*"))


def test_print_parse_round_trip_on_random_elements():
    rng = random.Random(47)
    for _ in range(60):
        x = random_element(rng)
        assert evaluate_algebra(x.text()) == x
    # scalar canonical forms round-trip too
    samples = [ONE / (ONE - Q), (ONE - Q * Q) / (ONE - P),
               -(ONE / (ONE - P * P)), scalar(3) / 2 * P * Q - ONE]
    for s in samples:
        assert evaluate_scalar(str(s)) == s


def test_round_trip_is_a_fixpoint():
    rng = random.Random(53)
    for _ in range(30):
        x = random_element(rng)
        text = x.text()
        assert evaluate_algebra(text).text() == text
