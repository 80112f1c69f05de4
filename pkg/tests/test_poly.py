"""Fields, monomial orders, polynomial arithmetic and the parser."""

import random
from fractions import Fraction

import pytest

from quintic_atlas.poly import (GF, QQ, Block, GrevLex, Lex, ParseError,
                                Polynomial, Ring, RingMismatchError,
                                format_polynomial, parse_field_spec, ring)

GF32003 = GF(32003)


@pytest.fixture
def r3():
    return ring("x0 x1 x2", GF32003)


def random_poly(rng, R, max_terms=6, max_deg=3):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        m = tuple(rng.randint(0, max_deg) for _ in range(R.nvars))
        terms.append((m, R.field.random_element(rng)))
    return Polynomial.from_terms(R, terms)


# -- fields -----------------------------------------------------------------

def test_prime_field_requires_prime():
    with pytest.raises(ValueError):
        GF(32004)
    assert GF(2).p == 2


def test_field_spec_roundtrip():
    assert parse_field_spec("Q") == QQ
    assert parse_field_spec("GF(32003)") == GF32003
    assert parse_field_spec(GF(7).describe()) == GF(7)
    with pytest.raises(ValueError):
        parse_field_spec("GF(x)")


def test_gf_coercion_and_inverse():
    f = GF(7)
    assert f.coerce(-1) == 6
    assert f.mul(3, 5) == 1
    assert f.mul(f.inv(4), 4) == 1
    assert f.coerce(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7


# -- parsing ----------------------------------------------------------------

def test_parse_two_term_quadric(r3):
    p = r3.parse("x0^2 + x1*x2")
    assert len(p.terms) == 2
    assert set(p.terms) == {(2, 0, 0), (0, 1, 1)}
    assert p.is_homogeneous() and p.total_degree() == 2


def test_parse_zero(r3):
    p = r3.parse("0")
    assert p.is_zero and p.terms == {}
    assert p.total_degree() is None


def test_parse_cancellation(r3):
    p = r3.parse("x0*x2 + x1*x2 - x0*x2")
    assert p == r3.var(1) * r3.var(2)
    assert len(p.terms) == 1


def test_parse_parentheses_and_signs(r3):
    p = r3.parse("-(x0 - x1)^2 + x0^2 + x1^2")
    assert p == r3.parse("2*x0*x1")


def test_parse_rational_literals():
    R = ring("x y", QQ)
    p = R.parse("1/2*x + 3*y - 1/3")
    assert p.coefficient((1, 0)) == Fraction(1, 2)
    assert p.coefficient((0, 0)) == Fraction(-1, 3)


def test_parse_errors(r3):
    with pytest.raises(ParseError) as e:
        r3.parse("x0 + y1")
    assert "y1" in str(e.value) and e.value.position == 5
    with pytest.raises(ParseError):
        r3.parse("x0 + ")
    with pytest.raises(ParseError):
        r3.parse("x0 x1")  # implicit multiplication is not in the grammar
    with pytest.raises(ParseError):
        r3.parse("1/0")
    with pytest.raises(ParseError):
        r3.parse("1/2*x0")  # '/' literals only over Q
    R = ring("x", QQ)
    with pytest.raises(ParseError):
        R.parse("1/0")


def test_modulus_reduction_of_literals():
    R = ring("x", GF(7))
    assert R.parse("15*x") == R.parse("x")
    assert R.parse("14") .is_zero


# -- arithmetic -------------------------------------------------------------

def test_difference_of_squares(r3):
    a, b = r3.var(0), r3.var(1)
    assert (a + b) * (a - b) == r3.parse("x0^2 - x1^2")


def test_multiply_by_zero(r3):
    p = r3.parse("x0^2 + x1*x2")
    assert (p * r3.zero()).is_zero


def test_modular_coefficient_product():
    R = ring("x0", GF(7))
    p = R.parse("3*x0") * R.parse("5*x0")
    assert p == R.parse("x0^2")  # 15 = 1 mod 7


def test_ring_mismatch_raises(r3):
    other = ring("x0 x1 x2", GF(101))
    with pytest.raises(RingMismatchError):
        r3.var(0) + other.var(0)


def test_total_degree_and_homogeneity(r3):
    assert r3.parse("x0^2 + x1*x2").is_homogeneous()
    p = r3.parse("x0^2 + x1")
    assert p.total_degree() == 2 and not p.is_homogeneous()


def test_arbitrary_precision_rationals():
    R = ring("x", QQ)
    big = 2 ** 200
    p = R.const(big + 1) * R.const(big - 1)
    assert p.coefficient((0,)) == 2 ** 400 - 1


def test_ring_algebra_properties_randomized():
    rng = random.Random(7)
    for field in (GF32003, QQ):
        R = ring("x0 x1 x2", field)
        for _ in range(25):
            a, b, c = (random_poly(rng, R) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a


def test_derivative_and_evaluate(r3):
    p = r3.parse("x0^2*x1 + 3*x2")
    assert p.derivative(0) == r3.parse("2*x0*x1")
    assert p.derivative(2) == r3.const(3)
    assert p.evaluate([1, 2, 3]) == r3.field.coerce(11)


# -- monomial orders --------------------------------------------------------

@pytest.mark.parametrize("order", [GrevLex(), Lex(), Block(2)])
def test_order_axioms_randomized(order):
    rng = random.Random(13)
    key = order.key
    for _ in range(300):
        u = tuple(rng.randint(0, 5) for _ in range(4))
        v = tuple(rng.randint(0, 5) for _ in range(4))
        w = tuple(rng.randint(0, 3) for _ in range(4))
        # totality: keys distinguish distinct monomials
        assert (key(u) == key(v)) == (u == v)
        # multiplicativity: u < v implies u*w < v*w
        if key(u) < key(v):
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert key(uw) < key(vw)
        # 1 is minimal
        assert key((0, 0, 0, 0)) <= key(u)


def test_grevlex_specifics():
    k = GrevLex().key
    # x0 > x1 > x2, and degree dominates
    assert k((1, 0, 0)) > k((0, 1, 0)) > k((0, 0, 1))
    assert k((0, 0, 2)) > k((1, 0, 0))
    # classic grevlex tie-break: x0*x2 < x1^2
    assert k((1, 0, 1)) < k((0, 2, 0))


def test_lex_vs_grevlex_disagree():
    # x0*x2 vs x1^2: lex prefers the x0 monomial
    assert Lex().key((1, 0, 1)) > Lex().key((0, 2, 0))


def test_block_order_eliminates_front_variables():
    k = Block(1).key
    # any monomial containing the first variable beats any without it
    assert k((1, 0, 0)) > k((0, 5, 5))


# -- printing ---------------------------------------------------------------

def test_print_parse_roundtrip_randomized():
    rng = random.Random(99)
    for field in (GF32003, QQ):
        R = ring("x0 x1 x2 x3", field)
        for _ in range(40):
            p = random_poly(rng, R)
            assert R.parse(format_polynomial(p)) == p


def test_print_canonical_forms():
    R = ring("x0 x1", QQ)
    assert format_polynomial(R.zero()) == "0"
    assert str(R.parse("x1 + x0^2")) == "x0^2 + x1"
    assert str(R.parse("-x0 + 1/2")) == "-x0 + 1/2"
    assert str(R.parse("x0 - 3/2*x1")) == "x0 - 3/2*x1"
    S = ring("x0 x1", GF32003)
    assert str(S.parse("x0 - x1")) == "x0 + 32002*x1"
