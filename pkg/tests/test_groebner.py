"""Normal forms, Buchberger runs, reduced-basis uniqueness, elimination."""

import random

import pytest

from quintic_atlas.groebner import (buchberger, groebner_basis, normal_form,
                                    s_polynomial)
from quintic_atlas.ideal_ops import Ideal
from quintic_atlas.invariants import hilbert_polynomial
from quintic_atlas.linalg import hilbert_function_macaulay
from quintic_atlas.poly import (GF, QQ, GrevLex, Lex, RingMismatchError, ring)

GF32003 = GF(32003)


@pytest.fixture
def p3():
    return ring("x0 x1 x2 x3", GF32003)


def twisted_cubic_gens(R):
    return [R.parse("x1^2 - x0*x2"), R.parse("x1*x2 - x0*x3"),
            R.parse("x2^2 - x1*x3")]


def pluecker_gens():
    from quintic_atlas.constructors import pluecker_relations, pluecker_ring
    R = pluecker_ring(GF32003)
    return R, pluecker_relations(R)


def assert_spairs_reduce(gb):
    gens = gb.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_polynomial(gens[i], gens[j], gb.order)
            assert normal_form(s, gb).is_zero, (i, j)


# -- normal form ------------------------------------------------------------

def test_normal_form_membership(p3):
    gb = buchberger([p3.var(0), p3.var(1)])
    assert normal_form(p3.parse("x0*x2 + x1*x3"), gb).is_zero


def test_normal_form_irreducible(p3):
    gb = buchberger([p3.var(0), p3.var(1)])
    p = p3.parse("x2^2")
    assert normal_form(p, gb) == p


def test_normal_form_ring_mismatch(p3):
    gb = buchberger([p3.var(0)])
    other = ring("x0 x1 x2 x3", GF(101))
    with pytest.raises(RingMismatchError):
        normal_form(other.var(1), gb)


def test_normal_form_is_fully_reduced(p3):
    gb = buchberger([p3.parse("x1^2 - x0*x2")])
    r = normal_form(p3.parse("x3*x1^2 + x1^2 + x2^3"), gb)
    lm = gb.generators[0].leading_monomial(gb.order)
    for m in r.terms:
        assert not all(a <= b for a, b in zip(lm, m))


# -- buchberger -------------------------------------------------------------

def test_principal_ideal_is_its_own_basis(p3):
    q = p3.parse("x0*x2 + x1*x3")
    gb = buchberger([q])
    assert len(gb) == 1 and gb.generators[0] == q.monic()


def test_twisted_cubic_basis(p3):
    gb = buchberger(twisted_cubic_gens(p3))
    assert len(gb) == 3
    assert_spairs_reduce(gb)
    # HF(2) = 10 - 3 = 7, cross-checked by the Macaulay-rank oracle
    assert hilbert_function_macaulay(twisted_cubic_gens(p3), p3, 2) == 7
    ideal = Ideal(p3, twisted_cubic_gens(p3), saturated=True)
    from quintic_atlas.invariants import hilbert_function
    assert hilbert_function(ideal, 2).hf(2) == 7


def test_pluecker_quadrics_are_a_basis():
    R, rels = pluecker_gens()
    gb = buchberger(rels)
    assert len(gb) == 5
    assert_spairs_reduce(gb)


def test_reduced_basis_unique_under_shuffle(p3):
    gens = twisted_cubic_gens(p3)
    gb1 = buchberger(gens)
    for seed in (3, 5):
        shuffled = list(gens)
        random.Random(seed).shuffle(shuffled)
        gb2 = buchberger([g * 17 for g in shuffled])
        assert sorted(map(str, gb1.generators)) == sorted(map(str, gb2.generators))


def test_buchberger_idempotent(p3):
    gb = buchberger(twisted_cubic_gens(p3))
    again = buchberger(list(gb.generators))
    assert sorted(map(str, gb.generators)) == sorted(map(str, again.generators))


def test_membership_is_order_independent(p3):
    gens = twisted_cubic_gens(p3)
    rng = random.Random(11)
    gb_grev = buchberger(gens, GrevLex())
    gb_lex = buchberger(gens, Lex())
    for _ in range(20):
        terms = [(tuple(rng.randint(0, 2) for _ in range(4)),
                  GF32003.random_element(rng)) for _ in range(4)]
        from quintic_atlas.poly import Polynomial
        p = Polynomial.from_terms(p3, terms)
        if rng.random() < 0.5:  # mix in genuine members
            p = p + gens[0] * p3.var(rng.randrange(4))
        assert normal_form(p, gb_grev).is_zero == normal_form(p, gb_lex).is_zero


def test_zero_ideal_basis(p3):
    gb = groebner_basis([], p3)
    assert len(gb) == 0
    p = p3.parse("x0 + x1")
    assert normal_form(p, gb) == p


def test_degree_cap_matches_full_leading_monomials(p3):
    gens = twisted_cubic_gens(p3)
    full = buchberger(gens)
    capped = buchberger(gens, degree_cap=2)
    full_lms = {lm for lm in full.leading_monomials() if sum(lm) <= 2}
    assert set(capped.leading_monomials()) >= full_lms


def test_rational_coefficients_basis():
    R = ring("x y z", QQ)
    gens = [R.parse("x^2 - 1/2*y*z"), R.parse("x*y - z^2")]
    gb = buchberger(gens)
    assert_spairs_reduce(gb)
    assert all(g.leading_coefficient() == 1 for g in gb.generators)


# -- elimination ------------------------------------------------------------

def test_eliminate_linear_relation():
    from quintic_atlas.ideal_ops import eliminate
    R = ring("x0 x1", GF32003)
    out = eliminate(Ideal(R, [R.parse("x0 - x1")]), 1)
    assert out.ring.variables == ("x1",)
    assert out.is_zero


def test_eliminate_keeps_back_variables():
    from quintic_atlas.ideal_ops import eliminate
    R = ring("x0 x1 x2", GF32003)
    out = eliminate(Ideal(R, [R.var(0), R.parse("x1*x2")]), 1)
    assert [str(g) for g in out.generators] == ["x1*x2"]


def test_eliminate_projects_twisted_cubic_to_conic():
    """Eliminating x3 projects the twisted cubic from the point (0:0:0:1),
    which lies on the curve, so the image is a plane conic (degree 2)."""
    from quintic_atlas.ideal_ops import eliminate
    R = ring("x3 x0 x1 x2", GF32003)  # eliminate the first variable
    gens = [R.parse("x1^2 - x0*x2"), R.parse("x1*x2 - x0*x3"),
            R.parse("x2^2 - x1*x3")]
    out = eliminate(Ideal(R, gens), 1)
    data = hilbert_polynomial(Ideal(out.ring, out.generators))
    assert (data.dim, data.degree) == (1, 2)
    assert [str(g) for g in out.gb().generators] == ["x1^2 + 32002*x0*x2"]
