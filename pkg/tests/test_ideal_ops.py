"""Ideal algebra: sum, intersection, colon, saturation, coordinate changes,
hyperplane slicing, and the liaison bookkeeping."""

import random

import pytest

from quintic_atlas.constructors import build_linked_quintic, random_form
from quintic_atlas.ideal_ops import (GenericityError, Ideal, hyperplane_slice,
                                     ideal_colon, ideal_intersect, ideal_sum,
                                     irrelevant_ideal, linear_change, principal,
                                     random_invertible_matrix, saturate,
                                     substitute_last_variable)
from quintic_atlas.invariants import hilbert_function, hilbert_polynomial
from quintic_atlas.poly import GF, ring

GF32003 = GF(32003)


@pytest.fixture
def p3():
    return ring("x0 x1 x2 x3", GF32003)


def hf_values(ideal, up_to=5):
    return hilbert_function(ideal, up_to).hf_values


# -- sum ---------------------------------------------------------------------

def test_sum_of_principal_ideals(p3):
    s = ideal_sum(Ideal(p3, [p3.var(0)]), Ideal(p3, [p3.var(1)]))
    assert s.equals(Ideal(p3, [p3.var(0), p3.var(1)]))


def test_sum_with_zero_ideal(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3")])
    assert ideal_sum(i, Ideal(p3, [])).equals(i)


def test_sum_slice_of_v22_matches_complete_intersection(p3):
    """(x0, x1) + (F, G) with F, G random quadrics has the Hilbert function of
    a (1,1,2,2) complete intersection."""
    rng = random.Random(5)
    f = random_form(p3, 2, rng)
    g = random_form(p3, 2, rng)
    total = ideal_sum(Ideal(p3, [p3.var(0), p3.var(1)]), Ideal(p3, [f, g]))
    # HF of k[x2,x3]/(two generic quadrics) = 1, 2, 1, 0, ...
    from quintic_atlas.linalg import hilbert_function_macaulay
    got = [hilbert_function_macaulay(total.generators, p3, t) for t in range(5)]
    assert got == [1, 2, 1, 0, 0]


# -- intersection -------------------------------------------------------------

def test_intersect_coprime_principal(p3):
    meet = ideal_intersect(principal(p3.var(0)), principal(p3.var(1)))
    assert meet.equals(principal(p3.parse("x0*x1")))


def test_intersect_self(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3"), p3.var(2)])
    assert ideal_intersect(i, i).equals(i)


def test_intersection_contained_in_both(p3):
    rng = random.Random(9)
    a = Ideal(p3, [random_form(p3, 2, rng), p3.var(0)])
    b = Ideal(p3, [random_form(p3, 2, rng)])
    meet = ideal_intersect(a, b)
    assert a.contains_ideal(meet) and b.contains_ideal(meet)


# -- colon ---------------------------------------------------------------------

def test_colon_principal(p3):
    out = ideal_colon(principal(p3.parse("x0*x1")), principal(p3.var(0)))
    assert out.equals(principal(p3.var(1)))


def test_colon_by_unit_ideal(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3")])
    assert ideal_colon(i, Ideal(p3, [p3.one()])).equals(i)


def test_colon_contains_numerator(p3):
    rng = random.Random(3)
    a = Ideal(p3, [random_form(p3, 2, rng), random_form(p3, 3, rng)])
    b = Ideal(p3, [p3.var(0), p3.var(1)])
    assert ideal_colon(a, b).contains_ideal(a)


def test_colon_link_produces_degree5_codim2(p3):
    """((x0x2+x1x3, x0F+x1G) : (x0, x1)) is the linked quintic curve."""
    rng = random.Random(2)
    q = p3.parse("x0*x2 + x1*x3")
    f, g = random_form(p3, 2, rng), random_form(p3, 2, rng)
    v3 = p3.var(0) * f + p3.var(1) * g
    x = ideal_colon(Ideal(p3, [q, v3]), Ideal(p3, [p3.var(0), p3.var(1)]))
    data = hilbert_polynomial(x)
    assert (data.dim, data.degree) == (1, 5)


# -- saturation -----------------------------------------------------------------

def test_saturate_strips_irrelevant_component(p3):
    i = Ideal(p3, [p3.parse("x0^2"), p3.parse("x0*x1"), p3.parse("x0*x2"),
                   p3.parse("x0*x3")])
    out, iterations = saturate(i, irrelevant_ideal(p3))
    assert out.equals(principal(p3.var(0)))
    assert iterations >= 2  # one strip plus the confirming round


def test_saturate_fixed_point(p3):
    i = Ideal(p3, [p3.var(0)])
    out, iterations = saturate(i, irrelevant_ideal(p3))
    assert iterations == 1
    assert out.equals(i)
    assert out.saturated is True


def test_link_output_already_saturated():
    x = build_linked_quintic(4, 2, GF32003, seed=3)
    out, iterations = saturate(x, irrelevant_ideal(x.ring))
    assert iterations == 1
    assert out.equals(x)


# -- liaison bookkeeping ----------------------------------------------------

@pytest.mark.parametrize("rank", [3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_liaison_identity_and_degrees(rank, n):
    """The scheme union X ∪ P is the (2,3) complete intersection:
    I_X ∩ I_P = (Q, V3), and deg X + deg P = 6."""
    x = build_linked_quintic(rank, n, GF32003, seed=11)
    R = x.ring
    q = [g for g in x.gb_truncated(2).generators if g.total_degree() == 2][0]
    p = Ideal(R, [R.var(0), R.var(1)], saturated=True)
    meet = ideal_intersect(x, p)
    # recover the CI cubic from the intersection: a degree-3 element not in (q)
    v3 = next(g for g in meet.gb().generators
              if g.total_degree() == 3 and not principal(q).contains(g))
    assert meet.equals(Ideal(R, [q, v3]))
    deg_x = hilbert_polynomial(x).degree
    deg_p = hilbert_polynomial(p).degree
    assert deg_x == 5 and deg_x + deg_p == 6


# -- linear change ------------------------------------------------------------

def test_linear_change_identity(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3")])
    eye = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
    assert linear_change(i, eye).equals(i)


def test_linear_change_swap(p3):
    swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert linear_change(principal(p3.var(0)), swap).equals(principal(p3.var(1)))


def test_linear_change_rejects_singular(p3):
    bad = [[1, 0, 0, 0]] * 4
    with pytest.raises(ValueError):
        linear_change(principal(p3.var(0)), bad)


def test_linear_change_preserves_hilbert_function():
    from quintic_atlas.constructors import pluecker_relations, pluecker_ring
    R = pluecker_ring(GF32003)
    g14 = Ideal(R, pluecker_relations(R), saturated=True)
    rng = random.Random(23)
    moved = linear_change(g14, random_invertible_matrix(R, rng))
    assert hf_values(g14, 4) == hf_values(moved, 4)


# -- hyperplane slicing --------------------------------------------------------

def test_slice_quadric_surface_to_conic(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3")], saturated=True)
    sliced = hyperplane_slice(i, seed=4)
    data = hilbert_polynomial(sliced)
    assert sliced.ring.nvars == 3
    assert (data.dim, data.degree) == (1, 2)


def test_slice_linked_threefold_twice_gives_genus2_curve():
    x = build_linked_quintic(4, 3, GF32003, seed=1)
    once = hyperplane_slice(x, seed=21)
    twice = hyperplane_slice(once, seed=22)
    data = hilbert_polynomial(twice)
    assert (data.dim, data.degree) == (1, 5)
    # Hilbert polynomial 5t - 1, so arithmetic genus 1 - (-1) = 2
    assert data.hp(0) == -1
    assert [data.hf(t) for t in (1, 2, 3)] == [4, 9, 14]


def test_slice_hyperplane_by_generic_form(p3):
    i = Ideal(p3, [p3.var(3)], saturated=True)
    sliced = hyperplane_slice(i, seed=6)
    data = hilbert_polynomial(sliced)
    assert sliced.ring.nvars == 3
    assert (data.dim, data.degree) == (1, 1)


def test_slice_rejects_points(p3):
    pts = Ideal(p3, [p3.var(0), p3.var(1), p3.var(2)], saturated=True)
    with pytest.raises(ValueError):
        hyperplane_slice(pts, seed=1)


def test_slice_reports_genericity_exhaustion(p3):
    i = Ideal(p3, [p3.parse("x0*x2 + x1*x3")], saturated=True)
    with pytest.raises(GenericityError) as e:
        hyperplane_slice(i, seed=4, retries=0)
    assert "larger prime" in str(e.value)


def test_degenerate_substitution_keeps_dimension(p3):
    """The validation inside slicing exists because bad choices really do
    fail: substituting the zero form for x3 in (x3) yields the zero ideal."""
    i = Ideal(p3, [p3.var(3)], saturated=True)
    out = substitute_last_variable(i, [0, 0, 0])
    data = hilbert_polynomial(out)
    assert data.dim == 2  # did not drop: the whole of P^2 remains
