"""Hilbert functions/polynomials, invariant extraction, cohomology bounds."""

from fractions import Fraction

import pytest

from quintic_atlas.constructors import (ConstructionRecipe, Grassmannian14,
                                        LinearSection, QuinticHypersurface,
                                        RationalNormalCurve, Scroll, build,
                                        build_linked_quintic, random_form)
from quintic_atlas.ideal_ops import Ideal, principal
from quintic_atlas.invariants import (BudgetExceededError, HilbertData,
                                      check_cohomology_bounds,
                                      compute_invariants, hilbert_function,
                                      hilbert_function_macaulay,
                                      hilbert_polynomial)
from quintic_atlas.poly import GF, QQ, ring

GF32003 = GF(32003)


# -- Hilbert function ---------------------------------------------------------

def test_hf_of_zero_ideal_is_binomial():
    R = ring("x0 x1 x2", GF32003)
    hd = hilbert_function(Ideal(R, []), 4)
    assert hd.hf_values == (1, 3, 6, 10, 15)


def test_hf_of_plane_quintic():
    import random
    R = ring("x0 x1 x2", GF32003)
    q = random_form(R, 5, random.Random(1))
    hd = hilbert_function(principal(q), 5)
    assert hd.hf(5) == 21 - 1


def test_hf_of_linked_threefold_shows_unique_quadric():
    x = build_linked_quintic(4, 3, GF32003, seed=1)
    hd = hilbert_function(x, 2)
    assert hd.hf(1) == 6
    assert hd.hf(2) == 20  # dim I_2 = 21 - 20 = 1
    assert hilbert_function_macaulay(x.generators, x.ring, 2) == 20


def test_hf_matches_macaulay_oracle_on_samples():
    for recipe, degrees in [
            (ConstructionRecipe(RationalNormalCurve()), range(1, 5)),
            (ConstructionRecipe(Scroll((2, 3))), range(1, 4)),
            (ConstructionRecipe(Grassmannian14()), range(1, 4))]:
        ideal = build(recipe)
        hd = hilbert_function(ideal, max(degrees))
        for t in degrees:
            assert hd.hf(t) == hilbert_function_macaulay(
                ideal.generators, ideal.ring, t), (recipe, t)


# -- Hilbert polynomial -------------------------------------------------------

def test_hp_of_hyperplane():
    R = ring("x0 x1 x2 x3", GF32003)
    data = hilbert_polynomial(principal(R.var(0)))
    assert data.dim == 2 and data.degree == 1
    assert data.hp_coeffs == (Fraction(1), Fraction(3, 2), Fraction(1, 2))


def test_hp_of_grassmannian():
    data = hilbert_polynomial(build(ConstructionRecipe(Grassmannian14())))
    assert data.dim == 6 and data.degree == 5
    assert data.stabilization_degree == 0


def test_hp_of_scroll_113():
    data = hilbert_polynomial(build(ConstructionRecipe(Scroll((1, 1, 3)))))
    assert data.dim == 3 and data.degree == 5


def test_hp_stabilization_degree_of_plane_quintic():
    import random
    R = ring("x0 x1 x2", GF32003)
    q = random_form(R, 5, random.Random(2))
    data = hilbert_polynomial(principal(q))
    # HF: 1,3,6,10,15,20,25,... equals HP(t) = 5t - 5 from degree 3 on
    assert data.hp(10) == 45
    assert data.stabilization_degree == 3
    assert data.hf_values[:6] == (1, 3, 6, 10, 15, 20)


def test_hp_budget_exceeded_diagnostic():
    R = ring("x0 x1 x2 x3 x4", GF32003)
    gens = [R.var(i) ** 4 for i in range(5)]  # HF vanishes only past degree 15
    with pytest.raises(BudgetExceededError):
        hilbert_polynomial(Ideal(R, gens), budget=8)


def test_hp_of_empty_scheme():
    R = ring("x0 x1", GF32003)
    data = hilbert_polynomial(Ideal(R, [R.var(0) ** 2, R.var(1) ** 2]))
    assert data.dim == -1 and data.degree == 0


# -- invariants ---------------------------------------------------------------

def test_invariants_rational_normal_curve():
    vi = compute_invariants(build(ConstructionRecipe(RationalNormalCurve())),
                            assume_saturated=True)
    assert vi.as_tuple() == (1, 5, 5, 0, 0)
    assert vi.codim == 4 and vi.nondegenerate


def test_invariants_plane_quintic():
    vi = compute_invariants(build(ConstructionRecipe(QuinticHypersurface(1))),
                            assume_saturated=True)
    assert vi.as_tuple() == (1, 2, 5, 3, 6)


def test_invariants_del_pezzo_surface():
    ideal = build(ConstructionRecipe(LinearSection(Grassmannian14(), 4), seed=3))
    vi = compute_invariants(ideal, seed=3, assume_saturated=True)
    assert vi.as_tuple() == (2, 5, 5, 1, 1)
    assert vi.h0_I[2] == 5


def test_invariants_linked_threefold():
    x = build_linked_quintic(4, 3, GF32003, seed=1)
    vi = compute_invariants(x, seed=1, assume_saturated=True)
    assert vi.as_tuple() == (3, 5, 5, 2, 2)
    assert vi.h0_I == {1: 0, 2: 1, 3: 8}


def test_genus_additivity_plane_quintic():
    vi = compute_invariants(build(ConstructionRecipe(QuinticHypersurface(1))),
                            assume_saturated=True)
    assert vi.g == (5 - 1) * (5 - 2) // 2 == 6


def test_invariants_reject_points():
    R = ring("x0 x1 x2", GF32003)
    with pytest.raises(ValueError):
        compute_invariants(Ideal(R, [R.var(0), R.var(1)], saturated=True),
                           assume_saturated=True)


# -- cohomology bounds --------------------------------------------------------

def test_bounds_on_linked_threefold():
    x = build_linked_quintic(4, 3, GF32003, seed=1)
    report = check_cohomology_bounds(x, seed=1, assume_saturated=True)
    assert report.applicable and report.passed
    by_claim = {r.claim: r for r in report.rows}
    assert "h0(1)=4 h0(2)=9 h0(3)=14" in by_claim[
        "curve section constants h0(1),h0(2),h0(3) = 4,9,14"].numbers
    assert by_claim["ideal sheaf bound dim I_3 >= n+5"].numbers == \
        "dim I_3=8 n+5=8"


def test_bounds_not_applicable_to_grassmannian():
    report = check_cohomology_bounds(build(ConstructionRecipe(Grassmannian14())),
                                     assume_saturated=True)
    assert not report.applicable
    assert "delta=1" in report.reason
    assert str(report).startswith("n/a")


# -- oracle equivalence property ---------------------------------------------

def test_hilbert_data_hp_eval_consistency():
    data = HilbertData(hf_values=(1, 4, 9), hp_coeffs=(Fraction(-1), Fraction(5)),
                       stabilization_degree=1)
    assert data.dim == 1 and data.degree == 5
    assert data.hp(3) == 14
