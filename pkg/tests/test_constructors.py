"""Recipe validation, determinantal/Pluecker consistency, corpus table."""

import random

import pytest

from quintic_atlas.constructors import (Cone, ConstructionRecipe,
                                        ExampleLinkedQuintic, Grassmannian14,
                                        LinearSection, LinkedQuintic,
                                        QuinticHypersurface,
                                        RationalNormalCurve, Scroll, build,
                                        corpus, pluecker_relations,
                                        pluecker_ring, scroll_matrix,
                                        two_row_minors, wedge_coordinates)
from quintic_atlas.invariants import hilbert_function
from quintic_atlas.poly import GF, QQ, Ring, ring

GF32003 = GF(32003)


# -- validation ----------------------------------------------------------------

@pytest.mark.parametrize("kind", [
    Scroll((2, 4)),          # sums to 6
    Scroll((0, 5)),          # zero block
    Scroll((1,) * 6),        # too many blocks (sums to 6 anyway)
    LinkedQuintic(5, 2),     # bad rank
    LinkedQuintic(3, 0),     # bad dimension
    QuinticHypersurface(0),
    LinearSection(Grassmannian14(), 0),
    Cone(RationalNormalCurve(), 0),
])
def test_recipe_validation_failures(kind):
    with pytest.raises(ValueError):
        build(ConstructionRecipe(kind))


def test_recipe_describe_stable():
    r = ConstructionRecipe(Cone(Scroll((1, 1, 3)), 2), seed=5)
    assert r.describe() == "cone(scroll 1,1,3) s=2 field=GF(32003) seed=5"


# -- ring shapes ----------------------------------------------------------------

def test_scroll_113_lives_in_p7():
    ideal = build(ConstructionRecipe(Scroll((1, 1, 3))))
    assert ideal.ring.nvars == 8
    assert len(ideal.generators) == 10  # C(5,2) minors


def test_grassmannian_shape():
    ideal = build(ConstructionRecipe(Grassmannian14()))
    assert ideal.ring.nvars == 10
    assert len(ideal.generators) == 5
    assert all(g.total_degree() == 2 for g in ideal.generators)


def test_scroll_hf1_is_n_plus_5():
    for parts in [(5,), (2, 3), (1, 1, 3), (1, 1, 1, 2), (1, 1, 1, 1, 1)]:
        n = len(parts)
        kind = Scroll(parts) if n > 1 else RationalNormalCurve()
        ideal = build(ConstructionRecipe(kind))
        hd = hilbert_function(ideal, 1)
        assert hd.hf(1) == n + 5, parts


# -- parametrized point checks ---------------------------------------------------

def test_scroll_minors_vanish_on_parametrization():
    """Substitute 20 random parameter points (u_i s^{a_i - j} t^j) into every
    minor; exact zero each time."""
    rng = random.Random(42)
    field = GF32003
    for parts in [(2, 3), (1, 1, 3)]:
        ideal = build(ConstructionRecipe(Scroll(parts)))
        for _ in range(20):
            s, t = rng.randrange(1, field.p), rng.randrange(field.p)
            us = [rng.randrange(1, field.p) for _ in parts]
            point = []
            for a, u in zip(parts, us):
                point.extend(u * pow(s, a - j, field.p) * pow(t, j, field.p)
                             for j in range(a + 1))
            for g in ideal.generators:
                assert g.evaluate(point) == 0


def test_rnc_minors_vanish_on_moment_curve():
    rng = random.Random(1)
    field = GF32003
    ideal = build(ConstructionRecipe(RationalNormalCurve()))
    for _ in range(20):
        s, t = rng.randrange(1, field.p), rng.randrange(field.p)
        point = [pow(s, 5 - j, field.p) * pow(t, j, field.p) % field.p
                 for j in range(6)]
        for g in ideal.generators:
            assert g.evaluate(point) == 0


def test_pluecker_relations_vanish_on_wedge_coordinates():
    rng = random.Random(7)
    field = GF32003
    R = pluecker_ring(field)
    rels = pluecker_relations(R)
    count = 0
    while count < 20:
        a = [field.random_element(rng) for _ in range(5)]
        b = [field.random_element(rng) for _ in range(5)]
        coords = wedge_coordinates(a, b, field)
        if all(c == 0 for c in coords):
            continue  # rank < 2, skip
        count += 1
        for rel in rels:
            assert rel.evaluate(coords) == 0


# -- linked quintics --------------------------------------------------------------

def test_linked_quintic_deterministic_per_seed():
    a = build(ConstructionRecipe(LinkedQuintic(4, 2), seed=3))
    b = build(ConstructionRecipe(LinkedQuintic(4, 2), seed=3))
    assert a.equals(b)
    assert [str(g) for g in a.generators] == [str(g) for g in b.generators]


def test_example_linked_quintic_over_q():
    x = build(ConstructionRecipe(ExampleLinkedQuintic(3), field=QQ, seed=7))
    assert x.ring.nvars == 5
    assert x.ring.field == QQ
    q = [g for g in x.gb_truncated(2).generators if g.total_degree() == 2][0]
    from quintic_atlas.geometry import quadric_info
    assert quadric_info(q).rank == 3


def test_example_rank4_lives_in_p6():
    x = build(ConstructionRecipe(ExampleLinkedQuintic(4), seed=2))
    assert x.ring.nvars == 7


# -- corpus ------------------------------------------------------------------------

def test_corpus_is_desk_scale():
    entries = corpus()
    assert len(entries) >= 15
    names = [e.name for e in entries]
    assert len(set(names)) == len(names)
    cases = {e.case for e in entries}
    assert {"Hypersurface", "DeltaLE1_Scroll", "DeltaLE1_GrassmannSection",
            "DeltaLE1_DelPezzo", "LinkedQuintic", "ConeSignature"} <= cases


def test_corpus_expected_tuples_satisfy_delta_identity():
    for e in corpus():
        n, N, d, delta, g = e.expected
        assert d == 5
        assert 4 == delta + (N - n), e.name
