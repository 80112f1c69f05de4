"""Constructors for the degree-5 catalogue: quintic hypersurfaces, rational
normal curves and scrolls, the Pluecker-embedded Grassmannian of lines in
P^4, its linear sections, quintics linked to a linear space inside a (2,3)
complete intersection, and classical cones over any of these.

Every recipe is deterministic given (field, seed); generic choices are dense
with uniform coefficients (small-height integers over Q) and re-seeded on the
rare genericity failure.  ``corpus`` returns the desk-scale regression table
with the expected invariant tuple and classification tag for each entry.

Surface scrolls over elliptic curves have no elementary equation model here
and are deliberately absent; the classifier still recognizes their invariant
signature from user-supplied ideals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Optional, Sequence, Union

from .geometry import cone_over
from .ideal_ops import (GenericityError, Ideal, ideal_colon, saturate)
from .invariants import DEFAULT_DEGREE_BUDGET, hilbert_polynomial
from .linalg import monomials_of_degree
from .poly import GF, QQ, Field, Polynomial, Ring

DEFAULT_FIELD = GF(32003)


# ---------------------------------------------------------------------------
# recipe kinds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuinticHypersurface:
    """A random quintic hypersurface in P^{n+1}."""
    n: int

    def validate(self):
        if self.n < 1:
            raise ValueError("hypersurface dimension must be >= 1")

    def describe(self) -> str:
        return f"hypersurface n={self.n}"


@dataclass(frozen=True)
class RationalNormalCurve:
    """The rational normal quintic curve in P^5 (2x5 catalecticant minors)."""

    def validate(self):
        pass

    def describe(self) -> str:
        return "rnc"


@dataclass(frozen=True)
class Scroll:
    """Rational normal scroll S(a_1, ..., a_n), all a_i >= 1, sum = 5."""
    partition: tuple

    def validate(self):
        parts = tuple(self.partition)
        if not (1 <= len(parts) <= 5):
            raise ValueError("scroll needs between 1 and 5 blocks")
        if any(a < 1 for a in parts):
            raise ValueError("scroll block sizes must be positive")
        if sum(parts) != 5:
            raise ValueError("scroll block sizes must sum to 5")

    def describe(self) -> str:
        return "scroll " + ",".join(str(a) for a in self.partition)


@dataclass(frozen=True)
class Grassmannian14:
    """G(1,4) in P^9 under the Pluecker embedding (five quadric relations)."""

    def validate(self):
        pass

    def describe(self) -> str:
        return "grassmannian14"


@dataclass(frozen=True)
class LinearSection:
    """Generic linear sections of a base construction."""
    base: "RecipeKind"
    cuts: int

    def validate(self):
        self.base.validate()
        if self.cuts < 1:
            raise ValueError("need at least one hyperplane cut")

    def describe(self) -> str:
        return f"section({self.base.describe()}) cuts={self.cuts}"


@dataclass(frozen=True)
class LinkedQuintic:
    """Degree-5 variety of dimension n linked to a linear P^n inside a (2,3)
    complete intersection in P^{n+2}; the quadric has the stated rank."""
    rank: int
    n: int

    def validate(self):
        if self.rank not in (3, 4):
            raise ValueError("quadric rank must be 3 or 4")
        if self.n < 1:
            raise ValueError("linked quintic dimension must be >= 1")

    def describe(self) -> str:
        return f"linked rank={self.rank} n={self.n}"


@dataclass(frozen=True)
class ExampleLinkedQuintic:
    """The published construction session, translated verbatim: the rank-3
    surface lives in P^4, the rank-4 fourfold in P^6, with the quadric
    spelled as an alternating sum of squares."""
    rank: int

    @property
    def n(self) -> int:
        return 2 if self.rank == 3 else 4

    def validate(self):
        if self.rank not in (3, 4):
            raise ValueError("quadric rank must be 3 or 4")

    def describe(self) -> str:
        return f"linked-example rank={self.rank}"


@dataclass(frozen=True)
class Cone:
    """Classical projective cone with an s-dimensional vertex over a base."""
    base: "RecipeKind"
    s: int

    def validate(self):
        self.base.validate()
        if self.s < 1:
            raise ValueError("cone needs s >= 1")

    def describe(self) -> str:
        return f"cone({self.base.describe()}) s={self.s}"


RecipeKind = Union[QuinticHypersurface, RationalNormalCurve, Scroll,
                   Grassmannian14, LinearSection, LinkedQuintic,
                   ExampleLinkedQuintic, Cone]


@dataclass(frozen=True)
class ConstructionRecipe:
    kind: RecipeKind
    field: Field = DEFAULT_FIELD
    seed: int = 0

    def describe(self) -> str:
        return f"{self.kind.describe()} field={self.field.describe()} seed={self.seed}"


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------

def _x_ring(nvars: int, field: Field) -> Ring:
    return Ring(tuple(f"x{i}" for i in range(nvars)), field)


def random_form(ring: Ring, degree: int, rng: random.Random) -> Polynomial:
    """Dense random homogeneous form (retried if it comes out zero)."""
    field = ring.field
    while True:
        terms = {}
        for m in monomials_of_degree(ring.nvars, degree):
            c = field.random_element(rng)
            if c != field.zero:
                terms[m] = c
        if terms:
            return Polynomial(ring, terms)


def two_row_minors(top: Sequence[Polynomial], bottom: Sequence[Polynomial]) -> list:
    """All 2x2 minors of a 2xk matrix of polynomials."""
    out = []
    for a, b in combinations(range(len(top)), 2):
        out.append(top[a] * bottom[b] - top[b] * bottom[a])
    return out


def scroll_matrix(ring: Ring, partition: Sequence[int]):
    """The 2x5 block catalecticant of a scroll: block i uses a_i + 1
    consecutive variables, contributing columns (x_j, x_{j+1})."""
    top, bottom = [], []
    offset = 0
    for a in partition:
        for j in range(a):
            top.append(ring.var(offset + j))
            bottom.append(ring.var(offset + j + 1))
        offset += a + 1
    return top, bottom


PLUECKER_PAIRS = tuple((i, j) for i in range(5) for j in range(i + 1, 5))


def pluecker_ring(field: Field) -> Ring:
    return Ring(tuple(f"p{i}{j}" for i, j in PLUECKER_PAIRS), field)


def pluecker_relations(ring: Ring) -> list:
    """The five quadric relations cutting out G(1,4) in P^9."""
    index = {pair: k for k, pair in enumerate(PLUECKER_PAIRS)}

    def p(i, j):
        return ring.var(index[(i, j)])

    rels = []
    for quad in combinations(range(5), 4):
        i, j, k, l = quad
        rels.append(p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k))
    return rels


def wedge_coordinates(row_a: Sequence, row_b: Sequence, field: Field) -> list:
    """Pluecker coordinates of the span of two 5-vectors."""
    a = [field.coerce(v) for v in row_a]
    b = [field.coerce(v) for v in row_b]
    return [field.sub(field.mul(a[i], b[j]), field.mul(a[j], b[i]))
            for i, j in PLUECKER_PAIRS]


# ---------------------------------------------------------------------------
# linked quintics
# ---------------------------------------------------------------------------

_LINK_RETRIES = 8


def _build_link(ring: Ring, q: Polynomial, v3: Polynomial,
                p_gens: Sequence[Polynomial], expect_n: int,
                budget: int) -> Optional[Ideal]:
    ci = Ideal(ring, [q, v3])
    p = Ideal(ring, p_gens, saturated=True)
    linked = ideal_colon(ci, p)
    linked, _ = saturate(linked, p)
    data = hilbert_polynomial(linked, budget=budget)
    if data.dim != expect_n or data.degree != 5:
        return None
    # residual of an unmixed linear space in a complete intersection is
    # unmixed, hence saturated
    linked.saturated = True
    return linked


def build_linked_quintic(rank: int, n: int, field: Field, seed: int, *,
                         budget: int = DEFAULT_DEGREE_BUDGET) -> Ideal:
    """X = ((Q, x0*F + x1*G) : (x0, x1))^sat in P^{n+2}, Q of the given rank."""
    ring = _x_ring(n + 3, field)
    x0, x1 = ring.var(0), ring.var(1)
    if rank == 4:
        q = ring.var(0) * ring.var(2) + ring.var(1) * ring.var(3)
    else:
        q = ring.var(0) * ring.var(0) + ring.var(1) * ring.var(2)
    for attempt in range(_LINK_RETRIES):
        rng = random.Random(seed + 104729 * attempt)
        f2 = random_form(ring, 2, rng)
        g2 = random_form(ring, 2, rng)
        v3 = x0 * f2 + x1 * g2
        linked = _build_link(ring, q, v3, [x0, x1], n, budget)
        if linked is not None:
            return linked
    raise GenericityError(
        f"linked quintic construction failed for rank={rank}, n={n}, seed={seed}")


def build_example_linked_quintic(rank: int, field: Field, seed: int, *,
                                 budget: int = DEFAULT_DEGREE_BUDGET) -> Ideal:
    """The published session's spelling: Q = x0^2 - x1^2 + x2^2 (rank 3,
    ambient P^4) or x0^2 - x1^2 + x2^2 - x3^2 (rank 4, ambient P^6), with the
    cubic reusing one random quadric on the first two squares."""
    n = 2 if rank == 3 else 4
    ring = _x_ring(n + 3, field)
    x = ring.gens()
    if rank == 3:
        q = x[0] * x[0] - x[1] * x[1] + x[2] * x[2]
        p_gens = [x[0] - x[1], x[2]]
    else:
        q = x[0] * x[0] - x[1] * x[1] + x[2] * x[2] - x[3] * x[3]
        p_gens = [x[0] - x[1], x[2] - x[3]]
    for attempt in range(_LINK_RETRIES):
        rng = random.Random(seed + 104729 * attempt)
        f2 = random_form(ring, 2, rng)
        g2 = random_form(ring, 2, rng)
        if rank == 3:
            v3 = x[0] * f2 - x[1] * f2 + x[2] * g2
        else:
            v3 = x[0] * f2 - x[1] * f2 + x[2] * g2 - x[3] * g2
        linked = _build_link(ring, q, v3, p_gens, n, budget)
        if linked is not None:
            return linked
    raise GenericityError(
        f"example-style linked quintic failed for rank={rank}, seed={seed}")


# ---------------------------------------------------------------------------
# build dispatch
# ---------------------------------------------------------------------------

def build(recipe: ConstructionRecipe, *,
          budget: int = DEFAULT_DEGREE_BUDGET) -> Ideal:
    """Construct the homogeneous saturated ideal of a recipe."""
    recipe.kind.validate()
    return _build_kind(recipe.kind, recipe.field, recipe.seed, budget)


def _build_kind(kind: RecipeKind, field: Field, seed: int, budget: int) -> Ideal:
    if isinstance(kind, QuinticHypersurface):
        ring = _x_ring(kind.n + 2, field)
        rng = random.Random(seed)
        return Ideal(ring, [random_form(ring, 5, rng)], saturated=True)
    if isinstance(kind, RationalNormalCurve):
        ring = _x_ring(6, field)
        top = [ring.var(i) for i in range(5)]
        bottom = [ring.var(i + 1) for i in range(5)]
        return Ideal(ring, two_row_minors(top, bottom), saturated=True)
    if isinstance(kind, Scroll):
        parts = tuple(kind.partition)
        ring = _x_ring(5 + len(parts), field)
        top, bottom = scroll_matrix(ring, parts)
        return Ideal(ring, two_row_minors(top, bottom), saturated=True)
    if isinstance(kind, Grassmannian14):
        ring = pluecker_ring(field)
        return Ideal(ring, pluecker_relations(ring), saturated=True)
    if isinstance(kind, LinearSection):
        from .ideal_ops import hyperplane_slice

        current = _build_kind(kind.base, field, seed, budget)
        for k in range(kind.cuts):
            current = hyperplane_slice(current, seed * 100003 + 7 * k + 3,
                                       budget=budget)
        return current
    if isinstance(kind, LinkedQuintic):
        return build_linked_quintic(kind.rank, kind.n, field, seed, budget=budget)
    if isinstance(kind, ExampleLinkedQuintic):
        return build_example_linked_quintic(kind.rank, field, seed, budget=budget)
    if isinstance(kind, Cone):
        return cone_over(_build_kind(kind.base, field, seed, budget), kind.s)
    raise TypeError(f"unknown recipe kind {kind!r}")


# ---------------------------------------------------------------------------
# the regression corpus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    recipe: ConstructionRecipe
    expected: tuple                      # (n, N, d, delta, g)
    case: str                            # expected classification label
    case_params: dict = dc_field(default_factory=dict)
    notes: str = ""


def corpus(field: Field = None) -> list:
    """The regression table: every constructible case of the classification,
    with its expected invariants and classification tag."""
    F = field or DEFAULT_FIELD

    def entry(name, kind, expected, case, seed=1, params=None, notes="", fld=None):
        return CorpusEntry(name=name,
                           recipe=ConstructionRecipe(kind=kind, field=fld or F,
                                                     seed=seed),
                           expected=expected, case=case,
                           case_params=params or {}, notes=notes)

    return [
        entry("plane-quintic", QuinticHypersurface(1), (1, 2, 5, 3, 6),
              "Hypersurface", notes="plane curve of genus 6"),
        entry("quintic-threefold", QuinticHypersurface(3), (3, 4, 5, 3, 6),
              "Hypersurface", seed=5),
        entry("rnc-p5", RationalNormalCurve(), (1, 5, 5, 0, 0),
              "DeltaLE1_Scroll", notes="rational normal quintic curve"),
        entry("scroll-2-3", Scroll((2, 3)), (2, 6, 5, 0, 0), "DeltaLE1_Scroll"),
        entry("scroll-1-4", Scroll((1, 4)), (2, 6, 5, 0, 0), "DeltaLE1_Scroll"),
        entry("scroll-1-1-3", Scroll((1, 1, 3)), (3, 7, 5, 0, 0),
              "DeltaLE1_Scroll"),
        entry("scroll-1-2-2", Scroll((1, 2, 2)), (3, 7, 5, 0, 0),
              "DeltaLE1_Scroll"),
        entry("scroll-1-1-1-2", Scroll((1, 1, 1, 2)), (4, 8, 5, 0, 0),
              "DeltaLE1_Scroll"),
        entry("scroll-1-1-1-1-1", Scroll((1, 1, 1, 1, 1)), (5, 9, 5, 0, 0),
              "DeltaLE1_Scroll"),
        entry("grassmannian14", Grassmannian14(), (6, 9, 5, 1, 1),
              "DeltaLE1_GrassmannSection"),
        entry("g14-threefold-section", LinearSection(Grassmannian14(), 3),
              (3, 6, 5, 1, 1), "DeltaLE1_DelPezzo", seed=4),
        entry("del-pezzo-surface", LinearSection(Grassmannian14(), 4),
              (2, 5, 5, 1, 1), "DeltaLE1_DelPezzo", seed=3),
        entry("g14-curve-section", LinearSection(Grassmannian14(), 5),
              (1, 4, 5, 1, 1), "DeltaLE1_DelPezzo", seed=2,
              notes="genus-1 quintic curve in P^4"),
        entry("genus2-curve-p3", LinkedQuintic(4, 1), (1, 3, 5, 2, 2),
              "LinkedQuintic", params={"rank": 4},
              notes="curve of genus 2 in P^3"),
        entry("linked-r4-n2", LinkedQuintic(4, 2), (2, 4, 5, 2, 2),
              "LinkedQuintic", params={"rank": 4}),
        entry("linked-r4-n3", LinkedQuintic(4, 3), (3, 5, 5, 2, 2),
              "LinkedQuintic", params={"rank": 4}),
        entry("linked-r4-n4", LinkedQuintic(4, 4), (4, 6, 5, 2, 2),
              "LinkedQuintic", params={"rank": 4}, notes="singular"),
        entry("linked-r3-n2", LinkedQuintic(3, 2), (2, 4, 5, 2, 2),
              "LinkedQuintic", params={"rank": 3}),
        entry("linked-r3-n3", LinkedQuintic(3, 3), (3, 5, 5, 2, 2),
              "LinkedQuintic", params={"rank": 3}, notes="singular"),
        entry("linked-r3-n2-example-q", ExampleLinkedQuintic(3), (2, 4, 5, 2, 2),
              "LinkedQuintic", params={"rank": 3}, fld=QQ, seed=7,
              notes="published session spelling over Q"),
        entry("cone-over-rnc", Cone(RationalNormalCurve(), 1), (2, 6, 5, 0, 0),
              "ConeSignature", params={"base": "DeltaLE1_Scroll"}),
        entry("cone-over-rnc-s2", Cone(RationalNormalCurve(), 2), (3, 7, 5, 0, 0),
              "ConeSignature", params={"base": "DeltaLE1_Scroll"}),
        entry("cone-over-plane-quintic", Cone(QuinticHypersurface(1), 1),
              (2, 3, 5, 3, 6), "ConeSignature", params={"base": "Hypersurface"}),
    ]
