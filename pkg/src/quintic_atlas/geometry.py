"""Geometric predicates: Jacobian singular loci, smoothness, quadric rank,
linear-space recognition, liaison verification and cone construction.

The singular locus of an equidimensional scheme of codimension c is cut out
by the ideal together with the c x c minors of the Jacobian of any generating
set (the result, after adding the ideal, does not depend on the choice; a
minimal generating set keeps the minor count down).  Projective emptiness is
decided exactly: either some graded piece of the locus ideal fills the whole
degree (certified by Macaulay-matrix rank), or the Hilbert polynomial of the
locus vanishes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from . import linalg
from .groebner import normal_form
from .ideal_ops import (Ideal, ideal_colon, ideal_intersect, ideal_sum,
                        irrelevant_ideal, saturate)
from .invariants import (DEFAULT_DEGREE_BUDGET, hilbert_polynomial)
from .poly import Polynomial, PrimeField, QuinticAtlasError, Ring

log = logging.getLogger("quintic_atlas")

# keep Macaulay emptiness probes below ~2e6 matrix entries
_PROBE_ENTRY_LIMIT = 2_000_000


class CharTwoError(QuinticAtlasError):
    """Quadric rank is undefined over a field of characteristic 2."""


# ---------------------------------------------------------------------------
# generating sets and Jacobian minors
# ---------------------------------------------------------------------------

def minimal_generators(i: Ideal) -> list:
    """A minimal generating subset of the reduced Groebner basis.

    Elements are taken in increasing degree; one is dropped when the earlier
    picks already generate it.  Deterministic.
    """
    from .groebner import groebner_basis

    gb = i.gb()
    cands = sorted(gb.generators,
                   key=lambda g: (g.total_degree(), str(g)))
    chosen: list = []
    basis = None
    for g in cands:
        if basis is not None and normal_form(g, basis).is_zero:
            continue
        chosen.append(g)
        basis = groebner_basis(chosen, i.ring)
    return chosen


def jacobian_matrix(gens: Sequence[Polynomial], ring: Ring) -> list:
    return [[g.derivative(j) for j in range(ring.nvars)] for g in gens]


def _det(rows: list) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = rows[0][0].ring.zero()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * _det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def jacobian_minors(gens: Sequence[Polynomial], ring: Ring, size: int) -> list:
    """All nonzero ``size x size`` minors of the Jacobian, deduplicated and
    inter-reduced degree by degree (same ideal modulo the generators)."""
    jac = jacobian_matrix(gens, ring)
    nrows, ncols = len(jac), ring.nvars
    if size > nrows or size > ncols:
        return []
    seen = set()
    by_degree: dict = {}
    for rsel in combinations(range(nrows), size):
        for csel in combinations(range(ncols), size):
            det = _det([[jac[r][c] for c in csel] for r in rsel])
            if det.is_zero:
                continue
            det = det.monic()
            key = frozenset(det.terms.items())
            if key in seen:
                continue
            seen.add(key)
            by_degree.setdefault(det.total_degree(), []).append(det)
    reduced = []
    for d in sorted(by_degree):
        group = by_degree[d]
        if len(group) > 1:
            group, _ = linalg.graded_piece_basis(group, ring, d)
        reduced.extend(group)
    return reduced


def singular_locus_ideal(i: Ideal, codim: Optional[int] = None, *,
                         budget: int = DEFAULT_DEGREE_BUDGET) -> Ideal:
    """The unsaturated locus ideal I + (codim x codim Jacobian minors)."""
    if codim is None:
        data = hilbert_polynomial(i, budget=budget)
        codim = i.ring.nvars - 1 - data.dim
    if codim < 1:
        raise ValueError("codimension must be at least 1")
    gens = minimal_generators(i)
    minors = jacobian_minors(gens, i.ring, codim)
    # reducing the minors modulo I keeps the ideal I + minors but trims
    # redundant generators before any downstream basis computation
    gb = i.gb()
    reduced = []
    for m in minors:
        nf = normal_form(m, gb)
        if not nf.is_zero:
            reduced.append(nf.monic())
    return Ideal(i.ring, tuple(gens) + tuple(reduced))


def _certified_empty_by_rank(j: Ideal, probe_max_degree: int,
                             max_probes: int = 2) -> bool:
    """True when some graded piece of j fills its whole degree (so the locus
    is projectively empty).  False is inconclusive.  At most ``max_probes``
    rank computations within a strict size limit: this is a fast path for
    visibly empty loci, not a decision procedure."""
    ring = j.ring
    nv = ring.nvars
    degrees = sorted({g.total_degree() for g in j.generators})
    if not degrees:
        return False
    probes = 0
    for t in range(degrees[0], probe_max_degree + 1):
        cols = comb(t + nv - 1, nv - 1)
        rows = sum(comb(t - g.total_degree() + nv - 1, nv - 1)
                   for g in j.generators if g.total_degree() <= t)
        if rows < cols:
            continue
        if rows * cols > _PROBE_ENTRY_LIMIT:
            break
        if linalg.graded_piece_dimension(j.generators, ring, t) == cols:
            return True
        probes += 1
        if probes >= max_probes:
            break
    return False


def _contains_power_of_every_variable(j: Ideal, budget: int) -> bool:
    """Exact emptiness certificate: the (truncated) basis shows a pure power
    of each variable among its leading monomials."""
    lms = j.gb_truncated(budget).leading_monomials()
    nv = j.ring.nvars
    covered = set()
    for lm in lms:
        support = [k for k, e in enumerate(lm) if e]
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == nv


def projectively_empty(j: Ideal, *, probe_max_degree: int = 8,
                       budget: int = DEFAULT_DEGREE_BUDGET) -> bool:
    """Exact emptiness test.

    Certificates, in order of cost: a graded piece that fills its whole
    degree (Macaulay rank), a pure power of every variable among the leading
    monomials, and finally a vanishing Hilbert polynomial.
    """
    if j.is_zero:
        return False
    if _certified_empty_by_rank(j, probe_max_degree):
        return True
    if _contains_power_of_every_variable(j, budget):
        return True
    data = hilbert_polynomial(j, budget=budget)
    return data.dim < 0


def singular_locus(i: Ideal, codim: Optional[int] = None, *,
                   saturate_result: bool = True,
                   probe_max_degree: int = 8,
                   budget: int = DEFAULT_DEGREE_BUDGET) -> Ideal:
    """Ideal of the singular locus (Jacobian criterion).

    With ``saturate_result`` the empty locus comes back as the unit ideal and
    nonempty loci are saturated w.r.t. the irrelevant ideal.
    """
    j = singular_locus_ideal(i, codim, budget=budget)
    if not saturate_result:
        return j
    if projectively_empty(j, probe_max_degree=probe_max_degree, budget=budget):
        return Ideal(i.ring, [i.ring.one()], saturated=True)
    reduced = Ideal(i.ring, j.gb().generators)
    fixed, _ = saturate(reduced, irrelevant_ideal(i.ring))
    return fixed


def is_smooth(i: Ideal, codim: Optional[int] = None, *,
              probe_max_degree: int = 8,
              budget: int = DEFAULT_DEGREE_BUDGET) -> bool:
    """Smoothness via emptiness of the projective singular locus."""
    j = singular_locus_ideal(i, codim, budget=budget)
    return projectively_empty(j, probe_max_degree=probe_max_degree, budget=budget)


# ---------------------------------------------------------------------------
# quadrics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadricInfo:
    """A quadric hypersurface with its symmetric matrix and exact rank."""

    form: Polynomial
    sym_matrix: tuple
    rank: int


def quadric_info(q: Polynomial) -> QuadricInfo:
    """Symmetric matrix and rank of a degree-2 form (char != 2 only)."""
    ring = q.ring
    field = ring.field
    if field.char == 2:
        raise CharTwoError("quadric rank is undefined over characteristic 2")
    if q.is_zero or q.total_degree() != 2 or not q.is_homogeneous():
        raise ValueError("quadric_info expects a nonzero homogeneous quadric")
    n = ring.nvars
    half = field.inv(field.coerce(2))
    mat = [[field.zero for _ in range(n)] for _ in range(n)]
    for m, c in q.terms.items():
        support = [j for j, e in enumerate(m) if e]
        if len(support) == 1:
            j = support[0]
            mat[j][j] = c
        else:
            j, k = support
            mat[j][k] = field.mul(c, half)
            mat[k][j] = mat[j][k]
    rank = linalg.matrix_rank(field, mat)
    return QuadricInfo(form=q, sym_matrix=tuple(tuple(row) for row in mat),
                       rank=rank)


def unique_quadric(i: Ideal, *, budget: int = DEFAULT_DEGREE_BUDGET) -> QuadricInfo:
    """Extract the unique quadric containing the scheme (requires dim I_2 = 1)."""
    from .invariants import hilbert_function

    ring = i.ring
    hf = hilbert_function(i, 2)
    dim_i2 = comb(ring.nvars + 1, 2) - hf.hf(2)
    if dim_i2 != 1:
        raise ValueError(f"expected a unique quadric, found dim I_2 = {dim_i2}")
    quadrics = [g for g in i.gb_truncated(2).generators if g.total_degree() == 2]
    if len(quadrics) != 1:
        raise ValueError("Groebner basis does not exhibit a single quadric "
                         f"(found {len(quadrics)})")
    return quadric_info(quadrics[0])


# ---------------------------------------------------------------------------
# linear spaces and liaison
# ---------------------------------------------------------------------------

def is_linear_space(i: Ideal):
    """(True, codim) when the saturated ideal is generated by independent
    linear forms; (False, None) otherwise.  The input is tested as given —
    unsaturated presentations of a linear space return False."""
    gb = i.gb()
    if not gb.generators:
        return False, None
    if all(g.total_degree() == 1 for g in gb.generators):
        return True, len(gb.generators)
    return False, None


@dataclass(frozen=True)
class LinkageCheck:
    claim: str
    verdict: bool
    numbers: str


@dataclass(frozen=True)
class LinkageReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.verdict for c in self.checks)

    def __str__(self):
        return "\n".join(f"{'pass' if c.verdict else 'FAIL'}  {c.claim}  "
                         f"[{c.numbers}]" for c in self.checks)


def verify_linkage(x: Ideal, p: Ideal, q: Polynomial, v3: Polynomial, *,
                   budget: int = DEFAULT_DEGREE_BUDGET) -> LinkageReport:
    """Check the liaison facts: I_X ∩ I_P = (q, v3) by mutual membership,
    deg X + deg P = deg q * deg v3 = 6, and P a codimension-2 linear space."""
    ring = x.ring
    if p.ring != ring or q.ring != ring or v3.ring != ring:
        raise ValueError("linkage data must live in one ring")
    ci = Ideal(ring, [q, v3])
    meet = ideal_intersect(x, p)
    forward = all(meet.contains(g) for g in ci.generators)
    backward = all(ci.contains(g) for g in meet.generators)
    checks = [LinkageCheck(
        claim="I_X ∩ I_P equals (Q, V3)",
        verdict=forward and backward,
        numbers=f"CI⊆∩:{'yes' if forward else 'no'} ∩⊆CI:{'yes' if backward else 'no'}")]
    deg_x = hilbert_polynomial(x, budget=budget).degree
    deg_p = hilbert_polynomial(p, budget=budget).degree
    checks.append(LinkageCheck(
        claim="degree bookkeeping deg X + deg P = 6",
        verdict=deg_x + deg_p == 6,
        numbers=f"deg X={deg_x} deg P={deg_p}"))
    linear, codim = is_linear_space(p)
    checks.append(LinkageCheck(
        claim="residual is a linear space of codimension 2",
        verdict=bool(linear and codim == 2),
        numbers=f"linear={'yes' if linear else 'no'} codim={codim}"))
    return LinkageReport(checks=tuple(checks))


def link_residual(q: Polynomial, v3: Polynomial, other: Ideal) -> Ideal:
    """The liaison residual ((q, v3) : other) of a scheme inside the (2,3)
    complete intersection."""
    ci = Ideal(q.ring, [q, v3])
    return ideal_colon(ci, other)


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------

def _fresh_cone_names(ring: Ring, s: int) -> list:
    names = []
    used = set(ring.variables)
    if all(v.startswith("x") and v[1:].isdigit() for v in ring.variables):
        k = max(int(v[1:]) for v in ring.variables) + 1
        stem = "x"
    else:
        k = 0
        stem = "v"
    while len(names) < s:
        cand = f"{stem}{k}"
        if cand not in used:
            names.append(cand)
            used.add(cand)
        k += 1
    return names


def cone_over(i: Ideal, s: int) -> Ideal:
    """Classical projective cone: the same generators viewed in a ring with
    ``s`` extra vertex variables.  Dimension grows by s; degree and
    Delta-genus are preserved.  ``s = 0`` is rejected (it would be the
    identity)."""
    if s < 1:
        raise ValueError("cone_over needs s >= 1 (s = 0 would be the identity)")
    ring = i.ring
    ext = Ring(ring.variables + tuple(_fresh_cone_names(ring, s)),
               ring.field, ring.order)
    pad = (0,) * s
    gens = [Polynomial(ext, {m + pad: c for m, c in g.terms.items()})
            for g in i.generators]
    return Ideal(ext, gens, saturated=i.saturated)
