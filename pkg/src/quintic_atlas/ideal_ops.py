"""Ideal-level algebra: sum, intersection, colon, saturation, coordinate
changes and hyperplane slicing.

The colon follows the classical auxiliary-variable route: the intersection
``a ∩ b`` is the elimination ideal of ``t*a + (1-t)*b``, and a single-generator
colon ``(a : f)`` is ``(a ∩ (f)) / f``.  Multi-generator colons intersect the
single colons; saturation iterates the colon until it stabilizes.

Every operation returns a fresh immutable ``Ideal``; cached Groebner bases are
attached lazily and never mutated afterwards.
"""

from __future__ import annotations

import logging
import random
from typing import Optional, Sequence

from . import linalg
from .groebner import GroebnerBasis, groebner_basis, normal_form
from .poly import (Block, Polynomial, QuinticAtlasError, Ring,
                   RingMismatchError, m_div)

log = logging.getLogger("quintic_atlas")


class GenericityError(QuinticAtlasError):
    """A generic choice failed repeatedly (the field may be too small)."""


class Ideal:
    """A homogeneous ideal in a declared polynomial ring.

    ``saturated`` is three-valued metadata: True when the producer guarantees
    saturation w.r.t. the irrelevant ideal, False when it is known unsaturated,
    None when unknown.
    """

    __slots__ = ("ring", "generators", "saturated", "_gb", "_gb_capped", "_hilbert")

    def __init__(self, ring: Ring, generators: Sequence[Polynomial],
                 saturated: Optional[bool] = None):
        gens = []
        for g in generators:
            if isinstance(g, (int,)):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError("generator outside the declared ring")
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.saturated = saturated
        self._gb = None
        self._gb_capped = {}
        self._hilbert = None

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def gb(self) -> GroebnerBasis:
        """Reduced Groebner basis w.r.t. the ring order (cached)."""
        if self._gb is None:
            self._gb = groebner_basis(self.generators, self.ring)
        return self._gb

    def gb_truncated(self, cap: int) -> GroebnerBasis:
        """Degree-truncated basis (homogeneous ideals only); cached per cap.

        A full cached basis is reused when available.
        """
        if self._gb is not None:
            return self._gb
        got = self._gb_capped.get(cap)
        if got is None:
            got = groebner_basis(self.generators, self.ring, degree_cap=cap)
            self._gb_capped[cap] = got
        return got

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self.gb()).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.gb()
        return all(normal_form(g, gb).is_zero for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        """Equality as ideals (reduced bases are unique for a fixed order)."""
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")
        return sorted(self.gb().generators, key=str) == sorted(other.gb().generators, key=str)

    def with_cached_gb(self, gb: GroebnerBasis) -> "Ideal":
        self._gb = gb
        return self

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators[:4])
        more = ", ..." if len(self.generators) > 4 else ""
        return f"Ideal({gens}{more})"


def irrelevant_ideal(ring: Ring) -> Ideal:
    """The ideal generated by all variables."""
    return Ideal(ring, ring.gens(), saturated=False)


def principal(f: Polynomial, saturated: Optional[bool] = None) -> Ideal:
    return Ideal(f.ring, [f], saturated=saturated)


# ---------------------------------------------------------------------------
# sum / intersection / colon / saturation
# ---------------------------------------------------------------------------

def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideal sum across different rings")
    return Ideal(a.ring, a.generators + b.generators)


def _fresh_name(ring: Ring, stem: str) -> str:
    name = stem
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{stem}{k}"
    return name


def _extend_ring_front(ring: Ring, name: str) -> Ring:
    return Ring((name,) + ring.variables, ring.field, Block(1))

def _lift(p: Polynomial, ext: Ring) -> Polynomial:
    return Polynomial(ext, {(0,) + m: c for m, c in p.terms.items()})


def _project(p: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in p.terms.items()})


def homogeneous_components(p: Polynomial) -> list:
    """The homogeneous parts of a polynomial, by increasing degree."""
    by_degree: dict = {}
    for m, c in p.terms.items():
        by_degree.setdefault(sum(m), {})[m] = c
    return [Polynomial(p.ring, by_degree[d]) for d in sorted(by_degree)]


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b via elimination of an auxiliary variable t from t*a + (1-t)*b."""
    if a.ring != b.ring:
        raise RingMismatchError("ideal intersection across different rings")
    if a.is_zero or b.is_zero:
        return Ideal(a.ring, [])
    ring = a.ring
    ext = _extend_ring_front(ring, _fresh_name(ring, "t_aux"))
    t = ext.var(0)
    one = ext.one()
    gens = [t * _lift(g, ext) for g in a.generators]
    gens += [(one - t) * _lift(g, ext) for g in b.generators]
    gb = groebner_basis(gens, ext)
    kept = [g for g in gb.generators if all(m[0] == 0 for m in g.terms)]
    out = [_project(g, ring) for g in kept]
    if a.is_homogeneous() and b.is_homogeneous():
        # the auxiliary variable breaks the grading, so basis elements may mix
        # degrees; their homogeneous parts still lie in the intersection
        split = []
        for g in out:
            split.extend(homogeneous_components(g))
        out = split
    return Ideal(ring, out)


def eliminate(i: Ideal, first_s_vars: int) -> Ideal:
    """The elimination ideal: I ∩ k[last variables], dropping the first
    ``first_s_vars`` variables, computed with a block order."""
    ring = i.ring
    s = first_s_vars
    if not 1 <= s < ring.nvars:
        raise ValueError(f"elimination count {s} out of range")
    small = Ring(ring.variables[s:], ring.field, ring.order)
    if i.is_zero:
        return Ideal(small, [])
    work = Ring(ring.variables, ring.field, Block(s))
    lifted = [Polynomial(work, dict(g.terms)) for g in i.generators]
    gb = groebner_basis(lifted, work)
    kept = [g for g in gb.generators
            if all(all(e == 0 for e in m[:s]) for m in g.terms)]
    return Ideal(small, [Polynomial(small, {m[s:]: c for m, c in g.terms.items()})
                         for g in kept])


def intersect_many(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = ideal_intersect(acc, nxt)
    return acc


def exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient p/f for p in the principal ideal (f); raises if not divisible."""
    ring = p.ring
    order = ring.order
    field = ring.field
    if f.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    lf = f.leading_monomial(order)
    cf = f.terms[lf]
    quotient: dict = {}
    rem = p
    while not rem.is_zero:
        lm = rem.leading_monomial(order)
        if not all(x <= y for x, y in zip(lf, lm)):
            raise ValueError("polynomial is not divisible by the given factor")
        shift = m_div(lm, lf)
        c = field.div(rem.terms[lm], cf)
        quotient[shift] = c
        rem = rem - f.mul_monomial(shift, c)
    return Polynomial(ring, quotient)


def colon_single(a: Ideal, f: Polynomial) -> Ideal:
    """(a : f) = (a ∩ (f)) / f."""
    if f.ring != a.ring:
        raise RingMismatchError("colon across different rings")
    if f.is_zero:
        return Ideal(a.ring, [a.ring.one()])  # (a : 0) is the unit ideal
    meet = ideal_intersect(a, principal(f))
    return Ideal(a.ring, [exact_divide(g, f) for g in meet.generators])


def ideal_colon(a: Ideal, b: Ideal) -> Ideal:
    """(a : b) = intersection of (a : f) over the generators f of b."""
    if a.ring != b.ring:
        raise RingMismatchError("colon across different rings")
    if b.is_zero:
        return Ideal(a.ring, [a.ring.one()])
    parts = [colon_single(a, f) for f in b.generators]
    return intersect_many(parts)


def saturate(a: Ideal, b: Ideal, max_iterations: int = 64):
    """Iterate the colon until (I_k : b) = I_k.

    Returns ``(stable_ideal, iterations)`` where ``iterations`` counts colon
    rounds including the final confirming one.
    """
    current = a
    for k in range(1, max_iterations + 1):
        nxt = ideal_colon(current, b)
        if current.contains_ideal(nxt):
            if b.generators and all(g.total_degree() == 1 for g in b.generators) \
                    and len(b.generators) == b.ring.nvars:
                current.saturated = True  # saturated w.r.t. the irrelevant ideal
            return current, k
        nxt.saturated = None
        current = nxt
    raise QuinticAtlasError("saturation did not stabilize "
                            f"within {max_iterations} iterations")


# ---------------------------------------------------------------------------
# coordinate changes and hyperplane slicing
# ---------------------------------------------------------------------------

def linear_change(i: Ideal, matrix: Sequence[Sequence]) -> Ideal:
    """Substitute variables by matrix * variables (exact, invertible only).

    Row ``j`` of the matrix gives the image of variable ``j`` as a linear
    combination of the variables; degrees and all invariants are preserved.
    """
    ring = i.ring
    n = ring.nvars
    rows = [[ring.field.coerce(v) for v in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix size must match the variable count")
    if not linalg.is_invertible(ring.field, rows):
        raise ValueError("coordinate change matrix is singular")
    images = {}
    for j in range(n):
        img = ring.zero()
        for k in range(n):
            if rows[j][k] != ring.field.zero:
                img = img + ring.var(k).scale(rows[j][k])
        images[j] = img
    new_gens = [g.substitute(images) for g in i.generators]
    out = Ideal(ring, new_gens, saturated=i.saturated)
    return out


def random_invertible_matrix(ring: Ring, rng: random.Random, tries: int = 32):
    """A random invertible square matrix over the ring's field."""
    n = ring.nvars
    field = ring.field
    for _ in range(tries):
        rows = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        if linalg.is_invertible(field, rows):
            return rows
    raise GenericityError("could not find an invertible random matrix")


def _restrict_last(ring: Ring) -> Ring:
    if ring.nvars < 2:
        raise ValueError("cannot drop a variable from a univariate ring")
    return Ring(ring.variables[:-1], ring.field, ring.order)


def substitute_last_variable(i: Ideal, coeffs: Sequence) -> Ideal:
    """Substitute x_last = sum(c_j * x_j) and drop the last variable."""
    ring = i.ring
    small = _restrict_last(ring)
    field = ring.field
    cs = [field.coerce(c) for c in coeffs]
    if len(cs) != ring.nvars - 1:
        raise ValueError("need one coefficient per remaining variable")
    form = small.zero()
    for j, c in enumerate(cs):
        if c != field.zero:
            form = form + small.var(j).scale(c)
    powers = [small.one(), form]
    gens = []
    for g in i.generators:
        acc = small.zero()
        for m, c in g.terms.items():
            e = m[-1]
            while e >= len(powers):
                powers.append(powers[-1] * form)
            body = small.monomial(m[:-1], c)
            if e:
                body = body * powers[e]
            acc = acc + body
        gens.append(acc)
    return Ideal(small, gens)


def hyperplane_slice(i: Ideal, seed: int, *, retries: int = 8,
                     budget: int = 12) -> Ideal:
    """Generic hyperplane section: substitute a random linear form for the
    last variable, dropping the ambient dimension by one.

    The choice is validated exactly (projective dimension drops by one,
    degree is preserved); failed attempts reseed up to ``retries`` times.
    """
    from . import invariants  # local import: invariants slices via this module

    if i.ring.nvars < 2:
        raise ValueError("slicing needs at least two variables")
    if not i.is_homogeneous():
        raise ValueError("slicing requires a homogeneous ideal")
    base = invariants.hilbert_polynomial(i, budget=budget)
    if base.dim < 1:
        raise ValueError("cannot slice a zero-dimensional or empty scheme")
    for attempt in range(retries):
        rng = random.Random(seed + 7919 * attempt)
        coeffs = [i.ring.field.random_element(rng) for _ in range(i.ring.nvars - 1)]
        sliced = substitute_last_variable(i, coeffs)
        try:
            data = invariants.hilbert_polynomial(sliced, budget=budget)
        except QuinticAtlasError:
            continue
        if data.dim == base.dim - 1 and data.degree == base.degree:
            log.debug("hyperplane_slice: seed=%s attempt=%s coeffs=%s",
                      seed, attempt, coeffs)
            if base.dim >= 2:
                # slicing once more keeps depth >= 1 for the arithmetically
                # Cohen-Macaulay inputs this engine produces; callers that
                # need certainty re-saturate
                sliced.saturated = i.saturated
            return sliced
    raise GenericityError(
        f"no generic hyperplane found after {retries} attempts "
        f"(seed {seed}); the field may be too small — retry over a larger prime")
