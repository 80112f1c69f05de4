"""Normal forms, Buchberger's algorithm and elimination.

Design choices (deliberately plain, deterministic and exact):

* pair selection is the normal strategy (smallest lcm degree first, ties
  broken by the lcm in the working order, then by pair indices);
* Buchberger's product criterion and chain criterion prune the pair queue;
* reduction is full multivariate division (no term of the remainder is
  divisible by any basis leading monomial), driven by a max-heap so the work
  polynomial is processed strictly in decreasing order;
* an optional degree cap truncates the computation for homogeneous inputs,
  which is enough for Hilbert-function queries up to that degree.

``buchberger`` is a pure function of its inputs; repeated runs are
bit-identical.  Pair counters are exposed via ``BuchbergerStats``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .poly import (Monomial, MonomialOrder, Polynomial, Ring, RingMismatchError,
                   m_deg, m_div, m_divides, m_lcm, m_mul)


@dataclass
class BuchbergerStats:
    """Counters emitted by one ``buchberger`` run."""

    pairs_generated: int = 0
    pairs_pruned_product: int = 0
    pairs_pruned_chain: int = 0
    pairs_pruned_cap: int = 0
    reductions: int = 0
    reductions_to_zero: int = 0
    basis_size: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """A (reduced, unless truncated says otherwise) Groebner basis.

    ``generators`` are monic and sorted increasingly by leading monomial.
    When ``degree_cap`` is set the basis is only guaranteed complete for
    S-pairs of lcm degree <= cap (valid for Hilbert queries up to cap).
    """

    ring: Ring
    order: MonomialOrder
    generators: tuple
    reduced: bool = True
    degree_cap: Optional[int] = None
    stats: Optional[BuchbergerStats] = dc_field(default=None, compare=False)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.generators]

    def contains(self, p: Polynomial) -> bool:
        if self.degree_cap is not None:
            d = p.total_degree()
            if d is not None and d > self.degree_cap:
                raise ValueError("membership above the degree cap of a truncated basis")
        return normal_form(p, self).is_zero

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# ---------------------------------------------------------------------------
# division / normal form
# ---------------------------------------------------------------------------

def _neg_key(order: MonomialOrder, m: Monomial) -> tuple:
    return tuple(-v for v in order.key(m))


def _reduce_terms(terms: dict, basis: Sequence[Polynomial], lms: Sequence[Monomial],
                  ring: Ring, order: MonomialOrder) -> dict:
    """Full reduction of a term dict modulo a monic basis.  Returns the remainder."""
    field = ring.field
    zero = field.zero
    work = dict(terms)
    heap = [( _neg_key(order, m), m) for m in work]
    heapq.heapify(heap)
    out: dict = {}
    nbasis = len(basis)
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue  # stale heap entry
        gi = -1
        for i in range(nbasis):
            if m_divides(lms[i], m):
                gi = i
                break
        if gi < 0:
            out[m] = c
            continue
        shift = m_div(m, lms[gi])
        for mg, cg in basis[gi].terms.items():
            if mg == lms[gi]:
                continue
            mm = m_mul(mg, shift)
            prev = work.get(mm)
            nv = field.sub(prev if prev is not None else zero, field.mul(c, cg))
            if nv == zero:
                work.pop(mm, None)
            else:
                work[mm] = nv
                if prev is None:
                    heapq.heappush(heap, (_neg_key(order, mm), mm))
    return out


def normal_form(p: Polynomial, gb, order: MonomialOrder = None) -> Polynomial:
    """Remainder of ``p`` under multivariate division by ``gb``.

    ``gb`` may be a GroebnerBasis or a plain sequence of polynomials (taken
    monic).  For a Groebner basis the normal form is canonical and is zero
    iff ``p`` lies in the ideal.
    """
    if isinstance(gb, GroebnerBasis):
        if p.ring != gb.ring:
            raise RingMismatchError("polynomial and basis live in different rings")
        if order is not None and order != gb.order:
            raise RingMismatchError("requested order disagrees with the basis order")
        order = gb.order
        basis = gb.generators
    else:
        basis = [g for g in gb if not g.is_zero]
        if order is None:
            order = p.ring.order
        for g in basis:
            if g.ring != p.ring:
                raise RingMismatchError("polynomial and basis live in different rings")
        basis = [g.monic(order) for g in basis]
    if not basis:
        return p
    lms = [g.leading_monomial(order) for g in basis]
    return Polynomial(p.ring, _reduce_terms(p.terms, basis, lms, p.ring, order))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = m_lcm(lf, lg)
    return f.mul_monomial(m_div(lcm, lf)) - g.mul_monomial(m_div(lcm, lg))


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = None, *,
               degree_cap: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    With ``degree_cap`` set (homogeneous inputs only) pairs of lcm degree
    above the cap are dropped; leading monomials of degree <= cap are then
    still exactly those of the full basis.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("buchberger needs a nonzero generator; use "
                         "groebner_basis/zero_ideal_basis for the zero ideal")
    stats = BuchbergerStats()
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    if order is None:
        order = ring.order
    if degree_cap is not None and not all(g.is_homogeneous() for g in gens):
        raise ValueError("degree_cap requires homogeneous generators")

    G = [g.monic(order) for g in gens]
    lms = [g.leading_monomial(order) for g in G]

    def push_pairs(j: int):
        lj = lms[j]
        for i in range(j):
            lcm = m_lcm(lms[i], lj)
            stats.pairs_generated += 1
            heapq.heappush(queue, (m_deg(lcm), order.key(lcm), i, j))

    queue: list = []
    for j in range(len(G)):
        push_pairs(j)

    done = set()
    while queue:
        deg, _, i, j = heapq.heappop(queue)
        if degree_cap is not None and deg > degree_cap:
            stats.pairs_pruned_cap += 1
            continue
        key = (i, j)
        done.add(key)
        li, lj = lms[i], lms[j]
        lcm = m_lcm(li, lj)
        if m_mul(li, lj) == lcm:  # product criterion: disjoint leading monomials
            stats.pairs_pruned_product += 1
            continue
        chained = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if not m_divides(lms[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                chained = True
                break
        if chained:
            stats.pairs_pruned_chain += 1
            continue
        stats.reductions += 1
        h = Polynomial(ring, _reduce_terms(s_polynomial(G[i], G[j], order).terms,
                                           G, lms, ring, order))
        if h.is_zero:
            stats.reductions_to_zero += 1
            continue
        h = h.monic(order)
        G.append(h)
        lms.append(h.leading_monomial(order))
        push_pairs(len(G) - 1)

    G = _reduce_basis(G, lms, ring, order)
    stats.basis_size = len(G)
    return GroebnerBasis(ring=ring, order=order, generators=tuple(G),
                         reduced=True, degree_cap=degree_cap, stats=stats)


def _reduce_basis(G: list, lms: list, ring: Ring, order: MonomialOrder) -> list:
    """Minimalize and inter-reduce a basis; output monic, sorted by leading
    monomial (increasing)."""
    # minimalize: drop any element whose leading monomial another one divides
    keep = []
    for i, li in enumerate(lms):
        redundant = False
        for j, lj in enumerate(lms):
            if i == j:
                continue
            if m_divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [G[i] for i in keep]
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)))
    # inter-reduce tails
    out = []
    min_lms = [g.leading_monomial(order) for g in minimal]
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        other_lms = min_lms[:i] + min_lms[i + 1:]
        if others:
            g = Polynomial(ring, _reduce_terms(g.terms, others, other_lms, ring, order))
        out.append(g.monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def zero_ideal_basis(ring: Ring, order: MonomialOrder = None) -> GroebnerBasis:
    """The (empty) Groebner basis of the zero ideal."""
    return GroebnerBasis(ring=ring, order=order or ring.order, generators=(),
                         reduced=True, stats=BuchbergerStats())


def groebner_basis(gens: Sequence[Polynomial], ring: Ring = None,
                   order: MonomialOrder = None, *,
                   degree_cap: Optional[int] = None) -> GroebnerBasis:
    """Like ``buchberger`` but tolerates an empty/zero generator list."""
    nz = [g for g in gens if not g.is_zero]
    if not nz:
        if ring is None:
            raise ValueError("need a ring to build the zero-ideal basis")
        return zero_ideal_basis(ring, order)
    return buchberger(nz, order, degree_cap=degree_cap)
