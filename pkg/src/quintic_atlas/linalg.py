"""Exact linear algebra over the coefficient fields.

Two engines:

* a dense, numpy-vectorized row reduction over GF(p).  Entries stay below
  ``ncols * p**2 < 2**63`` throughout, so int64 arithmetic is exact; only the
  pivot row and the pivot column are reduced mod p during elimination.
* a sparse dict-of-columns elimination over any field (used for Q, where
  coefficients are ``Fraction``).

On top of these sit the degree-t Macaulay matrix of an ideal and the
rank-based Hilbert function oracle, which is kept independent of the
Groebner-basis route on purpose.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

import numpy as np

from .poly import Polynomial, PrimeField, Rationals, Ring, m_mul


# ---------------------------------------------------------------------------
# dense mod-p elimination (numpy)
# ---------------------------------------------------------------------------

def rank_modp(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix mod p (exact, in-place on a copy)."""
    m = np.array(matrix, dtype=np.int64)
    if m.size == 0:
        return 0
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = m[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] %= p
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        if r + 1 < rows:
            factors = m[r + 1:, c] % p
            live = np.nonzero(factors)[0]
            if live.size:
                # exact: |entry| <= cols * p^2 << 2^63 between reductions
                m[r + 1 + live] -= np.outer(factors[live], m[r])
        r += 1
    return r


def echelon_modp(matrix: np.ndarray, p: int):
    """Reduced row echelon form mod p.

    Returns ``(rank, rref, pivot_columns)`` with ``rref`` containing the
    ``rank`` nonzero rows, entries in ``[0, p)``.
    """
    m = np.array(matrix, dtype=np.int64) % p
    if m.ndim != 2 or m.size == 0:
        cols = m.shape[1] if m.ndim == 2 else 0
        return 0, np.zeros((0, cols), dtype=np.int64), []
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        col = m[r:, c] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] %= p
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        factors = m[:, c] % p
        factors[r] = 0
        live = np.nonzero(factors)[0]
        if live.size:
            m[live] -= np.outer(factors[live], m[r])
            m[live] %= p
        pivots.append(c)
        r += 1
    return r, m[:r] % p, pivots


# ---------------------------------------------------------------------------
# generic sparse elimination (any field)
# ---------------------------------------------------------------------------

def rank_sparse(field, rows: Iterable[dict]) -> int:
    """Rank of a matrix given as sparse rows ``{col: coeff}`` over ``field``."""
    zero = field.zero
    pivots: dict = {}  # col -> normalized row
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v != zero}
        while row:
            lead = min(row)  # smallest column index as pivot position
            piv = pivots.get(lead)
            if piv is None:
                inv = field.inv(row[lead])
                row = {c: field.mul(v, inv) for c, v in row.items()}
                pivots[lead] = row
                rank += 1
                break
            f = row.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = field.sub(row.get(c, zero), field.mul(f, v))
                if nv == zero:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return rank


def rank_dense(field, rows: Sequence[Sequence]) -> int:
    """Rank of a dense matrix over any field (fraction-style elimination)."""
    sparse = [{j: field.coerce(v) for j, v in enumerate(r) if field.coerce(v) != field.zero}
              for r in rows]
    return rank_sparse(field, sparse)


def matrix_rank(field, rows: Sequence[Sequence]) -> int:
    """Exact rank dispatcher: numpy mod p, sparse Fractions over Q."""
    nrows = len(rows)
    if nrows == 0:
        return 0
    if isinstance(field, PrimeField):
        m = np.array([[field.coerce(v) for v in r] for r in rows], dtype=np.int64)
        return rank_modp(m, field.p)
    return rank_dense(field, rows)


def is_invertible(field, rows: Sequence[Sequence]) -> bool:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return matrix_rank(field, rows) == n


# ---------------------------------------------------------------------------
# Macaulay matrices and the rank-based Hilbert function oracle
# ---------------------------------------------------------------------------

def monomials_of_degree(nvars: int, degree: int) -> list:
    """All exponent tuples of total degree ``degree`` (deterministic order)."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def degree_basis(ring: Ring, degree: int) -> list:
    """Degree-``degree`` monomial basis sorted decreasingly by the ring order."""
    mons = monomials_of_degree(ring.nvars, degree)
    mons.sort(key=ring.order.key, reverse=True)
    return mons


def macaulay_rows(generators: Sequence[Polynomial], ring: Ring, degree: int,
                  columns: dict) -> list:
    """Sparse coefficient rows of all monomial multiples of ``generators``
    landing in total degree ``degree``."""
    rows = []
    for g in generators:
        if g.is_zero:
            continue
        if not g.is_homogeneous():
            raise ValueError("macaulay_rows requires homogeneous generators")
        d = g.total_degree()
        if d > degree:
            continue
        for mult in monomials_of_degree(ring.nvars, degree - d):
            rows.append({columns[m_mul(m, mult)]: c for m, c in g.terms.items()})
    return rows


def graded_piece_dimension(generators: Sequence[Polynomial], ring: Ring,
                           degree: int) -> int:
    """dim of the degree-``degree`` graded piece of the ideal spanned by
    ``generators`` — by exact Macaulay-matrix rank, no Groebner bases."""
    basis = degree_basis(ring, degree)
    columns = {m: j for j, m in enumerate(basis)}
    rows = macaulay_rows(generators, ring, degree, columns)
    if not rows:
        return 0
    if isinstance(ring.field, PrimeField):
        mat = np.zeros((len(rows), len(basis)), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, c in row.items():
                mat[i, j] = c
        return rank_modp(mat, ring.field.p)
    return rank_sparse(ring.field, rows)


def hilbert_function_macaulay(generators: Sequence[Polynomial], ring: Ring,
                              degree: int) -> int:
    """HF(S/I, degree) = (#monomials) - rank(Macaulay block).

    This is the independent oracle used to cross-check the standard-monomial
    Hilbert function; it never touches Groebner machinery.
    """
    total = comb(degree + ring.nvars - 1, ring.nvars - 1)
    return total - graded_piece_dimension(generators, ring, degree)


def graded_piece_basis(generators: Sequence[Polynomial], ring: Ring,
                       degree: int):
    """Row-reduced basis of the degree-``degree`` piece of the ideal.

    Returns ``(polynomials, column_monomials)``; the polynomials are the
    nonzero rows of the reduced echelon form, so the basis is canonical.
    """
    basis = degree_basis(ring, degree)
    columns = {m: j for j, m in enumerate(basis)}
    rows = macaulay_rows(generators, ring, degree, columns)
    field = ring.field
    if not rows:
        return [], basis
    if isinstance(field, PrimeField):
        mat = np.zeros((len(rows), len(basis)), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, c in row.items():
                mat[i, j] = c
        rank, rref, _ = echelon_modp(mat, field.p)
        polys = []
        for i in range(rank):
            terms = {basis[j]: int(rref[i, j]) for j in np.nonzero(rref[i])[0]}
            polys.append(Polynomial(ring, terms))
        return polys, basis
    # generic (Q) path: Gauss-Jordan over sparse rows
    zero = field.zero
    pivots: dict = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v != zero}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = field.inv(row[lead])
                pivots[lead] = {c: field.mul(v, inv) for c, v in row.items()}
                break
            f = row.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = field.sub(row.get(c, zero), field.mul(f, v))
                if nv == zero:
                    row.pop(c, None)
                else:
                    row[c] = nv
    # back-substitute for a reduced basis
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for other_lead, other in pivots.items():
            if other_lead >= lead or lead not in other:
                continue
            f = other.pop(lead)
            for c, v in row.items():
                if c == lead:
                    continue
                nv = field.sub(other.get(c, zero), field.mul(f, v))
                if nv == zero:
                    other.pop(c, None)
                else:
                    other[c] = nv
    polys = []
    for lead in sorted(pivots):
        row = pivots[lead]
        polys.append(Polynomial(ring, {basis[c]: v for c, v in row.items()}))
    return polys, basis
