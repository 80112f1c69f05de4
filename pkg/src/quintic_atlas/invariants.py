"""Hilbert functions, Hilbert polynomials and the numerical invariants
(dimension n, ambient N, degree d, Delta-genus, sectional genus g).

The Hilbert function counts standard monomials w.r.t. a grevlex Groebner
basis, degree by degree (a monomial is standard iff no leading monomial
divides it, and every standard monomial of degree t+1 is a variable multiple
of one of degree t, so the levels can be grown incrementally).  The Hilbert
polynomial is recovered by exact interpolation on stabilized values: the
smallest degree whose interpolant matches at least two extra earlier values
wins.  Dimension is deg HP, degree is (leading coefficient) * (dim)!.

h^0(O_X(m)) is approximated by HF(S/I_X, m) throughout; this is exact for
m = 1 under linear normality and for the arithmetically Cohen-Macaulay
varieties this package constructs in m <= 3.  Sectional genus of a curve is
the arithmetic genus 1 - HP(0).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from . import linalg
from .ideal_ops import Ideal, hyperplane_slice, irrelevant_ideal, saturate
from .poly import QuinticAtlasError, m_divides

log = logging.getLogger("quintic_atlas")

DEFAULT_DEGREE_BUDGET = 12
STABILIZATION_MARGIN = 2


class BudgetExceededError(QuinticAtlasError):
    """The Hilbert function did not stabilize within the degree budget."""


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values at degrees 0..D, plus the Hilbert polynomial.

    ``hp_coeffs`` lists exact rational coefficients, constant term first; the
    empty tuple encodes the zero polynomial (empty projective scheme).  When
    only HF values were requested ``hp_coeffs`` is None.
    """

    hf_values: tuple
    hp_coeffs: Optional[tuple] = None
    stabilization_degree: Optional[int] = None

    def hf(self, t: int) -> int:
        return self.hf_values[t]

    @property
    def max_computed_degree(self) -> int:
        return len(self.hf_values) - 1

    @property
    def dim(self) -> int:
        """Projective dimension: deg HP, with -1 for the empty scheme."""
        if self.hp_coeffs is None:
            raise ValueError("Hilbert polynomial was not computed")
        return len(self.hp_coeffs) - 1

    @property
    def degree(self) -> int:
        """(leading coefficient of HP) * (dim)!; 0 for the empty scheme."""
        if self.dim < 0:
            return 0
        d = self.hp_coeffs[-1] * factorial(self.dim)
        if d.denominator != 1:
            raise ValueError(f"non-integral degree {d} (corrupt Hilbert data)")
        return int(d)

    def hp(self, t: int) -> Fraction:
        if self.hp_coeffs is None:
            raise ValueError("Hilbert polynomial was not computed")
        acc = Fraction(0)
        power = Fraction(1)
        for c in self.hp_coeffs:
            acc += c * power
            power *= t
        return acc


@dataclass(frozen=True)
class VarietyInvariants:
    """The paper's numeric tuple for an embedded variety."""

    n: int
    N: int
    d: int
    delta: int
    g: int
    codim: int
    nondegenerate: bool
    h0_I: dict = dc_field(compare=False, default_factory=dict)
    hilbert: Optional[HilbertData] = dc_field(compare=False, default=None)

    def as_tuple(self) -> tuple:
        return (self.n, self.N, self.d, self.delta, self.g)

    def __str__(self):
        return (f"n={self.n} N={self.N} d={self.d} delta={self.delta} "
                f"g={self.g} codim={self.codim} "
                f"nondegenerate={'true' if self.nondegenerate else 'false'}")


# ---------------------------------------------------------------------------
# standard-monomial counting
# ---------------------------------------------------------------------------

class _StandardMonomialLevels:
    """Grow the set of standard monomials degree by degree."""

    def __init__(self, leading_monomials: Sequence[tuple], nvars: int):
        # keep only minimal leading monomials; order is irrelevant for counting
        minimal = []
        for lm in sorted(leading_monomials, key=sum):
            if not any(m_divides(q, lm) for q in minimal):
                minimal.append(lm)
        self.lms = minimal
        self.nvars = nvars
        self.degree = -1
        self.level: set = set()

    def _standard(self, m: tuple) -> bool:
        for lm in self.lms:
            if m_divides(lm, m):
                return False
        return True

    def advance(self) -> int:
        """Move to the next degree; returns HF at that degree."""
        self.degree += 1
        if self.degree == 0:
            origin = (0,) * self.nvars
            self.level = {origin} if self._standard(origin) else set()
            return len(self.level)
        nxt = set()
        for m in self.level:
            for i in range(self.nvars):
                u = m[:i] + (m[i] + 1,) + m[i + 1:]
                if u not in nxt and self._standard(u):
                    nxt.add(u)
        self.level = nxt
        return len(nxt)


def _levels_for(ideal: Ideal, budget: int) -> _StandardMonomialLevels:
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert data requires a homogeneous ideal")
    if ideal.is_zero:
        return _StandardMonomialLevels([], ideal.ring.nvars)
    gb = ideal.gb_truncated(budget)
    return _StandardMonomialLevels(gb.leading_monomials(), ideal.ring.nvars)


def hilbert_function(i: Ideal, max_degree: int) -> HilbertData:
    """HF(S/I, t) for t = 0..max_degree (values only, no polynomial)."""
    levels = _levels_for(i, max_degree)
    values = tuple(levels.advance() for _ in range(max_degree + 1))
    return HilbertData(hf_values=values)


# ---------------------------------------------------------------------------
# Hilbert polynomial by exact interpolation on stabilized values
# ---------------------------------------------------------------------------

def _newton_interpolant(values: Sequence[int], x0: int) -> tuple:
    """Coefficients (constant first) of the polynomial through
    ``(x0 + k, values[k])``, via Newton forward differences."""
    diffs = [Fraction(v) for v in values]
    leading = [diffs[0]]
    for _ in range(len(values) - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        leading.append(diffs[0])
    coeffs = [Fraction(0)] * len(values)
    basis = [Fraction(1)]  # product (t - x0)(t - x0 - 1)...
    for k, d in enumerate(leading):
        scale = d / factorial(k)
        for j, b in enumerate(basis):
            coeffs[j] += scale * b
        # multiply basis by (t - (x0 + k))
        shift = Fraction(-(x0 + k))
        nxt = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            nxt[j] += b * shift
            nxt[j + 1] += b
        basis = nxt
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs == [Fraction(0)]:
        return ()
    return tuple(coeffs)


def _eval_coeffs(coeffs: tuple, t: int) -> Fraction:
    acc = Fraction(0)
    power = Fraction(1)
    for c in coeffs:
        acc += c * power
        power *= t
    return acc


def _try_detect(values: Sequence[int], margin: int):
    """Find the smallest-degree interpolant of a tail of ``values`` that also
    matches at least ``margin`` earlier values.  Returns (coeffs, s) or None."""
    T = len(values) - 1
    for r in range(0, T + 1):
        x0 = T - r
        if x0 < margin:  # not enough earlier points to confirm
            break
        coeffs = _newton_interpolant(values[x0:], x0)
        s = x0
        t = x0 - 1
        while t >= 0 and _eval_coeffs(coeffs, t) == values[t]:
            s = t
            t -= 1
        if x0 - s >= margin:
            return coeffs, s
    return None


def hilbert_polynomial(i: Ideal, budget: int = DEFAULT_DEGREE_BUDGET) -> HilbertData:
    """Full Hilbert data: values at degrees 0..budget, the interpolated
    Hilbert polynomial, and the stabilization degree.

    The whole window is computed before fitting: accepting a fit early is
    unsound, because values can follow a polynomial for a while and bend
    later (the window must also clear every generator degree).
    """
    if budget < 4:
        raise ValueError("degree budget must be at least 4")
    if i._hilbert is not None and i._hilbert.hp_coeffs is not None \
            and i._hilbert.max_computed_degree >= budget:
        return i._hilbert
    levels = _levels_for(i, budget)
    max_lm_degree = max((sum(lm) for lm in levels.lms), default=0)
    values = [levels.advance() for _ in range(budget + 1)]
    found = None
    if budget >= max_lm_degree + STABILIZATION_MARGIN:
        found = _try_detect(values, STABILIZATION_MARGIN)
    if found is None:
        raise BudgetExceededError(
            f"Hilbert function did not stabilize within degree budget {budget}; "
            f"values: {values}")
    coeffs, s = found
    data = HilbertData(hf_values=tuple(values), hp_coeffs=coeffs,
                       stabilization_degree=s)
    i._hilbert = data
    return data


# ---------------------------------------------------------------------------
# variety invariants
# ---------------------------------------------------------------------------

def _ensure_saturated(i: Ideal, caller: str) -> Ideal:
    if i.saturated is True:
        return i
    log.warning("%s: input not known saturated; saturating first", caller)
    fixed, _ = saturate(i, irrelevant_ideal(i.ring))
    return fixed


def _slice_seed(seed: int, k: int) -> int:
    return seed * 100003 + 17 * k + 1


def slice_to_dimension(i: Ideal, target_dim: int, *, seed: int = 0,
                       retries: int = 8,
                       budget: int = DEFAULT_DEGREE_BUDGET) -> list:
    """Chain of generic hyperplane sections X = X_n, X_{n-1}, ..., X_target.

    Returns the chain including the input; each step is validated exactly.
    """
    chain = [i]
    current = i
    dim = hilbert_polynomial(current, budget=budget).dim
    k = 0
    while dim > target_dim:
        current = hyperplane_slice(current, _slice_seed(seed, k),
                                   retries=retries, budget=budget)
        chain.append(current)
        dim -= 1
        k += 1
    return chain


def compute_invariants(i: Ideal, *, seed: int = 0, retries: int = 8,
                       budget: int = DEFAULT_DEGREE_BUDGET,
                       assume_saturated: bool = False) -> VarietyInvariants:
    """All invariants of the projective scheme cut out by a saturated
    homogeneous ideal of dimension >= 1.

    The sectional genus comes from n-1 generic hyperplane sections followed by
    the arithmetic genus 1 - HP(0) of the resulting curve.
    """
    if not i.is_homogeneous():
        raise ValueError("invariants require a homogeneous ideal")
    if not assume_saturated:
        i = _ensure_saturated(i, "compute_invariants")
    data = hilbert_polynomial(i, budget=budget)
    n = data.dim
    if n < 1:
        raise ValueError(f"invariants require dimension >= 1 (got {n})")
    d = data.degree
    N = i.ring.nvars - 1
    hf1 = data.hf(1)
    delta = n + d - hf1
    nondeg = hf1 == N + 1
    h0_i = {m: comb(N + m, m) - data.hf(m) for m in (1, 2, 3)}
    if n == 1:
        curve_data = data
    else:
        chain = slice_to_dimension(i, 1, seed=seed, retries=retries, budget=budget)
        curve_data = hilbert_polynomial(chain[-1], budget=budget)
    g_frac = 1 - curve_data.hp(0)
    if g_frac.denominator != 1:
        raise QuinticAtlasError(f"non-integral sectional genus {g_frac}")
    return VarietyInvariants(n=n, N=N, d=d, delta=delta, g=int(g_frac),
                             codim=N - n, nondegenerate=nondeg,
                             h0_I=h0_i, hilbert=data)


# ---------------------------------------------------------------------------
# cohomology-style bounds for the Delta = g = 2 branch
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundRow:
    claim: str
    verdict: bool
    numbers: str


@dataclass(frozen=True)
class CohomologyBoundsReport:
    applicable: bool
    reason: str
    rows: tuple = ()

    @property
    def passed(self) -> bool:
        return self.applicable and all(r.verdict for r in self.rows)

    def __str__(self):
        if not self.applicable:
            return f"n/a ({self.reason})"
        lines = [f"{'pass' if r.verdict else 'FAIL'}  {r.claim}  [{r.numbers}]"
                 for r in self.rows]
        return "\n".join(lines)


def check_cohomology_bounds(i: Ideal, *, seed: int = 0, retries: int = 8,
                            budget: int = DEFAULT_DEGREE_BUDGET,
                            invariants: VarietyInvariants = None,
                            assume_saturated: bool = False) -> CohomologyBoundsReport:
    """Evaluate the quadratic/cubic section bounds, the ideal-sheaf bounds
    (dim I_2 >= 1, dim I_3 >= n+5) and the curve-section constants
    HF(1), HF(2), HF(3) = 4, 9, 14, on a degree-5, Delta = g = 2 input.

    HF values stand in for h^0 throughout (see module docstring); the report
    is evaluation-only and never raises on failed bounds.
    """
    inv = invariants or compute_invariants(i, seed=seed, retries=retries,
                                           budget=budget,
                                           assume_saturated=assume_saturated)
    if not (inv.d == 5 and inv.delta == 2 and inv.g == 2):
        return CohomologyBoundsReport(
            applicable=False,
            reason=f"branch requires d=5, delta=2, g=2; got d={inv.d}, "
                   f"delta={inv.delta}, g={inv.g}")
    n = inv.n
    chain = slice_to_dimension(i, 1, seed=seed, retries=retries, budget=budget)
    # chain[j] has dimension n - j
    hf = []
    for member in chain:
        data = hilbert_polynomial(member, budget=budget)
        hf.append([data.hf(m) for m in range(4)])
    curve = hf[-1]
    rows = []
    h1, h2, h3 = curve[1], curve[2], curve[3]
    rows.append(BoundRow(
        claim="curve section constants h0(1),h0(2),h0(3) = 4,9,14",
        verdict=(h1, h2, h3) == (4, 9, 14),
        numbers=f"h0(1)={h1} h0(2)={h2} h0(3)={h3}"))
    for k in range(2, n + 1):
        hk = hf[n - k]  # the k-dimensional member of the chain
        alpha_rhs = k * (k - 1) // 2 + (k - 1) * h1 + h2
        rows.append(BoundRow(
            claim=f"quadratic bound at k={k}",
            verdict=hk[2] <= alpha_rhs,
            numbers=f"h0(X_{k}(2))={hk[2]} <= {alpha_rhs}"))
        beta_rhs = (k * (k * k - 1)) // 6 + (k * (k - 1) // 2) * h1 \
            + (k - 1) * h2 + h3
        rows.append(BoundRow(
            claim=f"cubic bound at k={k}",
            verdict=hk[3] <= beta_rhs,
            numbers=f"h0(X_{k}(3))={hk[3]} <= {beta_rhs}"))
    dim_i2 = inv.h0_I[2]
    dim_i3 = inv.h0_I[3]
    rows.append(BoundRow(claim="ideal sheaf bound dim I_2 >= 1",
                         verdict=dim_i2 >= 1, numbers=f"dim I_2={dim_i2}"))
    rows.append(BoundRow(claim="ideal sheaf bound dim I_3 >= n+5",
                         verdict=dim_i3 >= n + 5,
                         numbers=f"dim I_3={dim_i3} n+5={n + 5}"))
    return CohomologyBoundsReport(applicable=True, reason="", rows=tuple(rows))


# re-exported oracle (kept in linalg, independent of the Groebner route)
hilbert_function_macaulay = linalg.hilbert_function_macaulay
