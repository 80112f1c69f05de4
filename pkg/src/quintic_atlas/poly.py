"""Exact coefficient fields, monomial orders, sparse polynomials and a text parser.

Coefficients are plain Python values (``fractions.Fraction`` over the rationals,
``int`` residues over a prime field); all arithmetic is routed through a field
object so the polynomial layer stays field-agnostic and exact.

Polynomial text grammar (EBNF)::

    polynomial := [ sign ] term { sign term }
    sign       := '+' | '-'
    term       := factor { '*' factor }
    factor     := base [ '^' natural ]
    base       := literal | variable | '(' polynomial ')'
    literal    := natural [ '/' natural ]      (* '/' only over the rationals *)
    variable   := letter { letter | digit | '_' }
    natural    := digit { digit }

Whitespace is ignored.  Printing is canonical (terms in decreasing ring order),
and ``parse(print(p)) == p`` for every polynomial.

All values in this module are immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union


class QuinticAtlasError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QuinticAtlasError):
    """Syntax or semantic error while parsing polynomial text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMismatchError(QuinticAtlasError):
    """Operands live in different rings (or different orders where it matters)."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rationals:
    """The field Q.  Elements are ``Fraction`` (lowest terms, positive denominator)."""

    char = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        return a / b

    def pow(self, a, e: int):
        return a ** e

    def random_element(self, rng, height: int = 9) -> Fraction:
        return Fraction(rng.randint(-height, height))

    def literal(self, numer: int, denom: int = 1) -> Fraction:
        return Fraction(numer, denom)

    def to_str(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return "Q"

    def __repr__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for a prime p.  Elements are ints in ``[0, p)``."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def char(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return (x.numerator % self.p) * self.inv(x.denominator % self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, e: int):
        return pow(a, e, self.p)

    def random_element(self, rng) -> int:
        return rng.randrange(self.p)

    def literal(self, numer: int, denom: int = 1) -> int:
        if denom != 1:
            raise ValueError("'/' literals require the rationals field")
        return numer % self.p

    def to_str(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return f"GF({self.p})"

    def __repr__(self) -> str:
        return f"GF({self.p})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field_spec(text: str) -> Field:
    """Parse a field description such as ``Q`` or ``GF(32003)``."""
    t = text.strip()
    if t in ("Q", "QQ", "Rationals"):
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        body = t[3:-1].strip()
        if not body.isdigit():
            raise ValueError(f"bad prime field spec {text!r}")
        return PrimeField(int(body))
    raise ValueError(f"unknown field spec {text!r}")


# ---------------------------------------------------------------------------
# monomials (exponent tuples) and orders
# ---------------------------------------------------------------------------

Monomial = tuple  # tuple[int, ...], length = ring variable count


def m_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def m_divides(a: Monomial, b: Monomial) -> bool:
    """True iff the monomial a divides b."""
    return all(x <= y for x, y in zip(a, b))


def m_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def m_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def m_deg(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class GrevLex:
    """Graded reverse lexicographic order."""

    def key(self, m: Monomial) -> tuple:
        # larger key == larger monomial; ties broken by the last nonzero
        # entry of the difference being negative
        return (sum(m),) + tuple(-e for e in reversed(m))

    def describe(self) -> str:
        return "grevlex"


@dataclass(frozen=True)
class Lex:
    """Pure lexicographic order (first variable dominant)."""

    def key(self, m: Monomial) -> tuple:
        return tuple(m)

    def describe(self) -> str:
        return "lex"


@dataclass(frozen=True)
class Block:
    """Elimination order: grevlex on the first ``split`` variables, then grevlex.

    Any monomial involving one of the first ``split`` variables is larger
    than any monomial in the remaining ones, so a Groebner basis w.r.t. this
    order computes the elimination ideal.
    """

    split: int

    def key(self, m: Monomial) -> tuple:
        s = self.split
        head, tail = m[:s], m[s:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))

    def describe(self) -> str:
        return f"block({self.split})"


MonomialOrder = Union[GrevLex, Lex, Block]

GREVLEX = GrevLex()


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """A polynomial ring: named variables over an exact field with a monomial order."""

    variables: tuple
    field: Field
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        if len(self.variables) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(self.field.one)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, {exps: c})

    def parse(self, src: str) -> "Polynomial":
        return parse_polynomial(src, self)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.variables, self.field, order)

    def __repr__(self) -> str:
        return f"Ring({','.join(self.variables)}; {self.field!r}; {self.order.describe()})"


def ring(names: str, field: Field, order: MonomialOrder = GREVLEX) -> Ring:
    """Convenience constructor: ``ring("x0 x1 x2", GF(32003))``."""
    return Ring(tuple(names.split()), field, order)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Sparse multivariate polynomial: a map from exponent tuple to nonzero coefficient.

    Instances are immutable; every operation returns a new canonical polynomial
    (no zero coefficients, no duplicate monomials).
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        # assumes ownership of ``terms`` and that it is already canonical
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring: Ring, items: Iterable) -> "Polynomial":
        field = ring.field
        acc: dict = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError("exponent vector length mismatch")
            c = field.coerce(coeff)
            if exps in acc:
                c = field.add(acc[exps], c)
            if c == field.zero:
                acc.pop(exps, None)
            else:
                acc[exps] = c
        return cls(ring, acc)

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        """Maximal term degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = None) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = None):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder = None, reverse: bool = True):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=reverse)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = field.add(out.get(m, field.zero), c)
            if v == field.zero:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        zero = field.zero
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                v = field.add(out.get(m, zero), field.mul(ca, cb))
                if v == zero:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.coerce(c)
        if c == field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_monomial(self, exps: Monomial, coeff=None) -> "Polynomial":
        """Multiply by ``coeff * x^exps`` (coeff defaults to 1)."""
        field = self.ring.field
        if coeff is None:
            return Polynomial(self.ring, {m_mul(m, exps): c for m, c in self.terms.items()})
        coeff = field.coerce(coeff)
        if coeff == field.zero:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {m_mul(m, exps): field.mul(c, coeff) for m, c in self.terms.items()})

    def monic(self, order: MonomialOrder = None) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.leading_coefficient(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- calculus / substitution ------------------------------------------

    def derivative(self, i: int) -> "Polynomial":
        field = self.ring.field
        out: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            nm = m[:i] + (e - 1,) + m[i + 1:]
            v = field.add(out.get(nm, field.zero), field.mul(c, field.coerce(e)))
            if v == field.zero:
                out.pop(nm, None)
            else:
                out[nm] = v
        return Polynomial(self.ring, out)

    def evaluate(self, point: Sequence):
        """Evaluate at a point (sequence of field elements)."""
        field = self.ring.field
        vals = [field.coerce(v) for v in point]
        if len(vals) != self.ring.nvars:
            raise ValueError("point length mismatch")
        acc = field.zero
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = field.mul(t, field.pow(v, e))
            acc = field.add(acc, t)
        return acc

    def substitute(self, mapping: Mapping[int, "Polynomial"],
                   target: Ring = None) -> "Polynomial":
        """Substitute polynomials for variables (by index).

        Variables absent from ``mapping`` map to the variable of the same
        index in ``target`` (default: this ring).
        """
        tgt = target or self.ring
        field = tgt.field
        cache: dict = {}

        def power(i: int, e: int) -> Polynomial:
            k = (i, e)
            if k not in cache:
                base = mapping.get(i)
                if base is None:
                    base = tgt.var(i)
                cache[k] = base ** e
            return cache[k]

        acc = tgt.zero()
        for m, c in self.terms.items():
            t = tgt.const(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            acc = acc + t
        return acc

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<poly {format_polynomial(self)}>"


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def _format_monomial(ring: Ring, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form: terms in decreasing ring order; fixed point of parse."""
    if p.is_zero:
        return "0"
    ring = p.ring
    rational = isinstance(ring.field, Rationals)
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        if rational and c < 0:
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        mon = _format_monomial(ring, m)
        if not mon:
            body = str(mag)
        elif mag == ring.field.one:
            body = mon
        else:
            body = f"{mag}*{mon}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_SYMBOLS = set("+-*^()/")


def _tokenize(src: str) -> Iterator[tuple]:
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            yield (ch, ch, i)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            yield ("int", src[i:j], i)
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            yield ("name", src[i:j], i)
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    yield ("end", "", n)


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.ring = ring
        self.tokens = list(_tokenize(src))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        p = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return p

    def expression(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            base = base ** int(tok[1])
        return base

    def base(self) -> Polynomial:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "int":
            numer = int(value)
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.expect("int")
                denom = int(dtok[1])
                if denom == 0:
                    raise ParseError("division by zero literal", dtok[2])
                if not isinstance(self.ring.field, Rationals):
                    raise ParseError("'/' literals require the rationals field", dtok[2])
                return self.ring.const(Fraction(numer, denom))
            return self.ring.const(self.ring.field.literal(numer))
        if kind == "name":
            try:
                idx = self.ring.index(value)
            except KeyError:
                raise ParseError(f"unknown variable {value!r}", pos) from None
            return self.ring.var(idx)
        if kind == "(":
            p = self.expression()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_polynomial(src: str, ring: Ring) -> Polynomial:
    """Parse polynomial text into a canonical ``Polynomial`` in ``ring``."""
    return _Parser(src, ring).parse()
