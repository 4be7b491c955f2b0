"""Exact arithmetic over Q and real quadratic fields Q(sqrt m).

Elements are stored as pairs of :class:`fractions.Fraction` and never touch
floating point.  Everything that asks "is this a square in k?" lives here as
well, because the geometric modules only ever need square-class equality.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm
from numbers import Rational
from typing import Union

from sympy import isprime

from .errors import DomainError, FactorizationIncomplete, FieldMismatch

__all__ = [
    "Field",
    "Q",
    "Scalar",
    "SquareClass",
    "DEFAULT_FACTOR_BOUND",
    "factor_bound",
    "factorize",
    "ord_p",
    "squarefree_part",
    "rational_sqrt",
    "is_square_in_k",
    "sqrt_in_k",
    "square_class_equiv",
    "sqrt_ratio",
    "norm_conj",
    "is_algebraic_integer",
    "canonical_rep",
    "format_scalar",
    "parse_field",
    "parse_scalar",
    "format_rational",
]

DEFAULT_FACTOR_BOUND = 10**6


def factor_bound() -> int:
    """Trial-division bound, overridable through ``FACTOR_BOUND``."""
    env = os.environ.get("FACTOR_BOUND")
    return int(env) if env else DEFAULT_FACTOR_BOUND


# ---------------------------------------------------------------------------
# integer helpers


@lru_cache(maxsize=4096)
def _factorize(n: int, bound: int) -> tuple[tuple[int, int], ...]:
    factors: list[tuple[int, int]] = []
    r = n

    def strip(p: int) -> None:
        nonlocal r
        e = 0
        while r % p == 0:
            r //= p
            e += 1
        if e:
            factors.append((p, e))

    strip(2)
    strip(3)
    p, step = 5, 2
    while p * p <= r and p <= bound:
        strip(p)
        p += step
        step = 6 - step
    if r > 1:
        if p * p > r:
            factors.append((r, 1))
        else:
            raise FactorizationIncomplete(n, r, bound)
    return tuple(sorted(factors))


def factorize(n: int, bound: int | None = None) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division up to ``bound``.

    Raises :class:`FactorizationIncomplete` when a cofactor survives that is
    too large to be certified prime by the bound.
    """
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor 0")
    return dict(_factorize(n, factor_bound() if bound is None else bound))


def _as_fraction(q) -> Fraction:
    if isinstance(q, Scalar):
        if q.v:
            raise DomainError(f"{q} is not rational")
        return q.u
    if isinstance(q, (int, Fraction)) or isinstance(q, Rational):
        return Fraction(q)
    raise TypeError(f"expected a rational number, got {type(q).__name__}")


def ord_p(q, p: int) -> int:
    """The p-adic valuation of a nonzero rational ``q``."""
    q = _as_fraction(q)
    if q == 0:
        raise DomainError("valuation of 0 is undefined")
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    v = 0
    num, den = abs(q.numerator), q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q) -> Fraction | None:
    """Nonnegative rational square root of ``q``, or ``None``."""
    q = _as_fraction(q)
    if q < 0:
        return None
    a = _isqrt_exact(q.numerator)
    b = _isqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def squarefree_part(q, bound: int | None = None) -> int:
    """The signed squarefree integer s with ``q/s`` a rational square."""
    q = _as_fraction(q)
    if q == 0:
        raise DomainError("squarefree part of 0 is undefined")
    n = abs(q.numerator * q.denominator)
    sign = -1 if q < 0 else 1
    if _isqrt_exact(n) is not None:
        return sign
    try:
        fac = factorize(n, bound)
    except FactorizationIncomplete as exc:
        # a leftover perfect square contributes nothing to the square class
        r = exc.cofactor
        if _isqrt_exact(r) is None:
            raise
        fac = factorize(n // r, bound)
    s = 1
    for p, e in fac.items():
        if e % 2:
            s *= p
    return sign * s


# ---------------------------------------------------------------------------
# fields and scalars


@dataclass(frozen=True)
class Field:
    """Q when ``m`` is None, otherwise Q(sqrt m) with m > 1 squarefree."""

    m: int | None = None

    def __post_init__(self):
        if self.m is not None:
            if not isinstance(self.m, int) or self.m <= 1:
                raise DomainError(f"Q(sqrt {self.m}) is not a real quadratic field")
            if squarefree_part(self.m) != self.m:
                raise DomainError(f"{self.m} is not squarefree")

    @property
    def is_rational(self) -> bool:
        return self.m is None

    def __str__(self) -> str:
        return "Q" if self.m is None else f"Q(sqrt {self.m})"

    def __call__(self, u=0, v=0) -> Scalar:
        return Scalar(u, v, self)

    @property
    def sqrt(self) -> Scalar:
        """The generator sqrt(m)."""
        if self.m is None:
            raise DomainError("Q has no quadratic generator")
        return Scalar(0, 1, self)


Q = Field()

Number = Union[int, Fraction, "Scalar"]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class Scalar:
    """An element u + v*sqrt(m) of a field ``Field(m)``; v is 0 over Q."""

    __slots__ = ("u", "v", "field")

    def __init__(self, u=0, v=0, field: Field = Q):
        u = _as_fraction(u)
        v = _as_fraction(v)
        if field.is_rational and v != 0:
            raise DomainError("nonzero sqrt-part over Q")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, 0, self.field)
        return NotImplemented

    def to_field(self, field: Field) -> Scalar:
        """Re-tag this element in ``field``; only rational elements may move."""
        if field == self.field:
            return self
        if self.v != 0:
            raise FieldMismatch(f"{self} does not lie in {field}")
        return Scalar(self.u, 0, field)

    @property
    def m(self) -> int:
        return self.field.m or 0

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.u, -self.v, self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.u - o.u, self.v - o.v, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self.m
        return Scalar(
            self.u * o.u + m * self.v * o.v, self.u * o.v + self.v * o.u, self.field
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.u * self.u - self.m * self.v * self.v

    def conj(self) -> Scalar:
        return Scalar(self.u, -self.v, self.field)

    def trace(self) -> Fraction:
        return 2 * self.u

    def inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in exact field")
        return Scalar(self.u / n, -self.v / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Scalar(1, 0, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- order and equality -------------------------------------------------

    def sign(self) -> int:
        su, sv = _sgn(self.u), _sgn(self.v)
        if sv == 0 or su == sv:
            return su or sv
        if su == 0:
            return sv
        # opposite signs: whichever of u^2, m v^2 is larger wins
        return su if self.u * self.u > self.m * self.v * self.v else sv

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return (self.u, self.v, self.field) == (other.u, other.v, other.field)
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.field.m))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare Scalar with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        # display only; never used in decisions
        return float(self.u) + float(self.v) * self.m**0.5

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r}, {self.field})"


# ---------------------------------------------------------------------------
# square classes


def _in_field(alpha, k: Field) -> Scalar:
    if not isinstance(alpha, Scalar):
        return Scalar(alpha, 0, k)
    return alpha.to_field(k)


def sqrt_in_k(alpha, k: Field | None = None) -> Scalar | None:
    """The nonnegative square root of ``alpha`` inside ``k`` if there is one."""
    if k is None:
        k = alpha.field if isinstance(alpha, Scalar) else Q
    a = _in_field(alpha, k)
    if not a:
        return Scalar(0, 0, k)
    if a.sign() < 0:
        return None
    if k.is_rational:
        r = rational_sqrt(a.u)
        return None if r is None else Scalar(r, 0, k)
    m = k.m
    if a.v == 0:
        r = rational_sqrt(a.u)
        if r is not None:
            return Scalar(r, 0, k)
        r = rational_sqrt(a.u / m)
        return None if r is None else Scalar(0, r, k)
    # beta = x + y sqrt(m): u = x^2 + m y^2, v = 2xy, N(alpha) = (x^2 - m y^2)^2
    t = rational_sqrt(a.norm())
    if t is None:
        return None
    for cand in ((a.u + t) / 2, (a.u - t) / 2):
        x = rational_sqrt(cand)
        if not x:
            continue
        beta = Scalar(x, a.v / (2 * x), k)
        if beta * beta == a:
            return abs(beta)
    return None


def is_square_in_k(alpha, k: Field | None = None) -> bool:
    return sqrt_in_k(alpha, k) is not None


def _nonzero(alpha, k: Field) -> Scalar:
    a = _in_field(alpha, k)
    if not a:
        raise DomainError("square classes are defined for nonzero elements only")
    return a


def square_class_equiv(alpha, beta, k: Field | None = None) -> bool:
    """True iff alpha and beta agree modulo nonzero squares of k."""
    if k is None:
        k = next((x.field for x in (alpha, beta) if isinstance(x, Scalar)), Q)
    a, b = _nonzero(alpha, k), _nonzero(beta, k)
    return is_square_in_k(a * b, k)


def sqrt_ratio(alpha, beta, k: Field | None = None) -> Scalar | None:
    """The positive gamma in k with gamma^2 = alpha/beta, or None."""
    if k is None:
        k = next((x.field for x in (alpha, beta) if isinstance(x, Scalar)), Q)
    a, b = _nonzero(alpha, k), _nonzero(beta, k)
    return sqrt_in_k(a / b, k)


def norm_conj(alpha: Scalar) -> tuple[Scalar, Fraction]:
    """(conjugate, norm) of an element of a quadratic field."""
    if not isinstance(alpha, Scalar) or alpha.field.is_rational:
        raise DomainError("conjugate and norm need an element of Q(sqrt m)")
    return alpha.conj(), alpha.norm()


def is_algebraic_integer(alpha: Scalar) -> bool:
    """Membership in the ring of integers: trace and norm are integers."""
    if alpha.field.is_rational:
        return alpha.u.denominator == 1
    return alpha.trace().denominator == 1 and alpha.norm().denominator == 1


@dataclass(frozen=True, eq=False)
class SquareClass:
    """The class of a nonzero element modulo k^{x2}."""

    field: Field
    representative: Scalar

    @classmethod
    def of(cls, alpha, k: Field | None = None) -> SquareClass:
        if k is None:
            k = alpha.field if isinstance(alpha, Scalar) else Q
        return cls(k, _nonzero(alpha, k))

    def canonical(self) -> Scalar:
        """Squarefree integer over Q; over Q(sqrt m) see :func:`canonical_rep`."""
        return canonical_rep(self.representative, self.field)

    def __eq__(self, other):
        if not isinstance(other, SquareClass):
            return NotImplemented
        if self.field != other.field:
            return False
        return square_class_equiv(self.representative, other.representative, self.field)

    def __hash__(self):
        if self.field.is_rational:
            return hash(squarefree_part(self.representative.u))
        return hash(self.field)

    def __str__(self) -> str:
        return str(self.canonical())


def canonical_rep(alpha, k: Field) -> Scalar:
    """A stable representative of the square class of ``alpha``.

    Over Q this is the signed squarefree integer.  Over Q(sqrt m) a rational
    representative is used when the class contains one (the smaller of the
    two squarefree candidates s and s*m/gcd(s,m)^2); otherwise the element is
    scaled by a square integer into the ring Z[sqrt m].
    """
    a = _nonzero(alpha, k)
    if k.is_rational:
        return Scalar(squarefree_part(a.u), 0, k)
    m = k.m
    cands: list[Fraction] = []
    if a.v == 0:
        cands.append(a.u)
    else:
        t = rational_sqrt(a.norm())
        if t is not None:
            cands += [(a.u + t) * 2, (a.u - t) * 2]
    for c in cands:
        if c == 0:
            continue
        s = squarefree_part(c)
        if not is_square_in_k(a / s, k):
            continue
        g = gcd(abs(s), m)
        alt = s * m // (g * g)
        return Scalar(min(s, alt, key=abs), 0, k)
    den = lcm(a.u.denominator, a.v.denominator)
    return a * (den * den)


# ---------------------------------------------------------------------------
# text format: rationals "p/q", quadratic elements "u+v*sqrt(m)"


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    if x.v == 0:
        return format_rational(x.u)
    rad = f"sqrt({x.m})"
    if abs(x.v) == 1:
        vpart = rad
    else:
        vpart = f"{format_rational(abs(x.v))}*{rad}"
    if x.u == 0:
        return vpart if x.v > 0 else f"-{vpart}"
    return f"{format_rational(x.u)}{'+' if x.v > 0 else '-'}{vpart}"


_FIELD_RE = re.compile(r"^Q(?:\(\s*(?:sqrt|√)\s*\(?\s*(\d+)\s*\)?\s*\))?$")
_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?"
    r"(?:(?P<star>\*?)(?:sqrt\((?P<m>\d+)\)|√(?P<m2>\d+))(?:/(?P<rden>\d+))?)?"
)


def parse_field(text: str) -> Field:
    """Parse ``Q`` or ``Q(sqrt m)``."""
    mt = _FIELD_RE.match(text.strip())
    if not mt:
        raise DomainError(f"cannot parse field descriptor {text!r}")
    return Q if mt.group(1) is None else Field(int(mt.group(1)))


def parse_scalar(text: str, field: Field | None = None) -> Scalar:
    """Parse the exact text format; ``field`` is inferred from a radical if omitted."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise DomainError("empty scalar")
    u = Fraction(0)
    v = Fraction(0)
    m_seen: int | None = None
    pos = 0
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        if not mt or mt.end() == pos or (mt.group("sign") == "" and pos > 0):
            raise DomainError(f"cannot parse scalar {text!r} at {s[pos:]!r}")
        num = mt.group("num")
        rad = mt.group("m") or mt.group("m2")
        if num is None and rad is None:
            raise DomainError(f"cannot parse scalar {text!r} at {s[pos:]!r}")
        coef = Fraction(int(num), int(mt.group("den") or 1)) if num else Fraction(1)
        if mt.group("sign") == "-":
            coef = -coef
        if rad is None:
            u += coef
        else:
            if mt.group("den") and mt.group("rden"):
                raise DomainError(f"ambiguous coefficient in {text!r}")
            coef /= int(mt.group("rden") or 1)
            r = int(rad)
            if m_seen is not None and r != m_seen:
                raise DomainError(f"mixed radicals in {text!r}")
            m_seen = r
            v += coef
        pos = mt.end()
    if field is None:
        field = Q if m_seen is None else Field(m_seen)
    if m_seen is not None and field.m != m_seen:
        raise DomainError(f"sqrt({m_seen}) does not belong to {field}")
    return Scalar(u, v, field)
