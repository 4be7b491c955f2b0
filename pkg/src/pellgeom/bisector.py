"""Angle bisectors with direction vectors in k^n.

Two lines with directions a, b have a bisector with direction in k^n exactly
when |a|^2 and |b|^2 agree modulo squares of k; the bisectors are then
a +- (|a|/|b|) b.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DomainError, FieldMismatch
from .exactfield import Field, Q, Scalar, SquareClass, rational_sqrt, sqrt_ratio, squarefree_part

__all__ = [
    "BisectorResult",
    "as_vector",
    "dot",
    "norm_sq",
    "bisectable",
    "bisector_directions",
    "integral_bisectors",
    "verify_star",
    "other_bisector",
    "is_trivial",
    "normalize_direction",
]

Vec = tuple[Scalar, ...]


def as_vector(coords: Sequence, field: Field | None = None) -> Vec:
    """Coerce a coordinate sequence to a tuple of Scalars over one field."""
    if field is None:
        field = next((c.field for c in coords if isinstance(c, Scalar)), Q)
    return tuple(c.to_field(field) if isinstance(c, Scalar) else Scalar(c, 0, field) for c in coords)


def _pair(a, b) -> tuple[Vec, Vec]:
    fa = next((c.field for c in (*a, *b) if isinstance(c, Scalar)), Q)
    a, b = as_vector(a, fa), as_vector(b, fa)
    if len(a) != len(b):
        raise DomainError(f"dimension mismatch: {len(a)} vs {len(b)}")
    if len(a) < 2:
        raise DomainError("vectors need at least 2 coordinates")
    return a, b


def dot(a, b) -> Scalar:
    a, b = _pair(a, b)
    total = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        total = total + x * y
    return total


def norm_sq(a) -> Scalar:
    return dot(a, a)


def _independent(a: Vec, b: Vec) -> bool:
    n = len(a)
    return any(a[i] * b[j] != a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def _require_independent(a: Vec, b: Vec) -> None:
    if not any(a) or not any(b):
        raise DomainError("zero direction vector")
    if not _independent(a, b):
        raise DomainError("direction vectors are linearly dependent")


def bisectable(a, b) -> bool:
    """Whether the bisectors of a and b have directions in k^n."""
    a, b = _pair(a, b)
    _require_independent(a, b)
    return sqrt_ratio(norm_sq(a), norm_sq(b)) is not None


def normalize_direction(c: Sequence[Scalar]) -> Vec:
    """Scale by a positive rational so every rational part is an integer, content 1."""
    dens = [x.u.denominator for x in c] + [x.v.denominator for x in c]
    den = lcm(*dens)
    nums = [int(x.u * den) for x in c] + [int(x.v * den) for x in c]
    g = 0
    for v in nums:
        g = gcd(g, v)
    if g == 0:
        return tuple(c)
    f = Fraction(den, g)
    return tuple(x * f for x in c)


@dataclass(frozen=True)
class BisectorResult:
    exists: bool
    class_a: SquareClass
    class_b: SquareClass
    c_plus: Vec | None = None
    c_minus: Vec | None = None
    integral_data: tuple[int, int, int] | None = None
    # which of c_plus / c_minus bisects the angle between the given a and b
    internal: str | None = None

    def to_json(self) -> dict:
        def vec(v):
            return None if v is None else [str(x) for x in v]

        out = {
            "exists": self.exists,
            "field": str(self.class_a.field),
            "class_a": str(self.class_a),
            "class_b": str(self.class_b),
            "c_plus": vec(self.c_plus),
            "c_minus": vec(self.c_minus),
            "internal": self.internal,
        }
        if self.integral_data is not None:
            d, an, bn = self.integral_data
            out["integral_data"] = {"d": str(d), "a_n1": str(an), "b_n1": str(bn)}
        return out


def bisector_directions(a, b) -> BisectorResult:
    """Both bisector directions of a and b, or the square classes that block them."""
    a, b = _pair(a, b)
    _require_independent(a, b)
    na, nb = norm_sq(a), norm_sq(b)
    ca, cb = SquareClass.of(na), SquareClass.of(nb)
    ratio = sqrt_ratio(na, nb)
    if ratio is None:
        return BisectorResult(False, ca, cb)
    c_plus = normalize_direction([x + ratio * y for x, y in zip(a, b)])
    c_minus = normalize_direction([x - ratio * y for x, y in zip(a, b)])
    internal = "plus" if dot(a, b).sign() >= 0 else "minus"
    return BisectorResult(True, ca, cb, c_plus, c_minus, internal=internal)


def integral_bisectors(a, b) -> BisectorResult:
    """Integer route: |a|^2 = d a_{n+1}^2, |b|^2 = d b_{n+1}^2, c = (b_{n+1} a +- a_{n+1} b)/g."""
    a, b = _pair(a, b)
    if not a[0].field.is_rational:
        raise DomainError("the integral route is implemented for integer vectors over Q")
    if any(x.u.denominator != 1 for x in (*a, *b)):
        raise DomainError("integral_bisectors needs integer coordinates")
    _require_independent(a, b)
    na, nb = norm_sq(a), norm_sq(b)
    ca, cb = SquareClass.of(na), SquareClass.of(nb)
    d = squarefree_part(na.u)
    an = rational_sqrt(na.u / d)
    bn = rational_sqrt(nb.u / d)
    if bn is None:
        return BisectorResult(False, ca, cb)
    an, bn = int(an), int(bn)
    g = gcd(an, bn)
    c_plus = tuple(x * (bn // g) + y * (an // g) for x, y in zip(a, b))
    c_minus = tuple(x * (bn // g) - y * (an // g) for x, y in zip(a, b))
    internal = "plus" if dot(a, b).sign() >= 0 else "minus"
    return BisectorResult(True, ca, cb, c_plus, c_minus, (d, an, bn), internal)


def verify_star(a, b, c) -> bool:
    """<a,c>^2 |b|^2 == <b,c>^2 |a|^2, exactly."""
    a, b = _pair(a, b)
    _, c = _pair(a, c)
    ac, bc = dot(a, c), dot(b, c)
    return ac * ac * norm_sq(b) == bc * bc * norm_sq(a)


def other_bisector(a, b, c) -> Vec:
    """Given one bisector c, the other one: <b,c> a - <a,c> b."""
    a, b = _pair(a, b)
    _, c = _pair(a, c)
    if not verify_star(a, b, c):
        raise DomainError("c does not bisect an angle between a and b")
    ac, bc = dot(a, c), dot(b, c)
    out = tuple(bc * x - ac * y for x, y in zip(a, b))
    if not any(out):
        raise DomainError("c is perpendicular to both a and b")
    return out


def is_trivial(a, b) -> bool:
    """Coordinate magnitudes of one vector are q times those of the other (as multisets)."""
    try:
        a, b = _pair(a, b)
    except FieldMismatch:
        return False
    A = sorted(abs(x) for x in a)
    B = sorted(abs(x) for x in b)
    if not A[-1] or not B[-1]:
        return True
    q = B[-1] / A[-1]
    return B == [q * x for x in A]
