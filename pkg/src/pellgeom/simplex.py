"""Exact volumes, barycentric coordinates and incenters of n-simplices over k.

Facet volumes enter only through their squares a_i^2, which always lie in k;
the incenter is k-rational exactly when all a_i^2 share one square class.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, lcm
from typing import Sequence

from .errors import DomainError
from .exactfield import Field, Q, Scalar, SquareClass, canonical_rep, sqrt_ratio

__all__ = [
    "Simplex",
    "FacetClassReport",
    "det",
    "volume",
    "facet_volsq",
    "cayley_menger_volsq",
    "gram_volsq",
    "incenter_report",
    "incenter",
    "point_from_bary",
    "is_k_rational",
    "barycentric",
    "facet_normal",
    "facet_distance_sq",
]

Point = tuple[Scalar, ...]


def det(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by Gaussian elimination over the field."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        raise DomainError("empty matrix")
    one = a[0][0] * 0 + 1
    result = one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return one * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result = result * p
        inv = 1 / p
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def _dot(x, y) -> Scalar:
    total = x[0] * y[0]
    for s, t in zip(x[1:], y[1:]):
        total = total + s * t
    return total


def _sub(x, y) -> Point:
    return tuple(s - t for s, t in zip(x, y))


class Simplex:
    """n+1 affinely independent points of k^n."""

    def __init__(self, vertices: Sequence[Sequence], field: Field | None = None):
        if field is None:
            field = next(
                (c.field for v in vertices for c in v if isinstance(c, Scalar)), Q
            )
        self.field = field
        self.vertices: tuple[Point, ...] = tuple(
            tuple(c.to_field(field) if isinstance(c, Scalar) else Scalar(c, 0, field) for c in v)
            for v in vertices
        )
        self.n = len(self.vertices) - 1
        if self.n < 2:
            raise DomainError("a simplex here has dimension n >= 2")
        if any(len(v) != self.n for v in self.vertices):
            raise DomainError(f"an {self.n}-simplex needs {self.n + 1} points of k^{self.n}")
        self.edge_det = det(self.edges())
        if not self.edge_det:
            raise DomainError("vertices are affinely dependent")

    def edges(self) -> list[Point]:
        a0 = self.vertices[0]
        return [_sub(v, a0) for v in self.vertices[1:]]

    def facet(self, i: int) -> tuple[Point, ...]:
        if not 0 <= i <= self.n:
            raise IndexError(f"facet index {i} out of range 0..{self.n}")
        return self.vertices[:i] + self.vertices[i + 1 :]

    def __repr__(self) -> str:
        pts = "; ".join("(" + ",".join(map(str, v)) + ")" for v in self.vertices)
        return f"Simplex({pts}, {self.field})"


def volume(S: Simplex) -> Scalar:
    """(1/n!) |det(A0A1, ..., A0An)|."""
    return abs(S.edge_det) / factorial(S.n)


def gram_volsq(points: Sequence[Point]) -> Scalar:
    """Squared volume of the simplex spanned by ``points`` via the Gram determinant."""
    p0 = points[0]
    e = [_sub(p, p0) for p in points[1:]]
    m = len(e)
    g = [[_dot(x, y) for y in e] for x in e]
    return det(g) / factorial(m) ** 2


def cayley_menger_volsq(points: Sequence[Point]) -> Scalar:
    """Squared volume from pairwise squared distances (Cayley-Menger)."""
    m = len(points) - 1
    zero = points[0][0] * 0
    one = zero + 1
    size = m + 2
    cm = [[zero] * size for _ in range(size)]
    for i in range(1, size):
        cm[0][i] = one
        cm[i][0] = one
    for i in range(m + 1):
        for j in range(m + 1):
            if i != j:
                diff = _sub(points[i], points[j])
                cm[i + 1][j + 1] = _dot(diff, diff)
    sign = -1 if m % 2 == 0 else 1
    return det(cm) * sign / (2**m * factorial(m) ** 2)


def facet_volsq(S: Simplex, i: int) -> Scalar:
    """Squared (n-1)-volume of the facet opposite vertex i."""
    return gram_volsq(S.facet(i))


@dataclass(frozen=True)
class FacetClassReport:
    volsq: tuple[Scalar, ...]
    classes: tuple[SquareClass, ...]
    all_equivalent: bool
    d: Scalar | None

    def to_json(self) -> dict:
        return {
            "volsq": [str(x) for x in self.volsq],
            "classes": [str(c) for c in self.classes],
            "all_equivalent": self.all_equivalent,
            "d": None if self.d is None else str(self.d),
        }


def _d_representative(a0sq: Scalar, k: Field) -> Scalar:
    if k.is_rational:
        return canonical_rep(a0sq, k)
    # clear denominators by a square to land in Z[sqrt m]
    den = lcm(a0sq.u.denominator, a0sq.v.denominator)
    return a0sq * (den * den)


def incenter_report(S: Simplex) -> FacetClassReport:
    vs = tuple(facet_volsq(S, i) for i in range(S.n + 1))
    classes = tuple(SquareClass.of(v, S.field) for v in vs)
    ok = all(sqrt_ratio(v, vs[0], S.field) is not None for v in vs[1:])
    return FacetClassReport(vs, classes, ok, _d_representative(vs[0], S.field) if ok else None)


def point_from_bary(S: Simplex, weights: Sequence) -> Point:
    """sum(l_i A_i) / sum(l_i)."""
    if len(weights) != S.n + 1:
        raise DomainError(f"expected {S.n + 1} barycentric weights")
    lam = [w if isinstance(w, Scalar) else Scalar(w, 0, S.field) for w in weights]
    lam = [w.to_field(S.field) for w in lam]
    total = lam[0]
    for w in lam[1:]:
        total = total + w
    if not total:
        raise DomainError("barycentric weights sum to zero")
    out = []
    for j in range(S.n):
        acc = lam[0] * S.vertices[0][j]
        for w, v in zip(lam[1:], S.vertices[1:]):
            acc = acc + w * v[j]
        out.append(acc / total)
    return tuple(out)


def is_k_rational(S: Simplex, weights: Sequence) -> bool:
    """Whether every normalized weight l_i/sum(l) lies in the simplex's field.

    Weights may live in a larger quadratic field than the vertices.
    """
    lam = [w if isinstance(w, Scalar) else Scalar(w, 0, S.field) for w in weights]
    total = lam[0]
    for w in lam[1:]:
        total = total + w
    if not total:
        raise DomainError("barycentric weights sum to zero")
    for w in lam:
        r = w / total
        if r.field != S.field and r.v != 0:
            return False
    return True


def incenter(S: Simplex) -> Point | None:
    """The incenter (a_0 : ... : a_n) when it is k-rational, else None."""
    vs = [facet_volsq(S, i) for i in range(S.n + 1)]
    ratios = []
    for v in vs:
        r = sqrt_ratio(v, vs[0], S.field)
        if r is None:
            return None
        ratios.append(r)
    return point_from_bary(S, ratios)


def barycentric(S: Simplex, P: Sequence) -> tuple[Scalar, ...]:
    """Normalized barycentric coordinates of P (signed sub-volume ratios)."""
    P = tuple(c.to_field(S.field) if isinstance(c, Scalar) else Scalar(c, 0, S.field) for c in P)
    out = []
    for i in range(S.n + 1):
        verts = list(S.vertices)
        verts[i] = P
        a0 = verts[0]
        out.append(det([_sub(v, a0) for v in verts[1:]]) / S.edge_det)
    return tuple(out)


def facet_normal(S: Simplex, i: int) -> Point:
    """A normal vector of the hyperplane through facet i (generalized cross product)."""
    pts = S.facet(i)
    e = [_sub(p, pts[0]) for p in pts[1:]]
    n = S.n
    normal = []
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in e]
        normal.append(det(minor) * (-1 if j % 2 else 1) if minor else S.field(1))
    return tuple(normal)


def facet_distance_sq(S: Simplex, i: int, P: Sequence) -> Scalar:
    """Squared distance from P to the hyperplane spanned by facet i."""
    P = tuple(c.to_field(S.field) if isinstance(c, Scalar) else Scalar(c, 0, S.field) for c in P)
    nv = facet_normal(S, i)
    h = _dot(_sub(P, S.facet(i)[0]), nv)
    return h * h / _dot(nv, nv)
