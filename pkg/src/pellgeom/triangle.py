"""Triangle centers over k and the incenter-rationality decomposition.

All centers are computed from barycentric weights in k.  The incircle family
(I, the excenters, Gergonne and Nagel points) needs the side ratios b/a and
c/a, which lie in k exactly when a^2, b^2, c^2 share a square class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .exactfield import Field, Q, Scalar, canonical_rep, sqrt_in_k, sqrt_ratio, square_class_equiv
from .simplex import Simplex, barycentric, point_from_bary

__all__ = [
    "Triangle",
    "ClassicalCenters",
    "IncentricCenters",
    "HeronianDecomp",
    "RadiiReport",
    "CenterSet",
    "classical_centers",
    "incentric_centers",
    "isotomic",
    "isogonal",
    "heronian_decomposition",
    "radii_classes",
    "circumradius_inradius",
    "circumradius_inradius_heronian",
    "construct",
    "centers",
]

Point = tuple[Scalar, Scalar]


def _pt(p, field: Field) -> Point:
    if len(p) != 2:
        raise DomainError("triangle vertices are points of k^2")
    return tuple(c.to_field(field) if isinstance(c, Scalar) else Scalar(c, 0, field) for c in p)


class Triangle:
    """Triangle ABC over k with squared sides a^2 = BC^2, b^2 = CA^2, c^2 = AB^2."""

    def __init__(self, A, B, C, field: Field | None = None):
        if field is None:
            field = next((c.field for p in (A, B, C) for c in p if isinstance(c, Scalar)), Q)
        self.field = field
        self.A, self.B, self.C = (_pt(p, field) for p in (A, B, C))
        self.simplex = Simplex([self.A, self.B, self.C], field)

        def d2(P, R):
            dx, dy = P[0] - R[0], P[1] - R[1]
            return dx * dx + dy * dy

        self.a2 = d2(self.B, self.C)
        self.b2 = d2(self.C, self.A)
        self.c2 = d2(self.A, self.B)
        self.area = abs(self.simplex.edge_det) / 2

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return self.A, self.B, self.C

    def from_bary(self, weights) -> Point:
        return point_from_bary(self.simplex, weights)

    def bary(self, P) -> tuple[Scalar, Scalar, Scalar]:
        return barycentric(self.simplex, P)

    def has_rational_incenter(self) -> bool:
        k = self.field
        return square_class_equiv(self.a2, self.b2, k) and square_class_equiv(self.a2, self.c2, k)

    def __repr__(self) -> str:
        pts = ";".join("(" + ",".join(map(str, p)) + ")" for p in self.vertices)
        return f"Triangle({pts}, {self.field})"


class ClassicalCenters(NamedTuple):
    G: Point
    L: Point
    E: Point
    H: Point


class IncentricCenters(NamedTuple):
    I: Point
    I_A: Point
    I_B: Point
    I_C: Point
    Ge: Point
    Na: Point


def classical_centers(T: Triangle) -> ClassicalCenters:
    """Centroid, Lemoine point, circumcenter and orthocenter."""
    a2, b2, c2 = T.a2, T.b2, T.c2
    sa, sb, sc = b2 + c2 - a2, c2 + a2 - b2, a2 + b2 - c2
    G = T.from_bary((1, 1, 1))
    L = T.from_bary((a2, b2, c2))
    E = T.from_bary((a2 * sa, b2 * sb, c2 * sc))
    # (1/sa : 1/sb : 1/sc) multiplied through by sa*sb*sc; defined at right angles too
    H = T.from_bary((sb * sc, sc * sa, sa * sb))
    return ClassicalCenters(G, L, E, H)


def _side_ratios(T: Triangle) -> tuple[Scalar, Scalar] | None:
    beta = sqrt_ratio(T.b2, T.a2, T.field)
    gamma = sqrt_ratio(T.c2, T.a2, T.field)
    if beta is None or gamma is None:
        return None
    return beta, gamma


def incentric_centers(T: Triangle) -> IncentricCenters | None:
    """I, I_A, I_B, I_C, Ge, Na, or None when a^2, b^2, c^2 differ in square class."""
    ratios = _side_ratios(T)
    if ratios is None:
        return None
    b, c = ratios  # side lengths divided by a
    I = T.from_bary((1, b, c))
    IA = T.from_bary((-1, b, c))
    IB = T.from_bary((1, -b, c))
    IC = T.from_bary((1, b, -c))
    # (s-a : s-b : s-c) scaled by 2/a
    Na = T.from_bary((b + c - 1, 1 + c - b, 1 + b - c))
    Ge = isotomic(T, Na)
    return IncentricCenters(I, IA, IB, IC, Ge, Na)


def _conjugate(T: Triangle, P, weights) -> Point:
    lam = T.bary(P)
    if any(not x for x in lam):
        raise DomainError("point lies on a side line; conjugate undefined")
    mu = tuple(w / x for w, x in zip(weights, lam))
    if not sum(mu[1:], mu[0]):
        raise DomainError("conjugate is a point at infinity")
    return T.from_bary(mu)


def isotomic(T: Triangle, P) -> Point:
    """Barycentrics (1/l : 1/m : 1/n)."""
    return _conjugate(T, P, (1, 1, 1))


def isogonal(T: Triangle, P) -> Point:
    """Barycentrics (a^2/l : b^2/m : c^2/n)."""
    return _conjugate(T, P, (T.a2, T.b2, T.c2))


@dataclass(frozen=True)
class HeronianDecomp:
    """a = q a0 sqrt(d) and so on, with (a0, b0, c0; area0) Heronian over k."""

    d: Scalar
    sides0: tuple[Scalar, Scalar, Scalar]
    area0: Scalar
    q: Scalar

    def to_json(self) -> dict:
        return {
            "d": str(self.d),
            "q": str(self.q),
            "sides0": [str(x) for x in self.sides0],
            "area0": str(self.area0),
        }


def heronian_decomposition(T: Triangle) -> HeronianDecomp | None:
    if not T.has_rational_incenter():
        return None
    k = T.field
    d = canonical_rep(T.a2, k)
    sides = tuple(sqrt_ratio(s2, d, k) for s2 in (T.a2, T.b2, T.c2))
    area0 = T.area / d
    a0, b0, c0 = sides
    # Heron: the scaled-down triangle has area area0 in k
    if 16 * area0 * area0 != (a0 + b0 + c0) * (b0 + c0 - a0) * (c0 + a0 - b0) * (a0 + b0 - c0):
        raise ArithmeticError("decomposition failed Heron's formula")
    return HeronianDecomp(d, sides, area0, k(1))


@dataclass(frozen=True)
class RadiiReport:
    d: Scalar
    r2: Scalar
    rA2: Scalar
    rB2: Scalar
    rC2: Scalar
    R2: Scalar
    r: Scalar | None = None
    R: Scalar | None = None

    def to_json(self) -> dict:
        return {
            k: (None if v is None else str(v))
            for k, v in (
                ("d", self.d),
                ("r2", self.r2),
                ("rA2", self.rA2),
                ("rB2", self.rB2),
                ("rC2", self.rC2),
                ("R2", self.R2),
                ("r", self.r),
                ("R", self.R),
            )
        }


def radii_classes(T: Triangle) -> RadiiReport | None:
    """Squared in- and exradii via 2s = (a0+b0+c0) sqrt(d); each is equivalent to d."""
    dec = heronian_decomposition(T)
    if dec is None:
        return None
    k = T.field
    d = dec.d
    a0, b0, c0 = dec.sides0
    delta2 = T.area * T.area
    r2 = 4 * delta2 / (d * (a0 + b0 + c0) ** 2)
    rA2 = 4 * delta2 / (d * (b0 + c0 - a0) ** 2)
    rB2 = 4 * delta2 / (d * (c0 + a0 - b0) ** 2)
    rC2 = 4 * delta2 / (d * (a0 + b0 - c0) ** 2)
    for x in (r2, rA2, rB2, rC2):
        if not square_class_equiv(x, d, k):
            raise ArithmeticError("radius square class differs from d")
    R2 = T.a2 * T.b2 * T.c2 / (16 * delta2)
    r = R = None
    if sqrt_in_k(d, k) is not None:
        a, b, c = (sqrt_in_k(x, k) for x in (T.a2, T.b2, T.c2))
        R, r = circumradius_inradius(a, b, c, T.area)
    return RadiiReport(d, r2, rA2, rB2, rC2, R2, r, R)


def circumradius_inradius(a, b, c, area) -> tuple[Scalar, Scalar]:
    """(R, r) = (abc/4D, D/s) for a Heronian triangle with sides a, b, c and area D."""
    field = next((x.field for x in (a, b, c, area) if isinstance(x, Scalar)), Q)
    a, b, c, area = (x if isinstance(x, Scalar) else Scalar(x, 0, field) for x in (a, b, c, area))
    if any(x.sign() <= 0 for x in (a, b, c, area)):
        raise DomainError("sides and area must be positive")
    if 16 * area * area != (a + b + c) * (b + c - a) * (c + a - b) * (a + b - c):
        raise DomainError("sides and area do not form a triangle (Heron's formula fails)")
    return a * b * c / (4 * area), 2 * area / (a + b + c)


def circumradius_inradius_heronian(T: Triangle) -> tuple[Scalar, Scalar]:
    sides = [sqrt_in_k(x, T.field) for x in (T.a2, T.b2, T.c2)]
    if any(s is None for s in sides):
        raise DomainError("triangle is not Heronian over its field")
    return circumradius_inradius(*sides, T.area)


def construct(d, u: Sequence, v: Sequence, w: Sequence, translation=(0, 0), field: Field | None = None) -> Triangle:
    """Triangle O B0 C0 (translated) from three solutions of x1^2 + x2^2 = d x3^2.

    B0 = (w1, w2); C0 is where the line through B0 parallel to (u1, u2) meets
    the line through O and (v1, v2).
    """
    if field is None:
        field = next(
            (x.field for x in (d, *u, *v, *w, *translation) if isinstance(x, Scalar)), Q
        )

    def sc(x):
        return x.to_field(field) if isinstance(x, Scalar) else Scalar(x, 0, field)

    d = sc(d)
    if d.sign() <= 0:
        raise DomainError("d must be positive")
    trip = []
    for name, t in (("u", u), ("v", v), ("w", w)):
        if len(t) != 3:
            raise DomainError(f"{name} must be a triple (x1, x2, x3)")
        x1, x2, x3 = (sc(x) for x in t)
        if x1 * x1 + x2 * x2 != d * x3 * x3:
            raise DomainError(f"{name} = {t} does not solve x1^2 + x2^2 = d x3^2")
        trip.append((x1, x2))
    (u1, u2), (v1, v2), (w1, w2) = trip
    for (p1, p2), (q1, q2), names in (
        ((u1, u2), (v1, v2), "u, v"),
        ((v1, v2), (w1, w2), "v, w"),
        ((u1, u2), (w1, w2), "u, w"),
    ):
        if p1 * q2 == p2 * q1:
            raise DomainError(f"{names} are linearly dependent")
    # B0 + t*u = s*v
    det = v1 * u2 - u1 * v2
    if not det:
        raise DomainError("construction lines are parallel")
    t = (w1 * v2 - v1 * w2) / det
    c0 = (w1 + t * u1, w2 + t * u2)
    tx, ty = (sc(x) for x in translation)
    return Triangle((tx, ty), (w1 + tx, w2 + ty), (c0[0] + tx, c0[1] + ty), field)


@dataclass(frozen=True)
class CenterSet:
    triangle: Triangle
    classical: ClassicalCenters
    incentric: IncentricCenters | None
    radii: RadiiReport | None
    decomposition: HeronianDecomp | None

    def rows(self) -> list[tuple[str, str]]:
        """Label/value rows in the layout of the usual center table."""
        T = self.triangle

        def fmt(p):
            return "(" + ",".join(str(x) for x in p) + ")"

        rows = [("k", str(T.field))]
        rows += [(n, fmt(p)) for n, p in zip(("A", "B", "C"), T.vertices)]
        rows += [(n, fmt(p)) for n, p in zip(ClassicalCenters._fields, self.classical)]
        if self.incentric is not None:
            rows += [(n, fmt(p)) for n, p in zip(IncentricCenters._fields, self.incentric)]
        rows += [("a^2", str(T.a2)), ("b^2", str(T.b2)), ("c^2", str(T.c2))]
        if self.radii is not None:
            rr = self.radii
            rows += [("r^2", str(rr.r2)), ("r_A^2", str(rr.rA2)), ("r_B^2", str(rr.rB2)), ("r_C^2", str(rr.rC2))]
            rows.append(("d", str(rr.d)))
        rows.append(("Delta", str(T.area)))
        return rows

    def to_json(self) -> dict:
        T = self.triangle

        def pt(p):
            return [str(x) for x in p]

        out = {
            "field": str(T.field),
            "vertices": [pt(p) for p in T.vertices],
            "sides_sq": [str(T.a2), str(T.b2), str(T.c2)],
            "area": str(T.area),
            **{n: pt(p) for n, p in zip(ClassicalCenters._fields, self.classical)},
            "incentric": None
            if self.incentric is None
            else {n: pt(p) for n, p in zip(IncentricCenters._fields, self.incentric)},
            "radii": None if self.radii is None else self.radii.to_json(),
            "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
        }
        return out


def centers(T: Triangle) -> CenterSet:
    return CenterSet(
        T,
        classical_centers(T),
        incentric_centers(T),
        radii_classes(T),
        heronian_decomposition(T),
    )
