"""Pythagorean quadruples and Pell-like equations x1^2+...+xn^2 = d*x_{n+1}^2.

The central object is :class:`QuadCtx`, the unit and prime data of Q(sqrt d).
From it :func:`pell_like_families` writes every solution with a prescribed
prefix (and ``gcd(x_n, d) = 1``) as

    x_n + x_{n+1} sqrt(d) = +-eta^m * prod xi_p*^{m_p} * (integer cofactor)

and :func:`enumerate_family` expands those families into integer pairs.
:func:`brute_force_solutions` is the independent scan used to check them.
"""
from __future__ import annotations

import itertools
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, NamedTuple, Sequence

from sympy import isprime

from .errors import BoundExceeded, DomainError
from .exactfield import Field, Scalar, factorize, squarefree_part

__all__ = [
    "DEFAULT_SEARCH_BOUND",
    "DEFAULT_L_MAX",
    "QuadCtx",
    "PrimeData",
    "PellFamily",
    "PellLikeFamilies",
    "PellSolveReport",
    "PythParams",
    "FGIndex",
    "Solvability",
    "fundamental_unit",
    "splits",
    "in_S",
    "prime_data",
    "fg",
    "solvable",
    "pythagorean_quadruple",
    "is_strictly_primitive",
    "strictly_primitive_solutions",
    "pell_like_families",
    "families_for_z",
    "enumerate_family",
    "family_solutions_within",
    "brute_force_solutions",
    "assemble",
    "pell_solve",
]

DEFAULT_SEARCH_BOUND = 2_000_000
DEFAULT_L_MAX = 8


def search_bound() -> int:
    env = os.environ.get("SEARCH_BOUND")
    return int(env) if env else DEFAULT_SEARCH_BOUND


def _check_d(d: int) -> None:
    if not isinstance(d, int) or d <= 1:
        raise DomainError(f"d must be an integer > 1, got {d!r}")
    if squarefree_part(d) != d:
        raise DomainError(f"d = {d} is not squarefree")


def _exact_isqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _icbrt(n: int) -> int:
    """floor(cbrt(n)) for n >= 0."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


# ---------------------------------------------------------------------------
# units


def _zsqrtd_unit(d: int) -> tuple[int, int]:
    """Smallest x + y sqrt(d) > 1 in Z[sqrt d] with |x^2 - d y^2| = 1 (continued fraction)."""
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while abs(h * h - d * k * k) != 1:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k


@dataclass(frozen=True)
class PrimeData:
    p: int
    in_S: bool
    l_p: int | None = None
    xi: Scalar | None = None
    in_S_minus: bool = False

    @property
    def x(self) -> int:
        return int(self.xi.u)

    @property
    def y(self) -> int:
        return int(self.xi.v)


class QuadCtx:
    """Fundamental unit and cached prime data for Q(sqrt d).

    ``eta`` is the fundamental unit of the full ring of integers (it may have
    half-integer coordinates when d = 5 mod 8).  ``unit`` is the smallest unit
    > 1 of Z[sqrt d]: ``eta`` itself or ``eta**3``.
    """

    def __init__(self, d: int, *, l_max: int = DEFAULT_L_MAX, y_bound: int | None = None):
        _check_d(d)
        self.d = d
        self.field = Field(d)
        self.l_max = l_max
        self.y_bound = search_bound() if y_bound is None else y_bound
        x1, y1 = _zsqrtd_unit(d)
        self.unit = Scalar(x1, y1, self.field)
        eta = self.unit
        if d % 4 == 1:
            half = _half_integral_cube_root(d, x1, y1)
            if half is not None:
                eta = Scalar(Fraction(half[0], 2), Fraction(half[1], 2), self.field)
        self.eta = eta
        self.eta_integral = eta.u.denominator == 1 and eta.v.denominator == 1
        self.neg_pell = eta.norm() == -1
        # fundamental solution of x^2 - d y^2 = +1, used for the search bounds
        pos = self.unit if self.unit.norm() == 1 else self.unit * self.unit
        self._pos_unit = (int(pos.u), int(pos.v))
        self._cache: dict[int, PrimeData] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"QuadCtx(d={self.d}, eta={self.eta})"

    def prime_data(self, p: int) -> PrimeData:
        with self._lock:
            got = self._cache.get(p)
        if got is not None:
            return got
        data = _compute_prime_data(self, p)
        with self._lock:
            self._cache.setdefault(p, data)
        return data

    def in_S(self, p: int) -> bool:
        return self.prime_data(p).in_S


def _half_integral_cube_root(d: int, x1: int, y1: int) -> tuple[int, int] | None:
    """(x, y) odd with ((x + y sqrt d)/2)^3 = x1 + y1 sqrt d, if any."""
    n = x1 * x1 - d * y1 * y1
    trace = 2 * x1
    # trace(eta^3) = t^3 - 3 N(eta) t where t = trace(eta), N(eta) = N(eps)
    c = _icbrt(trace)
    for x in range(max(1, c - 2), c + 3):
        if x**3 - 3 * n * x != trace:
            continue
        ysq, rem = divmod(x * x - 4 * n, d)
        y = _exact_isqrt(ysq) if rem == 0 else None
        if not y or x % 2 == 0 or y % 2 == 0:
            continue
        h = Scalar(Fraction(x, 2), Fraction(y, 2), Field(d))
        if h**3 == Scalar(x1, y1, Field(d)):
            return x, y
    return None


def fundamental_unit(d: int) -> QuadCtx:
    """Build the context for Q(sqrt d); ``ctx.eta`` is the fundamental unit."""
    return QuadCtx(d)


# ---------------------------------------------------------------------------
# primes: splitting, S(d), l_p and xi_p


def splits(p: int, d: int) -> bool:
    """Kronecker symbol of the field discriminant at p equals +1."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return d % 8 == 1
    if d % p == 0:
        return False
    return pow(d % p, (p - 1) // 2, p) == 1


def _primitive_search(ctx: QuadCtx, n: int, signs: tuple[int, ...]) -> tuple[int, int] | None:
    """Smallest positive strictly primitive (x, y) with x^2 - d y^2 = s*n, s in signs.

    Every class of solutions of x^2 - d y^2 = N has a member with
    0 <= y <= y1*sqrt(N/(2(x1+1))) (N > 0) or y1*sqrt(|N|/(2(x1-1))) (N < 0),
    (x1, y1) the fundamental solution of the +1 equation.  Scanning y up to
    that bound therefore decides existence.
    """
    d = ctx.d
    x1, y1 = ctx._pos_unit
    bounds = {}
    for s in signs:
        den = 2 * (x1 + 1) if s > 0 else 2 * (x1 - 1)
        bounds[s] = isqrt(y1 * y1 * n // den)
    top = max(bounds.values())
    if top > ctx.y_bound:
        raise BoundExceeded(
            f"strictly primitive search for |x^2-{d}y^2| = {n} needs y <= {top}, "
            f"above the search bound {ctx.y_bound}"
        )
    for y in range(1, top + 1):
        dy2 = d * y * y
        # -n before +n: equal y, smaller x first
        for s in sorted(signs):
            if y > bounds[s]:
                continue
            x = _exact_isqrt(dy2 + s * n)
            if x and gcd(x, d * y) == 1:
                return x, y
    return None


def _ramified_two_in_S(ctx: QuadCtx) -> bool:
    # 2 ramifies and |x^2 - d y^2| = 2^l forces x, y odd, hence l = 1
    return _primitive_search(ctx, 2, (-1, 1)) is not None


def in_S(p: int, ctx: QuadCtx) -> bool:
    """Whether |x^2 - d y^2| = p^l has a strictly primitive solution for some l > 0."""
    return _membership(p, ctx)


def _membership(p: int, ctx: QuadCtx) -> bool:
    d = ctx.d
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        if d % 8 == 1:
            return True
        if d % 8 == 5:
            return not ctx.eta_integral
        if d % 4 == 3:
            return _ramified_two_in_S(ctx)
        return False
    return splits(p, d)


def _compute_prime_data(ctx: QuadCtx, p: int) -> PrimeData:
    if not _membership(p, ctx):
        return PrimeData(p, False)
    signs = (1,) if ctx.neg_pell else (-1, 1)
    pl = 1
    for l in range(1, ctx.l_max + 1):
        pl *= p
        sol = _primitive_search(ctx, pl, signs)
        if sol is not None:
            x, y = sol
            xi = Scalar(x, y, ctx.field)
            return PrimeData(p, True, l, xi, xi.norm() < 0)
    raise BoundExceeded(f"l_p for p = {p}, d = {ctx.d} exceeds l_max = {ctx.l_max}")


def prime_data(p: int, ctx: QuadCtx) -> PrimeData:
    """l_p, xi_p and S(d)_- membership for a prime p in S(d)."""
    data = ctx.prime_data(p)
    if not data.in_S:
        raise DomainError(f"{p} is not in S({ctx.d})")
    return data


class FGIndex(NamedTuple):
    d: int
    m: int
    f: int
    g: int


def fg(ctx: QuadCtx, m: int) -> FGIndex:
    """The m-th smallest positive solution (f_m, g_m) of |x^2 - d y^2| = 1."""
    if m < 1:
        raise DomainError("m must be >= 1")
    w = ctx.unit**m
    return FGIndex(ctx.d, m, int(w.u), int(w.v))


# ---------------------------------------------------------------------------
# solvability and Pythagorean quadruples


class Solvability(NamedTuple):
    solvable: bool
    reason: str

    def __bool__(self) -> bool:
        return self.solvable


def solvable(n: int, d: int) -> Solvability:
    """Whether x1^2+...+xn^2 = d x_{n+1}^2 has a nonzero integral solution."""
    _check_d(d)
    if n < 2:
        raise DomainError("n must be >= 2")
    if n == 2:
        bad = [p for p in factorize(d) if p % 4 == 3]
        if bad:
            return Solvability(False, f"two squares: prime divisor {bad[0]} = 3 mod 4")
        return Solvability(True, "two squares: no prime divisor = 3 mod 4")
    if n == 3:
        if d % 8 == 7:
            return Solvability(False, "three squares: d = 7 mod 8")
        return Solvability(True, "three squares: d != 7 mod 8")
    return Solvability(True, "four squares: always solvable")


@dataclass(frozen=True)
class PythParams:
    s: int
    t: int
    u: int
    v: int
    w: int
    sigma: tuple[int, int, int] = (1, 2, 3)
    sign: int = 1


def pythagorean_quadruple(params: PythParams) -> tuple[int, int, int, int]:
    """(x1, x2, x3, x4) with x1^2 + x2^2 + x3^2 = x4^2 from the quaternion parametrization."""
    s, t, u, v, w = params.s, params.t, params.u, params.v, params.w
    vals = (
        s * (t * t + u * u - v * v - w * w),
        2 * s * (t * v + u * w),
        2 * s * (t * w - u * v),
    )
    if sorted(params.sigma) != [1, 2, 3]:
        raise DomainError(f"sigma {params.sigma} is not a permutation of (1, 2, 3)")
    out = [0, 0, 0]
    for i, j in enumerate(params.sigma):
        out[j - 1] = vals[i]
    x4 = (1 if params.sign >= 0 else -1) * s * (t * t + u * u + v * v + w * w)
    return out[0], out[1], out[2], x4


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class PellFamily:
    """Solutions +-eta^m * base with m restricted by ``parity`` and ``mod3``.

    ``base`` = cofactor * prod xi_p*^{m_p}.  ``parity`` is the required value
    of m mod 2 (None: unrestricted); ``mod3`` is 0 when 3 | m is required.
    ``norm`` is the common value of X^2 - d Y^2, or None when it varies with m.
    """

    d: int
    z: int
    cofactor: int
    factors: tuple[tuple[int, int, str], ...]
    parity: int | None
    mod3: int | None
    norm: int | None
    eta: Scalar = field(repr=False, compare=False)
    base: Scalar = field(repr=False, compare=False)
    global_sign: str = "both"

    def admissible(self, m: int) -> bool:
        if self.parity is not None and m % 2 != self.parity:
            return False
        if self.mod3 is not None and m % 3 != self.mod3:
            return False
        return True

    def element(self, m: int) -> Scalar:
        return self.eta**m * self.base

    def sort_key(self):
        return (self.cofactor, self.factors)

    def describe(self) -> str:
        parts = ["+-eta^m"]
        for p, mp, star in self.factors:
            if mp:
                parts.append(f"{star}_{p}^{mp}" if mp > 1 else f"{star}_{p}")
        if self.cofactor != 1:
            parts.append(str(self.cofactor))
        cond = []
        if self.parity is not None:
            cond.append("m odd" if self.parity else "m even")
        if self.mod3 is not None:
            cond.append("3 | m")
        return "*".join(parts) + (f"  ({', '.join(cond)})" if cond else "")

    def to_json(self) -> dict:
        return {
            "d": str(self.d),
            "z": str(self.z),
            "sign": self.global_sign,
            "unit_exponent": {
                "parity": None if self.parity is None else str(self.parity),
                "mod3": None if self.mod3 is None else str(self.mod3),
            },
            "factors": [
                {"p": str(p), "m_p": str(mp), "star": star} for p, mp, star in self.factors
            ],
            "cofactor": str(self.cofactor),
            "norm": None if self.norm is None else str(self.norm),
        }

    @classmethod
    def from_json(cls, obj: dict, ctx: QuadCtx) -> PellFamily:
        factors = tuple((int(f["p"]), int(f["m_p"]), f["star"]) for f in obj["factors"])
        ue = obj["unit_exponent"]
        z = int(obj["z"])
        cofactor = int(obj["cofactor"])
        return cls(
            d=int(obj["d"]),
            z=z,
            cofactor=cofactor,
            factors=factors,
            parity=None if ue["parity"] is None else int(ue["parity"]),
            mod3=None if ue["mod3"] is None else int(ue["mod3"]),
            norm=None if obj.get("norm") is None else int(obj["norm"]),
            eta=ctx.eta,
            base=_base_element(ctx, cofactor, factors),
            global_sign=obj.get("sign", "both"),
        )


def _base_element(ctx: QuadCtx, cofactor: int, factors) -> Scalar:
    base = Scalar(cofactor, 0, ctx.field)
    for p, mp, star in factors:
        xi = ctx.prime_data(p).xi
        base = base * (xi if star == "xi" else xi.conj()) ** mp
    return base


def _exponent_choices(ctx: QuadCtx, z: int, exact: bool):
    """Per prime dividing z: list of (m_p, cofactor exponent).  None if impossible."""
    choices: list[tuple[int, list[tuple[int, int]]]] = []
    for p, e in sorted(factorize(z).items()):
        data = ctx.prime_data(p)
        if not data.in_S:
            if exact or e % 2:
                return None
            choices.append((p, [(0, e // 2)]))
            continue
        lp = data.l_p
        cap = e // lp
        if not splits(p, ctx.d):
            # p = 2 ramified or inert: xi_2^2 is 2 times a unit, so m_2 <= 1
            cap = min(cap, 1)
        if exact:
            opts = [(e // lp, 0)] if e % lp == 0 and e // lp <= cap else []
        else:
            opts = [(mp, (e - lp * mp) // 2) for mp in range(cap + 1) if (lp * mp - e) % 2 == 0]
        if not opts:
            return None
        choices.append((p, opts))
    return choices


def _build_families(ctx, z, choices, parity, mod3, norm, neg_filter) -> list[PellFamily]:
    out: list[PellFamily] = []
    primes = [p for p, _ in choices]
    for combo in itertools.product(*(opts for _, opts in choices)):
        cofactor = 1
        for p, (mp, ce) in zip(primes, combo):
            cofactor *= p**ce
        m_ps = [(p, mp) for p, (mp, _) in zip(primes, combo)]
        if neg_filter:
            minus = sum(mp for p, mp in m_ps if ctx.prime_data(p).in_S_minus)
            if minus % 2 != 1:
                continue
        star_opts = []
        for p, mp in m_ps:
            if mp == 0 or not splits(p, ctx.d):
                star_opts.append(("xi",))
            else:
                star_opts.append(("xi", "xi'"))
        for stars in itertools.product(*star_opts):
            factors = tuple((p, mp, s) for (p, mp), s in zip(m_ps, stars) if mp)
            out.append(
                PellFamily(
                    d=ctx.d,
                    z=z,
                    cofactor=cofactor,
                    factors=factors,
                    parity=parity,
                    mod3=mod3,
                    norm=norm,
                    eta=ctx.eta,
                    base=_base_element(ctx, cofactor, factors),
                )
            )
    out.sort(key=PellFamily.sort_key)
    return out


def strictly_primitive_solutions(ctx: QuadCtx, z: int) -> list[PellFamily]:
    """Families covering every strictly primitive solution of |x^2 - d y^2| = z."""
    if z <= 1:
        raise DomainError("z must be > 1")
    choices = _exponent_choices(ctx, z, exact=True)
    if choices is None:
        return []
    mod3 = 0 if (not ctx.eta_integral and z % 2 == 1) else None
    return _build_families(ctx, z, choices, None, mod3, None, neg_filter=False)


def is_strictly_primitive(x: int, y: int, d: int, z: int) -> bool:
    if abs(x * x - d * y * y) != z:
        raise DomainError(f"({x}, {y}) does not solve |x^2 - {d}y^2| = {z}")
    return gcd(x, d * y) == 1


@dataclass(frozen=True)
class PellLikeFamilies:
    """Outcome of the family formula for x_n^2 - d x_{n+1}^2 = -z."""

    d: int
    z: int
    prefix: tuple[int, ...]
    sigma: tuple[int, ...]
    hypotheses_hold: bool
    reason: str
    families: tuple[PellFamily, ...]

    def __iter__(self):
        return iter(self.families)

    def __len__(self):
        return len(self.families)

    def __getitem__(self, i):
        return self.families[i]


def families_for_z(ctx: QuadCtx, z: int) -> PellLikeFamilies:
    """Families for x^2 - d y^2 = -z with gcd(x, d) = 1."""
    return _families(ctx, z, (), ())


def _families(ctx, z, prefix, sigma) -> PellLikeFamilies:
    if z <= 0:
        raise DomainError("z = sum of prefix squares must be positive")
    d = ctx.d

    def result(ok, reason, fams=()):
        return PellLikeFamilies(d, z, tuple(prefix), tuple(sigma), ok, reason, tuple(fams))

    choices = _exponent_choices(ctx, z, exact=False)
    if choices is None:
        return result(
            False,
            "no solutions with gcd(x_n, d) = 1 are guaranteed: some ord_p(z) is odd "
            "for p outside S(d), or no exponent m_p fits",
        )
    if gcd(z, d) > 1:
        # x^2 = d y^2 - z forces every common prime of z and d into x
        return result(True, f"gcd(z, d) = {gcd(z, d)}: every solution has gcd(x_n, d) > 1")
    mod3 = 0 if (not ctx.eta_integral and z % 2 == 1) else None
    if ctx.neg_pell:
        fams = _build_families(ctx, z, choices, 1, mod3, -z, neg_filter=False)
    else:
        fams = _build_families(ctx, z, choices, None, mod3, -z, neg_filter=True)
    if not fams:
        return result(True, "norm sign condition excludes every exponent choice")
    return result(True, "ok", fams)


def pell_like_families(
    ctx: QuadCtx, prefix: Sequence[int], sigma: Sequence[int] | None = None
) -> PellLikeFamilies:
    """Families of x_{sigma(n)} + x_{n+1} sqrt(d) for the given prefix."""
    prefix = tuple(int(a) for a in prefix)
    n = len(prefix) + 1
    if sigma is None:
        sigma = tuple(range(1, n + 1))
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DomainError(f"sigma {sigma} is not a permutation of 1..{n}")
    z = sum(a * a for a in prefix)
    return _families(ctx, z, prefix, sigma)


def enumerate_family(family: PellFamily, m_range: tuple[int, int]) -> list[tuple[int, int]]:
    """(X, Y) for every admissible m in the inclusive range, both global signs."""
    lo, hi = m_range
    out: list[tuple[int, int]] = []
    if lo > hi:
        return out
    alpha = family.eta**lo * family.base
    for m in range(lo, hi + 1):
        if family.admissible(m):
            out.extend(_pair_pm(alpha))
        alpha = alpha * family.eta
    return out


def _pair_pm(alpha: Scalar) -> tuple[tuple[int, int], tuple[int, int]]:
    if alpha.u.denominator != 1 or alpha.v.denominator != 1:
        raise ArithmeticError(f"family element {alpha} is not in Z[sqrt d]")
    x, y = int(alpha.u), int(alpha.v)
    return (x, y), (-x, -y)


def _escaped(alpha: Scalar, d: int, bound: int, upward: bool) -> bool:
    # |Y| >= (|a| - |a'|)/(2 sqrt d), and that lower bound only grows from here on
    a, c = abs(alpha), abs(alpha.conj())
    gap = a - c if upward else c - a
    return gap.sign() > 0 and gap * gap > 4 * d * bound * bound


def family_solutions_within(families: Iterable[PellFamily], y_bound: int) -> set[tuple[int, int]]:
    """Every (X, Y) produced by the families with |Y| <= y_bound."""
    out: set[tuple[int, int]] = set()
    for fam in families:
        eta, inv = fam.eta, fam.eta.inverse()
        for upward, step in ((True, eta), (False, inv)):
            alpha = fam.base if upward else fam.base * inv
            m = 0 if upward else -1
            while not _escaped(alpha, fam.d, y_bound, upward):
                if fam.admissible(m):
                    for x, y in _pair_pm(alpha):
                        if abs(y) <= y_bound:
                            out.add((x, y))
                alpha = alpha * step
                m += 1 if upward else -1
    return out


def brute_force_solutions(d: int, z: int, bound: int) -> list[tuple[int, int]]:
    """All (x, y) with x^2 - d y^2 = -z and |y| <= bound, by exhaustive scan."""
    if bound < 0:
        raise DomainError("bound must be >= 0")
    out: set[tuple[int, int]] = set()
    for y in range(bound + 1):
        x = _exact_isqrt(d * y * y - z)
        if x is not None:
            out.update({(x, y), (-x, y), (x, -y), (-x, -y)})
    return sorted(out, key=lambda p: (abs(p[1]), p[1], abs(p[0]), p[0]))


def assemble(prefix: Sequence[int], sigma: Sequence[int], x: int, y: int) -> tuple[int, ...]:
    """The full tuple (x_1, ..., x_{n+1}) with x_{sigma(i)} = prefix_i and x_{sigma(n)} = x."""
    n = len(prefix) + 1
    out = [0] * n
    for i, a in enumerate(prefix):
        out[sigma[i] - 1] = a
    out[sigma[n - 1] - 1] = x
    return tuple(out) + (y,)


@dataclass(frozen=True)
class PellSolveReport:
    families: PellLikeFamilies
    solutions: tuple[tuple[int, ...], ...]
    outside: tuple[tuple[int, ...], ...]


def pell_solve(
    ctx: QuadCtx, prefix: Sequence[int], sigma: Sequence[int] | None = None, y_bound: int = 100
) -> PellSolveReport:
    """Family solutions with |x_{n+1}| <= y_bound, plus scan-only solutions with gcd(x_n, d) > 1."""
    fams = pell_like_families(ctx, prefix, sigma)
    sig = fams.sigma
    pairs = family_solutions_within(fams.families, y_bound) if fams.families else set()
    brute = brute_force_solutions(ctx.d, fams.z, y_bound)
    outside = [p for p in brute if gcd(p[0], ctx.d) != 1]

    def key(p):
        return (abs(p[1]), p[1], abs(p[0]), p[0])

    return PellSolveReport(
        families=fams,
        solutions=tuple(assemble(fams.prefix, sig, x, y) for x, y in sorted(pairs, key=key)),
        outside=tuple(assemble(fams.prefix, sig, x, y) for x, y in sorted(outside, key=key)),
    )
