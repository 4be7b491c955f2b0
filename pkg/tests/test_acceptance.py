"""Acceptance gate: one test and one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the summary section lists
every criterion's verdict.  Tolerances are exact (zero) throughout.
"""
import io
import json
import random
import time
from fractions import Fraction as F
from math import gcd, isqrt

from pellgeom.bisector import bisector_directions, integral_bisectors, normalize_direction, verify_star
from pellgeom.cli import run
from pellgeom.exactfield import Field, Scalar, parse_field, parse_scalar, square_class_equiv
from pellgeom.pell import (
    QuadCtx,
    brute_force_solutions,
    enumerate_family,
    families_for_z,
    family_solutions_within,
    pell_like_families,
    solvable,
)
from pellgeom.simplex import Simplex, facet_distance_sq, incenter, incenter_report
from pellgeom.triangle import Triangle, construct, incentric_centers, isogonal, isotomic

from strategies import (
    bisectable_pair,
    construct_input,
    equifacial,
    interior_point,
    random_triangle,
    rational_incenter_simplex,
)
from table_data import COLUMNS, POINTS, RADII, radius_square


def _squarefree(n):
    return all(n % (p * p) for p in range(2, isqrt(n) + 1))


def _cli_json(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    assert code == 0, err.getvalue()
    return json.loads(out.getvalue())


# ---------------------------------------------------------------------------


def test_criterion_1_center_table(criterion):
    t0 = time.perf_counter()
    mismatches = []
    for ci, col in enumerate(COLUMNS, 1):
        obj = _cli_json("triangle-centers", "--field", col["field"], "--vertices", col["vertices"])
        k = parse_field(obj["field"])
        got = {n: obj[n] for n in ("G", "L", "E", "H")}
        got.update(obj["incentric"] or {})
        for name in POINTS:
            want = [str(parse_scalar(c, k)) for c in col[name]]
            if got.get(name) != want:
                mismatches.append(f"col{ci} {name}: {got.get(name)} != {want}")
        radii = obj["radii"]
        d = parse_scalar(radii["d"], k)
        for name, key in zip(RADII, ("r2", "rA2", "rB2", "rC2")):
            val = parse_scalar(radii[key], k)
            if val != radius_square(col[name]) or not square_class_equiv(val, d, k):
                mismatches.append(f"col{ci} {name}^2: {val}")
        if radii["d"] != col["d"]:
            mismatches.append(f"col{ci} d: {radii['d']}")
        if obj["area"] != str(parse_scalar(col["Delta"], k)):
            mismatches.append(f"col{ci} Delta: {obj['area']}")
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 1.0
    criterion(1, "center table, 3 columns, exact", ok, f"{len(mismatches)} mismatches, {elapsed:.3f}s " + "; ".join(mismatches[:3]))
    assert ok, mismatches


TABLE_D1 = [
    ((3, 4, 0), 5, (5, 0, 12), 13, 1), ((3, 4, 0), 5, (7, 0, 24), 25, 5), ((63, 16, 0), 65, (33, 0, 56), 65, 65),
    ((3, 4, 0), 5, (1, 2, 2), 3, 1), ((3, 4, 0), 5, (5, 2, 14), 15, 5), ((5, 12, 0), 13, (3, 4, 12), 13, 13),
    ((1, 2, 2), 3, (3, 2, 6), 7, 1), ((1, 2, 2), 3, (1, 8, 4), 9, 3), ((1, 8, 4), 9, (7, 4, 4), 9, 9),
]
TABLE_D2 = [
    ((1, 7, 0), 5, (7, 0, 17), 13, 1), ((1, 1, 0), 1, (1, 0, 7), 5, 1), ((23, 89, 0), 65, (47, 0, 79), 65, 65),
    ((1, 7, 0), 5, (1, 1, 4), 3, 1), ((1, 1, 0), 1, (1, 1, 4), 3, 1), ((1, 7, 0), 5, (3, 4, 5), 5, 5),
    ((1, 1, 4), 3, (3, 4, 5), 5, 1), ((1, 1, 4), 3, (7, 7, 8), 9, 3), ((1, 4, 9), 7, (3, 5, 8), 7, 7),
]


def test_criterion_2_bisectors(criterion):
    problems = []
    examples_ok = rows_ok = 0
    for a, b, (s, t) in (((2, 1, 1), (3, 6, 2), (7, 3)), ((1, 1, 4), (3, 4, 5), (5, 3))):
        want = {
            normalize_direction([Scalar(s * x + t * y) for x, y in zip(a, b)]),
            normalize_direction([Scalar(s * x - t * y) for x, y in zip(a, b)]),
        }
        r = bisector_directions(a, b)
        got = {r.c_plus, r.c_minus} if r.exists else set()
        if got != want:
            detail = (
                f"{a},{b}: expected {s}a+-{t}b, got "
                + (f"{sorted(tuple(map(str, c)) for c in got)}" if got else f"no bisector (classes {r.class_a} vs {r.class_b})")
            )
            problems.append(detail)
        else:
            examples_ok += 1
    for d, table in ((1, TABLE_D1), (2, TABLE_D2)):
        for a, a4, b, b4, g in table:
            r = integral_bisectors(a, b)
            c_plus = tuple((b4 * x + a4 * y) // g for x, y in zip(a, b))
            c_minus = tuple((b4 * x - a4 * y) // g for x, y in zip(a, b))
            dd, x4, y4 = r.integral_data
            row_ok = (
                (dd, x4, y4, gcd(x4, y4)) == (d, a4, b4, g)
                and r.c_plus == c_plus
                and r.c_minus == c_minus
                and verify_star(a, b, c_plus)
                and verify_star(a, b, c_minus)
            )
            if row_ok:
                rows_ok += 1
            else:
                problems.append(f"table d={d} column a={a}, b={b}")
    ok = not problems
    summary = f"{examples_ok}/2 examples, {rows_ok}/18 table columns"
    criterion(2, "bisector examples and both 9-column tables", ok, "; ".join([summary, *problems]))
    assert ok, problems


def test_criterion_3_pell_differential(criterion):
    t0 = time.perf_counter()
    instances = 0
    bad = []
    for d in (2, 3, 5, 6, 7, 10):
        ctx = QuadCtx(d)
        for z in range(1, 201):
            fams = families_for_z(ctx, z)
            if not fams.hypotheses_hold:
                continue
            instances += 1
            got = family_solutions_within(fams.families, 500)
            want = {p for p in brute_force_solutions(d, z, 500) if gcd(p[0], d) == 1}
            if got != want:
                bad.append((d, z, len(got ^ want)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60.0
    criterion(3, "Pell differential test vs brute force", ok, f"{instances} instances, {len(bad)} mismatches, {elapsed:.2f}s {bad[:3]}")
    assert ok, bad


def test_criterion_4_example_families(criterion):
    K = Field(2)
    ctx = QuadCtx(2)
    problems = []
    if ctx.eta != K(1, 1):
        problems.append(f"eta = {ctx.eta}")
    for prefix, xi, expected in (((1, 4), K(5, 2), {(9, 7), (1, 3)}), ((4, 5), K(7, 2), {(11, 9), (3, 5)})):
        fams = pell_like_families(ctx, prefix)
        bases = sorted(str(f.base) for f in fams)
        shape = all(
            f.parity == 1 and f.mod3 is None and f.cofactor == 1 and len(f.factors) == 1 and f.factors[0][1] == 1
            for f in fams
        )
        if len(fams) != 2 or bases != sorted([str(xi), str(xi.conj())]) or not shape:
            problems.append(f"{prefix}: families {[f.describe() for f in fams]}")
        pairs = set()
        for f in fams:
            pairs |= set(enumerate_family(f, (1, 1)))
        want = {(s * x, s * y) for x, y in expected for s in (1, -1)}
        if pairs != want:
            problems.append(f"{prefix}: m=1 gives {sorted(pairs)}")
    ok = not problems
    criterion(4, "d = 2 family structure for z = 17 and z = 41", ok, "; ".join(problems) or "+-eta^(odd) xi_17*, +-eta^(odd) xi_41*")
    assert ok, problems


def _brute_unit(d, bound):
    """Smallest unit > 1 of the full ring of integers: (x + y sqrt d)/2 with minimal y."""
    for y in range(1, bound + 1):
        for s in (-4, 4):
            t = d * y * y + s
            x = isqrt(t) if t > 0 else 0
            if t > 0 and x * x == t:
                return Field(d)(F(x, 2), F(y, 2))
    return None


def test_criterion_5_fundamental_units(criterion):
    t0 = time.perf_counter()
    bad = []
    ds = [d for d in range(2, 51) if _squarefree(d)]
    for d in ds:
        want = _brute_unit(d, 10**4)
        got = QuadCtx(d).eta
        if got != want:
            bad.append((d, str(got), str(want)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10.0
    criterion(5, "fundamental units d <= 50 vs brute force", ok, f"{len(ds)} fields, {len(bad)} mismatches, {elapsed:.2f}s {bad[:3]}")
    assert ok, bad


def test_criterion_6_solvability(criterion):
    bound = 60
    top = 60 * bound * bound
    two = bytearray(top + 1)
    for a in range(isqrt(top) + 1):
        for b in range(a, isqrt(top - a * a) + 1):
            two[a * a + b * b] = 1

    def sum_of(n, N):
        if n == 2:
            return bool(two[N])
        return any(sum_of(n - 1, N - a * a) for a in range(isqrt(N) + 1))

    bad = []
    checked = 0
    for d in range(2, 61):
        if not _squarefree(d):
            continue
        for n in (2, 3, 4):
            exists = any(sum_of(n, d * y * y) for y in range(1, bound + 1))
            got = solvable(n, d)
            checked += 1
            if bool(got) != exists:
                bad.append((n, d, bool(got), exists))
            if n == 2 and any(p % 4 == 3 and d % p == 0 for p in range(3, d + 1)) and got:
                bad.append(("3 mod 4 prime", d))
            if n == 3 and d % 8 == 7 and got:
                bad.append(("7 mod 8", d))
    ok = not bad
    criterion(6, "solvability vs exhaustive search", ok, f"{checked} (n, d) pairs, {len(bad)} disagreements {bad[:3]}")
    assert ok, bad


def test_criterion_7_simplex_incenter(criterion):
    S = Simplex([(7, 0, 0), (0, 7, 0), (0, 0, 7), (1, 1, 1)])
    rep = incenter_report(S)
    inc = incenter(S)
    target = (F(35, 23),) * 3
    tetra_ok = inc == target and rep.all_equivalent and rep.d == 3
    rng = random.Random(7)
    eq_bad = 0
    for _ in range(20):
        p, q, r = (F(rng.randint(1, 50), rng.randint(1, 9)) for _ in range(3))
        if incenter(Simplex(equifacial(p, q, r))) != (0, 0, 0):
            eq_bad += 1
    ok = tetra_ok and eq_bad == 0
    dist = sorted({str(facet_distance_sq(S, i, inc)) for i in range(4)}) if inc else None
    dist_target = sorted({str(facet_distance_sq(S, i, target)) for i in range(4)})
    detail = (
        f"tetrahedron incenter {tuple(map(str, inc)) if inc else None} (facet distance^2 {dist}), "
        f"expected (35/23,35/23,35/23) (facet distance^2 {dist_target}); d = {rep.d}; "
        f"equifacial {20 - eq_bad}/20 at origin"
    )
    criterion(7, "simplex incenter", ok, detail)
    assert ok, detail


def test_criterion_8_property_suites(criterion):
    rng = random.Random(2024)
    counts = {}
    # the bisector identity for emitted bisectors
    n_ok = 0
    for i in range(1000):
        a, b = bisectable_pair(rng, rng.choice((2, 3, 4)))
        r = bisector_directions(a, b)
        if r.exists and verify_star(a, b, r.c_plus) and verify_star(a, b, r.c_minus):
            n_ok += 1
    counts["bisector"] = n_ok
    # isotomic / isogonal involutions
    n_ok = 0
    for i in range(1000):
        T = Triangle(*random_triangle(rng))
        P = interior_point(rng, T)
        if isotomic(T, isotomic(T, P)) == P and isogonal(T, isogonal(T, P)) == P:
            n_ok += 1
    counts["involution"] = n_ok
    # incenter equidistance
    n_ok = 0
    for i in range(100):
        n = (2, 3, 4)[i % 3]
        S = Simplex(rational_incenter_simplex(rng, n))
        inc = incenter(S)
        if inc is not None and len({facet_distance_sq(S, j, inc) for j in range(n + 1)}) == 1:
            n_ok += 1
    counts["equidistance"] = n_ok
    # construct -> incentric centers
    n_ok = 0
    for i in range(100):
        if incentric_centers(construct(*construct_input(rng))) is not None:
            n_ok += 1
    counts["construct"] = n_ok
    ok = counts == {"bisector": 1000, "involution": 1000, "equidistance": 100, "construct": 100}
    criterion(8, "property suites", ok, ", ".join(f"{k} {v}" for k, v in counts.items()))
    assert ok, counts
