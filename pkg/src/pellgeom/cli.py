"""Command-line front end.

Every number is printed in the exact scalar text format.  Vectors are written
``(x1,x2,...)`` and lists of points are separated by ``;``.

Exit codes: 0 success, 2 domain or parse error, 3 search/factorization bound
exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Sequence

from . import bisector, pell, simplex, triangle
from .errors import BoundExceeded, DomainError
from .exactfield import Field, Q, Scalar, parse_field, parse_scalar

__all__ = ["main", "run", "parse_vector", "parse_points"]


class ParseError(DomainError):
    pass


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_int(token: str, what: str = "integer") -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise ParseError(f"expected {what}, got {token!r}") from None


def parse_int_list(text: str, what: str = "integer list") -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(parse_int(t, what) for t in text.split(","))


def parse_range(text: str) -> tuple[int, int]:
    mt = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not mt:
        raise ParseError(f"expected a range lo..hi, got {text!r}")
    return int(mt.group(1)), int(mt.group(2))


def _scalar(token: str, field: Field | None) -> Scalar:
    try:
        return parse_scalar(token, field)
    except DomainError as exc:
        raise ParseError(f"bad scalar {token!r}: {exc}") from None


def parse_vector(text: str, field: Field | None = None) -> tuple[Scalar, ...]:
    """``(x1,x2,...)`` with each coordinate in the scalar text format."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"expected a parenthesized vector, got {text!r}")
    tokens = [t for t in s[1:-1].split(",")]
    if any(not t.strip() for t in tokens):
        raise ParseError(f"empty coordinate in {text!r}")
    coords = [_scalar(t, field) for t in tokens]
    return _unify(coords, field, text)


def parse_points(text: str, field: Field | None = None) -> list[tuple[Scalar, ...]]:
    pts = [parse_vector(p, field) for p in text.split(";") if p.strip()]
    if not pts:
        raise ParseError(f"no points in {text!r}")
    flat = _unify([c for p in pts for c in p], field, text)
    out, i = [], 0
    for p in pts:
        out.append(tuple(flat[i : i + len(p)]))
        i += len(p)
    return out


def _unify(coords, field: Field | None, text: str) -> tuple[Scalar, ...]:
    if field is None:
        fields = {c.field for c in coords if not c.field.is_rational}
        if len(fields) > 1:
            raise ParseError(f"coordinates of {text!r} mix fields {sorted(map(str, fields))}")
        field = fields.pop() if fields else Q
    return tuple(c.to_field(field) for c in coords)


# ---------------------------------------------------------------------------
# output


def _s(x) -> str:
    return str(x)


def _pt(p) -> list[str]:
    return [str(c) for c in p]


def _fmt_tuple(t) -> str:
    return "(" + ",".join(str(c) for c in t) + ")"


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, (str, int)) for x in obj):
        yield prefix, "(" + ",".join(str(x) for x in obj) + ")"
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, "null" if obj is None else str(obj).lower() if isinstance(obj, bool) else str(obj)


def emit(result: dict, fmt: str, rows: list[tuple[str, str]] | None = None, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(result, indent=2) + "\n")
        return
    sep = "\t" if fmt == "tsv" else ": "
    for k, v in rows if rows is not None else _flatten(result):
        out.write(f"{k}{sep}{v}\n")


# ---------------------------------------------------------------------------
# subcommands


def _field(args) -> Field | None:
    return None if args.field is None else parse_field(args.field)


def cmd_bisect(args):
    k = _field(args)
    a, b = parse_vector(args.a, k), parse_vector(args.b, k)
    res = bisector.integral_bisectors(a, b) if args.integral else bisector.bisector_directions(a, b)
    out = res.to_json()
    if res.exists:
        out["verify_plus"] = bisector.verify_star(a, b, res.c_plus)
        out["verify_minus"] = bisector.verify_star(a, b, res.c_minus)
    return out, None


def _ctx(args) -> pell.QuadCtx:
    return pell.QuadCtx(args.d)


def cmd_pell_unit(args):
    ctx = _ctx(args)
    return {
        "d": str(ctx.d),
        "eta": str(ctx.eta),
        "eta_norm": str(ctx.eta.norm()),
        "eta_integral": ctx.eta_integral,
        "neg_pell": ctx.neg_pell,
        "unit_Z_sqrt_d": str(ctx.unit),
    }, None


def cmd_pell_prime(args):
    ctx = _ctx(args)
    data = ctx.prime_data(args.p)
    return {
        "d": str(ctx.d),
        "p": str(data.p),
        "in_S": data.in_S,
        "l_p": None if data.l_p is None else str(data.l_p),
        "xi": None if data.xi is None else str(data.xi),
        "in_S_minus": data.in_S_minus,
    }, None


def _families_json(fams: pell.PellLikeFamilies) -> dict:
    return {
        "d": str(fams.d),
        "z": str(fams.z),
        "prefix": [str(a) for a in fams.prefix],
        "sigma": [str(s) for s in fams.sigma],
        "hypotheses_hold": fams.hypotheses_hold,
        "reason": fams.reason,
        "families": [f.to_json() for f in fams.families],
    }


def cmd_pell_solve(args):
    ctx = _ctx(args)
    prefix = parse_int_list(args.prefix, "prefix integer")
    sigma = parse_int_list(args.sigma, "permutation entry") if args.sigma else None
    rep = pell.pell_solve(ctx, prefix, sigma, args.y_bound)
    out = _families_json(rep.families)
    out["y_bound"] = str(args.y_bound)
    out["solutions"] = [[str(x) for x in s] for s in rep.solutions]
    out["outside_classification"] = [[str(x) for x in s] for s in rep.outside]
    return out, None


def cmd_pell_enumerate(args):
    ctx = _ctx(args)
    prefix = parse_int_list(args.prefix, "prefix integer")
    sigma = parse_int_list(args.sigma, "permutation entry") if args.sigma else None
    lo, hi = parse_range(args.m_range)
    fams = pell.pell_like_families(ctx, prefix, sigma)
    out = _families_json(fams)
    sols, rows = [], []
    for i, fam in enumerate(fams.families):
        for x, y in pell.enumerate_family(fam, (lo, hi)):
            t = pell.assemble(fams.prefix, fams.sigma, x, y)
            sols.append({"family": str(i), "solution": [str(c) for c in t]})
            rows.append((str(i), _fmt_tuple(t)))
    out["m_range"] = [str(lo), str(hi)]
    out["solutions"] = sols
    return out, rows if args.format != "json" else None


def cmd_pell_solvable(args):
    res = pell.solvable(args.n, args.d)
    return {"n": str(args.n), "d": str(args.d), "solvable": res.solvable, "reason": res.reason}, None


def cmd_quadruple(args):
    vals = parse_int_list(args.params, "parameter")
    if len(vals) != 5:
        raise ParseError(f"--params needs s,t,u,v,w, got {args.params!r}")
    sigma = parse_int_list(args.sigma, "permutation entry")
    if len(sigma) != 3:
        raise ParseError(f"--sigma needs three entries, got {args.sigma!r}")
    q = pell.pythagorean_quadruple(pell.PythParams(*vals, sigma=sigma, sign=-1 if args.negative else 1))
    return {"quadruple": [str(x) for x in q]}, None


def cmd_oracle(args):
    sols = pell.brute_force_solutions(args.d, args.z, args.bound)
    return (
        {"d": str(args.d), "z": str(args.z), "bound": str(args.bound), "solutions": [[str(x), str(y)] for x, y in sols]},
        [(str(x), str(y)) for x, y in sols] if args.format != "json" else None,
    )


def _simplex(args) -> simplex.Simplex:
    k = _field(args)
    pts = parse_points(args.vertices, k)
    return simplex.Simplex(pts, k)


def cmd_simplex_volume(args):
    S = _simplex(args)
    return {"field": str(S.field), "n": str(S.n), "volume": str(simplex.volume(S))}, None


def cmd_simplex_incenter(args):
    S = _simplex(args)
    rep = simplex.incenter_report(S)
    I = simplex.incenter(S)
    return {"field": str(S.field), **rep.to_json(), "incenter": None if I is None else _pt(I)}, None


def cmd_simplex_report(args):
    S = _simplex(args)
    rep = simplex.incenter_report(S)
    I = simplex.incenter(S)
    return {
        "field": str(S.field),
        "n": str(S.n),
        "vertices": [_pt(v) for v in S.vertices],
        "volume": str(simplex.volume(S)),
        **rep.to_json(),
        "incenter": None if I is None else _pt(I),
        "incenter_distance_sq": None if I is None else str(simplex.facet_distance_sq(S, 0, I)),
    }, None


def _triangle(args) -> triangle.Triangle:
    k = _field(args)
    pts = parse_points(args.vertices, k)
    if len(pts) != 3:
        raise ParseError(f"a triangle needs 3 vertices, got {len(pts)}")
    return triangle.Triangle(*pts, field=k)


def cmd_triangle_centers(args):
    cs = triangle.centers(_triangle(args))
    return cs.to_json(), cs.rows() if args.format == "tsv" else None


def cmd_triangle_decompose(args):
    T = _triangle(args)
    dec = triangle.heronian_decomposition(T)
    radii = triangle.radii_classes(T)
    return {
        "field": str(T.field),
        "sides_sq": [str(T.a2), str(T.b2), str(T.c2)],
        "area": str(T.area),
        "trig": T.has_rational_incenter(),
        "decomposition": None if dec is None else dec.to_json(),
        "radii": None if radii is None else radii.to_json(),
    }, None


def cmd_triangle_construct(args):
    k = _field(args)
    d = _scalar(args.d, k)
    u, v, w = (parse_vector(t, k) for t in (args.u, args.v, args.w))
    tr = parse_vector(args.translation, k)
    T = triangle.construct(d, u, v, w, tr, field=k)
    cs = triangle.centers(T)
    return cs.to_json(), cs.rows() if args.format == "tsv" else None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pellgeom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, field: bool = False):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "tsv", "text"), default="json")
        if field:
            sp.add_argument("--field", help="Q or Q(sqrt m); inferred from the input when omitted")
        return sp

    sp = add("bisect", cmd_bisect, "bisector directions of two lines", field=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--integral", action="store_true", help="integer route with (d, a_n+1, b_n+1)")

    sp = add("pell-unit", cmd_pell_unit, "fundamental unit of Q(sqrt d)")
    sp.add_argument("--d", type=int, required=True)

    sp = add("pell-prime", cmd_pell_prime, "S(d) membership, l_p and xi_p")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    for name, fn, help in (
        ("pell-solve", cmd_pell_solve, "families and bounded solutions of a Pell-like equation"),
        ("pell-enumerate", cmd_pell_enumerate, "expand every family over a range of unit exponents"),
    ):
        sp = add(name, fn, help)
        sp.add_argument("--d", type=int, required=True)
        sp.add_argument("--prefix", required=True, help="a_1,...,a_{n-1}")
        sp.add_argument("--sigma", help="1-based permutation of 1..n")
        if name == "pell-solve":
            sp.add_argument("--y-bound", type=int, default=100)
        else:
            sp.add_argument("--m-range", required=True, help="lo..hi")

    sp = add("pell-solvable", cmd_pell_solvable, "existence of solutions of x_1^2+...+x_n^2 = d x_{n+1}^2")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = add("quadruple", cmd_quadruple, "Pythagorean quadruple from (s,t,u,v,w)")
    sp.add_argument("--params", required=True, help="s,t,u,v,w")
    sp.add_argument("--sigma", default="1,2,3")
    sp.add_argument("--negative", action="store_true", help="negative x_4")

    sp = add("oracle", cmd_oracle, "brute-force solutions of x^2 - d y^2 = -z")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--bound", type=int, default=100)

    for name, fn, help in (
        ("simplex-volume", cmd_simplex_volume, "exact volume"),
        ("simplex-incenter", cmd_simplex_incenter, "facet square classes and the incenter"),
        ("simplex-report", cmd_simplex_report, "volume, facet classes and incenter"),
        ("triangle-centers", cmd_triangle_centers, "the ten centers and radii"),
        ("triangle-decompose", cmd_triangle_decompose, "Heronian scaling decomposition"),
    ):
        sp = add(name, fn, help, field=True)
        sp.add_argument("--vertices", required=True, help='"(x,y);(x,y);..."')

    sp = add("triangle-construct", cmd_triangle_construct, "triangle from three solutions of x1^2+x2^2 = d x3^2", field=True)
    sp.add_argument("--d", required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--translation", default="(0,0)")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, rows = args.fn(args)
    except BoundExceeded as exc:
        err.write(f"error: bound exceeded: {exc}\n")
        return 3
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 2
    emit(result, args.format, rows, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
