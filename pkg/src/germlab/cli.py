"""Command-line front end ``germ-lab``.

Exit codes: 0 ok or holds, 2 input error, 3 skipped / non-isolated / not
finite, 4 theorem violation.  Reports go to stdout, diagnostics to stderr.
``--json PATH`` writes the JSON report to PATH (``-`` for stdout) in place of
the text report.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from . import serialize
from .catalog import SuiteConfig, run_suite
from .errors import DegreeCapExceeded, GermLabError, ParseError
from .germmap import MapGerm, VerdictStatus, local_multiplicity, reduced_preimage, verify_theorem
from .localsb import DEFAULT_DEGREE_CAP, mora_normal_form
from .milnor import milnor_number
from .parser import parse_map, parse_polynomial
from .polyring import INF, Ring

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SKIPPED = 3
EXIT_VIOLATED = 4


class InputError(Exception):
    pass


def _ring(args) -> Ring:
    names = [v.strip() for v in args.vars.split(",")]
    if not all(names) or len(set(names)) != len(names):
        raise InputError(f"invalid variable list {args.vars!r}")
    return Ring(names)


def _map(args, ring: Ring) -> MapGerm:
    return MapGerm(parse_map(args.map, ring))


def _emit(args, command, inputs, result, text, elapsed_ms=None):
    if args.json is None:
        print(text)
        return
    doc = serialize.envelope(command, inputs, result, elapsed_ms)
    out = serialize.dumps(doc)
    if args.json == "-":
        sys.stdout.write(out)
    else:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(out)


def cmd_milnor(args) -> int:
    ring = _ring(args)
    f = parse_polynomial(args.f, ring)
    res = milnor_number(f, args.degree_cap)
    _emit(args, "milnor", {"vars": list(ring.names), "f": str(f)}, serialize.milnor_json(res), str(res))
    return EXIT_OK if res.is_defined else EXIT_SKIPPED


def cmd_mult(args) -> int:
    ring = _ring(args)
    F = _map(args, ring)
    m = local_multiplicity(F, args.degree_cap)
    text = "NotFinite" if m is INF else str(m)
    _emit(args, "mult", {"vars": list(ring.names), "map": [str(c) for c in F]}, serialize.multiplicity_json(m), text)
    return EXIT_SKIPPED if m is INF else EXIT_OK


def cmd_pullback(args) -> int:
    ring = _ring(args)
    F = _map(args, ring)
    g = parse_polynomial(args.g, ring)
    pre = reduced_preimage(g, F)
    text = f"g o F = {pre.pullback}\nh = {pre.h}\nr = {pre.r}\npure = {str(pre.pure).lower()}"
    inputs = {"vars": list(ring.names), "map": [str(c) for c in F], "g": str(g)}
    _emit(args, "pullback", inputs, serialize.preimage_json(pre), text)
    return EXIT_OK


def _report_text(rep) -> str:
    lines = [
        f"g = {rep.g}",
        f"F = ({rep.F})",
        f"multiplicity = {'NotFinite' if rep.multiplicity is INF else rep.multiplicity}",
        f"mu(V) = {rep.mu_V}",
        f"mu(W) = {rep.mu_W}",
    ]
    if rep.h is not None:
        lines.append(f"h = {rep.h}   r = {rep.r}   pure = {str(rep.pure).lower()}")
    lines.append(f"inequality: {rep.inequality_verdict}")
    lines.append(f"corollary: {rep.corollary_verdict}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    ring = _ring(args)
    F = _map(args, ring)
    g = parse_polynomial(args.g, ring)
    rep = verify_theorem(g, F, args.degree_cap)
    inputs = {"vars": list(ring.names), "map": [str(c) for c in F], "g": str(g)}
    _emit(args, "verify", inputs, serialize.report_json(rep), _report_text(rep))
    statuses = (rep.inequality_verdict.status, rep.corollary_verdict.status)
    if VerdictStatus.VIOLATED in statuses:
        return EXIT_VIOLATED
    if rep.inequality_verdict.status is VerdictStatus.SKIPPED:
        return EXIT_SKIPPED
    return EXIT_OK


def cmd_suite(args) -> int:
    try:
        cfg = SuiteConfig(
            seed=args.seed,
            num_cases=args.cases,
            n=args.n,
            max_degree=args.max_degree,
            degree_cap=args.degree_cap,
            random_germs=args.random_germs,
            identity_maps=args.identity_maps,
            workers=args.workers,
        )
    except GermLabError as exc:
        raise InputError(str(exc)) from exc
    start = time.perf_counter()
    report = run_suite(cfg)
    elapsed_ms = None if args.no_timing else round(1000 * (time.perf_counter() - start))
    c = report.counters
    text = (
        f"suite n={cfg.n} seed={cfg.seed} cases={cfg.num_cases}\n"
        f"holds={c['holds']} violated={c['violated']} equality={c['equality_cases']} "
        f"outside_hypotheses={c['outside_hypotheses']} skipped={c['skipped']} {c['skipped_by_reason']}\n"
        f"corollary holds={c['corollary_holds']} violated={c['corollary_violated']}\n"
        f"{'OK' if report.success else 'VIOLATION'}"
    )
    inputs = {"n": cfg.n, "cases": cfg.num_cases, "seed": cfg.seed}
    _emit(args, "suite", inputs, serialize.suite_json(report), text, elapsed_ms)
    if args.json not in (None, "-"):
        print(text)
    return EXIT_OK if report.success else EXIT_VIOLATED


def cmd_nf(args) -> int:
    ring = _ring(args)
    ideal = parse_map(args.ideal, ring)
    f = parse_polynomial(args.f, ring)
    if any(p.is_zero() for p in ideal):
        raise InputError("ideal generators must be nonzero")
    r = mora_normal_form(f, ideal, degree_cap=args.degree_cap)
    inputs = {"vars": list(ring.names), "ideal": [str(p) for p in ideal], "f": str(f)}
    _emit(args, "nf", inputs, {"normal_form": str(r)}, str(r))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germ-lab",
        description="Milnor numbers, finite map germs and pullback verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vars_required=True):
        if vars_required:
            p.add_argument("--vars", required=True, help="ordered variable names, e.g. x,y")
        p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")
        p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP)
        return p

    p = common(sub.add_parser("milnor", help="Milnor number of f at the origin"))
    p.add_argument("f")
    p.set_defaults(func=cmd_milnor)

    p = common(sub.add_parser("mult", help="local multiplicity of a map germ"))
    p.add_argument("--map", required=True, help="components separated by ';'")
    p.set_defaults(func=cmd_mult)

    p = common(sub.add_parser("pullback", help="g o F, its reduced equation h and exponent r"))
    p.add_argument("--map", required=True)
    p.add_argument("g")
    p.set_defaults(func=cmd_pullback)

    p = common(sub.add_parser("verify", help="check mu(F^-1(V)) >= mu(V) and the smoothness corollary"))
    p.add_argument("--map", required=True)
    p.add_argument("g")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("suite", help="run the seeded verification suite"), vars_required=False)
    p.add_argument("--n", type=int, default=2, choices=(2, 3))
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--random-germs", action="store_true", help="draw perturbed Brieskorn germs instead of the catalog")
    p.add_argument("--identity-maps", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omit the timing block from the JSON report")
    p.set_defaults(func=cmd_suite)

    p = common(sub.add_parser("nf", help="Mora normal form of f with respect to an ideal"))
    p.add_argument("--ideal", required=True, help="generators separated by ';'")
    p.add_argument("f")
    p.set_defaults(func=cmd_nf)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"germ-lab: parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegreeCapExceeded as exc:
        print(f"germ-lab: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    except (InputError, GermLabError) as exc:
        print(f"germ-lab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"germ-lab: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
