"""Command-line surface.

Subcommands: orbits, simples, indicators, counts, ratio, verify.  Exit
codes: 0 success, 2 invalid input, 3 unsupported stabilizer, 4 internal
consistency violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import UnsupportedStabilizerError
from .hopf import BismashAlgebra
from .indicators import (
    ConsistencyError,
    classify_simples,
    count_m,
    full_report,
    jp_counts,
    ratio,
)
from .matched_pair import (
    Factorization,
    FactorizationError,
    build_factorization,
    build_hn,
    build_jn,
    orbit_table_csv,
    orbit_table_json,
    orbits,
    verify_matched_pair,
)
from .perm import enumerate_group, parse_cycles

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_INCONSISTENT = 4


def _build(args) -> Factorization:
    if args.gen_f or args.gen_g:
        if not (args.gen_f and args.gen_g and args.degree):
            raise ValueError("--gen-f, --gen-g, and --degree go together")
        gens_f = [parse_cycles(t, args.degree) for t in args.gen_f]
        gens_g = [parse_cycles(t, args.degree) for t in args.gen_g]
        F = enumerate_group(gens_f, degree=args.degree)
        G = enumerate_group(gens_g, degree=args.degree)
        if args.gen_l:
            L = enumerate_group(
                [parse_cycles(t, args.degree) for t in args.gen_l],
                degree=args.degree,
            )
        else:
            L = enumerate_group(list(F.generators) + list(G.generators), degree=args.degree)
        return build_factorization(L, F, G)
    if args.n is None:
        raise ValueError("either --n with --variant, or custom generators")
    return build_hn(args.n) if args.variant == "H" else build_jn(args.n)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_orbits(args) -> int:
    fact = _build(args)
    if args.format == "json":
        _emit(orbit_table_json(fact), args.output)
    elif args.format == "csv":
        _emit(orbit_table_csv(fact), args.output)
    else:
        lines = []
        for o in orbits(fact):
            lines.append(
                f"x = {o.representative.cycle_string():<20} orbit size {o.size:>4}"
                f"   |F_x| = {o.stabilizer.order}"
            )
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_simples(args) -> int:
    fact = _build(args)
    descs = classify_simples(fact)
    if args.format == "json":
        payload = [
            {
                "orbit_rep": d.orbit.representative.cycle_string(),
                "stabilizer_order": d.orbit.stabilizer.order,
                "irrep": repr(d.irrep),
                "dimension": d.dimension,
            }
            for d in descs
        ]
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"x = {d.orbit.representative.cycle_string():<16} "
            f"irrep {repr(d.irrep):<20} dim {d.dimension}"
            for d in descs
        ]
        lines.append(f"total: {len(descs)} simple modules")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_indicators(args) -> int:
    fact = _build(args)
    report = full_report(fact)
    variant = args.variant if args.n is not None else "custom"
    if args.format == "json":
        _emit(report.to_json(n=args.n, variant=variant), args.output)
    elif args.format == "csv":
        _emit(report.to_csv(), args.output)
    else:
        lines = [
            f"x = {d.orbit.representative.cycle_string():<16} "
            f"irrep {repr(d.irrep):<20} dim {d.dimension:>3}  nu = {d.indicator}"
            for d in report.descriptors
        ]
        lines.append(
            f"Tr(alpha) = {report.trace_alpha}, sum nu*dim = {report.sum_nu_dim}"
        )
        if report.m1 is not None:
            lines.append(f"m0 = {report.m0}, m1 = {report.m1}")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_counts(args) -> int:
    counts = jp_counts(args.p)
    payload = {
        "p": counts.p,
        "m0": counts.m0,
        "m1": counts.m1,
        "dim1_simples": counts.dim1_simples,
        "dim1_positive": counts.dim1_positive,
        "dimp_simples": counts.dimp_simples,
        "dimp_positive": counts.dimp_positive,
    }
    if args.build:
        fact = build_jn(args.p)
        m0, m1 = count_m(fact)
        payload["built_m0"], payload["built_m1"] = m0, m1
        if (m0, m1) != (counts.m0, counts.m1):
            raise ConsistencyError("built counts disagree with closed form")
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        _emit("\n".join(f"{k} = {v}" for k, v in payload.items()), args.output)
    return EXIT_OK


def _cmd_ratio(args) -> int:
    value = ratio(args.p)
    text = f"{value.numerator}/{value.denominator} ~ {float(value):.6g}"
    if args.format == "json":
        text = json.dumps(
            {"p": args.p, "ratio": f"{value.numerator}/{value.denominator}",
             "decimal": float(value)}
        )
    _emit(text, args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    fact = _build(args)
    mp = verify_matched_pair(fact, seed=args.seed)
    algebra = BismashAlgebra(fact)
    hopf = algebra.verify_hopf_axioms(seed=args.seed)
    trace = algebra.antipode_trace()
    from .perm import count_involutions

    inv = count_involutions(fact.L)
    lines = [
        f"matched-pair axioms: {'pass' if mp.passed else 'FAIL'} ({mp.checks} checks)",
        f"hopf axioms:         {'pass' if hopf.passed else 'FAIL'} ({hopf.checks} checks)",
        f"trace identity:      Tr(alpha) = {trace}, i_L = {inv} "
        f"({'pass' if trace == inv else 'FAIL'})",
    ]
    closed = algebra.lambda_squared() == algebra.lambda_squared_direct()
    lines.append(f"Lambda^[2] forms:    {'pass' if closed else 'FAIL'}")
    ok = mp.passed and hopf.passed and trace == inv and closed
    if not mp.passed:
        lines.append(f"  witness: {mp.witness} ({mp.message})")
    for failure in hopf.failures[:5]:
        lines.append(f"  {failure}")
    _emit("\n".join(lines), args.output)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def _add_build_args(sub) -> None:
    sub.add_argument("--n", type=int, default=None, help="degree of S_n")
    sub.add_argument(
        "--variant", choices=("H", "J"), default="J",
        help="H: F = S_(n-1), G = C_n; J: F = C_n, G = S_(n-1)",
    )
    sub.add_argument("--degree", type=int, default=None)
    sub.add_argument("--gen-l", action="append", default=None,
                     help="cycle-notation generator of L (repeatable)")
    sub.add_argument("--gen-f", action="append", default=None)
    sub.add_argument("--gen-g", action="append", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bismash",
        description="Exact bismash-product Hopf algebra computations",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, fn, needs_group in (
        ("orbits", _cmd_orbits, True),
        ("simples", _cmd_simples, True),
        ("indicators", _cmd_indicators, True),
        ("counts", _cmd_counts, False),
        ("ratio", _cmd_ratio, False),
        ("verify", _cmd_verify, True),
    ):
        sub = subs.add_parser(name)
        sub.set_defaults(func=fn)
        if needs_group:
            _add_build_args(sub)
        else:
            sub.add_argument("--p", type=int, required=True, help="odd prime")
        if name == "counts":
            sub.add_argument(
                "--build", action="store_true",
                help="also build J_p and cross-check the counts",
            )
        sub.add_argument(
            "--format", choices=("table", "json", "csv"), default="table"
        )
        sub.add_argument("--output", default=None)
        sub.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedStabilizerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, FactorizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
