"""The `hecke` command line: JSON-lines output over the library surface.

Every subcommand echoes its inputs and prints one JSON record per line
with reals at 15 significant digits, so repeated runs diff cleanly.
Exit codes: 2 for domain errors, 3 for data errors, 4 for internal
consistency failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import li as li_mod
from .cache import TraceCache
from .classnum import class_number
from .dirichlet import (
    DirichletCharacter,
    load_character,
    quadratic_character,
    trivial_character,
)
from .errors import DataError, DomainError, InternalConsistencyError
from .newforms import level_log_term, nu_table
from .oracle import gamma0_dimension_oracle, trace_oracle
from .trace import HeckeSpace, dimension, set_persistent_cache, trace_hecke


# ---------------------------------------------------------------------
# output plumbing


def _fmt(v):
    """Render one JSON value; floats at 15 significant digits."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".15g")
    if isinstance(v, int):
        return str(v)
    if v is None:
        return "null"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_fmt(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return json.dumps(str(v))


def emit(record: dict) -> None:
    sys.stdout.write(_fmt(record) + "\n")


def parse_char(spec: str, N: int) -> DirichletCharacter:
    if spec == "trivial":
        return trivial_character(N)
    if spec.startswith("kronecker:"):
        try:
            D = int(spec.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad kronecker discriminant in {spec!r}") from None
        return quadratic_character(D, N)
    if spec.startswith("file:"):
        chi = load_character(spec.split(":", 1)[1])
        if chi.modulus != N:
            raise DataError(f"character modulus {chi.modulus} does not match level {N}")
        return chi
    raise DomainError(f"unknown character spec {spec!r} (use trivial, kronecker:D, file:PATH)")


def _space(args) -> HeckeSpace:
    return HeckeSpace(args.weight, args.level, parse_char(args.char, args.level))


def _wire_cache(args) -> None:
    if getattr(args, "no_cache", False):
        set_persistent_cache(None)
    else:
        set_persistent_cache(TraceCache())


# ---------------------------------------------------------------------
# subcommands


def cmd_trace(args) -> int:
    _wire_cache(args)
    space = _space(args)
    tv = trace_hecke(space, args.n)
    rec = {
        "k": args.weight,
        "N": args.level,
        "char": args.char,
        "n": args.n,
        "trace_re": tv.approx.real,
        "trace_im": tv.approx.imag,
        "snapped": tv.snapped_integer,
        "validated": tv.validated,
    }
    if args.exact:
        rec["exact"] = {
            "order": tv.exact.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in tv.exact.coeffs],
        }
    emit(rec)
    return 0


def cmd_dim(args) -> int:
    _wire_cache(args)
    space = _space(args)
    emit({"k": args.weight, "N": args.level, "char": args.char, "dim": dimension(space)})
    return 0


def cmd_nu(args) -> int:
    _wire_cache(args)
    space = _space(args)
    table = nu_table(space)
    emit(
        {
            "k": args.weight,
            "N": args.level,
            "char": args.char,
            "conductor": table.conductor,
            "nu": {str(m): table.entries[m] for m in sorted(table.entries)},
            "level_log": level_log_term(table),
        }
    )
    return 0


def cmd_classnum(args) -> int:
    entry = class_number(args.D)
    emit({"D": args.D, "h": entry.h, "w": entry.w})
    return 0


def cmd_oracle(args) -> int:
    if args.oracle_cmd == "check-level1":
        space = HeckeSpace(args.weight, 1, trivial_character(1))
        formula = trace_hecke(space, args.n).snapped_integer
        reference = trace_oracle(args.n, args.weight)
        emit(
            {
                "k": args.weight,
                "n": args.n,
                "trace_formula": formula,
                "trace_oracle": reference,
                "match": formula == reference,
            }
        )
        return 0
    # dim-gamma0
    reference = gamma0_dimension_oracle(args.level, args.weight)
    formula = dimension(HeckeSpace(args.weight, args.level, trivial_character(args.level)))
    emit(
        {
            "k": args.weight,
            "N": args.level,
            "dim_formula": formula,
            "dim_oracle": reference,
            "match": formula == reference,
        }
    )
    return 0


def _parse_alpha(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise DomainError(f"cannot parse alpha {text!r} as a complex number") from None


def cmd_euler(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if args.euler_cmd == "zero-sum":
        zs = li_mod.euler_factor_zero_sum(alpha, args.p, args.n, args.K)
        emit(
            {
                "alpha": args.alpha,
                "p": args.p,
                "n": args.n,
                "K": args.K,
                "value_re": zs.value.real,
                "value_im": zs.value.imag,
                "error_bound": zs.error_bound,
            }
        )
        return 0
    val = li_mod.euler_factor_li_sum(alpha, args.p, args.n)
    emit(
        {
            "alpha": args.alpha,
            "p": args.p,
            "n": args.n,
            "value_re": val.real,
            "value_im": val.imag,
        }
    )
    return 0


_CSV_COLUMNS = (
    "n",
    "tau",
    "level_term",
    "archimedean_term",
    "prime_sum",
    "binomial_tail",
    "band",
    "cutoff",
    "convention",
)


def _report_row(r: li_mod.LiReport) -> dict:
    return {
        "n": r.n,
        "tau": r.tau,
        "level_term": r.level_term,
        "archimedean_term": r.archimedean_term,
        "prime_sum": r.prime_sum,
        "binomial_tail": r.binomial_tail,
        "band": r.oscillation_band,
        "cutoff": r.cutoff,
        "convention": r.convention,
    }


def cmd_li(args) -> int:
    _wire_cache(args)
    reports = []
    if args.eigen:
        eigen = li_mod.load_eigen_data(args.eigen)
        for n in range(1, args.nmax + 1):
            reports.append(li_mod.tau_f(eigen, n, X=args.cutoff, threads=args.threads))
    else:
        space = _space(args)
        for n in range(1, args.nmax + 1):
            reports.append(
                li_mod.tau_N(
                    space, n, X=args.cutoff, convention=args.convention, threads=args.threads
                )
            )
    for r in reports:
        emit(_report_row(r))
    all_nonneg = all(r.tau >= 0.0 for r in reports)
    emit(
        {
            "summary": f"all tau >= 0 at cutoff {args.cutoff}: {'yes' if all_nonneg else 'no'}",
            "cutoff_dependent": True,
        }
    )
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(",".join(_CSV_COLUMNS) + "\n")
            for r in reports:
                row = _report_row(r)
                fh.write(
                    ",".join(
                        format(row[c], ".15g") if isinstance(row[c], float) else str(row[c])
                        for c in _CSV_COLUMNS
                    )
                    + "\n"
                )
    if args.plot_dir:
        from .plotting import render_li_figures

        for path in render_li_figures(reports, args.plot_dir):
            emit({"figure": str(path)})
    return 0


# ---------------------------------------------------------------------
# parser


def _add_space_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--weight", type=int, required=True, help="weight k")
    p.add_argument("--level", type=int, required=True, help="level N")
    p.add_argument(
        "--char",
        default="trivial",
        help="character: trivial, kronecker:D, or file:PATH",
    )
    p.add_argument("--no-cache", action="store_true", help="skip the persistent trace cache")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hecke",
        description="Hecke traces, newform dimensions, and Li-type coefficients",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("trace", help="tr T(n) on S_k(N, chi)")
    _add_space_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="include the exact cyclotomic value")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("dim", help="dim S_k(N, chi)")
    _add_space_flags(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("nu", help="newform dimensions nu_m over the divisor lattice")
    _add_space_flags(p)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("classnum", help="class number h(D) and unit count w(D)")
    p.add_argument("-D", type=int, required=True, dest="D", help="negative discriminant")
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("oracle", help="independent ground-truth checks")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("check-level1", help="trace formula vs q-expansion oracle")
    q.add_argument("--weight", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_oracle, no_cache=True)
    q = osub.add_parser("dim-gamma0", help="trace formula vs Gamma_0(N) dimension count")
    q.add_argument("--weight", type=int, required=True)
    q.add_argument("--level", type=int, required=True)
    q.set_defaults(func=cmd_oracle, no_cache=True)

    p = sub.add_parser("euler", help="single Euler-factor sums")
    esub = p.add_subparsers(dest="euler_cmd", required=True)
    q = esub.add_parser("zero-sum", help="sum over zeros of 1 - alpha p^{-s}")
    q.add_argument("--alpha", required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--K", type=int, required=True, help="zero-pair truncation")
    q.set_defaults(func=cmd_euler)
    q = esub.add_parser("li-sum", help="binomial-weighted prime-power sum")
    q.add_argument("--alpha", required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_euler)

    p = sub.add_parser("li", help="Li-type coefficients tau(n) with breakdown")
    _add_space_flags(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=10_000, help="prime-power cutoff X")
    p.add_argument(
        "--convention",
        choices=("paper", "hadamard-corrected"),
        default="paper",
    )
    p.add_argument("--csv", help="also write a CSV table to this path")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--eigen", help="EigenData file: compute tau_f for one newform instead")
    p.add_argument("--plot-dir", help="render figures (tau and breakdown) into this directory")
    p.set_defaults(func=cmd_li)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
