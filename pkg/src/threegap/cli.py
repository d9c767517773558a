"""Command-line surface: predict, oracle, verify, evolve, iet-trace, zorich.

Output is byte-deterministic for a fixed invocation: fields appear in fixed
order and every rational is rendered as a reduced "p/q" string.  The
optional ``--decimal K`` flag adds display-only K-digit decimal columns.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import random
import sys
from fractions import Fraction

from .errors import KeaneViolation, DomainError, ThreeGapError
from .gaps import gap_evolution, predict
from .iet import IntervalExchange, make_rotation, rauzy_step, reconstruct_cf, zorich_quotients
from .numtheory import (
    CFKind,
    ContinuedFraction,
    cf_from_rational,
    format_partials,
    format_rational,
    parse_cf_text,
    parse_rational,
)
from .oracle import circular_gaps, kronecker_points, verify

DEPTH_ENV = "THREEGAP_DEPTH_DEFAULT"
DEPTH_FALLBACK = 30
NAMED_EXPANSIONS = ("golden", "sqrt2", "e", "random")


def named_partials(name: str, depth: int, seed: int | None = None) -> tuple[int, ...]:
    """Partial quotients for the named expansions, truncated to ``depth``."""
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    if name == "golden":
        return (1,) * depth
    if name == "sqrt2":
        return (2,) * depth
    if name == "e":
        out = [1]
        even = 2
        while len(out) < depth:
            out.extend((even, 1, 1))
            even += 2
        return tuple(out[:depth])
    if name == "random":
        if seed is None:
            raise DomainError("--cf random needs --seed for a reproducible expansion")
        rng = random.Random(seed)
        return tuple(rng.randint(1, 9) for _ in range(depth))
    raise DomainError(f"unknown expansion name {name!r}")


def resolve_step(args) -> tuple[Fraction, ContinuedFraction]:
    """The step z and its canonical complete expansion, from --z or --cf.

    A --cf value (literal prefix or named expansion) is realized as the exact
    rational of its final convergent and re-expanded canonically.
    """
    if args.z is not None:
        z = parse_rational(args.z)
    else:
        spec = args.cf
        if spec in NAMED_EXPANSIONS:
            partials = named_partials(spec, args.depth, args.seed)
        else:
            a0, partials = parse_cf_text(spec)
            if a0 != 0:
                raise DomainError("expansions must start with '0;' for values in (0, 1)")
        z = ContinuedFraction(tuple(partials), CFKind.IRRATIONAL_PREFIX).value()
    return z, cf_from_rational(z)


def decimal_string(x: Fraction, digits: int) -> str:
    """Display-only decimal rendering, rounded half-up to ``digits`` places."""
    if digits < 1:
        raise DomainError(f"--decimal needs a positive digit count, got {digits}")
    scaled, rem = divmod(x.numerator * 10**digits, x.denominator)
    if 2 * rem >= x.denominator:
        scaled += 1
    whole, frac = divmod(scaled, 10**digits)
    return f"{whole}.{frac:0{digits}d}"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue().rstrip("\n")


def _table_text(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _render_rows(fmt: str, header: list[str], rows: list[list[str]], records) -> str:
    if fmt == "json":
        return _dumps(records)
    if fmt == "csv":
        return _csv_text(header, rows)
    return _table_text(header, rows)


def _structure_fields(structure, decimal: int | None):
    rec = structure.to_record()
    if decimal is not None:
        for key in ("l1", "l2", "l3"):
            rec[key + "_dec"] = decimal_string(getattr(structure, key), decimal)
    return rec


def cmd_predict(args) -> tuple[str, int]:
    z, cf = resolve_step(args)
    rec = _structure_fields(predict(cf, z, args.n), args.decimal)
    header = list(rec)
    rows = [[str(rec[k]) for k in header]]
    return _render_rows(args.format, header, rows, rec), 0


def cmd_oracle(args) -> tuple[str, int]:
    z, _ = resolve_step(args)
    gaps = circular_gaps(kronecker_points(z, args.n))
    rec = {"z": format_rational(z), "n": args.n, "gaps": gaps.as_strings()}
    header = ["length", "count"]
    rows = [[format_rational(l), str(c)] for l, c in gaps.entries]
    if args.decimal is not None:
        rec["decimals"] = {
            format_rational(l): decimal_string(l, args.decimal) for l, _ in gaps.entries
        }
        header.append("length_dec")
        for row, (l, _) in zip(rows, gaps.entries):
            row.append(decimal_string(l, args.decimal))
    return _render_rows(args.format, header, rows, rec), 0


def cmd_verify(args) -> tuple[str, int]:
    z, cf = resolve_step(args)
    report = verify(cf, z, args.n_lo, args.n_max)
    rec = report.to_record()
    header = ["z", "n_lo", "n_hi", "checked", "mismatch_count"]
    rows = [[rec["z"], str(rec["n_lo"]), str(rec["n_hi"]), str(rec["checked"]), str(len(report.mismatches))]]
    return _render_rows(args.format, header, rows, rec), 0 if report.ok else 1


def cmd_evolve(args) -> tuple[str, int]:
    z, cf = resolve_step(args)
    records = [_structure_fields(s, args.decimal) for s in gap_evolution(cf, z, args.n_max)]
    header = list(records[0])
    rows = [[str(rec[k]) for k in header] for rec in records]
    return _render_rows(args.format, header, rows, records), 0


def cmd_iet_trace(args) -> tuple[str, int]:
    parts = args.lengths.split(",")
    if len(parts) != 2:
        raise DomainError(f'--lengths wants two rationals "la,lb", got {args.lengths!r}')
    f = IntervalExchange(lengths=(parse_rational(parts[0]), parse_rational(parts[1])))
    records = []
    failure = None
    for step_index in range(1, args.steps + 1):
        try:
            step = rauzy_step(f)
        except KeaneViolation as exc:
            failure = {
                "error": "KeaneViolation",
                "message": str(exc),
                "step": step_index,
            }
            break
        f = step.after
        records.append(
            {
                "step": step_index,
                "type": step.eps,
                "winner": step.winner,
                "loser": step.loser,
                "lambda_a": format_rational(f.lengths[0]),
                "lambda_b": format_rational(f.lengths[1]),
            }
        )
    header = ["step", "type", "winner", "loser", "lambda_a", "lambda_b"]
    rows = [[str(rec[k]) for k in header] for rec in records]
    if args.format == "json":
        text = "\n".join(_dumps(rec) for rec in records)
    elif args.format == "csv":
        text = _csv_text(header, rows)
    else:
        text = _table_text(header, rows)
    if failure is not None:
        sys.stderr.write(_dumps(failure) + "\n")
        return text, 1
    return text, 0


def cmd_zorich(args) -> tuple[str, int]:
    z, _ = resolve_step(args)
    run = zorich_quotients(make_rotation(z), args.max_blocks)
    partials = reconstruct_cf(run.quotients, z)
    rec = {
        "z": format_rational(z),
        "quotients": list(run.quotients),
        "cf": format_partials(0, partials),
        "stopped": run.stopped,
    }
    header = ["z", "quotients", "cf", "stopped"]
    rows = [[rec["z"], " ".join(str(q) for q in run.quotients), rec["cf"], rec["stopped"]]]
    return _render_rows(args.format, header, rows, rec), 0


COMMANDS = {
    "predict": cmd_predict,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "evolve": cmd_evolve,
    "iet-trace": cmd_iet_trace,
    "zorich": cmd_zorich,
}


def _add_step_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--z", help='rational step, e.g. "55/89"')
    group.add_argument(
        "--cf",
        help='expansion "0;1,1,2" or a named one: golden, sqrt2, e, random',
    )
    parser.add_argument(
        "--depth",
        type=int,
        default=None,
        help=f"terms used for named expansions (default ${DEPTH_ENV} or {DEPTH_FALLBACK})",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for --cf random")


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "table"), default="json")
    parser.add_argument(
        "--decimal",
        type=int,
        default=None,
        metavar="K",
        help="add display-only K-digit decimal columns",
    )
    parser.add_argument("--output", default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threegap",
        description="Exact gap structure of the circle points 0, z, 2z, ... "
        "computed by closed formulas, checked by brute force, and explored "
        "through interval-exchange induction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="gap lengths and counts for n points")
    _add_step_options(p)
    p.add_argument("--n", type=int, required=True, help="number of points (>= 2)")
    _add_output_options(p)

    p = sub.add_parser("oracle", help="measured gap multiset for n points")
    _add_step_options(p)
    p.add_argument("--n", type=int, required=True, help="number of points (>= 1)")
    _add_output_options(p)

    p = sub.add_parser("verify", help="predicted vs measured gaps over a range of n")
    _add_step_options(p)
    p.add_argument("--n-lo", type=int, default=2, help="first n to check (default 2)")
    p.add_argument("--n-max", type=int, required=True, help="last n to check")
    _add_output_options(p)

    p = sub.add_parser("evolve", help="gap table for every n = 2 .. n-max")
    _add_step_options(p)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("iet-trace", help="elementary induction steps for two lengths")
    p.add_argument("--lengths", required=True, help='two rationals, e.g. "7/10,3/10"')
    p.add_argument("--steps", type=int, required=True, help="number of steps to trace")
    _add_output_options(p)

    p = sub.add_parser("zorich", help="acceleration counts and the rebuilt expansion")
    _add_step_options(p)
    p.add_argument("--max-blocks", type=int, default=1000)
    _add_output_options(p)

    return parser


def _default_depth(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get(DEPTH_ENV)
    if raw is None:
        return DEPTH_FALLBACK
    try:
        return int(raw)
    except ValueError:
        parser.error(f"${DEPTH_ENV} must be an integer, got {raw!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "depth", None) is None and hasattr(args, "depth"):
        args.depth = _default_depth(parser)
    try:
        text, code = COMMANDS[args.command](args)
    except ThreeGapError as exc:
        record = {"error": type(exc).__name__, "message": str(exc)}
        n = getattr(exc, "n", None)
        if n is not None:
            record["n"] = n
        sys.stderr.write(_dumps(record) + "\n")
        return 1
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
