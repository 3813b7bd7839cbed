"""Command-line entry point: ``hypgrow {dist,profile,verify,plot}``.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or invalid input,
3 input file not found, 4 I/O error, 5 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .domains import DomainSpecError, OutsideDomainError, load_domain_spec
from .metrics import MetricKind, MetricOverflowError, evaluate
from .profile import ProfileParseError, RayExitError, emit_profile_csv, profile, write_atomic

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_FOUND, EXIT_IO, EXIT_PARSE = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def parse_point(text: str) -> list[float]:
    parts = text.split(",")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals like 0.5,0, got {text!r}") from None
    if len(vals) < 2:
        raise argparse.ArgumentTypeError(f"a point needs at least two coordinates, got {text!r}")
    return vals


def parse_metric(text: str) -> MetricKind:
    try:
        return MetricKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_profile_metric(text: str):
    return None if text in ("none", "g") else parse_metric(text)


def positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypgrow", description="Hyperbolic-type distances in starlike domains.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="evaluate one metric between two points")
    d.add_argument("--domain", required=True, type=Path, help="domain-spec JSON file")
    d.add_argument("--metric", required=True, type=parse_metric)
    d.add_argument("--from", dest="u", required=True, type=parse_point, metavar="X,Y")
    d.add_argument("--to", dest="w", required=True, type=parse_point, metavar="X,Y")
    d.add_argument("--k-method", default="auto", choices=("auto", "closed_form", "graph", "segment_upper"))

    pr = sub.add_parser("profile", help="tabulate g(t) and f_m(t) along a ray to CSV")
    pr.add_argument("--domain", required=True, type=Path)
    pr.add_argument("--metric", required=True, type=parse_profile_metric, help="metric tag, or 'none' for g only")
    pr.add_argument("--direction", type=parse_point, metavar="X,Y", help="default: the domain's boundary point z")
    pr.add_argument("--t-max", type=positive_float, help="default: 95%% of the exit distance")
    pr.add_argument("--steps", type=int, default=64)
    pr.add_argument("--k-method", default="segment_upper", choices=("auto", "graph", "segment_upper"))
    pr.add_argument("--out", required=True, type=Path)

    v = sub.add_parser("verify", help="run the claim suite")
    v.add_argument("--select", nargs="*", default=None, metavar="CLAIM", help="claim ids or id prefixes")
    v.add_argument("--tol-scale", type=positive_float, default=1.0)
    v.add_argument("--report", type=Path, help="write the JSON report here")
    v.add_argument("--timings", action="store_true", help="include per-claim runtime_ms in the report")

    pl = sub.add_parser("plot", help="render a profile CSV as SVG")
    pl.add_argument("--in", dest="in_csv", required=True, type=Path)
    pl.add_argument("--out", required=True, type=Path)
    return p


def parse_args(argv):
    """Parse and validate; file problems raise :class:`CliError` before any computation."""
    args = build_parser().parse_args(argv)
    for name in ("domain", "in_csv"):
        path = getattr(args, name, None)
        if path is not None and not path.is_file():
            raise CliError(f"file not found: {path}", EXIT_NOT_FOUND)
    for name in ("out", "report"):
        path = getattr(args, name, None)
        if path is not None and not path.resolve().parent.is_dir():
            raise CliError(f"output directory does not exist: {path.parent}", EXIT_IO)
    if getattr(args, "steps", 1) < 1:
        raise CliError("--steps must be >= 1", EXIT_USAGE)
    return args


def _load_domain(path):
    try:
        return load_domain_spec(path)
    except DomainSpecError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _check_dim(d, point, flag):
    if len(point) != d.dim:
        raise CliError(f"{flag} has {len(point)} coordinates but {d.tag} is {d.dim}-dimensional", EXIT_USAGE)


def run_dist(args) -> int:
    d = _load_domain(args.domain)
    _check_dim(d, args.u, "--from")
    _check_dim(d, args.w, "--to")
    try:
        r = evaluate(d, args.metric, args.u, args.w, k_method=args.k_method)
    except OutsideDomainError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except MetricOverflowError as exc:
        raise CliError(f"{args.metric.value}: {exc}", EXIT_USAGE) from None
    print(json.dumps({"metric": args.metric.value, "domain": d.to_spec(), **r.to_json()}, indent=2))
    return EXIT_OK


def run_profile(args) -> int:
    d = _load_domain(args.domain)
    if args.direction is not None:
        _check_dim(d, args.direction, "--direction")
    try:
        table = profile(d, args.metric, args.direction, args.t_max, args.steps, k_method=args.k_method)
    except RayExitError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    try:
        emit_profile_csv(table, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from None
    print(f"wrote {len(table.rows)} rows to {args.out}")
    return EXIT_OK


def run_verify(args) -> int:
    from .verify import report_json, run_suite, summary_table

    records = run_suite(args.select, args.tol_scale)
    if args.select and not records:
        raise CliError(f"no claims match {' '.join(args.select)}", EXIT_USAGE)
    sys.stdout.write(summary_table(records))
    if args.report is not None:
        try:
            write_atomic(args.report, report_json(records, timings=args.timings))
        except OSError as exc:
            raise CliError(f"cannot write {args.report}: {exc}", EXIT_IO) from None
    return EXIT_FAIL if any(r.status == "fail" for r in records) else EXIT_OK


def run_plot(args) -> int:
    from .plot import emit_svg_plot

    try:
        emit_svg_plot(args.in_csv, args.out)
    except ProfileParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    except OSError as exc:
        raise CliError(f"I/O error: {exc}", EXIT_IO) from None
    return EXIT_OK


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parse_args(argv)
        return {"dist": run_dist, "profile": run_profile, "verify": run_verify, "plot": run_plot}[args.command](args)
    except CliError as exc:
        print(f"hypgrow: error: {exc}", file=sys.stderr)
        return exc.code
    except SystemExit as exc:            # argparse usage errors
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
