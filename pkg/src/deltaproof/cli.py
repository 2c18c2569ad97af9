"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on a
usage or parse error. Reports go to stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .difference import delta_n_newton_gregory, delta_n_repeated, difference_table, newton_series
from .polynomial import LiteralError, parse_poly_literal, to_binomial_basis
from .report import VerificationReport, merge_reports
from .verify import (
    BINOMIAL,
    IDENTITIES,
    numeric_grid_check,
    verify_binomial_direct,
    verify_binomial_via_differences,
    verify_chu_vandermonde_direct,
    verify_chu_vandermonde_proof,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_N_CAP = 512
COMMANDS = ("verify", "diff", "table", "newton-series")


class UsageError(Exception):
    """Bad command line; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    identity: str | None = None
    n: int | None = None
    n_max: int | None = None
    order: int | None = None
    poly_literal: str | None = None
    points: int | None = None
    grid_bound: int | None = None
    format: str = "text"
    n_cap: int = DEFAULT_N_CAP
    inject_fault: str | None = None


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="deltaproof", description="Exact finite-difference identity checker.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--n-cap", type=_natural, default=DEFAULT_N_CAP,
                       help="upper limit for every natural-number argument (default %(default)s)")

    v = sub.add_parser("verify", help="verify an identity by the direct and difference routes")
    v.add_argument("identity", choices=IDENTITIES)
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=_natural)
    which.add_argument("--n-max", type=_natural)
    v.add_argument("--grid-bound", type=_natural, help="also compare both sides on an integer grid")
    v.add_argument("--inject-fault", metavar="STEP", help=argparse.SUPPRESS)
    common(v)

    d = sub.add_parser("diff", help="n-th forward difference of a polynomial")
    d.add_argument("--order", type=_natural, required=True)
    d.add_argument("--poly", required=True)
    common(d)

    t = sub.add_parser("table", help="forward difference table of sampled values")
    t.add_argument("--poly", required=True)
    t.add_argument("--points", type=_natural, required=True, help="sample at x = 0 .. points-1")
    common(t)

    s = sub.add_parser("newton-series", help="expand a polynomial in the binomial basis")
    s.add_argument("--poly", required=True)
    common(s)
    return parser


def parse_args(argv: Sequence[str]) -> CliConfig:
    """Parse and validate ``argv``; raises :class:`UsageError`."""
    ns = _build_parser().parse_args(list(argv))
    config = CliConfig(
        command=ns.command,
        identity=getattr(ns, "identity", None),
        n=getattr(ns, "n", None),
        n_max=getattr(ns, "n_max", None),
        order=getattr(ns, "order", None),
        poly_literal=getattr(ns, "poly", None),
        points=getattr(ns, "points", None),
        grid_bound=getattr(ns, "grid_bound", None),
        format=ns.format,
        n_cap=ns.n_cap,
        inject_fault=getattr(ns, "inject_fault", None),
    )
    for name in ("n", "n_max", "order", "points", "grid_bound"):
        value = getattr(config, name)
        if value is not None and value > config.n_cap:
            raise UsageError(f"--{name.replace('_', '-')} {value} exceeds --n-cap {config.n_cap}")
    if config.grid_bound == 0:
        raise UsageError("--grid-bound must be >= 1")
    if config.points == 0:
        raise UsageError("--points must be >= 1")
    if config.poly_literal is not None:
        try:
            p = parse_poly_literal(config.poly_literal)
        except LiteralError as exc:
            raise UsageError(f"bad --poly literal: {exc}") from None
        if p.degree is not None and p.degree > config.n_cap:
            raise UsageError(f"polynomial degree {p.degree} exceeds --n-cap {config.n_cap}")
    return config


def _verify_one(identity: str, n: int, config: CliConfig) -> VerificationReport:
    fault = config.inject_fault
    if identity == BINOMIAL:
        parts = {
            "direct": verify_binomial_direct(n, fault=fault),
            "differences": verify_binomial_via_differences(n, fault=fault),
        }
    else:
        parts = {
            "direct": verify_chu_vandermonde_direct(n, fault=fault),
            "proof": verify_chu_vandermonde_proof(n, fault=fault),
        }
    if config.grid_bound is not None:
        parts["grid"] = numeric_grid_check(identity, n, config.grid_bound, fault=fault)
    return merge_reports(identity, n, parts)


def _render_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        doc = {"tool-version": __version__, "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=2)
    lines = []
    for r in reports:
        status = "PASS" if r.overall else "FAIL"
        extra = "" if r.theta is None else f"  theta={r.theta}"
        lines.append(f"{status} {r.identity} n={r.n}  ({len(r.steps)} steps){extra}")
        for step in r.failed_steps():
            lines.append(f"    failed {step.id}: {step.description}")
    passed = sum(r.overall for r in reports)
    lines.append(f"{passed}/{len(reports)} reports passed")
    return "\n".join(lines)


def _render(fmt: str, payload: dict, text_lines: list[str]) -> str:
    if fmt == "json":
        return json.dumps({"tool-version": __version__, **payload}, indent=2)
    return "\n".join(text_lines)


def run(config: CliConfig) -> tuple[int, str]:
    """Execute a validated config; returns ``(exit_code, rendered_output)``."""
    if config.command == "verify":
        ns = [config.n] if config.n is not None else range(config.n_max + 1)
        reports = [_verify_one(config.identity, n, config) for n in ns]
        code = EXIT_OK if all(r.overall for r in reports) else EXIT_FAILED
        return code, _render_reports(reports, config.format)

    p = parse_poly_literal(config.poly_literal)

    if config.command == "diff":
        result = delta_n_repeated(p, config.order)
        ok = result == delta_n_newton_gregory(p, config.order)
        payload = {
            "command": "diff",
            "order": config.order,
            "input": p.to_literal(),
            "result": result.to_literal(),
            "routes-agree": ok,
        }
        text = [
            f"p(x) = {p}",
            f"Delta^{config.order} p(x) = {result}",
            f"literal: {result.to_literal()}",
        ]
        if not ok:
            text.append("repeated and alternating-sum differences DISAGREE")
        return (EXIT_OK if ok else EXIT_FAILED), _render(config.format, payload, text)

    if config.command == "table":
        table = difference_table([p(t) for t in range(config.points)])
        payload = {
            "command": "table",
            "input": p.to_literal(),
            "rows": [[str(v) for v in row] for row in table.rows],
        }
        return EXIT_OK, _render(config.format, payload, [f"p(x) = {p}", table.format()])

    # newton-series
    rebuilt = newton_series(p)
    basis = to_binomial_basis(p)
    ok = rebuilt == p
    payload = {
        "command": "newton-series",
        "input": p.to_literal(),
        "binomial-coefficients": [str(c) for c in basis],
        "reconstructed": rebuilt.to_literal(),
        "matches": ok,
    }
    terms = " + ".join(f"{c}*C(x,{k})" for k, c in enumerate(basis) if c) or "0"
    text = [f"p(x) = {p}", f"     = {terms}", f"reconstructed: {rebuilt}", f"matches: {'yes' if ok else 'no'}"]
    return (EXIT_OK if ok else EXIT_FAILED), _render(config.format, payload, text)


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"deltaproof: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    code, output = run(config)
    print(output)
    if code != EXIT_OK:
        print("deltaproof: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
