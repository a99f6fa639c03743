"""Command-line front end: trees, bound tables, enumeration, audits.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .audit import MIN_C_MAX, audit_proof_bounds
from .bounds import bound_table
from .enumeration import Collision, EnumerationReport, enumerate_fib_triples, solve_for_m
from .fib import fib
from .karamata import KaramataParams, karamata_sandwich_check
from .markoff import FibTriple, NotAnMTriple, Triple, generate_tree
from .report import AuditReport

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SANDWICH_PARAMS = (
    KaramataParams(2, 1, 7),
    KaramataParams(2, 2, 7),
    KaramataParams(3, 1, 9),
    KaramataParams(4, 1, 9),
)
SANDWICH_C_MAX = 40

FORMATS = {
    "tree": ("text", "json", "dot"),
    "enumerate": ("text", "json", "csv"),
    "solve": ("text", "json", "csv"),
    "bounds": ("text", "json", "csv"),
    "audit": ("text", "json", "csv"),
    "verify": ("text", "json", "csv"),
}


class UsageError(Exception):
    pass


@dataclass
class Output:
    format: str
    destination: Path | None

    def write(self, text: str) -> None:
        if self.destination is None:
            sys.stdout.write(text)
        else:
            self.destination.write_text(text, encoding="utf-8")


def _envelope(command: str, results) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "results": results}
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected X,Y,Z, got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise UsageError(f"triple entries must be integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", choices=("json", "csv", "dot", "text"))
    common.add_argument("--out", type=Path, default=None, help="write here instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker processes (output is unaffected)")

    parser = argparse.ArgumentParser(prog="markoff-fib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tree", parents=[common], help="Vieta tree from a minimal root")
    p.add_argument("--root", required=True, help="X,Y,Z (values, or indices with --fib-indices)")
    p.add_argument("--fib-indices", action="store_true", help="read --root as Fibonacci indices")
    p.add_argument("--depth", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common], help="all positive-m index triples, repeated m")
    p.add_argument("--cmax", type=int, required=True)

    p = sub.add_parser("solve", parents=[common], help="index triples with a given m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cmax", type=int, required=True)

    p = sub.add_parser("bounds", parents=[common], help="directed-rounded quotient bound table")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=2)
    p.add_argument("--amin", type=int, default=1)
    p.add_argument("--sigfigs", type=int, default=4)
    p.add_argument("--direction", choices=("down", "up"), default="down")

    p = sub.add_parser("audit", parents=[common], help="check the proof constants exactly")
    p.add_argument("--cmax", type=int, default=200)

    p = sub.add_parser("verify", parents=[common], help="enumeration, sandwich and audit together")
    p.add_argument("--cmax", type=int, default=500)
    return parser


def _cmd_tree(args, out: Output) -> int:
    vals = _parse_triple(args.root)
    if args.fib_indices:
        if min(vals) < 1:
            raise UsageError("Fibonacci indices must be >= 1")
        vals = tuple(fib(i) for i in vals)
    try:
        tree = generate_tree(Triple(*vals), args.depth)
    except (NotAnMTriple, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if out.format == "dot":
        out.write(tree.to_dot())
    elif out.format == "json":
        out.write(_envelope("tree", tree.to_json()))
    else:
        out.write(tree.to_text())
    return EXIT_OK


def _cmd_enumerate(args, out: Output) -> int:
    report = enumerate_fib_triples(args.cmax, workers=args.threads)
    if out.format == "json":
        out.write(_envelope("enumerate", report.to_json()))
    elif out.format == "csv":
        out.write(report.to_csv())
    else:
        out.write(_enumeration_text(report))
    return EXIT_OK


def _enumeration_text(report: EnumerationReport) -> str:
    lines = [f"c_max = {report.c_max}: {report.count} triples with m > 0"]
    for col in report.collisions:
        shown = ", ".join(str(t) for t in col.triples[:4])
        more = f", ... ({len(col.triples)} total)" if len(col.triples) > 4 else ""
        lines.append(f"m = {col.m}: {shown}{more}")
    return "\n".join(lines) + "\n"


def _cmd_solve(args, out: Output) -> int:
    found = solve_for_m(args.m, args.cmax)
    if out.format == "json":
        results = {
            "m": str(args.m),
            "c_max": args.cmax,
            "indices": [[t.a, t.b, t.c] for t in found],
            "values": [[str(v) for v in t.values()] for t in found],
        }
        out.write(_envelope("solve", results))
    elif out.format == "csv":
        rows = ["a,b,c,x,y,z"] + [
            ",".join(str(v) for v in (*t, *t.values())) for t in found
        ]
        out.write("\n".join(rows) + "\n")
    else:
        out.write("".join(f"{t} -> {t.values()}\n" for t in found) or "no solutions\n")
    return EXIT_OK


def _cmd_bounds(args, out: Output) -> int:
    table = bound_table((args.nmin, args.nmax), (args.amin, args.amax), args.sigfigs, args.direction)
    if out.format == "json":
        out.write(_envelope("bounds", table.to_json()))
    elif out.format == "csv":
        out.write(table.to_csv())
    else:
        out.write(table.to_text())
    return EXIT_OK


def _audit(c_max: int, threads: int) -> AuditReport:
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return audit_proof_bounds(c_max, map_fn=pool.map)
    return audit_proof_bounds(c_max)


def _cmd_audit(args, out: Output) -> int:
    if args.cmax < MIN_C_MAX:
        raise UsageError(f"--cmax must be >= {MIN_C_MAX}")
    report = _audit(args.cmax, args.threads)
    if out.format == "json":
        out.write(_envelope("audit", report.to_json()))
    elif out.format == "csv":
        out.write(report.to_csv())
    else:
        out.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def expected_collisions(c_max: int) -> list[Collision]:
    """The repeated m the classification predicts for indices up to ``c_max``."""
    family = [FibTriple.strict(2, b, b + 2) for b in range(2, c_max - 1, 2)]
    cols = [Collision(2, family)] if len(family) >= 2 else []
    if c_max >= 7:
        cols.append(Collision(21, [FibTriple.strict(2, 3, 6), FibTriple.strict(3, 3, 7)]))
    return cols


def verify_all(c_max: int, threads: int = 1) -> tuple[int, dict]:
    """Run every finite check up to ``c_max``; return (exit code, summary)."""
    if c_max < MIN_C_MAX:
        raise UsageError(f"--cmax must be >= {MIN_C_MAX}")
    report = enumerate_fib_triples(c_max, workers=threads)
    collisions_ok = report.collisions == expected_collisions(c_max)
    sandwich_c = min(c_max, SANDWICH_C_MAX)
    sandwich = AuditReport()
    for p in SANDWICH_PARAMS:
        sandwich.extend(karamata_sandwich_check(p, sandwich_c).checks)
    audit = _audit(c_max, threads)
    ok = collisions_ok and sandwich.passed and audit.sound
    summary = {
        "c_max": c_max,
        "triple_count": report.count,
        "collisions": [col.to_json() for col in report.collisions],
        "collisions_match": collisions_ok,
        "sandwich_c_max": sandwich_c,
        "sandwich_passed": sandwich.passed,
        "audit_sound": audit.sound,
        "audit_stated_bounds_hold": audit.passed,
        "audit_failed_constants": [c.name for c in audit.failures()],
        "passed": ok,
    }
    return (EXIT_OK if ok else EXIT_FAIL), summary


def _verify_text(s: dict) -> str:
    lines = [f"enumerated {s['triple_count']} triples with m > 0 and c <= {s['c_max']}"]
    for col in s["collisions"]:
        idx = col["indices"]
        shown = ", ".join("(" + ",".join(map(str, t)) + ")" for t in idx[:3])
        more = f", ... ({len(idx)} total)" if len(idx) > 3 else ""
        lines.append(f"  collision m={col['m']}: {shown}{more}")
    lines.append(f"collision classes {'match' if s['collisions_match'] else 'DO NOT match'} the classification")
    lines.append(f"sandwich bounds for c <= {s['sandwich_c_max']}: {'pass' if s['sandwich_passed'] else 'FAIL'}")
    lines.append(f"proof inequalities needed by the argument: {'hold' if s['audit_sound'] else 'FAIL'}")
    if s["audit_failed_constants"]:
        lines.append("stated constants that do not hold as printed: " + ", ".join(s["audit_failed_constants"]))
    lines.append("VERIFIED" if s["passed"] else "VERIFICATION FAILED")
    return "\n".join(lines) + "\n"


def _cmd_verify(args, out: Output) -> int:
    code, summary = verify_all(args.cmax, args.threads)
    if out.format == "json":
        out.write(_envelope("verify", summary))
    elif out.format == "csv":
        rows = ["key,value"] + [f"{k},{v}" for k, v in summary.items() if k != "collisions"]
        rows += [f"collision_m,{c['m']}" for c in summary["collisions"]]
        out.write("\n".join(rows) + "\n")
    else:
        out.write(_verify_text(summary))
    return code


COMMANDS = {
    "tree": _cmd_tree,
    "enumerate": _cmd_enumerate,
    "solve": _cmd_solve,
    "bounds": _cmd_bounds,
    "audit": _cmd_audit,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.format not in FORMATS[args.command]:
            raise UsageError(f"--format {args.format} is not available for {args.command}")
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        return COMMANDS[args.command](args, Output(args.format, args.out))
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
