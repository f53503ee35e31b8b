"""Command-line front end.

Every command writes one JSON document to stdout. Exit codes: 0 success or
realizable, 1 negative verdict, 2 usage or parse error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from .exceptions import CapacityError, NotAntichainError, SignatureError
from .realizability import check_candidate, enumerate_witnesses
from .signature import METHODS, normalize
from .system import System, dualize

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_vector(text: str, counts: bool = False, n: int | None = None) -> list[Fraction]:
    """Parse ``"0,3/10,0.4,..."`` into exact fractions.

    With ``counts`` the entries are integer failure-order counts that must sum
    to ``n!``; they are returned already divided by ``n!``.
    """
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise UsageError(f"malformed vector {text!r}")
    try:
        entries = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed vector {text!r}: entries must be integers, p/q or decimals") from None
    if n is not None and n != len(entries):
        raise UsageError(f"vector has {len(entries)} entries but --n is {n}")
    if counts:
        if any(e.denominator != 1 for e in entries):
            raise UsageError("count vectors must hold integers")
        total = factorial(len(entries))
        if sum(entries) != total:
            raise UsageError(f"counts sum to {sum(entries)}, expected {len(entries)}! = {total}")
        entries = [e / total for e in entries]
    return entries


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def signature_doc(n: int, counts) -> dict:
    return {
        "n": n,
        "counts": list(counts),
        "signature": [format_fraction(x) for x in normalize(counts)],
    }


def load_system(path: str, strict: bool) -> System:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path) as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    if isinstance(doc, dict) and "witness" in doc:
        # accept a verdict document, so `check ... | verify - ...` works
        doc = doc["witness"]
        if doc is None:
            raise UsageError("verdict has no witness system")
    try:
        return System.from_json(doc, minimize=False)
    except NotAntichainError:
        if strict:
            raise UsageError("min_cut_sets is not an antichain (rejected under --strict)") from None
        print("warning: min_cut_sets is not an antichain; keeping its minimal members", file=sys.stderr)
        return System.from_json(doc, minimize=True)
    except SignatureError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def cmd_check(args) -> int:
    vector = parse_vector(args.vector, args.counts, args.n)
    verdict = check_candidate(vector)
    emit(verdict.to_json())
    if args.verbose:
        if verdict.realizable:
            print(f"realizable; minimal cut sets {list(verdict.witness.min_cuts)}", file=sys.stderr)
        else:
            print(f"not realizable: {verdict.violation}", file=sys.stderr)
    return EXIT_OK if verdict.realizable else EXIT_NEGATIVE


def cmd_synthesize(args) -> int:
    verdict = check_candidate(parse_vector(args.vector, args.counts, args.n))
    if verdict.realizable:
        emit(verdict.witness.to_json())
        return EXIT_OK
    emit(verdict.to_json())
    return EXIT_NEGATIVE


def cmd_signature(args) -> int:
    system = load_system(args.system, args.strict)
    counts = METHODS[args.method](system)
    emit(signature_doc(system.n, counts))
    return EXIT_OK


def cmd_dual(args) -> int:
    emit(dualize(load_system(args.system, args.strict)).to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    system = load_system(args.system, args.strict)
    expected = parse_vector(args.vector, args.counts, args.n)
    if len(expected) != system.n:
        raise UsageError(f"vector has {len(expected)} entries but the system has n = {system.n}")
    counts = METHODS["count"](system)
    match = list(normalize(counts)) == expected
    doc = signature_doc(system.n, counts)
    doc["expected"] = [format_fraction(x) for x in expected]
    doc["match"] = match
    emit(doc)
    return EXIT_OK if match else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    witnesses = enumerate_witnesses(args.n)
    records = [{"counts": list(c), "witness": witnesses[c].to_json()} for c in sorted(witnesses)]
    emit({"n": args.n, "records": records})
    if args.verbose:
        print(f"{len(records)} achievable signatures on {args.n} components", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syssig", description="Exact signatures of coherent systems and their realizability."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def vector_args(p):
        p.add_argument("vector", help='comma-separated entries, e.g. "0,3/10,2/5,3/10,0"')
        p.add_argument("--counts", action="store_true", help="entries are integer counts summing to n!")
        p.add_argument("--n", type=int, help="expected vector length")

    def system_args(p):
        p.add_argument("system", help='system JSON file ("-" for stdin)')
        p.add_argument("--strict", action="store_true", help="reject cut families that are not antichains")

    p = sub.add_parser("check", help="decide whether a vector is a signature")
    vector_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", help="print a system with the given signature")
    vector_args(p)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("signature", help="compute the signature of a system")
    system_args(p)
    p.add_argument("--method", choices=sorted(METHODS), default="count")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("dual", help="print the dual system")
    system_args(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify", help="test whether a system has the given signature")
    system_args(p)
    vector_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list every achievable signature for small n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    for p in sub.choices.values():
        p.add_argument("-v", "--verbose", action="store_true", help="human-readable summary on stderr")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
