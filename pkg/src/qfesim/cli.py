"""Command-line front end: ``qfesim run|prob|check|bench``.

Exit codes: 0 success, 1 runtime failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import List, Optional, Sequence

from .batch import strong_prob_z
from .bench import SUITES, run_suite
from .circuit_io import ParseError, parse, run, serialize_records
from .gates import GATES
from .oracle import ORACLE_CAP, co_simulate
from .qfe_core import new_basis_state

TOLERANCE = 1e-9


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    return parse(text)


def cmd_run(args) -> int:
    circuit = _load(args.circuit)
    records = run(circuit, args.seed, args.shots, workers=args.threads)
    text = serialize_records(records, seed=args.seed, circuit=circuit)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_prob(args) -> int:
    circuit = _load(args.circuit)
    if circuit.has_measurements:
        raise UsageError("prob needs a measurement-free circuit; "
                         "remove MZ/MX/MY/MPP instructions and query the outcome instead")
    bits = [int(ch) for ch in args.bits if ch in "01"]
    if len(bits) != len(args.bits) or len(bits) != len(args.qubits):
        raise UsageError("--bits must be a 0/1 string as long as --qubits")
    s = new_basis_state([0] * circuit.n)
    for op in circuit.ops:
        GATES[op.name](s, *op.qubits)
    try:
        p = strong_prob_z(s, args.qubits, bits)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc))
    print(f"{p} {p.value:.17g}")
    return 0


def cmd_check(args) -> int:
    circuit = _load(args.circuit)
    if circuit.n > ORACLE_CAP:
        print(f"error: {circuit.n} qubits exceed the oracle cap of {ORACLE_CAP}", file=sys.stderr)
        return 1
    worst = 0.0
    for shot in range(args.shots):
        worst = max(worst, co_simulate(circuit, args.seed, shot, corrupt=args.corrupt_phase))
    ok = worst <= TOLERANCE
    print(f"shots {args.shots} instructions {len(circuit.ops)} "
          f"max_deviation {worst:.3e} {'ok' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["suite", "size", "op_class", "touches", "nanos"])
    for row in run_suite(args.suite, args.sizes, args.seed):
        writer.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfesim",
                                     description="Stabiliser circuit simulation "
                                                 "with quadratic form expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shots=True):
        p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
        if shots:
            p.add_argument("--shots", type=int, default=1, help="number of shots (default 1)")

    p = sub.add_parser("run", help="sample measurement records")
    p.add_argument("circuit")
    common(p)
    p.add_argument("--out", default=None, help="record file (default standard output)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for shots")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("prob", help="exact probability of a Z outcome string")
    p.add_argument("circuit")
    p.add_argument("--qubits", type=_int_list, required=True, help="e.g. 0,1,2")
    p.add_argument("--bits", required=True, help="e.g. 010")
    common(p, shots=False)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("check", help="co-simulate against the dense oracle")
    p.add_argument("circuit")
    common(p)
    p.add_argument("--corrupt-phase", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="touch-count and timing table as CSV")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--sizes", type=_int_list, default=[], help="e.g. 1024,2048")
    common(p, shots=False)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "shots", 0) < 0:
        parser.error("--shots must be non-negative")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{args.circuit}: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failures map to exit 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
