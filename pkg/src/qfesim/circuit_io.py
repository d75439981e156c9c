"""Plain-text circuit format, runner and measurement record files.

Format::

    # comment
    QUBITS 3
    H 0
    CX 0 1
    MZ 1
    MPP 2 Z0 Z1      # Pauli measurement through ancilla qubit 2

The ``QUBITS`` header must come first. Qubit indices are 0-based.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .gates import GATES
from .measure import RngStream, measure
from .pauli_obs import PauliString, measure_pauli
from .qfe_core import QfeState, new_basis_state

__all__ = [
    "ParseError",
    "Instruction",
    "Circuit",
    "MeasurementRecord",
    "parse",
    "run",
    "run_shot",
    "execute",
    "serialize_records",
    "load_records",
    "MEASURING",
]

ONE_QUBIT = ("X", "Y", "Z", "H", "S", "SDG")
TWO_QUBIT = ("CZ", "CX", "CY")
MEASURING = ("MZ", "MX", "MY", "MPP")


class ParseError(ValueError):
    """Syntax or validation error at a 1-based line and column."""

    def __init__(self, line: int, col: int, message: str) -> None:
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass(frozen=True)
class Instruction:
    name: str
    qubits: Tuple[int, ...]
    pauli: Optional[PauliString] = None
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        if self.name == "MPP":
            return f"MPP {self.qubits[0]} {self.pauli}"
        return " ".join([self.name] + [str(q) for q in self.qubits])

    @property
    def measures(self) -> bool:
        return self.name in MEASURING


@dataclass(frozen=True)
class Circuit:
    n: int
    ops: Tuple[Instruction, ...]

    def to_text(self) -> str:
        """Canonical text; ``parse(c.to_text()) == c`` up to line numbers."""
        return "\n".join([f"QUBITS {self.n}"] + [str(op) for op in self.ops]) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode("utf-8")).hexdigest()[:16]

    @property
    def has_measurements(self) -> bool:
        return any(op.measures for op in self.ops)

    def same_program(self, other: "Circuit") -> bool:
        return self.to_text() == other.to_text()


@dataclass
class MeasurementRecord:
    """Outcomes of one shot in program order.

    ``entries`` holds (instruction index, qubits, basis or observable, bit).
    """

    shot: int
    seed: int
    entries: List[Tuple[int, Tuple[int, ...], str, int]] = field(default_factory=list)

    @property
    def bits(self) -> List[int]:
        return [e[3] for e in self.entries]


def _tokens(line: str):
    """Yield (1-based column, token) for whitespace separated tokens."""
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        yield i + 1, line[i:j]
        i = j


def _int_token(lineno: int, col: int, tok: str, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(lineno, col, f"expected {what}, got {tok!r}")
    return int(tok)


def parse(text: str) -> Circuit:
    n: Optional[int] = None
    ops: List[Instruction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        col0, head = toks[0]
        name = head.upper()
        args = toks[1:]
        if n is None:
            if name != "QUBITS":
                raise ParseError(lineno, col0, "first instruction must be 'QUBITS <n>'")
            if len(args) != 1:
                raise ParseError(lineno, col0, "QUBITS takes exactly one argument")
            n = _int_token(lineno, args[0][0], args[0][1], "a qubit count")
            if n < 1:
                raise ParseError(lineno, args[0][0], "qubit count must be at least 1")
            continue
        if name == "QUBITS":
            raise ParseError(lineno, col0, "duplicate QUBITS header")

        def qubit(col: int, tok: str) -> int:
            q = _int_token(lineno, col, tok, "a qubit index")
            if q >= n:
                raise ParseError(lineno, col, f"qubit {q} out of range for {n} qubits")
            return q

        if name in ONE_QUBIT or name in ("MZ", "MX", "MY"):
            if len(args) != 1:
                raise ParseError(lineno, col0, f"{name} takes one qubit")
            ops.append(Instruction(name, (qubit(*args[0]),), line=lineno))
        elif name in TWO_QUBIT:
            if len(args) != 2:
                raise ParseError(lineno, col0, f"{name} takes two qubits")
            a, b = qubit(*args[0]), qubit(*args[1])
            if a == b:
                raise ParseError(lineno, args[1][0], "identical control and target")
            ops.append(Instruction(name, (a, b), line=lineno))
        elif name == "MPP":
            if len(args) < 2:
                raise ParseError(lineno, col0, "MPP takes an ancilla and at least one Pauli factor")
            anc = qubit(*args[0])
            terms = []
            seen = {anc}
            for col, tok in args[1:]:
                letter = tok[:1].upper()
                if letter not in ("X", "Y", "Z"):
                    raise ParseError(lineno, col, f"bad Pauli factor {tok!r}")
                q = qubit(col + 1, tok[1:])
                if q in seen:
                    what = "the ancilla" if q == anc else "an earlier factor"
                    raise ParseError(lineno, col, f"qubit {q} repeats {what}")
                seen.add(q)
                terms.append((q, letter))
            ops.append(Instruction("MPP", (anc,), PauliString(terms), line=lineno))
        else:
            raise ParseError(lineno, col0, f"unknown instruction {head!r}")
    if n is None:
        raise ParseError(1, 1, "missing 'QUBITS <n>' header")
    return Circuit(n, tuple(ops))


def execute(c: Circuit, s: QfeState, rng, on_step=None) -> List[Tuple[int, Tuple[int, ...], str, int]]:
    """Run every instruction of ``c`` on ``s``; return the measurement entries.

    ``on_step(index, instruction, outcome)`` is called after each instruction,
    with ``outcome`` None for gates.
    """
    entries = []
    for i, op in enumerate(c.ops):
        outcome = None
        if op.name == "MPP":
            outcome = measure_pauli(s, op.pauli, op.qubits[0], rng)
            entries.append((i, op.pauli.support, str(op.pauli), outcome))
        elif op.name in ("MZ", "MX", "MY"):
            outcome = measure(s, op.qubits[0], op.name[1], rng)
            entries.append((i, op.qubits, op.name[1], outcome))
        else:
            GATES[op.name](s, *op.qubits)
        if on_step is not None:
            on_step(i, op, outcome)
    return entries


def run_shot(c: Circuit, seed: int, shot: int) -> MeasurementRecord:
    rng = RngStream(seed, shot)
    s = new_basis_state([0] * c.n)
    return MeasurementRecord(shot, seed, execute(c, s, rng))


def _run_range(args) -> List[MeasurementRecord]:
    c, seed, lo, hi = args
    return [run_shot(c, seed, k) for k in range(lo, hi)]


def run(c: Circuit, seed: int = 0, shots: int = 1, workers: int = 1) -> List[MeasurementRecord]:
    """Simulate ``shots`` independent shots from |0...0>.

    Shot ``k`` draws its bits from a stream derived from (seed, k), so the
    result does not depend on ``workers``.
    """
    if shots < 0:
        raise ValueError("shots must be non-negative")
    if workers <= 1 or shots < 2:
        return _run_range((c, seed, 0, shots))
    step = -(-shots // workers)
    chunks = [(c, seed, lo, min(lo + step, shots)) for lo in range(0, shots, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_range, chunks))
    return [rec for part in parts for rec in part]


def serialize_records(records: Sequence[MeasurementRecord], seed: Optional[int] = None,
                      circuit: Optional[Circuit] = None) -> str:
    """Header comment plus one line of space separated bits per shot."""
    if seed is None:
        seed = records[0].seed if records else 0
    digest = circuit.digest() if circuit is not None else "-"
    lines = [f"# seed={seed} circuit={digest} shots={len(records)}"]
    lines += [" ".join(str(b) for b in rec.bits) for rec in records]
    return "\n".join(lines) + "\n"


def load_records(text: str, circuit: Optional[Circuit] = None
                 ) -> Tuple[Dict[str, str], List[MeasurementRecord]]:
    """Inverse of ``serialize_records``.

    With ``circuit`` the entries are rebuilt in full; without it each entry
    carries only the outcome bit.
    """
    header: Dict[str, str] = {}
    rows: List[List[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    k, v = tok.split("=", 1)
                    header[k] = v
            continue
        bits = []
        for col, tok in _tokens(line):
            if tok not in ("0", "1"):
                raise ParseError(lineno, col, f"expected a bit, got {tok!r}")
            bits.append(int(tok))
        rows.append(bits)
    seed = int(header.get("seed", 0))
    layout = None
    if circuit is not None:
        layout = []
        for i, op in enumerate(circuit.ops):
            if op.name == "MPP":
                layout.append((i, op.pauli.support, str(op.pauli)))
            elif op.measures:
                layout.append((i, op.qubits, op.name[1]))
    records = []
    for shot, bits in enumerate(rows):
        if layout is None:
            entries = [(-1, (), "", b) for b in bits]
        else:
            if len(bits) != len(layout):
                raise ParseError(shot + 2, 1, f"expected {len(layout)} bits, got {len(bits)}")
            entries = [lay + (b,) for lay, b in zip(layout, bits)]
        records.append(MeasurementRecord(shot, seed, entries))
    return header, records
