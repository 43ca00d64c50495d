"""Log, English and Picture circuit files.

English grammar, one gate per line in temporal order::

    QUANFORGE-ENG 1
    NBITS <nb>
    HAD AT <q>[ IF <q><T|F> ...]
    PHAS <deg> AT <q>[ IF ...]        (likewise ROTX, ROTZ)
    SIGX AT <q>[ IF ...]
    SWAP <q1> <q2>[ IF ...]           (q1 > q2)

Angles are written in degrees with 17 significant digits, which round-trips
radians to within one ulp. Controls are listed from the highest qubit down.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .circuit import (
    ANGLED,
    KIND_ORDER,
    Circuit,
    CircuitError,
    Control,
    Gate,
    Kind,
    gate_counts,
    validate_circuit,
)

ENG_HEADER = "QUANFORGE-ENG 1"

PICTURE_SYMBOL = {
    Kind.HAD: "H",
    Kind.PHAS: "P",
    Kind.ROTX: "R",
    Kind.ROTZ: "Z",
    Kind.SIGX: "X",
    Kind.SWAP: "*",
}


class EnglishParseError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class BadHeader(EnglishParseError):
    pass


class UnknownGate(EnglishParseError):
    pass


class BadAngle(EnglishParseError):
    pass


class BadControl(EnglishParseError):
    pass


def format_degrees(radians: float) -> str:
    return f"{math.degrees(radians):#.17g}"


def _gate_line(g: Gate) -> str:
    if g.kind is Kind.SWAP:
        head = f"SWAP {g.targets[0]} {g.targets[1]}"
    elif g.kind in ANGLED:
        head = f"{g.kind} {format_degrees(g.angle)} AT {g.targets[0]}"
    else:
        head = f"{g.kind} AT {g.targets[0]}"
    if g.controls:
        head += " IF " + " ".join(str(c) for c in g.controls)
    return head


def emit_english(c: Circuit) -> str:
    validate_circuit(c)
    lines = [ENG_HEADER, f"NBITS {c.nb}"] + [_gate_line(g) for g in c.gates]
    return "\n".join(lines) + "\n"


_INT = re.compile(r"\d+")
_CTRL = re.compile(r"(\d+)([TF])")


def _qubit(tok: str, lineno: int) -> int:
    if not _INT.fullmatch(tok):
        raise UnknownGate(f"expected a qubit index, got {tok!r}", lineno)
    return int(tok)


def _parse_gate(tokens: list[str], lineno: int) -> Gate:
    if "IF" in tokens:
        cut = tokens.index("IF")
        body, ctoks = tokens[:cut], tokens[cut + 1 :]
        if not ctoks:
            raise BadControl("IF with no controls", lineno)
    else:
        body, ctoks = tokens, []
    controls = []
    for tok in ctoks:
        m = _CTRL.fullmatch(tok)
        if m is None:
            raise BadControl(f"malformed control {tok!r}", lineno)
        controls.append(Control(int(m.group(1)), m.group(2) == "T"))

    name = body[0]
    try:
        kind = Kind(name)
    except ValueError:
        raise UnknownGate(f"unknown gate {name!r}", lineno) from None

    if kind is Kind.SWAP:
        if len(body) != 3:
            raise UnknownGate("SWAP takes exactly two qubits", lineno)
        targets = (_qubit(body[1], lineno), _qubit(body[2], lineno))
        return Gate(kind, targets, None, controls)
    angle = None
    if kind in ANGLED:
        if len(body) != 4 or body[2] != "AT":
            raise UnknownGate(f"expected '{kind} <deg> AT <q>'", lineno)
        try:
            deg = float(body[1])
        except ValueError:
            raise BadAngle(f"bad angle {body[1]!r}", lineno) from None
        if not math.isfinite(deg):
            raise BadAngle(f"non-finite angle {body[1]!r}", lineno)
        angle = math.radians(deg)
        target = body[3]
    else:
        if len(body) != 3 or body[1] != "AT":
            raise UnknownGate(f"expected '{kind} AT <q>'", lineno)
        target = body[2]
    return Gate(kind, (_qubit(target, lineno),), angle, controls)


def parse_english(text: str) -> Circuit:
    lines = text.splitlines()
    if not lines or lines[0].split() != ENG_HEADER.split():
        raise BadHeader(f"first line must be {ENG_HEADER!r}", 1)
    if len(lines) < 2:
        raise BadHeader("missing NBITS line", 2)
    nbits = lines[1].split()
    if len(nbits) != 2 or nbits[0] != "NBITS" or not _INT.fullmatch(nbits[1]) or int(nbits[1]) < 1:
        raise BadHeader("second line must be 'NBITS <positive int>'", 2)
    nb = int(nbits[1])
    gates = []
    for lineno, line in enumerate(lines[2:], start=3):
        tokens = line.split()
        if not tokens:
            continue
        g = _parse_gate(tokens, lineno)
        try:
            g.check(nb)
        except CircuitError as e:
            raise EnglishParseError(str(e), lineno) from e
        gates.append(g)
    return Circuit(nb, gates)


def _picture_line(g: Gate, nb: int) -> str:
    cells = ["-"] * nb
    for q in g.targets:
        cells[q] = PICTURE_SYMBOL[g.kind]
    for c in g.controls:
        cells[c.qubit] = "@" if c.polarity else "O"
    touched = g.qubits
    for q in range(min(touched) + 1, max(touched)):
        if q not in touched:
            cells[q] = "|"
    return "  ".join(reversed(cells))


def emit_picture(c: Circuit) -> str:
    """One row per gate, time flowing down; leftmost column is qubit ``nb - 1``."""
    validate_circuit(c)
    return "".join(_picture_line(g, c.nb) + "\n" for g in c.gates)


@dataclass
class LogSummary:
    application: str
    nb: int
    params: list[tuple[str, object]] = field(default_factory=list)
    counts: dict[Kind, int] = field(default_factory=lambda: {k: 0 for k in KIND_ORDER})
    verify_result: float | None = None  # None means verification was skipped

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def for_circuit(cls, application: str, c: Circuit, params=(), verify_result=None):
        return cls(application, c.nb, list(params), gate_counts(c), verify_result)


def _log_value(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit_log(s: LogSummary) -> str:
    lines = [f"application: {s.application}", f"nbits: {s.nb}"]
    lines += [f"{k}: {_log_value(v)}" for k, v in s.params]
    lines.append(f"gates_total: {s.total}")
    lines += [f"gates_{k}: {s.counts.get(k, 0)}" for k in KIND_ORDER]
    verify = "skipped" if s.verify_result is None else f"{s.verify_result:.6e}"
    lines.append(f"verify_max_abs_diff: {verify}")
    return "\n".join(lines) + "\n"
