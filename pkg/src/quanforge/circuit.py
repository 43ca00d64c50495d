"""Elementary gates, circuits and their structural operations.

Qubit ``k`` carries significance ``2**k`` in a basis-state index, so qubit 0
is the least significant bit. Gate lists are in temporal order: ``gates[0]``
acts first, and the circuit unitary is ``gates[-1] @ ... @ gates[0]``.
Angles are radians in memory.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum


class Kind(str, Enum):
    HAD = "HAD"
    PHAS = "PHAS"
    ROTX = "ROTX"
    ROTZ = "ROTZ"
    SIGX = "SIGX"
    SWAP = "SWAP"

    def __str__(self) -> str:
        return self.value


KIND_ORDER = (Kind.HAD, Kind.PHAS, Kind.ROTX, Kind.ROTZ, Kind.SIGX, Kind.SWAP)
ANGLED = frozenset({Kind.PHAS, Kind.ROTX, Kind.ROTZ})
SELF_INVERSE = frozenset({Kind.HAD, Kind.SIGX, Kind.SWAP})


class CircuitError(ValueError):
    """Base class for malformed circuits. ``position`` is the gate index."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"gate {position}: {message}"
        super().__init__(message)


class IndexOutOfRange(CircuitError):
    pass


class DuplicateQubit(CircuitError):
    pass


class MissingAngle(CircuitError):
    pass


class SpuriousAngle(CircuitError):
    pass


@dataclass(frozen=True)
class Control:
    qubit: int
    polarity: bool = True  # True fires on |1>, False on |0>

    def __str__(self) -> str:
        return f"{self.qubit}{'T' if self.polarity else 'F'}"


@dataclass(frozen=True)
class Gate:
    kind: Kind
    targets: tuple[int, ...]
    angle: float | None = None
    controls: tuple[Control, ...] = ()

    def __post_init__(self):
        # canonical form: controls high-to-low, SWAP endpoints high first,
        # so gates that act identically compare equal
        kind = Kind(self.kind)
        targets = tuple(self.targets)
        if kind is Kind.SWAP:
            targets = tuple(sorted(targets, reverse=True))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(
            self, "controls", tuple(sorted(self.controls, key=lambda c: -c.qubit))
        )

    @property
    def qubits(self) -> tuple[int, ...]:
        """Every qubit the gate touches, targets first."""
        return self.targets + tuple(c.qubit for c in self.controls)

    def check(self, nb: int, position: int | None = None) -> None:
        """Raise a :class:`CircuitError` if this gate is malformed for ``nb`` qubits."""
        want = 2 if self.kind is Kind.SWAP else 1
        if len(self.targets) != want:
            raise DuplicateQubit(
                f"{self.kind} needs {want} target(s), got {len(self.targets)}", position
            )
        for q in self.qubits:
            if not (isinstance(q, int) and 0 <= q < nb):
                raise IndexOutOfRange(f"qubit {q} not in [0, {nb})", position)
        if len(set(self.qubits)) != len(self.qubits):
            raise DuplicateQubit(f"repeated qubit in {self.qubits}", position)
        if self.kind in ANGLED and self.angle is None:
            raise MissingAngle(f"{self.kind} requires an angle", position)
        if self.kind not in ANGLED and self.angle is not None:
            raise SpuriousAngle(f"{self.kind} takes no angle", position)

    def inverse(self) -> Gate:
        if self.kind in SELF_INVERSE:
            return self
        return Gate(self.kind, self.targets, -self.angle, self.controls)


def _ctrls(controls) -> tuple[Control, ...]:
    out = []
    for c in controls:
        if isinstance(c, Control):
            out.append(c)
        elif isinstance(c, int):
            out.append(Control(c, True))
        else:
            out.append(Control(*c))
    return tuple(out)


# Convenience constructors. ``controls`` accepts Control objects, bare ints
# (true controls) or (qubit, polarity) pairs.

def had(q: int, controls=()) -> Gate:
    return Gate(Kind.HAD, (q,), None, _ctrls(controls))


def phas(angle: float, q: int, controls=()) -> Gate:
    return Gate(Kind.PHAS, (q,), float(angle), _ctrls(controls))


def rotx(angle: float, q: int, controls=()) -> Gate:
    return Gate(Kind.ROTX, (q,), float(angle), _ctrls(controls))


def rotz(angle: float, q: int, controls=()) -> Gate:
    return Gate(Kind.ROTZ, (q,), float(angle), _ctrls(controls))


def sigx(q: int, controls=()) -> Gate:
    return Gate(Kind.SIGX, (q,), None, _ctrls(controls))


def swap(q1: int, q2: int, controls=()) -> Gate:
    return Gate(Kind.SWAP, (q1, q2), None, _ctrls(controls))


@dataclass(frozen=True)
class Circuit:
    nb: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: Circuit) -> Circuit:
        if other.nb != self.nb:
            raise ValueError(f"cannot join circuits on {self.nb} and {other.nb} qubits")
        return Circuit(self.nb, self.gates + other.gates)


def validate_circuit(c: Circuit) -> None:
    """Raise the first :class:`CircuitError` found in ``c``; return None if valid."""
    if not (isinstance(c.nb, int) and c.nb >= 1):
        raise IndexOutOfRange(f"qubit count must be a positive integer, got {c.nb!r}")
    for pos, g in enumerate(c.gates):
        g.check(c.nb, pos)


def invert_circuit(c: Circuit) -> Circuit:
    """Circuit for the conjugate transpose: reversed order, angles negated."""
    validate_circuit(c)
    return Circuit(c.nb, tuple(g.inverse() for g in reversed(c.gates)))


def gate_counts(c: Circuit) -> dict[Kind, int]:
    counts = Counter(g.kind for g in c.gates)
    return {k: counts.get(k, 0) for k in KIND_ORDER}
