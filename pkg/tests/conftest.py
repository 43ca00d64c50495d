"""Shared strategies and independent oracles for the test suite."""
from __future__ import annotations

from functools import reduce

import numpy as np
from hypothesis import strategies as st

from quanforge.circuit import ANGLED, Circuit, Control, Gate, Kind

I2 = np.eye(2)
P0 = np.diag([1.0, 0.0])
P1 = np.diag([0.0, 1.0])

_BASE = {
    Kind.HAD: lambda a: np.array([[1, 1], [1, -1]]) / np.sqrt(2),
    Kind.SIGX: lambda a: np.array([[0, 1], [1, 0]]),
    Kind.PHAS: lambda a: np.diag([1, np.exp(1j * a)]),
    Kind.ROTX: lambda a: np.array([[np.cos(a), 1j * np.sin(a)], [1j * np.sin(a), np.cos(a)]]),
    Kind.ROTZ: lambda a: np.diag([np.exp(1j * a), np.exp(-1j * a)]),
}


def _kron_ops(ops: dict[int, np.ndarray], nb: int) -> np.ndarray:
    # qubit nb-1 is the leftmost kron factor, so qubit 0 is least significant
    return reduce(np.kron, [ops.get(q, I2) for q in range(nb - 1, -1, -1)])


def kron_gate(g: Gate, nb: int) -> np.ndarray:
    """Gate matrix built as I - P + P (x) A, with P the control projector."""
    proj = {c.qubit: (P1 if c.polarity else P0) for c in g.controls}
    if g.kind is Kind.SWAP:
        a, b = g.targets
        # SWAP = sum_ij |i><j|_a (x) |j><i|_b
        units = {(i, j): np.outer(I2[i], I2[j]) for i in range(2) for j in range(2)}
        action = sum(
            _kron_ops({**proj, a: units[(i, j)], b: units[(j, i)]}, nb)
            for i in range(2) for j in range(2)
        )
    else:
        action = _kron_ops({**proj, g.targets[0]: _BASE[g.kind](g.angle)}, nb)
    fired = _kron_ops(proj, nb) if proj else np.eye(1 << nb)
    return np.eye(1 << nb) - fired + action


def kron_circuit(c: Circuit) -> np.ndarray:
    u = np.eye(1 << c.nb, dtype=complex)
    for g in c.gates:
        u = kron_gate(g, c.nb) @ u
    return u


def fft_dft(nb: int) -> np.ndarray:
    """U[p, q] = exp(+2 pi i p q / N)/sqrt(N) via numpy's inverse FFT convention."""
    n = 1 << nb
    return np.fft.ifft(np.eye(n), axis=0) * np.sqrt(n)


@st.composite
def gates(draw, nb: int):
    kind = draw(st.sampled_from(list(Kind)))
    ntar = 2 if kind is Kind.SWAP else 1
    qubits = draw(st.permutations(range(nb)))
    targets = tuple(qubits[:ntar])
    nctl = draw(st.integers(0, nb - ntar))
    controls = [Control(q, draw(st.booleans())) for q in qubits[ntar : ntar + nctl]]
    angle = None
    if kind in ANGLED:
        angle = draw(st.floats(-10, 10, allow_nan=False, allow_infinity=False))
    return Gate(kind, targets, angle, controls)


@st.composite
def circuits(draw, min_nb: int = 1, max_nb: int = 6, max_gates: int = 12):
    nb = draw(st.integers(min_nb, max_nb))
    if nb == 1:
        kinds = st.sampled_from([k for k in Kind if k is not Kind.SWAP])
        gs = draw(st.lists(kinds, max_size=max_gates))
        out = []
        for k in gs:
            angle = draw(st.floats(-10, 10)) if k in ANGLED else None
            out.append(Gate(k, (0,), angle))
        return Circuit(1, out)
    return Circuit(nb, draw(st.lists(gates(nb), max_size=max_gates)))


def bands_from_mask(mask) -> list[tuple[int, int]]:
    """Maximal runs of true leaves as inclusive (a, b) pairs."""
    out, start = [], None
    for k, bit in enumerate(list(mask) + [False]):
        if bit and start is None:
            start = k
        elif not bit and start is not None:
            out.append((start, k - 1))
            start = None
    return out


# criterion name -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
