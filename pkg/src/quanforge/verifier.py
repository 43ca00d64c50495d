"""Dense-matrix oracle for compiled circuits.

Target unitaries are written down from closed forms; circuit unitaries are
rebuilt gate by gate. Matrices act on column kets, ``(U v)[p] = sum_q U[p, q] v[q]``.
"""
from __future__ import annotations

import numpy as np

from .circuit import Circuit, Gate, Kind, validate_circuit
from .compilers import OracleSpec, validate_bands

MAX_QUBITS = 12
DEFAULT_TOL = 1e-10

_S2 = 1 / np.sqrt(2)


class TooManyQubits(ValueError):
    pass


class DimMismatch(ValueError):
    pass


def single_qubit_matrix(g: Gate) -> np.ndarray:
    """2x2 action of a non-SWAP gate on its target, ignoring controls."""
    if g.kind is Kind.HAD:
        return np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex)
    if g.kind is Kind.SIGX:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    th = g.angle
    if g.kind is Kind.PHAS:
        return np.array([[1, 0], [0, np.exp(1j * th)]], dtype=complex)
    if g.kind is Kind.ROTX:
        c, s = np.cos(th), np.sin(th)
        return np.array([[c, 1j * s], [1j * s, c]], dtype=complex)
    if g.kind is Kind.ROTZ:
        return np.array([[np.exp(1j * th), 0], [0, np.exp(-1j * th)]], dtype=complex)
    raise ValueError(f"{g.kind} has no 2x2 matrix")


def _control_mask(g: Gate, idx: np.ndarray) -> np.ndarray:
    mask = np.ones(idx.shape, dtype=bool)
    for c in g.controls:
        bit = (idx >> c.qubit) & 1
        mask &= bit == int(c.polarity)
    return mask


def gate_unitary(g: Gate, nb: int) -> np.ndarray:
    """Full ``2**nb`` square embedding of ``g``."""
    g.check(nb)
    n = 1 << nb
    idx = np.arange(n)
    u = np.eye(n, dtype=complex)
    fire = _control_mask(g, idx)
    if g.kind is Kind.SWAP:
        a, b = g.targets
        ba, bb = (idx >> a) & 1, (idx >> b) & 1
        src = idx[fire & (ba != bb)]
        dst = src ^ ((1 << a) | (1 << b))
        u[src, src] = 0
        u[dst, src] = 1
        return u
    t = g.targets[0]
    m = single_qubit_matrix(g)
    lo = idx[fire & (((idx >> t) & 1) == 0)]
    hi = lo | (1 << t)
    u[lo, lo] = m[0, 0]
    u[lo, hi] = m[0, 1]
    u[hi, lo] = m[1, 0]
    u[hi, hi] = m[1, 1]
    return u


def apply_gate(g: Gate, mat: np.ndarray) -> np.ndarray:
    """Return ``gate_unitary(g) @ mat`` by mixing rows in place of a dense product."""
    n = mat.shape[0]
    idx = np.arange(n)
    fire = _control_mask(g, idx)
    out = mat.copy()
    if g.kind is Kind.SWAP:
        a, b = g.targets
        src = idx[fire & (((idx >> a) & 1) != ((idx >> b) & 1))]
        out[src ^ ((1 << a) | (1 << b))] = mat[src]
        return out
    t = g.targets[0]
    m = single_qubit_matrix(g)
    lo = idx[fire & (((idx >> t) & 1) == 0)]
    hi = lo | (1 << t)
    out[lo] = m[0, 0] * mat[lo] + m[0, 1] * mat[hi]
    out[hi] = m[1, 0] * mat[lo] + m[1, 1] * mat[hi]
    return out


def circuit_unitary(c: Circuit, max_qubits: int = MAX_QUBITS) -> np.ndarray:
    if c.nb > max_qubits:
        raise TooManyQubits(f"{c.nb} qubits exceeds the dense ceiling of {max_qubits}")
    validate_circuit(c)
    u = np.eye(1 << c.nb, dtype=complex)
    for g in c.gates:
        u = apply_gate(g, u)
    return u


def _glue_block(u: np.ndarray, r1: int, r2: int, g: float) -> None:
    c, s = np.cos(g), np.sin(g)
    u[r1, r1] = u[r2, r2] = c
    u[r1, r2] = u[r2, r1] = 1j * s


def target_fourier(nb: int) -> np.ndarray:
    """``U[p, q] = w**(p q) / sqrt(N)`` with ``w = exp(2 pi i / N)``."""
    n = 1 << nb
    pq = np.outer(np.arange(n), np.arange(n)) % n  # reduce before exp to keep phases exact
    return np.exp(2j * np.pi * pq / n) / np.sqrt(n)


def target_shift(nb: int, t: int) -> np.ndarray:
    """Permutation ``|x> -> |(x + t) mod N>``."""
    n = 1 << nb
    if not -n < t < n:
        raise ValueError(f"shift {t} outside ({-n}, {n})")
    u = np.zeros((n, n), dtype=complex)
    x = np.arange(n)
    u[(x + t) % n, x] = 1
    return u


def target_glue(nb: int, r1: int, r2: int, g: float) -> np.ndarray:
    """``exp(i g (|r1><r2| + |r2><r1|))`` as an identity plus one cos/sin block."""
    n = 1 << nb
    if not (0 <= r1 < n and 0 <= r2 < n) or r1 == r2:
        raise ValueError(f"rows must be distinct and in [0, {n}), got {r1}, {r2}")
    u = np.eye(n, dtype=complex)
    _glue_block(u, r1, r2, g)
    return u


def leaf_inputs(bands, nlvs: int) -> np.ndarray:
    """Boolean vector ``x`` over leaves, true inside any band (inclusive ends)."""
    x = np.zeros(nlvs, dtype=bool)
    for a, b in bands:
        x[a : b + 1] = True
    return x


def target_oracle(spec: OracleSpec) -> np.ndarray:
    """Banded oracle: leaf ``k`` with ``x_k = 1`` is glued to ``k + N_lvs``."""
    nlvs = 1 << (spec.nb - 1)
    validate_bands(spec.bands, nlvs)
    u = np.eye(2 * nlvs, dtype=complex)
    for k in np.flatnonzero(leaf_inputs(spec.bands, nlvs)):
        _glue_block(u, int(k), int(k) + nlvs, spec.g)
    return u


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DimMismatch(f"{a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def unitarity_error(u: np.ndarray) -> float:
    return max_abs_diff(u @ u.conj().T, np.eye(u.shape[0]))
