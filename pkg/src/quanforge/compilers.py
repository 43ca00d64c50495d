"""Exact compilers for the four operator families.

Each compiler takes a validated spec and returns a :class:`Circuit` whose
unitary equals the target exactly (no global phase freedom):

* Fourier: ``U[p, q] = exp(2 pi i p q / N) / sqrt(N)``.
* Shift: ``|x> -> |(x + t) mod N>``.
* Glue: ``exp(i g (|r1><r2| + h.c.))``.
* Oracle: ``exp(i g sigma_x (x) diag(x_0 .. x_{N/2 - 1}))``, MSB as the block qubit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .circuit import Circuit, Control, Gate, had, invert_circuit, phas, rotx, rotz, sigx, swap


class InvalidSpec(ValueError):
    pass


class EqualRows(InvalidSpec):
    pass


class InvalidInterval(InvalidSpec):
    pass


class BandError(InvalidSpec):
    """A band list failed one of the oracle's input checks."""


class NegativeStart(BandError):
    pass


class EndBeyondLeaves(BandError):
    pass


class ReversedBand(BandError):
    pass


class MergeableBands(BandError):
    pass


class OverlappingBands(BandError):
    pass


def _need_nb(nb, least: int = 1) -> None:
    if isinstance(nb, bool) or not isinstance(nb, int) or nb < least:
        raise InvalidSpec(f"nb must be an integer >= {least}, got {nb!r}")


@dataclass(frozen=True)
class FourierSpec:
    nb: int

    def __post_init__(self):
        _need_nb(self.nb)


@dataclass(frozen=True)
class ShiftSpec:
    nb: int
    t: int

    def __post_init__(self):
        _need_nb(self.nb)
        n = 1 << self.nb
        if not -n < self.t < n:
            raise InvalidSpec(f"shift must satisfy {-n} < t < {n}, got {self.t}")


@dataclass(frozen=True)
class GlueSpec:
    nb: int
    r1: int
    r2: int
    g: float

    def __post_init__(self):
        _need_nb(self.nb)
        n = 1 << self.nb
        for r in (self.r1, self.r2):
            if not 0 <= r < n:
                raise InvalidSpec(f"row {r} outside [0, {n})")
        if self.r1 == self.r2:
            raise EqualRows(f"rows to glue must differ, both are {self.r1}")


@dataclass(frozen=True)
class DyadicBlock:
    base: int
    size: int

    @property
    def level(self) -> int:
        return self.size.bit_length() - 1

    @property
    def last(self) -> int:
        return self.base + self.size - 1


def validate_bands(bands, nlvs: int) -> None:
    """Check a list of inclusive ``(a, b)`` bands against ``nlvs`` leaves.

    Bands must start at or after leaf 0, end at or before the last leaf, be
    non-reversed, and be separated by a gap of at least 2 (a gap of exactly 1
    means the two bands should have been written as one).
    """
    bands = list(bands)
    for k, (a, b) in enumerate(bands):
        if b - a < 0:
            raise ReversedBand(f"band {k} ({a}, {b}) ends before it starts")
        if k > 0:
            gap = a - bands[k - 1][1]
            if gap == 1:
                raise MergeableBands(f"bands {k - 1} and {k} touch and can be merged")
            if gap <= 0:
                raise OverlappingBands(f"bands {k - 1} and {k} overlap")
    if bands:
        if bands[0][0] < 0:
            raise NegativeStart(f"first band starts at {bands[0][0]} < 0")
        if bands[-1][1] > nlvs - 1:
            raise EndBeyondLeaves(f"last band ends at {bands[-1][1]} > {nlvs - 1}")


@dataclass(frozen=True)
class OracleSpec:
    nb: int
    bands: tuple[tuple[int, int], ...]
    g: float

    def __post_init__(self):
        _need_nb(self.nb, least=2)
        object.__setattr__(self, "bands", tuple((int(a), int(b)) for a, b in self.bands))
        validate_bands(self.bands, self.nlvs)

    @property
    def nlvs(self) -> int:
        return 1 << (self.nb - 1)


def compile_fourier(spec: FourierSpec) -> Circuit:
    """Textbook QFT: Hadamard plus controlled phases from the MSB down, then bit reversal."""
    nb = spec.nb
    gates = []
    for j in range(nb - 1, -1, -1):
        gates.append(had(j))
        for i in range(j - 1, -1, -1):
            gates.append(phas(2 * math.pi / 2 ** (j - i + 1), j, [i]))
    for k in range(nb // 2):
        gates.append(swap(nb - 1 - k, k))
    return Circuit(nb, gates)


# The shift is diagonal in the Fourier basis: with F the DFT above,
# F^dag S_t F = diag(exp(SHIFT_PHASE_SIGN * 2 pi i t m / N)), so S_t = F D F^dag.
# In temporal order that is F^dag first, then D, then F.
SHIFT_PHASE_SIGN = -1


def shift_phase(nb: int, t: int) -> float:
    """Phase per unit of ``m`` on the diagonal of the shift in the Fourier basis."""
    return SHIFT_PHASE_SIGN * 2 * math.pi * t / (1 << nb)


def compile_shift(spec: ShiftSpec) -> Circuit:
    nb, t = spec.nb, spec.t
    if t < 0:
        return invert_circuit(compile_shift(ShiftSpec(nb, -t)))
    qft = compile_fourier(FourierSpec(nb))
    phi = shift_phase(nb, t)
    # exp(i phi m) with m = sum 2^k m_k factors into one phase gate per qubit
    diag = Circuit(nb, [phas(phi * 2**k, k) for k in range(nb)])
    return invert_circuit(qft) + diag + qft


def alignment_ladder(r1: int, r2: int, nb: int) -> tuple[int, list[Gate], list[Control]]:
    """CNOT ladder that maps ``{r1, r2}`` onto two states differing only at the pivot.

    The pivot is the lowest bit where ``r1`` and ``r2`` differ. Each other
    differing bit gets a SIGX controlled on the pivot, which clears those bits
    on whichever row has the pivot set. The returned pattern is the common
    value of the remaining bits after the ladder, i.e. the bits of the row
    whose pivot bit is 0.
    """
    if r1 == r2:
        raise EqualRows(f"rows to glue must differ, both are {r1}")
    d = r1 ^ r2
    pivot = (d & -d).bit_length() - 1
    ladder = [sigx(j, [pivot]) for j in range(nb) if j != pivot and (d >> j) & 1]
    anchor = r1 if not (r1 >> pivot) & 1 else r2
    pattern = [Control(q, bool((anchor >> q) & 1)) for q in range(nb - 1, -1, -1) if q != pivot]
    return pivot, ladder, pattern


def compile_glue(spec: GlueSpec) -> Circuit:
    pivot, ladder, pattern = alignment_ladder(spec.r1, spec.r2, spec.nb)
    core = rotx(spec.g, pivot, pattern)
    return Circuit(spec.nb, ladder + [core] + ladder[::-1])


def dyadic_cover(a: int, b: int, nlvs: int) -> list[DyadicBlock]:
    """Greedy cover of ``[a, b]`` by aligned power-of-two blocks, ascending."""
    if not 0 <= a <= b < nlvs:
        raise InvalidInterval(f"need 0 <= a <= b < {nlvs}, got ({a}, {b})")
    blocks = []
    base = a
    while base <= b:
        size = base & -base if base else 1 << (nlvs.bit_length())
        while base + size - 1 > b:
            size >>= 1
        blocks.append(DyadicBlock(base, size))
        base += size
    return blocks


def compile_oracle(spec: OracleSpec) -> Circuit:
    """Conjugate per-block controlled ROTZ on the MSB by Hadamards."""
    nb, msb = spec.nb, spec.nb - 1
    gates = [had(msb)]
    for a, b in spec.bands:
        for blk in dyadic_cover(a, b, spec.nlvs):
            s = blk.level
            ctrls = [Control(q, bool((blk.base >> q) & 1)) for q in range(msb - 1, s - 1, -1)]
            gates.append(rotz(spec.g, msb, ctrls))
    gates.append(had(msb))
    return Circuit(nb, gates)
