"""Exact special-purpose quantum compilers with a dense-matrix verifier."""
from .circuit import (
    Circuit,
    CircuitError,
    Control,
    Gate,
    Kind,
    gate_counts,
    invert_circuit,
    validate_circuit,
)
from .compilers import (
    DyadicBlock,
    FourierSpec,
    GlueSpec,
    InvalidSpec,
    OracleSpec,
    ShiftSpec,
    alignment_ladder,
    compile_fourier,
    compile_glue,
    compile_oracle,
    compile_shift,
    dyadic_cover,
    validate_bands,
)
from .formats import LogSummary, emit_english, emit_log, emit_picture, parse_english
from .verifier import (
    circuit_unitary,
    gate_unitary,
    max_abs_diff,
    target_fourier,
    target_glue,
    target_oracle,
    target_shift,
)

__version__ = "0.1.0"
