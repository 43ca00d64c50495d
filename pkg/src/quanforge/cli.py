"""Command-line front end.

    quanforge fourier --nbits 3 --out qf --verify
    quanforge shift   --nbits 3 --shift -3 --out s
    quanforge glue    --nbits 3 --row1 2 --row2 6 --g 0.7 --out gl
    quanforge oracle  --nbits 4 --bands "0-2, 5-5" --g 0.7 --out o

Writes ``<out>_log.txt``, ``<out>_eng.txt`` and ``<out>_pic.txt``.

Exit codes: 0 success, 2 bad parameters (nothing written), 3 verification
above tolerance (files still written, the log records the difference),
4 file write failure.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .circuit import Circuit
from .compilers import (
    FourierSpec,
    GlueSpec,
    InvalidSpec,
    OracleSpec,
    ShiftSpec,
    compile_fourier,
    compile_glue,
    compile_oracle,
    compile_shift,
)
from .formats import LogSummary, emit_english, emit_log, emit_picture
from .verifier import (
    TooManyQubits,
    circuit_unitary,
    max_abs_diff,
    target_fourier,
    target_glue,
    target_oracle,
    target_shift,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3
EXIT_WRITE_FAILED = 4

# a '-' directly after a digit separates a range, otherwise it is a sign
_BAND_INT = re.compile(r"(?<!\d)-?\d+")


class BandsFormat(InvalidSpec):
    pass


def parse_bands(text: str) -> list[tuple[int, int]]:
    """Pair up the integers in ``text`` as ``(a1, b1), (a2, b2), ...``.

    Any run of non-digit characters separates integers, so ``"0-2,5-5"``,
    ``"0 2 5 5"`` and ``"[0,2];[5,5]"`` are equivalent.
    """
    nums = [int(m) for m in _BAND_INT.findall(text)]
    if len(nums) % 2:
        raise BandsFormat(f"need an even number of integers, got {len(nums)}")
    return list(zip(nums[0::2], nums[1::2]))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quanforge", description="Exact compilers for Fourier, shift, glue and oracle operators."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nbits", type=int, required=True, help="number of qubits")
    common.add_argument("--out", required=True, help="output file prefix")
    common.add_argument("--verify", action="store_true", help="check against the dense target")
    common.add_argument("--tol", type=float, default=1e-9, help="verification tolerance")

    sub.add_parser("fourier", parents=[common], help="discrete Fourier transform")
    p = sub.add_parser("shift", parents=[common], help="cyclic state shift |x> -> |x+t>")
    p.add_argument("--shift", type=int, required=True, help="state shift t, -2^nb < t < 2^nb")
    p = sub.add_parser("glue", parents=[common], help="couple two basis states")
    p.add_argument("--row1", type=int, required=True)
    p.add_argument("--row2", type=int, required=True)
    p.add_argument("--g", type=float, required=True, help="coupling constant")
    p = sub.add_parser("oracle", parents=[common], help="banded oracle")
    p.add_argument("--bands", default="", help="a1,b1,a2,b2,... inclusive leaf ranges")
    p.add_argument("--g", type=float, required=True, help="coupling constant")
    return parser


def compile_request(args: argparse.Namespace) -> tuple[Circuit, list, object]:
    """Return (circuit, log params, lazy target builder) for parsed arguments."""
    nb = args.nbits
    if args.subcommand == "fourier":
        spec = FourierSpec(nb)
        return compile_fourier(spec), [], lambda: target_fourier(nb)
    if args.subcommand == "shift":
        spec = ShiftSpec(nb, args.shift)
        return compile_shift(spec), [("t", spec.t)], lambda: target_shift(nb, spec.t)
    if args.subcommand == "glue":
        spec = GlueSpec(nb, args.row1, args.row2, args.g)
        params = [("r1", spec.r1), ("r2", spec.r2), ("g", spec.g)]
        return compile_glue(spec), params, lambda: target_glue(nb, spec.r1, spec.r2, spec.g)
    spec = OracleSpec(nb, parse_bands(args.bands), args.g)
    bands = ",".join(f"{a}-{b}" for a, b in spec.bands)
    params = [("bands", bands or "none"), ("g", spec.g)]
    return compile_oracle(spec), params, lambda: target_oracle(spec)


def _fail(kind: str, message: str, code: int) -> int:
    print(f"quanforge: {kind}: {message}", file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        circuit, params, target = compile_request(args)
        diff = None
        if args.verify:
            diff = max_abs_diff(circuit_unitary(circuit), target())
    except (InvalidSpec, TooManyQubits) as e:
        return _fail(type(e).__name__, str(e), EXIT_BAD_INPUT)

    summary = LogSummary.for_circuit(args.subcommand, circuit, params, diff)
    files = {
        "log": emit_log(summary),
        "eng": emit_english(circuit),
        "pic": emit_picture(circuit),
    }
    try:
        for suffix, text in files.items():
            Path(f"{args.out}_{suffix}.txt").write_text(text, encoding="utf-8", newline="\n")
    except OSError as e:
        return _fail("WriteError", str(e), EXIT_WRITE_FAILED)

    if diff is not None and diff > args.tol:
        return _fail("VerifyFailed", f"max |diff| {diff:.3e} > tol {args.tol:g}", EXIT_VERIFY_FAILED)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
