import math

import pytest
from hypothesis import given, settings

from quanforge.circuit import Circuit, Kind, had, phas, rotx, rotz, sigx, swap
from quanforge.compilers import FourierSpec, ShiftSpec, compile_fourier, compile_shift
from quanforge.formats import (
    BadAngle,
    BadControl,
    BadHeader,
    EnglishParseError,
    LogSummary,
    UnknownGate,
    emit_english,
    emit_log,
    emit_picture,
    parse_english,
)
from quanforge.verifier import circuit_unitary, max_abs_diff

from conftest import circuits


def _same_up_to_ulp(a: Circuit, b: Circuit) -> bool:
    if a.nb != b.nb or len(a) != len(b):
        return False
    for g, h in zip(a.gates, b.gates):
        if (g.kind, g.targets, g.controls) != (h.kind, h.targets, h.controls):
            return False
        if g.angle is None or h.angle is None:
            if g.angle is not h.angle:
                return False
        elif abs(g.angle - h.angle) > math.ulp(g.angle):
            return False
    return True


def test_english_examples():
    assert emit_english(Circuit(1, [had(0)])) == "QUANFORGE-ENG 1\nNBITS 1\nHAD AT 0\n"
    text = emit_english(Circuit(3, [phas(math.pi / 4, 1, [2])]))
    assert text.splitlines()[2] == "PHAS 45.000000000000000 AT 1 IF 2T"
    text = emit_english(Circuit(3, [sigx(0, [(1, False), (2, True)])]))
    assert text.splitlines()[2] == "SIGX AT 0 IF 2T 1F"
    text = emit_english(Circuit(3, [swap(0, 2, [(1, False)]), rotx(-0.5, 1), rotz(1e-9, 2, [0])]))
    assert text.splitlines()[2:] == [
        "SWAP 2 0 IF 1F",
        "ROTX -28.647889756541161 AT 1",
        "ROTZ 5.7295779513082324e-08 AT 2 IF 0T",
    ]


def test_english_has_no_trailing_whitespace():
    text = emit_english(compile_shift(ShiftSpec(4, -5)))
    assert "\r" not in text and text.endswith("\n")
    assert all(line == line.rstrip() for line in text.splitlines())


@settings(max_examples=200, deadline=None)
@given(circuits(max_nb=7))
def test_english_round_trip(c):
    back = parse_english(emit_english(c))
    assert _same_up_to_ulp(c, back)


def test_round_trip_unitary_for_shift():
    c = compile_shift(ShiftSpec(3, 3))
    back = parse_english(emit_english(c))
    assert max_abs_diff(circuit_unitary(back), circuit_unitary(c)) < 1e-12


def test_parse_tolerates_interior_spaces():
    text = "QUANFORGE-ENG   1\nNBITS  3\n\nPHAS   90   AT 1  IF  2T   0F\nSWAP 0   2\n"
    c = parse_english(text)
    assert c == Circuit(3, [phas(math.pi / 2, 1, [(2, True), (0, False)]), swap(2, 0)])


@pytest.mark.parametrize(
    "text, err, line",
    [
        ("QUANFORGE-ENG 1\nNBITS 2\nFOO AT 0\n", UnknownGate, 3),
        ("QUANFORGE-ENG 2\nNBITS 2\n", BadHeader, 1),
        ("", BadHeader, 1),
        ("QUANFORGE-ENG 1\n", BadHeader, 2),
        ("QUANFORGE-ENG 1\nNBITS x\n", BadHeader, 2),
        ("QUANFORGE-ENG 1\nNBITS 2\nHAD AT 0\nPHAS abc AT 1\n", BadAngle, 4),
        ("QUANFORGE-ENG 1\nNBITS 2\nPHAS nan AT 1\n", BadAngle, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nSIGX AT 0 IF 1X\n", BadControl, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nSIGX AT 0 IF\n", BadControl, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nHAD 0\n", UnknownGate, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nhad AT 0\n", UnknownGate, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nSIGX AT 0 IF 0T\n", EnglishParseError, 3),
        ("QUANFORGE-ENG 1\nNBITS 2\nHAD AT 5\n", EnglishParseError, 3),
    ],
)
def test_parse_errors_carry_line(text, err, line):
    with pytest.raises(err) as info:
        parse_english(text)
    assert info.value.line == line


def test_picture_examples():
    assert emit_picture(Circuit(3, [had(2)])) == "H  -  -\n"
    assert emit_picture(Circuit(3, [sigx(0, [2])])) == "@  |  X\n"
    assert emit_picture(Circuit(3, [swap(0, 2)])) == "*  |  *\n"
    assert emit_picture(Circuit(4, [rotz(0.1, 3, [(1, False)])])) == "Z  |  O  -\n"
    assert emit_picture(Circuit(2)) == ""


@settings(max_examples=100, deadline=None)
@given(circuits(max_nb=7))
def test_picture_shape(c):
    lines = emit_picture(c).splitlines()
    assert len(lines) == len(c)
    assert all(len(line) == 3 * c.nb - 2 for line in lines)


def test_log_fourier_skipped():
    c = compile_fourier(FourierSpec(2))
    text = emit_log(LogSummary.for_circuit("fourier", c))
    lines = text.splitlines()
    assert lines[:3] == ["application: fourier", "nbits: 2", "gates_total: 4"]
    assert "gates_HAD: 2" in lines and lines[-1] == "verify_max_abs_diff: skipped"
    keys = [line.split(":")[0] for line in lines]
    assert keys[3:9] == [f"gates_{k}" for k in ("HAD", "PHAS", "ROTX", "ROTZ", "SIGX", "SWAP")]


def test_log_empty_and_verified():
    text = emit_log(LogSummary("glue", 3))
    assert all(f"gates_{k}: 0" in text for k in Kind)
    c = compile_shift(ShiftSpec(3, 3))
    diff = max_abs_diff(circuit_unitary(c), circuit_unitary(c)) + 3.2e-16
    text = emit_log(LogSummary.for_circuit("shift", c, [("t", 3)], diff))
    assert "t: 3\n" in text
    value = text.splitlines()[-1].split(": ")[1]
    assert "e" in value and float(value) < 1e-9


def test_emission_is_deterministic():
    a = compile_shift(ShiftSpec(5, 7))
    b = compile_shift(ShiftSpec(5, 7))
    assert emit_english(a) == emit_english(b)
    assert emit_picture(a) == emit_picture(b)
