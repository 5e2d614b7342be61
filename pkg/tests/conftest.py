"""Shared helpers: a sympy oracle for rational functions and matrices."""

import re

import pytest
import sympy as sp

from mstruct.arith import RatFunc
from mstruct.linalg import FieldMatrix

SYMBOLS = {name: sp.Symbol(name) for name in ("t", "u", "v", "w", "x", "z", "s", "K", "lam")}


def to_sympy(x) -> sp.Expr:
    """Convert through the printed form, so the oracle shares no code with the engine."""
    text = RatFunc.coerce(x).to_str().replace("^", "**")
    text = re.sub(r"\blambda\b", "lam", text)
    return sp.sympify(text, locals=SYMBOLS)


def matrix_to_sympy(m: FieldMatrix) -> sp.Matrix:
    return sp.Matrix(m.rows, m.cols, lambda i, j: to_sympy(m.entry(i, j)))


def sympy_equal(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


@pytest.fixture
def sym():
    return SYMBOLS


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in order, when the acceptance module ran."""
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
