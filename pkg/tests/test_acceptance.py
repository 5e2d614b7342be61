"""Acceptance criteria 1-10 at exact (zero-residual) tolerance.

Each test records a one-line verdict in RESULTS, printed in the terminal
summary by conftest.py.  Failures are never softened: a criterion that does
not hold is reported as FAIL with the offending items.
"""

import os
from fractions import Fraction

import pytest
import sympy as sp

from mstruct.arith import RatFunc
from mstruct.cli import main, sect2_example
from mstruct.dynkin import (build_affine_diagram, check_adm, check_indecomposable, check_opposite_transpose,
                            multiplicity_matrix, quiver_report)
from mstruct.families import FamilySpec, build_family
from mstruct.families.core import central_scalar, sample_parameters, verify_R_identity, verify_relations
from mstruct.suites import suite_inverse, suite_pencil
from mstruct.yangbaxter import (Example1Data, Example2Data, FamilyRMatrix, laurent_check, r_left_multiplication,
                                verify_assoc_ybe, verify_example1, verify_example2, verify_lie_ybe)
from mstruct.linalg import FieldMatrix
from conftest import SYMBOLS, sympy_equal, to_sympy

RESULTS = {}
T, L = SYMBOLS["t"], SYMBOLS["lam"]
SYMBOLIC = [("A", 2), ("A", 3), ("D_even", 2), ("D_even", 3), ("D_odd", 3), ("E6", None)]
EXCEPTIONAL = [("E7", None), ("E8", None)]
ALL = SYMBOLIC + EXCEPTIONAL


def name(family, k):
    return family if k is None else f"{family}(k={k})"


def record(n, failures, passed_detail):
    ok = not failures
    RESULTS[n] = (ok, passed_detail if ok else "failing: " + "; ".join(failures))
    assert ok, RESULTS[n][1]


def test_criterion_01_dimensions():
    expected = {("A", 2): 2, ("A", 3): 3, ("D_even", 2): 4, ("D_even", 3): 8, ("D_odd", 3): 6,
                ("E6", None): 12, ("E7", None): 24, ("E8", None): 60}
    bad = []
    for (family, k), dim in expected.items():
        got = build_family(FamilySpec(family, k)).dim
        if got != dim:
            bad.append(f"{name(family, k)} dim {got} != {dim}")
    record(1, bad, "dims A:k, D_even:4k-4, D_odd:4k-6, E6:12, E7:24, E8:60")


def test_criterion_02_relations():
    bad = []
    for family, k in SYMBOLIC:
        rep = verify_relations(build_family(FamilySpec(family, k)))
        bad += [f"{name(family, k)}:{r['id']}" for r in rep["relations"] if r["status"] != "pass"]
    for family, _ in EXCEPTIONAL:
        for spec in sample_parameters(family, None, 10, 2024):
            rep = verify_relations(build_family(spec))
            bad += [f"{family}@{spec.to_json()}:{r['id']}" for r in rep["relations"] if r["status"] != "pass"]
    record(2, bad, "all printed relations exact (symbolic; E7/E8 at 10 sampled points)")


def test_criterion_03_central_scalar():
    formulas = {
        ("A", 2): 1 / (1 - T ** 2), ("A", 3): 1 / (1 - T ** 3),
        ("D_even", 2): L * (T - 1) / (T - L), ("D_even", 3): L * (T - 1) / (T - L),
        ("D_odd", 3): T * L * (1 - L) / (1 - T * L),
        ("E6", None): L ** 3 * (L ** 3 - 1) / (L ** 3 - T ** 3),
    }
    bad = []
    for (family, k), mu in formulas.items():
        rep = build_family(FamilySpec(family, k))
        if central_scalar(rep)["status"] != "pass" or not sympy_equal(to_sympy(rep.mu), mu):
            bad.append(name(family, k))
    for family, _ in EXCEPTIONAL:
        if central_scalar(build_family(FamilySpec(family)))["status"] != "pass":
            bad.append(family)
    spot = build_family(FamilySpec("A", 2, t=2)).mu
    if spot != RatFunc.coerce(Fraction(-1, 3)):
        bad.append(f"A(k=2,t=2) mu = {spot.to_str()}")
    record(3, bad, "R(1) = mu*I with printed mu; A k=2 t=2 gives -1/3")


def test_criterion_04_operator_identities():
    bad = []
    for family, k in SYMBOLIC:
        if verify_R_identity(build_family(FamilySpec(family, k)))["status"] != "pass":
            bad.append(name(family, k))
    degrees = []
    for family, _ in EXCEPTIONAL:
        spec = sample_parameters(family, None, 1, 5)[0]
        rep = verify_R_identity(build_family(spec))
        degrees.append(rep.get("degree"))
        if rep["status"] != "pass" or rep["degree"] > 4:
            bad.append(f"{family} degree {rep.get('degree')}")
    record(4, bad, f"printed cubic/quartics annihilate R; E7/E8 minimal degrees {degrees}")


def test_criterion_05_printed_inverses():
    bad = []
    for family, k in SYMBOLIC:
        rep = suite_inverse(FamilySpec(family, k), "symbolic")
        printed = rep.get("printed", {"status": "missing"})
        if printed["status"] != "pass":
            hint = printed.get("residual_multiple_of_input")
            bad.append(f"{name(family, k)} (residual = {hint} * x)" if hint else name(family, k))
    record(5, bad, "printed (v+R)^-1 composes to identity for A, D_even, D_odd, E6")


def test_criterion_06_compatibility():
    bad = []
    for family, k in SYMBOLIC:
        rep = suite_pencil(FamilySpec(family, k), "symbolic")
        if rep["status"] != "pass":
            bad.append(name(family, k))
    for family, _ in EXCEPTIONAL:
        if suite_pencil(FamilySpec(family), "sampled", 5, 6)["status"] != "pass":
            bad.append(family)
    record(6, bad, "pencil associativity per power of s and S(x)S(y) = S(xy + s x∘y) for every family")


def test_criterion_07_yang_baxter():
    bad = []
    a = FieldMatrix.from_rows([[Fraction(3, 4), -2], [Fraction(1, 3), 5]])
    sym = [("A(k=2)", FamilyRMatrix(FamilySpec("A", 2))), ("left mult on Mat2", r_left_multiplication(a))]
    for label, r in sym:
        for check in (verify_assoc_ybe, verify_lie_ybe):
            if check(r, mode="symbolic")["status"] != "pass":
                bad.append(f"{label} {check.__name__} symbolic")
    for family, k in [("D_even", 2), ("D_even", 3), ("D_odd", 3), ("E6", None), ("E7", None), ("E8", None)]:
        r = FamilyRMatrix(FamilySpec(family, k))
        for check in (verify_assoc_ybe, verify_lie_ybe):
            rep = check(r, mode="sampled", points=5, seed=7)
            if rep["status"] != "pass" or len(rep["sample_points"]) < 5:
                bad.append(f"{name(family, k)} {check.__name__}")
    for family, k in ALL:
        mode = "symbolic" if family == "A" else "sampled"
        if laurent_check(FamilyRMatrix(FamilySpec(family, k)), mode=mode, seed=7)["status"] != "pass":
            bad.append(f"{name(family, k)} residue")
    record(7, bad, "associative and classical YBE hold (symbolic: A k=2, x a y on Mat2; sampled x5: D, E); residue = id")


def test_criterion_08_worked_examples():
    bad = []
    for n, seed in ((1, 1), (2, 3), (3, 5)):
        rep = verify_example1(Example1Data.random(n, seed))
        bad += [f"example1 dim {n}: {r['id']}" for r in rep["relations"] if r["status"] != "pass"]
        bad += [f"example1 dim {n}: {c['check']}" for c in rep["checks"] if c["status"] != "pass"]
    for p in (1, 2, 3):
        rep = verify_example2(Example2Data.shifted(p))
        bad += [f"example2 p={p}: {c['check']}" for c in rep["checks"] if c["status"] != "pass"]
    record(8, bad, "e/f example (dims 1-3) and diagonal example (p <= 3) with tensor identities")


def test_criterion_09_dynkin_and_quiver():
    bad = []
    for family, k in [("A", 2), ("A", 3), ("D_even", 2), ("D_even", 3), ("D_odd", 3), ("E6", None),
                      ("E7", None), ("E8", None)]:
        d = build_affine_diagram(family, k)
        m = multiplicity_matrix(d)
        if check_adm(m, d.marks)["status"] != "pass":
            bad.append(f"{name(family, k)} adm")
        if not check_indecomposable(m):
            bad.append(f"{name(family, k)} decomposable")
        if check_opposite_transpose(d)["status"] != "pass":
            bad.append(f"{name(family, k)} opposite")
    specs = [FamilySpec("A", 2), FamilySpec("A", 3), FamilySpec("D_even", 2)]
    specs += [sample_parameters(f, None, 1, 9)[0] for f in ("E6", "E7", "E8")]
    for spec in specs:
        rep = quiver_report(build_family(spec))
        bad += [f"{name(spec.family, spec.k)} {c['check']}" for c in rep["checks"] if c["status"] != "pass"]
    record(9, bad, "adm, indecomposable, opposite = transpose; quiver dims = marks, f invertible, sum rule")


def test_criterion_10_determinism(tmp_path, capsys):
    runs = [
        ["build", "--family", "E6"],
        ["verify", "--family", "D_odd", "--k", "3", "--suite", "ybe_assoc", "--suite", "pencil",
         "--points", "3", "--seed", "7"],
        ["examples", "example2", "--p", "2"],
    ]
    bad = []
    for args in runs:
        outputs = []
        for rep in ("first", "second"):
            out = tmp_path / rep / args[0]
            main(args + ["--out", str(out)])
            (path,) = list(out.iterdir())
            outputs.append(path.read_bytes())
        if outputs[0] != outputs[1]:
            bad.append(" ".join(args))
    capsys.readouterr()
    record(10, bad, "repeated runs give byte-identical export and report files")
