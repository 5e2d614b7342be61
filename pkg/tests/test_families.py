from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from mstruct.arith import RatFunc
from mstruct.families import DegenerateParameter, FamilySpec, build_family
from mstruct.families.core import (central_scalar, export_json, opposite_structure, sample_parameters,
                                   verify_R_identity, verify_relations)
from mstruct.linalg import FieldMatrix
from conftest import SYMBOLS, matrix_to_sympy, sympy_equal, to_sympy

t, lam = RatFunc.var("t"), RatFunc.var("lambda")
T, L = SYMBOLS["t"], SYMBOLS["lam"]


def blocks_total(side):
    return sum(b.size ** 2 for b in side.blocks)


@pytest.mark.parametrize("family,k,dim", [
    ("A", 2, 2), ("A", 3, 3), ("A", 5, 5),
    ("D_even", 2, 4), ("D_even", 3, 8), ("D_odd", 3, 6), ("D_odd", 4, 10),
    ("E6", None, 12),
])
def test_dimension(family, k, dim):
    rep = build_family(FamilySpec(family, k))
    assert rep.dim == dim
    d = rep.definition
    assert blocks_total(d.side_a) == blocks_total(d.side_b) == dim


@pytest.mark.parametrize("family,tail,head", [
    ("E7", [1, 3, 2, 3, 1], [2, 4, 2]),
    ("E8", [2, 6, 4, 2], [4, 3, 5, 3, 1]),
])
def test_exceptional_block_sizes(family, tail, head):
    spec = sample_parameters(family, None, 1, 0)[0]
    rep = build_family(spec)
    d = rep.definition
    assert [b.size for b in d.side_a.blocks] == tail
    assert [b.size for b in d.side_b.blocks] == head
    assert rep.dim == sum(x * x for x in tail) == sum(x * x for x in head)


def test_rank_two_generators_closed_form():
    rep = build_family(FamilySpec("A", 2))
    assert rep.generator("f[1]") == FieldMatrix.diag([1, 0])
    assert rep.generator("f[2]") == FieldMatrix.diag([0, 1])
    e1 = matrix_to_sympy(rep.generator("e[1]"))
    want = sp.Matrix([[1, T], [-T, -T ** 2]]) / (1 - T ** 2)
    assert (e1 - want).applyfunc(sp.simplify) == sp.zeros(2, 2)
    # oracle: idempotent, and the two e's sum to 1
    assert (e1 * e1 - e1).applyfunc(sp.simplify) == sp.zeros(2, 2)
    e2 = matrix_to_sympy(rep.generator("e[2]"))
    assert (e1 + e2).applyfunc(sp.simplify) == sp.eye(2)


@pytest.mark.parametrize("family,k", [("A", 2), ("A", 3), ("A", 4), ("D_even", 2), ("D_even", 3),
                                      ("D_odd", 3), ("D_odd", 4), ("E6", None)])
def test_relations_symbolic(family, k):
    rep = verify_relations(build_family(FamilySpec(family, k)))
    assert rep["status"] == "pass", [r for r in rep["relations"] if r["status"] != "pass"]


def test_cycle_relation_far_indices_vanish():
    rep = build_family(FamilySpec("A", 3))
    assert (rep.generator("f[1]") @ rep.generator("e[3]")).is_zero()


def test_rank_two_star_partition_of_unity():
    rep = build_family(FamilySpec("D_even", 2))
    one = FieldMatrix.identity(4)
    tails = rep.generator("e[1]") + rep.generator("e[2]") + rep.generator("e[4]") + rep.generator("e[5]")
    assert tails == one
    assert rep.generator("e[3,1,1]") + rep.generator("e[3,2,2]") == one


def test_e6_fe_lambda_relation():
    rep = build_family(FamilySpec("E6"))
    for a in (1, 2, 3):
        e = rep.generator(f"e[{a}]")
        for i in (1, 2):
            assert rep.generator(f"f[{a},{i},2]") @ e == (rep.generator(f"f[{a},{i},1]") @ e).scale(lam)


@pytest.mark.parametrize("family", ["E7", "E8"])
def test_exceptional_relations_sampled(family):
    for spec in sample_parameters(family, None, 2, 11):
        assert verify_relations(build_family(spec))["status"] == "pass"


@settings(max_examples=8, deadline=None)
@given(st.fractions(-20, 20, max_denominator=9), st.fractions(-20, 20, max_denominator=9))
def test_relations_hold_at_random_points(lv, tv):
    assume(tv != lv and tv not in (0, 1, -1) and lv != 0)
    rep = build_family(FamilySpec("D_even", 2, lv, tv))
    assert verify_relations(rep)["status"] == "pass"


# central scalar


@pytest.mark.parametrize("family,k,mu", [
    ("A", 2, 1 / (1 - T ** 2)),
    ("A", 3, 1 / (1 - T ** 3)),
    ("D_even", 2, L * (T - 1) / (T - L)),
    ("D_odd", 3, T * L * (1 - L) / (1 - T * L)),
    ("E6", None, L ** 3 * (L ** 3 - 1) / (L ** 3 - T ** 3)),
])
def test_central_scalar(family, k, mu):
    rep = build_family(FamilySpec(family, k))
    assert central_scalar(rep)["status"] == "pass"
    assert sympy_equal(to_sympy(rep.mu), mu)
    K = matrix_to_sympy(rep.R(FieldMatrix.identity(rep.dim)))
    assert (K - mu * sp.eye(rep.dim)).applyfunc(sp.simplify) == sp.zeros(rep.dim, rep.dim)


def test_central_scalar_spot_value():
    rep = build_family(FamilySpec("A", 2, t=2))
    assert rep.mu == RatFunc.coerce(Fraction(-1, 3))


# operator identities


@pytest.mark.parametrize("family,k", [("A", 2), ("A", 3), ("D_even", 2), ("D_even", 3), ("D_odd", 3), ("E6", None)])
def test_printed_identity(family, k):
    rep = verify_R_identity(build_family(FamilySpec(family, k)))
    assert rep["status"] == "pass"


@pytest.mark.parametrize("family", ["E7", "E8"])
def test_exceptional_minimal_polynomial_degree(family):
    spec = sample_parameters(family, None, 1, 3)[0]
    rep = verify_R_identity(build_family(spec))
    assert rep["status"] == "pass"
    assert rep["degree"] <= 4


# opposite structures


@pytest.mark.parametrize("family,k", [("A", 3), ("D_even", 2), ("E6", None)])
def test_opposite_structure(family, k):
    assert opposite_structure(build_family(FamilySpec(family, k)))["status"] == "pass"


# degenerate parameters


@pytest.mark.parametrize("spec,text", [
    (FamilySpec("A", 2, t=1), "1 - t^k = 0"),
    (FamilySpec("A", 3, t=1), "1 - t^k = 0"),
    (FamilySpec("D_even", 2, 2, 2), "t - lambda = 0"),
    (FamilySpec("E7", None, 0, 3), "lambda = 0"),
])
def test_degenerate_parameters_rejected(spec, text):
    with pytest.raises(DegenerateParameter, match="degenerate parameter") as info:
        build_family(spec)
    assert text in str(info.value)


# export


def test_export_is_deterministic():
    a = export_json(build_family(FamilySpec("D_odd", 3)))
    b = export_json(build_family(FamilySpec("D_odd", 3)))
    assert a == b


def test_export_roundtrip_generators():
    rep = build_family(FamilySpec("A", 2))
    out = export_json(rep)
    for name, m in out["generators"].items():
        assert FieldMatrix.from_json(m) == rep.generator(name)
