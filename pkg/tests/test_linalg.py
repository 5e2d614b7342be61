import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from mstruct.arith import RatFunc
from mstruct.families import FamilySpec, build_family
from mstruct.linalg import (FieldMatrix, SandwichOperator, SingularMatrix, determinant, kernel, mat_inverse,
                            minimal_polynomial, minimal_polynomial_of_map, operator_to_matrix, rank,
                            solve_linear)
from conftest import SYMBOLS, matrix_to_sympy, sympy_equal, to_sympy

t, lam, u, v = (RatFunc.var(n) for n in ("t", "lambda", "u", "v"))


def _poly_eq(got, want):
    """Coefficient lists (lowest first) equal after coercion."""
    return len(got) == len(want) and all(RatFunc.coerce(a) == RatFunc.coerce(b) for a, b in zip(got, want))


# products


def test_identity_times_matrix():
    m = FieldMatrix.from_rows([[1, t], [lam, 3]])
    assert FieldMatrix.identity(2) @ m == m


def test_orthogonal_idempotents():
    assert (FieldMatrix.diag([1, 0]) @ FieldMatrix.diag([0, 1])).is_zero()


def test_unnormalized_idempotent_square():
    e = FieldMatrix.from_rows([[1, t], [-t, -t ** 2]])
    assert e @ e == e.scale(1 - t ** 2)


# inverses


def test_inverse_of_identity():
    assert mat_inverse(FieldMatrix.identity(3)) == FieldMatrix.identity(3)


def test_inverse_of_diagonal():
    assert mat_inverse(FieldMatrix.diag([u - v, 1])) == FieldMatrix.diag([1 / (u - v), 1])


def test_inverse_of_unipotent():
    n = FieldMatrix.from_rows([[0, 1], [0, 0]])
    one = FieldMatrix.identity(2)
    assert mat_inverse(one + n.scale(lam)) == one - n.scale(lam)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        mat_inverse(FieldMatrix.from_rows([[1, t], [1, t]]))


# linear systems


def test_solve_identity():
    b = FieldMatrix.from_rows([[1], [t]])
    sol = solve_linear(FieldMatrix.identity(2), b)
    assert sol.solution == b and sol.kernel_basis == []


def test_solve_zero_system():
    sol = solve_linear(FieldMatrix.zeros(2), FieldMatrix.zeros(2, 1))
    assert sol.solution.is_zero()
    assert len(sol.kernel_basis) == 2


def test_solve_base_change_system():
    # v1 = w1 - t w2, v2 = w2 - t w1, with unknowns (w1, w2) and symbolic right side
    a = FieldMatrix.from_rows([[1, -t], [-t, 1]])
    v1, v2 = RatFunc.var("v1"), RatFunc.var("v2")
    sol = solve_linear(a, FieldMatrix.from_rows([[v1], [v2]])).solution
    assert sol.entry(0, 0) == (v1 + t * v2) / (1 - t ** 2)


def test_inconsistent_system_has_no_solution():
    sol = solve_linear(FieldMatrix.from_rows([[1, 1], [1, 1]]), FieldMatrix.from_rows([[0], [1]]))
    assert sol.solution is None


# sympy oracle on random symbolic matrices


entries = st.sampled_from([0, 1, -1, 2, 3, "t", "lambda", "t+1", "1-lambda", "2*t"])


def _mat(cells, n):
    return FieldMatrix.from_rows([[RatFunc.coerce(cells[i * n + j]) if not isinstance(cells[i * n + j], str)
                                   else _parse(cells[i * n + j]) for j in range(n)] for i in range(n)])


def _parse(text):
    from mstruct.arith import parse
    return parse(text)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.lists(entries, min_size=n * n, max_size=n * n))))
def test_determinant_rank_inverse_against_sympy(data):
    n, cells = data
    m = _mat(cells, n)
    sm = matrix_to_sympy(m)
    assert sympy_equal(to_sympy(determinant(m)), sm.det())
    assert rank(m) == sm.rank(simplify=True)
    if not determinant(m).is_zero():
        inv = mat_inverse(m)
        assert inv @ m == FieldMatrix.identity(n)
        diff = (matrix_to_sympy(inv) - sm.inv()).applyfunc(sp.simplify)
        assert diff == sp.zeros(n, n)
    for k in kernel(m):
        assert (m @ k).is_zero()
    assert len(kernel(m)) == n - rank(m)


# operators on matrix spaces


def test_identity_pair_gives_identity_operator():
    op = SandwichOperator([(FieldMatrix.identity(2), FieldMatrix.identity(2))])
    assert operator_to_matrix(op) == FieldMatrix.identity(4)


def test_left_multiplication_is_kronecker():
    a = FieldMatrix.from_rows([[1, t], [2, lam]])
    op = SandwichOperator([(a, FieldMatrix.identity(2))])
    m = operator_to_matrix(op)
    x = FieldMatrix.from_rows([[3, 1], [u, 0]])
    assert (m @ x.vec()).unvec(2, 2) == a @ x


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=12, max_size=12))
def test_vec_identity_for_sandwich(cells):
    a = FieldMatrix.from_rows([cells[0:2], cells[2:4]])
    b = FieldMatrix.from_rows([cells[4:6], cells[6:8]])
    x = FieldMatrix.from_rows([cells[8:10], cells[10:12]])
    op = SandwichOperator([(a, b)])
    assert (operator_to_matrix(op) @ x.vec()).unvec(2, 2) == a @ x @ b == op(x)


# minimal polynomials


def test_minimal_polynomial_identity():
    assert _poly_eq(minimal_polynomial(FieldMatrix.identity(3)), [-1, 1])


def test_minimal_polynomial_projection():
    assert _poly_eq(minimal_polynomial(FieldMatrix.diag([0, 1])), [0, -1, 1])


def test_minimal_polynomial_of_rank_two_family_operator():
    rep = build_family(FamilySpec("A", 2))
    K = 1 / (1 - t ** 2)
    mat = operator_to_matrix(rep.R)
    assert _poly_eq(minimal_polynomial(mat), [0, K, -(K + 1), 1])
    units = [FieldMatrix.unit(2, i, j) for i in range(2) for j in range(2)]
    assert _poly_eq(minimal_polynomial_of_map(rep.R.apply, units), [0, K, -(K + 1), 1])


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_minimal_polynomial_against_sympy(cells):
    m = FieldMatrix.from_rows([cells[0:3], cells[3:6], cells[6:9]])
    p = minimal_polynomial(m)
    x = sp.Symbol("x")
    sm = sp.Matrix(3, 3, cells)
    # annihilates, is monic, and divides the characteristic polynomial
    acc = sp.zeros(3, 3)
    for i, c in enumerate(p):
        acc += to_sympy(c) * sm ** i
    assert acc == sp.zeros(3, 3)
    assert RatFunc.coerce(p[-1]) == 1
    poly = sp.Poly(sum(to_sympy(c) * x ** i for i, c in enumerate(p)), x)
    assert sp.rem(sm.charpoly(x).as_expr(), poly.as_expr(), x) == 0
    # no proper divisor of the characteristic polynomial of lower degree annihilates
    for fac, _ in sp.factor_list(poly.as_expr())[1]:
        q = sp.quo(poly.as_expr(), fac, x)
        coeffs = sp.Poly(q, x).all_coeffs()[::-1]
        acc = sp.zeros(3, 3)
        for i, c in enumerate(coeffs):
            acc += c * sm ** i
        assert acc != sp.zeros(3, 3)
