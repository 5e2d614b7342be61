"""Compatible products: structure constants, pencils, the product x∘y built from R,
the S-identity and closed forms of (v + R)^-1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .arith.ratfunc import RatFunc
from .linalg import FieldMatrix, SandwichOperator, ShapeError, format_poly1, solve_linear

Coords = Dict[int, RatFunc]


def _rf(x) -> RatFunc:
    return RatFunc.coerce(x)


def _add_into(acc: Coords, vec: Mapping[int, RatFunc], c: RatFunc) -> None:
    for k, v in vec.items():
        s = acc.get(k, _rf(0)) + c * v
        if s.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = s


# ---------------------------------------------------------------------------
# structure constants


@dataclass
class ProductTable:
    """x_i x_j = sum_k c_ij^k x_k, stored sparsely."""

    dim: int
    basis_names: List[str]
    constants: Dict[Tuple[int, int], Coords] = field(default_factory=dict)
    unit: Optional[int] = None

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise ShapeError("basis_names must have dim entries")
        for (i, j), row in self.constants.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim) or any(not 0 <= k < self.dim for k in row):
                raise ShapeError("structure constant index out of range")
        if self.unit is not None:
            for i in range(self.dim):
                if self.product(self.unit, i) != {i: _rf(1)} or self.product(i, self.unit) != {i: _rf(1)}:
                    raise ValueError("declared unit does not act as the identity")

    def product(self, i: int, j: int) -> Coords:
        return self.constants.get((i, j), {})

    def multiply(self, x: Mapping[int, RatFunc], y: Mapping[int, RatFunc]) -> Coords:
        out: Coords = {}
        for i, a in x.items():
            for j, b in y.items():
                _add_into(out, self.product(i, j), a * b)
        return out

    def scaled(self, c) -> "ProductTable":
        c = _rf(c)
        consts = {}
        for key, row in self.constants.items():
            new = {k: v * c for k, v in row.items() if not (v * c).is_zero()}
            if new:
                consts[key] = new
        return ProductTable(self.dim, list(self.basis_names), consts)

    @staticmethod
    def from_matrices(fn: Callable[[FieldMatrix, FieldMatrix], FieldMatrix], n: int) -> "ProductTable":
        """Table of a bilinear product on Mat_n in the matrix-unit basis E_ij (row-major)."""
        units = [FieldMatrix.unit(n, i, j) for i in range(n) for j in range(n)]
        names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
        consts = {}
        for a, x in enumerate(units):
            for b, y in enumerate(units):
                z = fn(x, y)
                row = {r * n + c: z.entry(r, c) for r, c in z.nonzero_positions()}
                if row:
                    consts[(a, b)] = row
        return ProductTable(n * n, names, consts)

    @staticmethod
    def matrix_algebra(n: int) -> "ProductTable":
        t = ProductTable.from_matrices(lambda x, y: x @ y, n)
        return t

    def to_json(self) -> dict:
        consts = []
        for (i, j) in sorted(self.constants):
            row = self.constants[(i, j)]
            consts.append([i, j, [[k, row[k].to_str()] for k in sorted(row)]])
        out = {"dim": self.dim, "basis_names": list(self.basis_names), "constants": consts}
        if self.unit is not None:
            out["unit"] = self.unit
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "ProductTable":
        consts = {}
        for i, j, row in obj["constants"]:
            consts[(int(i), int(j))] = {int(k): RatFunc.coerce(v) for k, v in row}
        return ProductTable(int(obj["dim"]), list(obj["basis_names"]), consts, obj.get("unit"))


def _coords_json(t: ProductTable, v: Coords) -> Dict[str, str]:
    return {t.basis_names[k]: v[k].to_str() for k in sorted(v)}


def _associator(p: ProductTable, q: ProductTable, i: int, j: int, k: int) -> Coords:
    """(x_i p x_j) q x_k - x_i p (x_j q x_k) with p, q possibly different."""
    left = q.multiply(p.product(i, j), {k: _rf(1)})
    right = p.multiply({i: _rf(1)}, q.product(j, k))
    _add_into(left, right, _rf(-1))
    return left


def check_associativity(p: ProductTable) -> dict:
    """Associator on all basis triples in lexicographic order; the first failure is reported."""
    for i, j, k in itertools.product(range(p.dim), repeat=3):
        res = _associator(p, p, i, j, k)
        if res:
            return {"check": "associativity", "status": "fail",
                    "first_failing_triple": [i, j, k],
                    "triple_names": [p.basis_names[i], p.basis_names[j], p.basis_names[k]],
                    "residual": _coords_json(p, res)}
    return {"check": "associativity", "status": "pass", "triples": p.dim ** 3}


@dataclass
class PencilParameterized:
    """The product a.b = ab + s a∘b for a formal parameter s."""

    base: ProductTable
    deformation: ProductTable
    parameter_name: str = "s"

    def __post_init__(self):
        if self.base.dim != self.deformation.dim or self.base.basis_names != self.deformation.basis_names:
            raise ShapeError("pencil tables must share dim and basis")


def check_pencil_compatibility(pencil: PencilParameterized) -> dict:
    """Associativity of the pencil, coefficient by coefficient in the parameter (degree <= 2)."""
    b, d = pencil.base, pencil.deformation
    powers = [
        (0, "(xy)z = x(yz)", lambda i, j, k: _associator(b, b, i, j, k)),
        (1, "(x∘y)z + (xy)∘z = x∘(yz) + x(y∘z)", None),
        (2, "(x∘y)∘z = x∘(y∘z)", lambda i, j, k: _associator(d, d, i, j, k)),
    ]
    rows = []
    status = "pass"
    for power, text, fn in powers:
        entry = {"power": power, "identity": text, "status": "pass"}
        for i, j, k in itertools.product(range(b.dim), repeat=3):
            if fn is None:
                res = _associator(d, b, i, j, k)
                _add_into(res, _associator(b, d, i, j, k), _rf(1))
            else:
                res = fn(i, j, k)
            if res:
                entry.update(status="fail", first_failing_triple=[i, j, k], residual=_coords_json(b, res))
                status = "fail"
                break
        rows.append(entry)
    return {"check": "pencil", "parameter": pencil.parameter_name, "status": status, "powers": rows}


# ---------------------------------------------------------------------------
# products from an operator R


def second_product_from_R(R: SandwichOperator, x: FieldMatrix, y: FieldMatrix) -> FieldMatrix:
    """x∘y = R(x) y + x R(y) - R(xy)."""
    if x.shape != (R.size, R.size) or y.shape != (R.size, R.size):
        raise ShapeError("operands must match the operator size")
    return R(x) @ y + x @ R(y) - R(x @ y)


def sandwich_product_expanded(R: SandwichOperator, x: FieldMatrix, y: FieldMatrix) -> FieldMatrix:
    """The same product written term by term: a x b y + x a y b - a x y b, plus x c y for left terms."""
    out = FieldMatrix.zeros(R.size)
    for a, b in R.pairs:
        out = out + a @ x @ b @ y + x @ a @ y @ b - a @ x @ y @ b
    if R.left_term is not None:
        out = out + x @ R.left_term @ y
    if R.right_term is not None:
        out = out + x @ R.right_term @ y
    return out


def product_table_from_R(R: SandwichOperator) -> ProductTable:
    return ProductTable.from_matrices(lambda x, y: second_product_from_R(R, x, y), R.size)


class _CachedR:
    """R applied through the operator; memoizes results on matrix units."""

    def __init__(self, R: SandwichOperator):
        self.R = R
        self.cache: Dict[Tuple[int, int], FieldMatrix] = {}

    def __call__(self, x: FieldMatrix) -> FieldMatrix:
        pos = x.nonzero_positions()
        if len(pos) == 1:
            (i, j), = pos
            c = x.entry(i, j)
            m = self.cache.get((i, j))
            if m is None:
                m = self.cache[(i, j)] = self.R(FieldMatrix.unit(self.R.size, i, j))
            return m if c == 1 else m.scale(c)
        return self.R(x)


def circ(R, x: FieldMatrix, y: FieldMatrix) -> FieldMatrix:
    return R(x) @ y + x @ R(y) - R(x @ y)


def pencil_residuals(R, x: FieldMatrix, y: FieldMatrix, z: FieldMatrix) -> Tuple[FieldMatrix, FieldMatrix]:
    """Coefficients of s and s^2 in the associator of xy + s x∘y (the s^0 part is matrix associativity)."""
    xy, yz = x @ y, y @ z
    x_y, y_z = circ(R, x, y), circ(R, y, z)
    r1 = x_y @ z + circ(R, xy, z) - circ(R, x, yz) - x @ y_z
    r2 = circ(R, x_y, z) - circ(R, x, y_z)
    return r1, r2


def s_identity_residuals(R, x: FieldMatrix, y: FieldMatrix) -> Tuple[FieldMatrix, FieldMatrix]:
    """(x + sR x)(y + sR y) - (xy + s x∘y) - sR(xy + s x∘y), split by powers of s."""
    Rx, Ry = R(x), R(y)
    x_y = Rx @ y + x @ Ry - R(x @ y)
    r1 = Rx @ y + x @ Ry - x_y - R(x @ y)
    r2 = Rx @ Ry - R(x_y)
    return r1, r2


def matrix_units(n: int) -> List[FieldMatrix]:
    return [FieldMatrix.unit(n, i, j) for i in range(n) for j in range(n)]


def random_integer_matrices(n: int, count: int, seed: int, bound: int = 1000) -> List[FieldMatrix]:
    rng = random.Random(seed)
    return [FieldMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
            for _ in range(count)]


def verify_S_lambda(R: SandwichOperator, elements: Optional[Sequence[FieldMatrix]] = None, *,
                    pairs: Optional[Sequence[Tuple[int, int]]] = None) -> dict:
    """S_s = 1 + sR intertwines xy + s x∘y with the matrix product, on all pairs of the given elements
    (or on the listed index pairs)."""
    Rc = _CachedR(R)
    elems = list(elements) if elements is not None else matrix_units(R.size)
    todo = list(pairs) if pairs is not None else list(itertools.product(range(len(elems)), repeat=2))
    for a, b in todo:
        r1, r2 = s_identity_residuals(Rc, elems[a], elems[b])
        for power, r in ((1, r1), (2, r2)):
            if not r.is_zero():
                return {"check": "s_lambda", "status": "fail", "power": power, "pair": [a, b],
                        "residual": r.to_json()}
    return {"check": "s_lambda", "anchor": "S(x)S(y) = S(xy + s x∘y), S = 1 + sR",
            "status": "pass", "pairs": len(todo)}


def check_operator_pencil(R: SandwichOperator, elements: Optional[Sequence[FieldMatrix]] = None, *,
                          triples: Optional[Sequence[Tuple[int, int, int]]] = None) -> dict:
    """Pencil associativity for xy + s x∘y with x∘y built from R, over all triples of elements
    (or the listed index triples)."""
    Rc = _CachedR(R)
    elems = list(elements) if elements is not None else matrix_units(R.size)
    todo = list(triples) if triples is not None else list(itertools.product(range(len(elems)), repeat=3))
    for a, b, c in todo:
        r1, r2 = pencil_residuals(Rc, elems[a], elems[b], elems[c])
        for power, r in ((1, r1), (2, r2)):
            if not r.is_zero():
                return {"check": "pencil", "status": "fail", "power": power, "triple": [a, b, c],
                        "residual": r.to_json()}
    return {"check": "pencil", "anchor": "(xy + s x∘y) associative for all s", "status": "pass",
            "triples": len(todo)}


# ---------------------------------------------------------------------------
# inverse formulas


Poly = List[RatFunc]


def _trim(p: Poly) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1].is_zero():
        p.pop()
    return p


def poly_mod(a: Poly, p: Poly) -> Poly:
    """Remainder of a modulo a monic polynomial p (coefficients lowest first)."""
    if not p[-1] == 1:
        raise ValueError("modulus must be monic")
    a = [_rf(c) for c in a]
    while len(a) >= len(p):
        c = a[-1]
        if not c.is_zero():
            shift = len(a) - len(p)
            for i, pc in enumerate(p):
                a[shift + i] = a[shift + i] - c * pc
        a.pop()
    return _trim(a) if a else [_rf(0)]


def times_v_plus_z(c: Poly, v: RatFunc) -> Poly:
    out = [_rf(0)] * (len(c) + 1)
    for i, ci in enumerate(c):
        out[i] = out[i] + v * ci
        out[i + 1] = out[i + 1] + ci
    return out


def inverse_residual_abstract(coeffs: Poly, identity: Poly, v: RatFunc) -> Poly:
    """(v + z) * sum c_i z^i - 1 reduced modulo the annihilating polynomial."""
    prod = times_v_plus_z(coeffs, v)
    prod[0] = prod[0] - 1
    return poly_mod(prod, identity)


def inverse_from_polynomial(identity: Poly, v: RatFunc) -> Poly:
    """(v + z)^-1 modulo p: p(z) = (z + v) q(z) + p(-v) gives -q(z)/p(-v)."""
    p = [_rf(c) for c in identity]
    n = len(p) - 1
    r = -v
    q = [_rf(0)] * n
    q[n - 1] = p[n]
    for i in range(n - 1, 0, -1):
        q[i - 1] = p[i] + r * q[i]
    rem = p[0] + r * q[0]
    if rem.is_zero():
        raise ZeroDivisionError("(v + z) divides the annihilating polynomial")
    scale = -rem.inverse()
    return [c * scale for c in q]


def verify_inverse_formula(R: SandwichOperator, coeffs: Poly, v: RatFunc,
                           elements: Optional[Sequence[FieldMatrix]] = None, *,
                           apply: Optional[Callable[[FieldMatrix], FieldMatrix]] = None) -> dict:
    """F = sum c_i(v) R^i must satisfy (v+R)F(x) = x on every element.

    F is a polynomial in R, so F((v+R)x) = (v+R)F(x) and one side suffices.
    The residual sum_i c_i(v) (R^{i+1}x + v R^i x) - x is assembled from the
    v-free powers R^i x, which keeps R away from v-dependent entries.
    """
    ap = apply or R.apply
    elems = list(elements) if elements is not None else matrix_units(R.size)
    for idx, x in enumerate(elems):
        powers = [x]
        for _ in coeffs:
            powers.append(ap(powers[-1]))
        res = x.scale(RatFunc.coerce(-1))
        for i, c in enumerate(coeffs):
            if not c.is_zero():
                res = res + powers[i + 1].scale(c) + powers[i].scale(c * v)
        if not res.is_zero():
            return {"check": "inverse", "status": "fail", "side": "(v+R)F(x) - x", "element": idx,
                    "residual": res.to_json(), **_scalar_hint(res, x)}
    return {"check": "inverse", "status": "pass", "elements": len(elems)}


def _scalar_hint(res: FieldMatrix, x: FieldMatrix) -> dict:
    """If the residual is c * x, report c (a scalar slip in a closed form shows up this way)."""
    pos = x.nonzero_positions()
    if not pos:
        return {}
    i, j = pos[0]
    c = res.entry(i, j) / x.entry(i, j)
    if res == x.scale(c):
        return {"residual_multiple_of_input": c.to_str()}
    return {}


def sign_variants(coeffs: Poly, identity: Poly, v: RatFunc) -> List[List[int]]:
    """Sign patterns (one per coefficient) that turn the closed form into an inverse modulo identity."""
    found = []
    for signs in itertools.product((1, -1), repeat=len(coeffs)):
        if all(s == 1 for s in signs):
            continue
        cand = [c * s for c, s in zip(coeffs, signs)]
        res = inverse_residual_abstract(cand, identity, v)
        if all(c.is_zero() for c in res):
            found.append(list(signs))
    return found


def format_poly(p: Poly, var: str = "z") -> str:
    return format_poly1(p, var)


# ---------------------------------------------------------------------------
# inner derivations


def ad_equivalence(R1: SandwichOperator, R2: SandwichOperator) -> Optional[FieldMatrix]:
    """A matrix a with (R1 - R2)(x) = ax - xa for all x, or None."""
    if R1.size != R2.size:
        raise ShapeError("operators act on different sizes")
    n = R1.size
    units = matrix_units(n)
    rows: Dict[Tuple[int, int], RatFunc] = {}
    rhs: Dict[Tuple[int, int], RatFunc] = {}
    eq = 0
    for x_idx, x in enumerate(units):
        p, q = divmod(x_idx, n)
        diff = R1(x) - R2(x)
        # (a E_pq - E_pq a)_{rc} = a_rp [c = q] - [r = p] a_qc
        for r in range(n):
            for c in range(n):
                if c == q:
                    k = r * n + p
                    rows[(eq, k)] = rows.get((eq, k), RatFunc.coerce(0)) + 1
                if r == p:
                    k = q * n + c
                    rows[(eq, k)] = rows.get((eq, k), RatFunc.coerce(0)) - 1
                val = diff.entry(r, c)
                if not val.is_zero():
                    rhs[(eq, 0)] = val
                eq += 1
    rows = {k: v for k, v in rows.items() if not v.is_zero()}
    A = FieldMatrix.from_sparse(eq, n * n, rows)
    b = FieldMatrix.from_sparse(eq, 1, rhs)
    sol = solve_linear(A, b).solution
    if sol is None:
        return None
    return sol.unvec(n, n)
