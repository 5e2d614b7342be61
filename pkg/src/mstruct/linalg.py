"""Exact linear algebra over Q(lambda, t, u, v, w, ...).

A ``FieldMatrix`` stores sparse rows of numerators together with one common
denominator kept as a product of primitive polynomial factors.  Numerators
are scalars (``int``/``mpq``) or ``MultiPoly``; a matrix whose entries are
all rational numbers therefore runs through the same code with plain
scalar arithmetic.  Entries are exposed as normalized ``RatFunc`` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .arith.poly import ONE, MultiPoly
from .arith.ratfunc import DenominatorVanishes, RatFunc, _fmt_binding, parse
from .arith.rational import MPQ_TYPE, is_scalar, normalize, sdiv, to_scalar

Row = Dict[int, object]


class ShapeError(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    """Raised by inversion; carries the vanishing determinant."""

    def __init__(self, det: RatFunc, msg: str = "singular matrix"):
        super().__init__(f"{msg}: determinant = {det.to_str()}")
        self.det = det


def _is_zero(v) -> bool:
    return not v


def _exdiv(a, b):
    """Exact quotient in the numerator domain (scalars or polynomials)."""
    if isinstance(a, MultiPoly):
        if isinstance(b, MultiPoly):
            if b.is_constant():
                return a.scale(sdiv(1, b.constant_value()))
            return a.divexact(b)
        return a.scale(sdiv(1, b))
    if isinstance(b, MultiPoly):
        if b.is_constant():
            return sdiv(a, b.constant_value())
        if not a:
            return 0
        raise ArithmeticError("inexact division of a scalar by a polynomial")
    return sdiv(a, b)


def _clean(v):
    if isinstance(v, MultiPoly):
        if v.is_constant():
            return v.constant_value()
        return v
    if type(v) is MPQ_TYPE:
        return normalize(v)
    return v


def _as_poly(v) -> MultiPoly:
    return v if isinstance(v, MultiPoly) else MultiPoly.const(v)


class FieldMatrix:
    """Immutable matrix over the rational function field."""

    __slots__ = ("rows", "cols", "_r", "_den")

    def __init__(self, rows: int, cols: int, data: Sequence[Row] | None = None,
                 den: Mapping[MultiPoly, int] | None = None):
        self.rows = rows
        self.cols = cols
        self._r: List[Row] = list(data) if data is not None else [{} for _ in range(rows)]
        self._den: Dict[MultiPoly, int] = dict(den) if den else {}

    # construction -----------------------------------------------------
    @staticmethod
    def zeros(rows: int, cols: int | None = None) -> "FieldMatrix":
        return FieldMatrix(rows, rows if cols is None else cols)

    @staticmethod
    def identity(n: int) -> "FieldMatrix":
        return FieldMatrix(n, n, [{i: 1} for i in range(n)])

    @staticmethod
    def scalar(n: int, c) -> "FieldMatrix":
        return FieldMatrix.identity(n).scale(c)

    @staticmethod
    def unit(n: int, i: int, j: int, m: int | None = None) -> "FieldMatrix":
        m = n if m is None else m
        data = [{} for _ in range(n)]
        data[i] = {j: 1}
        return FieldMatrix(n, m, data)

    @staticmethod
    def diag(values: Sequence) -> "FieldMatrix":
        n = len(values)
        rows = [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return FieldMatrix.from_rows(rows)

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "FieldMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ents: List[List[RatFunc | object]] = []
        for r in rows:
            if len(r) != nc:
                raise ShapeError("ragged rows")
            ents.append([_coerce_entry(x) for x in r])
        return _from_entries(nr, nc, ents)

    @staticmethod
    def from_entries(rows: int, cols: int, entries: Sequence) -> "FieldMatrix":
        if len(entries) != rows * cols:
            raise ShapeError("entry count does not match shape")
        ents = [[_coerce_entry(entries[i * cols + j]) for j in range(cols)] for i in range(rows)]
        return _from_entries(rows, cols, ents)

    @staticmethod
    def from_sparse(rows: int, cols: int, entries: Mapping[Tuple[int, int], object]) -> "FieldMatrix":
        ents = [[0] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            ents[i][j] = _coerce_entry(v)
        return _from_entries(rows, cols, ents)

    # inspection -------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def den_poly(self) -> MultiPoly:
        d = ONE
        for f, e in self._den.items():
            d = d * f ** e
        return d

    def is_numeric(self) -> bool:
        if self._den:
            return False
        return all(not isinstance(v, MultiPoly) for r in self._r for v in r.values())

    def nnz(self) -> int:
        return sum(len(r) for r in self._r)

    def entry(self, i: int, j: int) -> RatFunc:
        v = self._r[i].get(j)
        if v is None:
            return RatFunc.coerce(0)
        if not self._den:
            return RatFunc.coerce(v)
        return RatFunc(_as_poly(v), self.den_poly())

    def __getitem__(self, ij: Tuple[int, int]) -> RatFunc:
        return self.entry(*ij)

    def scalar_entry(self, i: int, j: int):
        """Entry of a numeric matrix as an exact scalar."""
        if self._den:
            raise ValueError("matrix is not numeric")
        v = self._r[i].get(j, 0)
        if isinstance(v, MultiPoly):
            return v.constant_value()
        return v

    def entries(self) -> List[RatFunc]:
        d = self.den_poly() if self._den else None
        out = []
        for i in range(self.rows):
            r = self._r[i]
            for j in range(self.cols):
                v = r.get(j)
                if v is None:
                    out.append(RatFunc.coerce(0))
                elif d is None:
                    out.append(RatFunc.coerce(v))
                else:
                    out.append(RatFunc(_as_poly(v), d))
        return out

    def to_rows(self) -> List[List[RatFunc]]:
        e = self.entries()
        return [e[i * self.cols:(i + 1) * self.cols] for i in range(self.rows)]

    def nonzero_positions(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self._r) for j in sorted(r)]

    def row_support(self) -> List[int]:
        return [i for i, r in enumerate(self._r) if r]

    def col_support(self) -> List[int]:
        s = set()
        for r in self._r:
            s.update(r)
        return sorted(s)

    def is_zero(self) -> bool:
        return all(not r for r in self._r)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]

    def scalar_multiple_of_identity(self) -> Optional[RatFunc]:
        """c when self == c * I, else None."""
        if not self.is_square():
            return None
        first = None
        for i, r in enumerate(self._r):
            if len(r) > 1 or (r and i not in r):
                return None
            v = r.get(i, 0)
            if first is None:
                first = v
            elif v != first:
                return None
        if first is None or not first:
            return RatFunc.coerce(0)
        return RatFunc(_as_poly(first), self.den_poly()) if self._den else RatFunc.coerce(first)

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [{j: -v for j, v in r.items()} for r in self._r], self._den)

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return _combine(self, other, 1)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return _combine(self, other, -1)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __mul__(self, c) -> "FieldMatrix":
        if isinstance(c, FieldMatrix):
            return mat_mul(self, c)
        return self.scale(c)

    def __rmul__(self, c) -> "FieldMatrix":
        return self.scale(c)

    def scale(self, c) -> "FieldMatrix":
        if isinstance(c, str):
            c = parse(c)
        if isinstance(c, RatFunc):
            if not c:
                return FieldMatrix(self.rows, self.cols)
            num = c.num.constant_value() if c.num.is_constant() else c.num
            out = self._map(lambda v: _clean(v * num))
            if c.den.is_one():
                return out if num == 1 else out._reduced()
            return out._with_factor(c.den)._reduced()
        if isinstance(c, MultiPoly):
            c = c.constant_value() if c.is_constant() else c
            if not c:
                return FieldMatrix(self.rows, self.cols)
            return self._map(lambda v: v * c)._reduced() if isinstance(c, MultiPoly) else self._map(lambda v: v * c)
        c = to_scalar(c)
        if not c:
            return FieldMatrix(self.rows, self.cols)
        if c == 1:
            return self
        return self._map(lambda v: _clean(v * c))

    def _map(self, fn) -> "FieldMatrix":
        data = []
        for r in self._r:
            nr = {}
            for j, v in r.items():
                w = fn(v)
                if w:
                    nr[j] = w
            data.append(nr)
        return FieldMatrix(self.rows, self.cols, data, self._den)

    def _with_factor(self, f: MultiPoly, e: int = 1) -> "FieldMatrix":
        """Divide by f**e (f non-constant)."""
        if f.is_constant():
            return self.scale(sdiv(1, f.constant_value()) ** e)
        c = f.content()
        if f.lc() < 0:
            c = -c
        fp = f.primitive()
        den = dict(self._den)
        den[fp] = den.get(fp, 0) + e
        out = FieldMatrix(self.rows, self.cols, self._r, den)
        if c != 1:
            inv = sdiv(1, c) ** e
            out = FieldMatrix(self.rows, self.cols, [{j: _clean(v * inv) for j, v in r.items()} for r in out._r], den)
        return out

    def _reduced(self) -> "FieldMatrix":
        """Cancel denominator factors that divide every numerator."""
        if not self._den:
            return self
        den = dict(self._den)
        data = self._r
        for f in list(den):
            while den.get(f):
                trial = []
                ok = True
                for r in data:
                    nr = {}
                    for j, v in r.items():
                        if not isinstance(v, MultiPoly):
                            ok = False
                            break
                        q = v.try_divexact(f)
                        if q is None:
                            ok = False
                            break
                        nr[j] = _clean(q)
                    if not ok:
                        break
                    trial.append(nr)
                if not ok:
                    break
                data = trial
                den[f] -= 1
                if not den[f]:
                    del den[f]
        return FieldMatrix(self.rows, self.cols, data, den)

    def transpose(self) -> "FieldMatrix":
        data: List[Row] = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._r):
            for j, v in r.items():
                data[j][i] = v
        return FieldMatrix(self.cols, self.rows, data, self._den)

    @property
    def T(self) -> "FieldMatrix":
        return self.transpose()

    def trace(self) -> RatFunc:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        s = 0
        for i, r in enumerate(self._r):
            v = r.get(i)
            if v is not None:
                s = s + v
        if not self._den:
            return RatFunc.coerce(_clean(s)) if not isinstance(s, MultiPoly) else RatFunc(s)
        return RatFunc(_as_poly(s), self.den_poly())

    def kron(self, other: "FieldMatrix") -> "FieldMatrix":
        n, m = other.rows, other.cols
        data: List[Row] = [{} for _ in range(self.rows * n)]
        for i, r in enumerate(self._r):
            for j, a in r.items():
                for k, s in enumerate(other._r):
                    row = data[i * n + k]
                    for l, b in s.items():
                        row[j * m + l] = a * b
        den = dict(self._den)
        for f, e in other._den.items():
            den[f] = den.get(f, 0) + e
        return FieldMatrix(self.rows * n, self.cols * m, data, den)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "FieldMatrix":
        cmap = {c: k for k, c in enumerate(cols)}
        data = []
        for i in rows:
            data.append({cmap[j]: v for j, v in self._r[i].items() if j in cmap})
        return FieldMatrix(len(rows), len(cols), data, self._den)._reduced()

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.rows != other.rows:
            raise ShapeError("row counts differ")
        a, b = _common(self, other)
        data = [dict(ra) for ra in a._r]
        for i, rb in enumerate(b._r):
            for j, v in rb.items():
                data[i][self.cols + j] = v
        return FieldMatrix(self.rows, self.cols + other.cols, data, a._den)

    def vec(self) -> "FieldMatrix":
        """Row-major vectorization as an (rows*cols) x 1 column."""
        data = []
        for r in self._r:
            for j in range(self.cols):
                v = r.get(j)
                data.append({0: v} if v is not None else {})
        return FieldMatrix(self.rows * self.cols, 1, data, self._den)

    def unvec(self, rows: int, cols: int) -> "FieldMatrix":
        if self.cols != 1 or self.rows != rows * cols:
            raise ShapeError("not a vectorized matrix of that shape")
        data = [{} for _ in range(rows)]
        for k, r in enumerate(self._r):
            v = r.get(0)
            if v is not None:
                data[k // cols][k % cols] = v
        return FieldMatrix(rows, cols, data, self._den)

    # evaluation -------------------------------------------------------
    def evaluate(self, values: Mapping[str, object]) -> "FieldMatrix":
        """Numeric matrix at a point; raises DenominatorVanishes on poles."""
        vals = {k: to_scalar(v) for k, v in values.items()}
        d = 1
        for f, e in self._den.items():
            fv = f.evaluate(vals)
            if not fv:
                raise DenominatorVanishes(
                    f"denominator vanishes at {_fmt_binding(values)}: factor {f.to_str()}")
            d = d * fv ** e
        inv = sdiv(1, d)
        data = []
        for r in self._r:
            nr = {}
            for j, v in r.items():
                x = v.evaluate(vals) if isinstance(v, MultiPoly) else v
                x = _clean(x * inv)
                if x:
                    nr[j] = x
            data.append(nr)
        return FieldMatrix(self.rows, self.cols, data)

    def substitute(self, bindings: Mapping[str, object]) -> "FieldMatrix":
        if all(is_scalar(v) or isinstance(v, (int,)) for v in bindings.values()):
            try:
                vals = {k: to_scalar(v) for k, v in bindings.items()}
            except TypeError:
                vals = None
            if vals is not None:
                return self._partial_eval(vals)
        ents = [e.substitute(bindings) for e in self.entries()]
        return FieldMatrix.from_entries(self.rows, self.cols, ents)

    def _partial_eval(self, vals) -> "FieldMatrix":
        out = FieldMatrix(self.rows, self.cols,
                          [{j: _clean(v.partial_evaluate(vals)) if isinstance(v, MultiPoly) else v
                            for j, v in r.items()} for r in self._r])
        out = FieldMatrix(self.rows, self.cols, [{j: v for j, v in r.items() if v} for r in out._r])
        d = ONE
        for f, e in self._den.items():
            d = d * f.partial_evaluate(vals) ** e
        if not d:
            raise DenominatorVanishes(f"denominator vanishes at {_fmt_binding(vals)}")
        return out.scale(RatFunc(ONE, d))

    def map_entries(self, fn: Callable[[RatFunc], RatFunc]) -> "FieldMatrix":
        return FieldMatrix.from_entries(self.rows, self.cols, [fn(e) for e in self.entries()])

    # serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [e.to_str() for e in self.entries()]}

    @staticmethod
    def from_json(obj: Mapping) -> "FieldMatrix":
        return FieldMatrix.from_entries(int(obj["rows"]), int(obj["cols"]), [parse(s) for s in obj["entries"]])

    def __repr__(self) -> str:
        return "FieldMatrix(" + repr([[e.to_str() for e in row] for row in self.to_rows()]) + ")"


def _coerce_entry(x):
    if isinstance(x, RatFunc):
        if x.den.is_one() and x.num.is_constant():
            return x.num.constant_value()
        return x
    if isinstance(x, MultiPoly):
        return x.constant_value() if x.is_constant() else RatFunc(x)
    if isinstance(x, str):
        return _coerce_entry(parse(x))
    return to_scalar(x)


def _from_entries(nr: int, nc: int, ents: List[List[object]]) -> FieldMatrix:
    dens = []
    seen = set()
    for row in ents:
        for x in row:
            if isinstance(x, RatFunc) and not x.den.is_one() and x.den not in seen:
                seen.add(x.den)
                dens.append(x.den)
    if not dens:
        data = []
        for row in ents:
            r = {}
            for j, x in enumerate(row):
                if isinstance(x, RatFunc):
                    x = x.num
                x = _clean(x)
                if x:
                    r[j] = x
            data.append(r)
        return FieldMatrix(nr, nc, data)
    from .arith.poly import poly_lcm
    L = dens[0]
    for d in dens[1:]:
        L = poly_lcm(L, d)
    data = []
    for row in ents:
        r = {}
        for j, x in enumerate(row):
            if isinstance(x, RatFunc):
                if not x:
                    continue
                v = x.num * L.divexact(x.den)
            elif x:
                v = L.scale(x)
            else:
                continue
            r[j] = _clean(v)
        data.append(r)
    return FieldMatrix(nr, nc, data)._with_factor(L)


def _common(a: FieldMatrix, b: FieldMatrix) -> Tuple[FieldMatrix, FieldMatrix]:
    """Bring a and b to the same denominator (factorwise maximum)."""
    if a._den == b._den:
        return a, b
    den = dict(a._den)
    for f, e in b._den.items():
        if den.get(f, 0) < e:
            den[f] = e

    def lift(m: FieldMatrix) -> FieldMatrix:
        mult = ONE
        for f, e in den.items():
            k = e - m._den.get(f, 0)
            if k:
                mult = mult * f ** k
        if mult.is_one():
            return FieldMatrix(m.rows, m.cols, m._r, den)
        data = [{j: v * mult for j, v in r.items()} for r in m._r]
        return FieldMatrix(m.rows, m.cols, data, den)

    return lift(a), lift(b)


def _combine(a: FieldMatrix, b: FieldMatrix, sign: int) -> FieldMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    a, b = _common(a, b)
    data = []
    for ra, rb in zip(a._r, b._r):
        r = dict(ra)
        for j, v in rb.items():
            w = r.get(j)
            if w is None:
                r[j] = v if sign > 0 else -v
            else:
                w = _clean(w + v if sign > 0 else w - v)
                if w:
                    r[j] = w
                else:
                    del r[j]
        data.append(r)
    out = FieldMatrix(a.rows, a.cols, data, a._den)
    return out._reduced() if out._den else out


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Exact product."""
    if a.cols != b.rows:
        raise ShapeError(f"shape mismatch {a.shape} @ {b.shape}")
    brows = b._r
    data = []
    for ra in a._r:
        acc: Row = {}
        get = acc.get
        for k, x in ra.items():
            rb = brows[k]
            if not rb:
                continue
            for j, y in rb.items():
                acc[j] = get(j, 0) + x * y
        data.append({j: _clean(v) for j, v in acc.items() if v})
    den = dict(a._den)
    for f, e in b._den.items():
        den[f] = den.get(f, 0) + e
    out = FieldMatrix(a.rows, b.cols, data, den)
    return out._reduced() if den else out


def mat_sum(mats: Iterable[FieldMatrix]) -> FieldMatrix:
    it = iter(mats)
    acc = next(it)
    for m in it:
        acc = acc + m
    return acc


# ---------------------------------------------------------------------------
# elimination


def _gauss_jordan(rows: List[Row], ncols: int) -> Tuple[List[Row], List[int], object, int]:
    """Fraction-free Gauss-Jordan elimination on the first ncols columns.

    Returns (rows, pivot columns, common pivot value D, swap parity).  After
    elimination, pivot row r holds D at its pivot column and zeros at every
    other pivot column.
    """
    rows = [dict(r) for r in rows]
    m = len(rows)
    prev = 1
    r = 0
    pivots: List[int] = []
    swaps = 0
    for c in range(ncols):
        if r >= m:
            break
        p = next((i for i in range(r, m) if c in rows[i]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            swaps += 1
        pr = rows[r]
        piv = pr[c]
        same = piv == prev
        for i in range(m):
            if i == r:
                continue
            ri = rows[i]
            a = ri.get(c)
            if a is None:
                if same or not ri:
                    continue
                rows[i] = {j: _clean(_exdiv(piv * v, prev)) for j, v in ri.items()}
                continue
            new: Row = {}
            for j in set(ri) | set(pr):
                if j == c:
                    continue
                x = ri.get(j)
                y = pr.get(j)
                if x is None:
                    val = -(a * y)
                elif y is None:
                    val = piv * x
                else:
                    val = piv * x - a * y
                if val:
                    if not same or prev != 1:
                        val = _exdiv(val, prev)
                    val = _clean(val)
                    if val:
                        new[j] = val
            rows[i] = new
        # rows below and above now carry the new scale; the pivot row keeps piv
        prev = piv
        pivots.append(c)
        r += 1
    # rows that were pivoted before later steps carry the final scale already
    return rows, pivots, prev, swaps


def _numerators(a: FieldMatrix) -> List[Row]:
    return [dict(r) for r in a._r]


def determinant(a: FieldMatrix) -> RatFunc:
    if not a.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return RatFunc.coerce(1)
    rows, piv, D, swaps = _gauss_jordan(_numerators(a), n)
    if len(piv) < n:
        return RatFunc.coerce(0)
    det = RatFunc.coerce(D if not isinstance(D, MultiPoly) else D)
    if swaps % 2:
        det = -det
    if a._den:
        det = det / RatFunc(ONE, a.den_poly() ** n)
    return det


def mat_inverse(a: FieldMatrix) -> FieldMatrix:
    """Exact inverse; raises SingularMatrix carrying the determinant."""
    if not a.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = a.rows
    aug = [dict(r) for r in a._r]
    for i in range(n):
        aug[i][n + i] = 1
    rows, piv, D, swaps = _gauss_jordan(aug, n)
    if len(piv) < n:
        raise SingularMatrix(RatFunc.coerce(0))
    data = [{j - n: v for j, v in r.items() if j >= n} for r in rows]
    out = FieldMatrix(n, n, data)
    dpoly = a.den_poly() if a._den else None
    if dpoly is not None:
        out = FieldMatrix(n, n, [{j: _clean(v * dpoly) for j, v in r.items()} for r in data])
    if isinstance(D, MultiPoly) and not D.is_constant():
        return out._with_factor(D)._reduced()
    return out.scale(sdiv(1, D.constant_value() if isinstance(D, MultiPoly) else D))


def rank(a: FieldMatrix) -> int:
    _, piv, _, _ = _gauss_jordan(_numerators(a), a.cols)
    return len(piv)


@dataclass
class LinearSolution:
    solution: Optional[FieldMatrix]
    kernel_basis: List[FieldMatrix] = field(default_factory=list)


def solve_linear(a: FieldMatrix, rhs: FieldMatrix) -> LinearSolution:
    """Solve a X = rhs; also return a basis of the null space of a."""
    if a.rows != rhs.rows:
        raise ShapeError("row counts differ")
    n, k = a.cols, rhs.cols
    A, B = _common(a, rhs)
    aug = [dict(r) for r in A._r]
    for i, rb in enumerate(B._r):
        for j, v in rb.items():
            aug[i][n + j] = v
    rows, piv, D, _ = _gauss_jordan(aug, n)
    pivrow = {c: rows[i] for i, c in enumerate(piv)}
    consistent = all(not any(j >= n for j in r) for r in rows[len(piv):])
    Dm = RatFunc.coerce(D) if not isinstance(D, MultiPoly) else RatFunc(D)
    sol = None
    if consistent:
        data = [{} for _ in range(n)]
        for c, r in pivrow.items():
            data[c] = {j - n: v for j, v in r.items() if j >= n}
        sol = FieldMatrix(n, k, data).scale(Dm.inverse())
    free = [c for c in range(n) if c not in pivrow]
    kernel = []
    for f in free:
        data = [{} for _ in range(n)]
        data[f] = {0: D}
        for c, r in pivrow.items():
            v = r.get(f)
            if v is not None:
                data[c] = {0: -v}
        kernel.append(FieldMatrix(n, 1, data).scale(Dm.inverse()))
    return LinearSolution(sol, kernel)


def kernel(a: FieldMatrix) -> List[FieldMatrix]:
    return solve_linear(a, FieldMatrix.zeros(a.rows, 1)).kernel_basis


# ---------------------------------------------------------------------------
# sandwich operators


class SandwichOperator:
    """x -> sum_i c_i a_i x b_i + left_term x + x right_term.

    With a ``frame`` (P, P_inv) the stored pairs act in left-conjugated
    coordinates: the operator is x -> P * inner(P_inv * x), where ``inner``
    uses the stored pairs.  Families use this to keep left multipliers as
    sparse matrix units.
    """

    __slots__ = ("terms", "left_term", "right_term", "frame", "size", "_groups")

    def __init__(self, pairs: Sequence = (), left_term: FieldMatrix | None = None,
                 right_term: FieldMatrix | None = None, frame: Tuple[FieldMatrix, FieldMatrix] | None = None,
                 size: int | None = None):
        terms = []
        for p in pairs:
            if len(p) == 2:
                terms.append((RatFunc.coerce(1), p[0], p[1]))
            else:
                terms.append((RatFunc.coerce(p[0]), p[1], p[2]))
        mats = [m for _, a, b in terms for m in (a, b) if m is not None]
        mats += [m for m in (left_term, right_term) if m is not None]
        if frame is not None:
            mats += list(frame)
        if size is None:
            if not mats:
                raise ShapeError("cannot infer operator size")
            size = mats[0].rows
        for m in mats:
            if m.shape != (size, size):
                raise ShapeError("operator matrices must be square of equal size")
        self.terms: List[Tuple[RatFunc, Optional[FieldMatrix], Optional[FieldMatrix]]] = terms
        self.left_term = left_term
        self.right_term = right_term
        self.frame = frame
        self.size = size
        self._groups = None

    @staticmethod
    def zero(n: int) -> "SandwichOperator":
        return SandwichOperator((), size=n)

    @staticmethod
    def identity(n: int) -> "SandwichOperator":
        return SandwichOperator([(1, None, None)], size=n)

    @staticmethod
    def left_multiplication(a: FieldMatrix) -> "SandwichOperator":
        return SandwichOperator((), left_term=a)

    @staticmethod
    def right_multiplication(d: FieldMatrix) -> "SandwichOperator":
        return SandwichOperator((), right_term=d)

    @property
    def pairs(self) -> List[Tuple[FieldMatrix, FieldMatrix]]:
        """Materialized (a_i, b_i) pairs in the working basis (c_i folded into a_i)."""
        n = self.size
        ident = FieldMatrix.identity(n)
        out = []
        for c, a, b in self.terms:
            a = ident if a is None else a
            if self.frame is not None:
                P, Pi = self.frame
                a = P @ a @ Pi
            out.append((a.scale(c), ident if b is None else b))
        return out

    def _inner_groups(self):
        if self._groups is None:
            groups: Dict[int, list] = {}
            order = []
            for c, a, b in self.terms:
                key = id(b)
                if key not in groups:
                    groups[key] = [b, None]
                    order.append(key)
                la = a if a is not None else None
                term = (c, la)
                groups[key].append(term)
            built = []
            n = self.size
            for key in order:
                b = groups[key][0]
                left = None
                for c, la in groups[key][2:]:
                    m = (la if la is not None else FieldMatrix.identity(n)).scale(c)
                    left = m if left is None else left + m
                built.append((left, b))
            self._groups = built
        return self._groups

    def apply_inner(self, x: FieldMatrix) -> FieldMatrix:
        """Action in frame coordinates (equal to apply when unframed), without tails."""
        out = None
        for left, b in self._inner_groups():
            y = left @ x
            if b is not None:
                y = y @ b
            out = y if out is None else out + y
        return out if out is not None else FieldMatrix.zeros(self.size)

    def apply(self, x: FieldMatrix) -> FieldMatrix:
        if x.shape != (self.size, self.size):
            raise ShapeError("operand has the wrong size")
        if self.frame is not None:
            P, Pi = self.frame
            out = P @ self.apply_inner(Pi @ x)
        else:
            out = self.apply_inner(x)
        if self.left_term is not None:
            out = out + self.left_term @ x
        if self.right_term is not None:
            out = out + x @ self.right_term
        return out

    __call__ = apply

    def apply_conjugated(self, y: FieldMatrix) -> FieldMatrix:
        """P_inv * R(P * y): the operator in frame coordinates, tails included."""
        if self.frame is None:
            return self.apply(y)
        P, Pi = self.frame
        out = self.apply_inner(y)
        if self.left_term is not None:
            out = out + Pi @ (self.left_term @ (P @ y))
        if self.right_term is not None:
            out = out + y @ self.right_term
        return out

    def scaled(self, c) -> "SandwichOperator":
        c = RatFunc.coerce(c)
        return SandwichOperator([(c * k, a, b) for k, a, b in self.terms],
                                None if self.left_term is None else self.left_term.scale(c),
                                None if self.right_term is None else self.right_term.scale(c),
                                self.frame, self.size)

    def __add__(self, other: "SandwichOperator") -> "SandwichOperator":
        if self.size != other.size:
            raise ShapeError("operator sizes differ")
        if self.frame is not None or other.frame is not None:
            a, b = self.unframed(), other.unframed()
        else:
            a, b = self, other
        lt = _opt_add(a.left_term, b.left_term)
        rt = _opt_add(a.right_term, b.right_term)
        return SandwichOperator(list(a.terms) + list(b.terms), lt, rt, None, self.size)

    def unframed(self) -> "SandwichOperator":
        if self.frame is None:
            return self
        return SandwichOperator([(1, a, b) for a, b in self.pairs], self.left_term, self.right_term, None, self.size)

    def evaluate(self, values: Mapping[str, object]) -> "SandwichOperator":
        """Specialize every coefficient and matrix at a parameter point."""
        cache: Dict[int, FieldMatrix] = {}

        def ev(m):
            if m is None:
                return None
            k = id(m)
            if k not in cache:
                cache[k] = m.evaluate(values)
            return cache[k]

        frame = None if self.frame is None else (ev(self.frame[0]), ev(self.frame[1]))
        terms = [(RatFunc.coerce(c.evaluate(values)), ev(a), ev(b)) for c, a, b in self.terms]
        return SandwichOperator(terms, ev(self.left_term), ev(self.right_term), frame, self.size)

    def substitute(self, bindings: Mapping[str, object]) -> "SandwichOperator":
        cache: Dict[int, FieldMatrix] = {}

        def sb(m):
            if m is None:
                return None
            k = id(m)
            if k not in cache:
                cache[k] = m.substitute(bindings)
            return cache[k]

        frame = None if self.frame is None else (sb(self.frame[0]), sb(self.frame[1]))
        terms = [(c.substitute(bindings), sb(a), sb(b)) for c, a, b in self.terms]
        return SandwichOperator(terms, sb(self.left_term), sb(self.right_term), frame, self.size)

    def left_factors_inner(self) -> List[FieldMatrix]:
        n = self.size
        return [FieldMatrix.identity(n) if a is None else a for _, a, _ in self.terms]

    def right_factors(self) -> List[FieldMatrix]:
        n = self.size
        out = [FieldMatrix.identity(n) if b is None else b for _, _, b in self.terms]
        if self.right_term is not None:
            out.append(self.right_term)
        return out


def _opt_add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def operator_to_matrix(op: SandwichOperator, n: int | None = None) -> FieldMatrix:
    """n^2 x n^2 matrix of op on row-major vectorized n x n matrices.

    For x -> a x b the entry at ((i, j), (k, l)) is a[i, k] * b[l, j].
    """
    n = op.size if n is None else n
    if n != op.size:
        raise ShapeError("operator size does not match n")
    ident = FieldMatrix.identity(n)
    total = FieldMatrix.zeros(n * n)
    for a, b in op.pairs:
        total = total + a.kron(b.transpose())
    if op.left_term is not None:
        total = total + op.left_term.kron(ident)
    if op.right_term is not None:
        total = total + ident.kron(op.right_term.transpose())
    return total


# ---------------------------------------------------------------------------
# minimal polynomials

Poly1 = List[RatFunc]  # coefficients, lowest degree first


def _poly_mul(p: Poly1, q: Poly1) -> Poly1:
    out = [RatFunc.coerce(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def apply_poly(p: Poly1, apply: Callable[[FieldMatrix], FieldMatrix], x: FieldMatrix) -> FieldMatrix:
    """p(M) x by Horner's rule for a black-box linear map M."""
    acc = x.scale(p[-1])
    for c in reversed(p[:-1]):
        acc = apply(acc)
        if c:
            acc = acc + x.scale(c)
    return acc


def _flatten(x: FieldMatrix) -> FieldMatrix:
    return x if x.cols == 1 else x.vec()


def krylov_minimal_polynomial(apply: Callable[[FieldMatrix], FieldMatrix], w: FieldMatrix,
                              max_degree: int | None = None) -> Poly1:
    """Monic minimal polynomial of the linear map restricted to the cyclic space of w."""
    if w.is_zero():
        return [RatFunc.coerce(1)]
    vecs = [w]
    cur = w
    limit = max_degree if max_degree is not None else w.rows * w.cols
    for _ in range(limit):
        cur = apply(cur)
        cols = [_flatten(v) for v in vecs]
        A = cols[0]
        for c in cols[1:]:
            A = A.hstack(c)
        res = solve_linear(A, _flatten(cur))
        if res.solution is not None:
            coeffs = [-res.solution.entry(i, 0) for i in range(len(vecs))]
            return coeffs + [RatFunc.coerce(1)]
        vecs.append(cur)
    raise ArithmeticError("Krylov sequence did not close within the degree limit")


def minimal_polynomial(m: FieldMatrix) -> Poly1:
    """Monic least-degree polynomial with p(m) = 0, lowest coefficient first."""
    if not m.is_square():
        raise ShapeError("minimal polynomial of a non-square matrix")
    n = m.rows
    apply = lambda v: m @ v
    return minimal_polynomial_of_map(apply, [FieldMatrix.unit(n, i, 0, 1) for i in range(n)])


def minimal_polynomial_of_map(apply: Callable[[FieldMatrix], FieldMatrix], spanning: Iterable[FieldMatrix],
                              max_degree: int | None = None) -> Poly1:
    """Minimal polynomial of a linear map on the span of the given vectors."""
    p: Poly1 = [RatFunc.coerce(1)]
    for e in spanning:
        w = apply_poly(p, apply, e)
        if w.is_zero():
            continue
        q = krylov_minimal_polynomial(apply, w, max_degree)
        p = _poly_mul(p, q)
    return p


def format_poly1(p: Poly1, var: str = "z") -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = c.to_str()
        if not mono:
            parts.append(f"({cs})")
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"({cs})*{mono}")
    return " + ".join(parts) if parts else "0"
