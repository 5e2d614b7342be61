"""Sparse multivariate polynomials over Q.

A monomial is packed into a single Python integer: one 16-bit field per
registered variable plus a total-degree field in the most significant
position.  Integer comparison of packed keys is then graded lexicographic
order with variables ranked by registration order ("lambda" first), and
monomial multiplication is integer addition.  The top bit of every field is
kept clear so that divisibility of monomials is a single subtraction.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from gmpy2 import mpq

from .rational import (
    MPQ_TYPE,
    Scalar,
    denominator,
    format_scalar,
    int_gcd,
    int_lcm,
    is_scalar,
    normalize,
    numerator,
    sdiv,
    to_scalar,
)

FIELD_BITS = 16
MAX_VARS = 24
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1
_MASK = (1 << FIELD_BITS) - 1
_DEG_SHIFT = FIELD_BITS * MAX_VARS
_GUARD = sum(1 << (FIELD_BITS * s + FIELD_BITS - 1) for s in range(MAX_VARS + 1))

DEFAULT_VARIABLES = ("lambda", "t", "u", "v", "w", "K", "s", "z")

_names: list[str] = []
_index: dict[str, int] = {}


def register_variable(name: str) -> int:
    """Return the slot of ``name``, registering it if needed."""
    idx = _index.get(name)
    if idx is not None:
        return idx
    if not name.isidentifier():
        raise ValueError(f"invalid variable name {name!r}")
    if len(_names) >= MAX_VARS:
        raise ValueError("too many polynomial variables")
    _names.append(name)
    _index[name] = len(_names) - 1
    return _index[name]


for _n in DEFAULT_VARIABLES:
    register_variable(_n)


def variable_names() -> Tuple[str, ...]:
    return tuple(_names)


def _shift(i: int) -> int:
    return FIELD_BITS * (MAX_VARS - 1 - i)


def _unit(i: int) -> int:
    return (1 << _shift(i)) | (1 << _DEG_SHIFT)


def pack(exps: Mapping[int, int]) -> int:
    key = 0
    for i, e in exps.items():
        if e < 0 or e > MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        key += e * _unit(i)
    return key


@lru_cache(maxsize=1 << 18)
def unpack(key: int) -> Tuple[Tuple[int, int], ...]:
    """Nonzero (variable slot, exponent) pairs of a packed monomial."""
    out = []
    k = key & ((1 << _DEG_SHIFT) - 1)
    i = MAX_VARS - 1
    while k:
        e = k & _MASK
        if e:
            out.append((i, e))
        k >>= FIELD_BITS
        i -= 1
    out.reverse()
    return tuple(out)


def total_degree(key: int) -> int:
    return key >> _DEG_SHIFT


def exponent(key: int, i: int) -> int:
    return (key >> _shift(i)) & _MASK


def divides_monomial(m1: int, m2: int) -> bool:
    return ((m2 | _GUARD) - m1) & _GUARD == _GUARD


def _monomial_min(keys: Iterable[int]) -> int:
    it = iter(keys)
    first = next(it)
    mins = dict(unpack(first))
    for k in it:
        if not mins:
            break
        ex = dict(unpack(k))
        for i in list(mins):
            e = ex.get(i, 0)
            if e < mins[i]:
                if e:
                    mins[i] = e
                else:
                    del mins[i]
    return pack(mins)


def _format_monomial(key: int) -> str:
    parts = []
    for i, e in unpack(key):
        parts.append(_names[i] if e == 1 else f"{_names[i]}^{e}")
    return "*".join(parts)


class MultiPoly:
    """Immutable sparse polynomial; ``_t`` maps packed monomials to scalars."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Dict[int, Scalar] | None = None):
        self._t: Dict[int, Scalar] = terms if terms is not None else {}
        self._hash = None

    # construction -----------------------------------------------------
    @staticmethod
    def const(c) -> "MultiPoly":
        c = to_scalar(c)
        return MultiPoly({0: c} if c else {})

    @staticmethod
    def var(name: str) -> "MultiPoly":
        return MultiPoly({_unit(register_variable(name)): 1})

    @staticmethod
    def from_dict(terms: Mapping[Tuple[int, ...], object], variables: Sequence[str]) -> "MultiPoly":
        idx = [register_variable(v) for v in variables]
        out: Dict[int, Scalar] = {}
        for exps, c in terms.items():
            if len(exps) != len(idx):
                raise ValueError("exponent tuple length does not match variables")
            c = to_scalar(c)
            if not c:
                continue
            key = pack({i: e for i, e in zip(idx, exps) if e})
            s = out.get(key, 0) + c
            if s:
                out[key] = normalize(s)
            else:
                out.pop(key, None)
        return MultiPoly(out)

    @staticmethod
    def coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(x)

    # inspection -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(0, 0)

    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get(0) == 1

    def var_slots(self) -> frozenset:
        s = set()
        for k in self._t:
            for i, _ in unpack(k):
                s.add(i)
        return frozenset(s)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(_names[i] for i in sorted(self.var_slots()))

    def terms(self, variables: Sequence[str] | None = None) -> Dict[Tuple[int, ...], Scalar]:
        """Exponent-tuple view over ``variables`` (default: those present)."""
        vs = list(variables) if variables is not None else list(self.variables)
        idx = [register_variable(v) for v in vs]
        out = {}
        for k, c in self._t.items():
            ex = dict(unpack(k))
            if any(i not in idx for i in ex):
                raise ValueError("polynomial uses a variable outside the given list")
            out[tuple(ex.get(i, 0) for i in idx)] = c
        return out

    def degree(self, name: str | None = None) -> int:
        if not self._t:
            return -1
        if name is None:
            return max(total_degree(k) for k in self._t)
        i = register_variable(name)
        return max(exponent(k, i) for k in self._t)

    def _deg_slot(self, i: int) -> int:
        return max(exponent(k, i) for k in self._t) if self._t else -1

    def leading_key(self) -> int:
        return max(self._t)

    def lc(self) -> Scalar:
        return self._t[max(self._t)] if self._t else 0

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(frozenset(self._t.items()))
        return h

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if is_scalar(other):
            c = to_scalar(other)
            return self._t == ({0: c} if c else {})
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __add__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            other = MultiPoly.const(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = normalize(s) if type(s) is MPQ_TYPE else s
                else:
                    del out[k]
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            other = MultiPoly.const(other)
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k)
            if s is None:
                out[k] = -c
            else:
                s = s - c
                if s:
                    out[k] = normalize(s) if type(s) is MPQ_TYPE else s
                else:
                    del out[k]
        return MultiPoly(out)

    def __rsub__(self, other) -> "MultiPoly":
        if not is_scalar(other):
            return NotImplemented
        return MultiPoly.const(other) - self

    def scale(self, c) -> "MultiPoly":
        c = to_scalar(c) if not isinstance(c, SCALAR) else c
        if not c:
            return ZERO
        if c == 1:
            return self
        if type(c) is int:
            return MultiPoly({k: v * c for k, v in self._t.items()})
        return MultiPoly({k: normalize(v * c) for k, v in self._t.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            return self.scale(other)
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                return self.scale(cb)
            if cb == 1:
                return MultiPoly({k + kb: c for k, c in a.items()})
        if len(a) == 1:
            (ka, ca), = a.items()
            if ka == 0:
                return other.scale(ca)
            if ca == 1:
                return MultiPoly({k + ka: c for k, c in b.items()})
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, Scalar] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly({k: (normalize(c) if type(c) is MPQ_TYPE else c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # division ---------------------------------------------------------
    def div_scalar(self, c) -> "MultiPoly":
        c = to_scalar(c)
        if type(c) is int:
            return self.scale(mpq(1, c)) if c not in (1, -1) else self.scale(c)
        return self.scale(1 / c)

    def divmod_lt(self, d: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """Quotient and remainder by leading-term reduction (full reduction)."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        lk = max(d._t)
        lcd = d._t[lk]
        tail = [(k, c) for k, c in d._t.items() if k != lk]
        r = dict(self._t)
        q: Dict[int, Scalar] = {}
        rem: Dict[int, Scalar] = {}
        heap = [-k for k in r]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = r.pop(k, None)
            if not c:
                continue
            while heap and heap[0] == -k:
                heapq.heappop(heap)
            if not divides_monomial(lk, k):
                rem[k] = c
                continue
            qk = k - lk
            qc = sdiv(c, lcd)
            q[qk] = qc
            for tk, tc in tail:
                nk = tk + qk
                s = r.get(nk)
                if s is None:
                    r[nk] = -qc * tc
                    heapq.heappush(heap, -nk)
                else:
                    s = s - qc * tc
                    if s:
                        r[nk] = normalize(s) if type(s) is MPQ_TYPE else s
                    else:
                        del r[nk]
        return MultiPoly(q), MultiPoly(rem)

    def try_divexact(self, d: "MultiPoly") -> "MultiPoly | None":
        """Return self / d when d divides self exactly, else None."""
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        if not self._t:
            return ZERO
        if len(d._t) == 1:
            (kd, cd), = d._t.items()
            out = {}
            for k, c in self._t.items():
                if not divides_monomial(kd, k):
                    return None
                out[k - kd] = sdiv(c, cd)
            return MultiPoly(out)
        lk = max(d._t)
        if not divides_monomial(lk, max(self._t)):
            return None
        lcd = d._t[lk]
        tail = [(k, c) for k, c in d._t.items() if k != lk]
        r = dict(self._t)
        q: Dict[int, Scalar] = {}
        heap = [-k for k in r]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = r.pop(k, None)
            if not c:
                continue
            if not divides_monomial(lk, k):
                return None
            qk = k - lk
            qc = sdiv(c, lcd)
            q[qk] = qc
            for tk, tc in tail:
                nk = tk + qk
                s = r.get(nk)
                if s is None:
                    r[nk] = -qc * tc
                    heapq.heappush(heap, -nk)
                else:
                    s = s - qc * tc
                    if s:
                        r[nk] = normalize(s) if type(s) is MPQ_TYPE else s
                    else:
                        del r[nk]
        return MultiPoly(q)

    def divexact(self, d: "MultiPoly") -> "MultiPoly":
        q = self.try_divexact(d)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return q

    # normalization ----------------------------------------------------
    def content(self) -> Scalar:
        """Positive rational c with self / c an integer polynomial with coprime coefficients."""
        if not self._t:
            return 1
        g = 0
        l = 1
        for c in self._t.values():
            if type(c) is int:
                g = int_gcd(g, c)
            else:
                g = int_gcd(g, numerator(c))
                l = int_lcm(l, denominator(c))
        return g if l == 1 else mpq(g, l)

    def primitive(self) -> "MultiPoly":
        """Integer-coprime multiple with positive leading coefficient."""
        if not self._t:
            return self
        c = self.content()
        if self.lc() < 0:
            c = -c
        if c == 1:
            return self
        if type(c) is int:
            return MultiPoly({k: v // c for k, v in self._t.items()}) if all(type(v) is int for v in self._t.values()) else self.scale(mpq(1, c))
        return self.scale(1 / c)

    def monic(self) -> "MultiPoly":
        if not self._t:
            return self
        c = self.lc()
        if c == 1:
            return self
        return self.scale(sdiv(1, c))

    # evaluation -------------------------------------------------------
    def evaluate(self, values: Mapping[str, object]) -> Scalar:
        """Evaluate at a point; every variable present must be bound."""
        vals = {register_variable(k): to_scalar(v) for k, v in values.items()}
        out = 0
        powcache: dict = {}
        for k, c in self._t.items():
            term = c
            for i, e in unpack(k):
                if i not in vals:
                    raise KeyError(f"no value for variable {_names[i]}")
                p = powcache.get((i, e))
                if p is None:
                    p = powcache[(i, e)] = vals[i] ** e
                term = term * p
            out = out + term
        return normalize(out) if type(out) is MPQ_TYPE else out

    def partial_evaluate(self, values: Mapping[str, object]) -> "MultiPoly":
        vals = {register_variable(k): to_scalar(v) for k, v in values.items()}
        out: Dict[int, Scalar] = {}
        for k, c in self._t.items():
            nk = k
            for i, e in unpack(k):
                if i in vals:
                    c = c * vals[i] ** e
                    nk -= e * _unit(i)
            if c:
                s = out.get(nk, 0) + c
                if s:
                    out[nk] = s
                else:
                    out.pop(nk, None)
        return MultiPoly({k: normalize(c) for k, c in out.items()})

    def compose(self, values: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables."""
        vals = {register_variable(k): MultiPoly.coerce(v) for k, v in values.items()}
        out = ZERO
        powcache: dict = {}
        for k, c in self._t.items():
            rest = k
            term = MultiPoly.const(c)
            for i, e in unpack(k):
                if i in vals:
                    p = powcache.get((i, e))
                    if p is None:
                        p = powcache[(i, e)] = vals[i] ** e
                    term = term * p
                    rest -= e * _unit(i)
            if rest:
                term = term * MultiPoly({rest: 1})
            out = out + term
        return out

    # formatting -------------------------------------------------------
    def to_str(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t):
            c = self._t[k]
            mono = _format_monomial(k)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = format_scalar(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_scalar(a)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    __str__ = to_str

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()!r})"


SCALAR = (int, MPQ_TYPE)
ZERO = MultiPoly({})
ONE = MultiPoly({0: 1})


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


# ---------------------------------------------------------------------------
# recursive (univariate-in-one-slot) views


def _split(p: MultiPoly, i: int) -> Dict[int, MultiPoly]:
    """Coefficients of p as a polynomial in slot i."""
    sh = _shift(i)
    unit = _unit(i)
    parts: Dict[int, Dict[int, Scalar]] = {}
    for k, c in p._t.items():
        e = (k >> sh) & _MASK
        parts.setdefault(e, {})[k - e * unit] = c
    return {e: MultiPoly(t) for e, t in parts.items()}


def _join(coeffs: Sequence[MultiPoly], i: int) -> MultiPoly:
    unit = _unit(i)
    out: Dict[int, Scalar] = {}
    for e, c in enumerate(coeffs):
        off = e * unit
        for k, v in c._t.items():
            out[k + off] = v
    return MultiPoly(out)


def _split_set(p: MultiPoly, slots: frozenset) -> Dict[int, MultiPoly]:
    """Coefficients of p viewed as a polynomial in the given slots."""
    parts: Dict[int, Dict[int, Scalar]] = {}
    for k, c in p._t.items():
        sel = 0
        for i, e in unpack(k):
            if i in slots:
                sel += e * _unit(i)
        parts.setdefault(sel, {})[k - sel] = c
    return {m: MultiPoly(t) for m, t in parts.items()}


# ---------------------------------------------------------------------------
# gcd

_gcd_cache: Dict[Tuple[MultiPoly, MultiPoly], MultiPoly] = {}
_GCD_CACHE_LIMIT = 200_000
_EVAL_POINTS = (3, -5, 7, 11, -13, 17, 19, -23, 29, 31, 37, -41, 43, 47, 53)


def poly_gcd(a, b) -> MultiPoly:
    """Monic gcd of two polynomials (not both zero)."""
    a = MultiPoly.coerce(a)
    b = MultiPoly.coerce(b)
    if not a and not b:
        raise ValueError("gcd undefined")
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    return _gcd(a, b).monic()


def _gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Primitive integer gcd with positive leading coefficient, a, b nonzero."""
    if a.is_constant() or b.is_constant():
        return ONE
    key = (a, b) if hash(a) <= hash(b) else (b, a)
    hit = _gcd_cache.get(key)
    if hit is not None:
        return hit
    pa = a.primitive()
    pb = b.primitive()
    if pa == pb:
        g = pa
    else:
        ma = _monomial_min(pa._t)
        mb = _monomial_min(pb._t)
        m = _monomial_min((ma, mb))
        if ma:
            pa = MultiPoly({k - ma: c for k, c in pa._t.items()})
        if mb:
            pb = MultiPoly({k - mb: c for k, c in pb._t.items()})
        g = _gcd_nomono(pa, pb)
        if m:
            g = MultiPoly({k + m: c for k, c in g._t.items()})
    if len(_gcd_cache) > _GCD_CACHE_LIMIT:
        _gcd_cache.clear()
    _gcd_cache[key] = g
    return g


def _content_wrt(p: MultiPoly, slots: frozenset) -> MultiPoly:
    g = None
    for c in sorted(_split_set(p, slots).values(), key=len):
        g = c.primitive() if g is None else _gcd(g, c)
        if g.is_constant():
            return ONE
    return g if g is not None else ONE


def _gcd_nomono(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_constant() or b.is_constant():
        return ONE
    if a == b:
        return a
    if len(b) <= len(a):
        q = a.try_divexact(b)
        if q is not None:
            return b
    if len(a) <= len(b):
        q = b.try_divexact(a)
        if q is not None:
            return a
    va, vb = a.var_slots(), b.var_slots()
    if va != vb:
        if va - vb:
            a = _content_wrt(a, va - vb)
        if vb - va:
            b = _content_wrt(b, vb - va)
        return _gcd(a, b)
    common = sorted(va)
    candidates = []
    for i in common:
        d = _image_gcd_degree(a, b, i, common)
        if d == 0:
            s = frozenset([i])
            return _gcd(_content_wrt(a, s), _content_wrt(b, s))
        candidates.append((max(a._deg_slot(i), b._deg_slot(i)), i))
    candidates.sort()
    return _gcd_prs(a, b, candidates[0][1])


def _image_gcd_degree(a: MultiPoly, b: MultiPoly, i: int, slots: Sequence[int]) -> int:
    """Upper bound for deg_i gcd(a, b) from a univariate image."""
    others = [j for j in slots if j != i]
    ca = _split(a, i)
    cb = _split(b, i)
    la = ca[max(ca)]
    lb = cb[max(cb)]
    for attempt in range(len(_EVAL_POINTS)):
        point = {j: _EVAL_POINTS[(attempt + n) % len(_EVAL_POINTS)] + attempt for n, j in enumerate(others)}
        if _eval_slots(la, point) == 0 or _eval_slots(lb, point) == 0:
            continue
        ua = [0] * (max(ca) + 1)
        for e, c in ca.items():
            ua[e] = _eval_slots(c, point)
        ub = [0] * (max(cb) + 1)
        for e, c in cb.items():
            ub[e] = _eval_slots(c, point)
        return _uni_gcd_degree(ua, ub)
    return min(a._deg_slot(i), b._deg_slot(i))


def _eval_slots(p: MultiPoly, point: Mapping[int, int]) -> Scalar:
    out = 0
    for k, c in p._t.items():
        term = c
        for j, e in unpack(k):
            term = term * point[j] ** e
        out += term
    return out


def _uni_gcd_degree(a: list, b: list) -> int:
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a = trim([mpq(x) for x in a])
    b = trim([mpq(x) for x in b])
    while b:
        r = a[:]
        while len(r) >= len(b):
            f = r[-1] / b[-1]
            off = len(r) - len(b)
            for n, c in enumerate(b):
                r[off + n] -= f * c
            r.pop()
            trim(r)
            if not r:
                break
        a, b = b, r
    return len(a) - 1


def _prem(f: list, g: list) -> list:
    """Pseudo-remainder of dense coefficient lists (index = degree)."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    n = df - dg + 1
    lcg = g[-1]
    while len(r) - 1 >= dg:
        lcr = r[-1]
        j = len(r) - 1 - dg
        r = [c * lcg for c in r]
        for m, c in enumerate(g):
            r[m + j] = r[m + j] - c * lcr
        r.pop()
        while r and not r[-1]:
            r.pop()
        n -= 1
        if not r:
            return r
    if n > 0:
        f = lcg ** n
        r = [c * f for c in r]
    return r


def _gcd_prs(a: MultiPoly, b: MultiPoly, i: int) -> MultiPoly:
    """gcd via the subresultant remainder sequence in slot i."""
    s = frozenset([i])
    conta = _content_wrt(a, s)
    contb = _content_wrt(b, s)
    if not conta.is_one():
        a = a.divexact(conta)
    if not contb.is_one():
        b = b.divexact(contb)
    gc = _gcd(conta, contb)
    sa, sb = _split(a, i), _split(b, i)
    f = [sa.get(e, ZERO) for e in range(max(sa) + 1)]
    g = [sb.get(e, ZERO) for e in range(max(sb) + 1)]
    if len(f) < len(g):
        f, g = g, f
    last = _subresultant_last(f, g)
    if len(last) == 1:
        h = ONE
    else:
        h = _join(last, i).primitive()
        ch = _content_wrt(h, s)
        if not ch.is_one():
            h = h.divexact(ch)
    return (gc * h).primitive()


def _subresultant_last(f: list, g: list) -> list:
    n, m = len(f) - 1, len(g) - 1
    d = n - m
    b = -ONE if (d + 1) % 2 else ONE
    h = [c * b for c in _prem(f, g)]
    lc = g[-1]
    c = lc ** d
    c = -c
    last = g
    while h:
        k = len(h) - 1
        last = h
        f, g, m, d = g, h, k, m - k
        b = -lc * c ** d
        h = [x.divexact(b) for x in _prem(f, g)]
        lc = g[-1]
        if d > 1:
            c = ((-lc) ** d).divexact(c ** (d - 1))
        else:
            c = -lc
    return last


def poly_lcm(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    g = _gcd(a, b)
    return (a.divexact(g) * b).monic()
