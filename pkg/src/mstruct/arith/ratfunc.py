"""Normalized rational functions over Q and their text form."""

from __future__ import annotations

import re
from typing import Mapping

from .poly import ONE, ZERO, MultiPoly, _gcd, register_variable
from .rational import MPQ_TYPE, Scalar, is_scalar, normalize, sdiv, to_scalar


class DenominatorVanishes(ZeroDivisionError):
    """Raised when a substitution hits a pole."""


class RatFunc:
    """num/den with gcd(num, den) = 1 and monic den (zero is 0/1)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=ZERO, den=ONE, *, normalized: bool = False):
        num = MultiPoly.coerce(num)
        den = MultiPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MultiPoly):
            return RatFunc(x, ONE, normalized=True)
        if isinstance(x, str):
            return parse(x)
        c = to_scalar(x)
        return RatFunc(MultiPoly.const(c), ONE, normalized=True)

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MultiPoly.var(name), ONE, normalized=True)

    # predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def variables(self):
        slots = self.num.var_slots() | self.den.var_slots()
        from .poly import variable_names
        names = variable_names()
        return tuple(names[i] for i in sorted(slots))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, MultiPoly):
            return self.den.is_one() and self.num == other
        if is_scalar(other):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # arithmetic -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly) or is_scalar(other):
            return RatFunc.coerce(other)
        return None

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, normalized=True)

    def __pos__(self):
        return self

    def __add__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _add(self, o)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _add(self, -o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _add(o, -self)

    def __mul__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("division by zero rational function")
        lc = self.num.lc()
        return RatFunc(self.den.scale(sdiv(1, lc)), self.num.scale(sdiv(1, lc)), normalized=True)

    def __truediv__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _mul(self, o.inverse())

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return _mul(o, self.inverse())

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, normalized=True)

    # evaluation -------------------------------------------------------
    def evaluate(self, values: Mapping[str, object]) -> Scalar:
        d = self.den.evaluate(values)
        if not d:
            raise DenominatorVanishes(f"denominator vanishes at {_fmt_binding(values)}")
        return sdiv(self.num.evaluate(values), d)

    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        """Substitute scalars or rational functions for variables."""
        polys = {}
        rats = {}
        for k, v in bindings.items():
            if isinstance(v, str):
                v = parse(v)
            if isinstance(v, RatFunc):
                if v.den.is_one():
                    polys[k] = v.num
                else:
                    rats[k] = v
            elif isinstance(v, MultiPoly):
                polys[k] = v
            else:
                polys[k] = MultiPoly.const(v)
        num, den = self.num, self.den
        if all(p.is_constant() for p in polys.values()) and polys:
            vals = {k: p.constant_value() for k, p in polys.items()}
            num = num.partial_evaluate(vals)
            den = den.partial_evaluate(vals)
        elif polys:
            num = num.compose(polys)
            den = den.compose(polys)
        if rats:
            rnum = _compose_rational(num, rats)
            rden = _compose_rational(den, rats)
            if not rden:
                raise DenominatorVanishes(f"denominator vanishes at {_fmt_binding(bindings)}")
            return rnum / rden
        if not den:
            raise DenominatorVanishes(f"denominator vanishes at {_fmt_binding(bindings)}")
        return RatFunc(num, den)

    # formatting -------------------------------------------------------
    def to_str(self) -> str:
        if self.den.is_one():
            return self.num.to_str()
        return f"({self.den.to_str()})^-1 * ({self.num.to_str()})"

    __str__ = to_str

    def __repr__(self) -> str:
        return f"RatFunc({self.to_str()!r})"


def _compose_rational(p: MultiPoly, rats: Mapping[str, RatFunc]) -> RatFunc:
    """p with rational functions substituted, kept as a RatFunc."""
    from .poly import unpack, _unit

    slots = {register_variable(k): v for k, v in rats.items()}
    maxdeg = {i: p._deg_slot(i) for i in slots}
    num = ZERO
    for k, c in p.items():
        rest = k
        term = MultiPoly.const(c)
        ex = dict(unpack(k))
        for i, r in slots.items():
            e = ex.get(i, 0)
            if e:
                rest -= e * _unit(i)
            if maxdeg[i] > 0:
                term = term * (r.num ** e) * (r.den ** (maxdeg[i] - e))
        if rest:
            term = term * MultiPoly({rest: 1})
        num = num + term
    den = ONE
    for i, r in slots.items():
        if maxdeg[i] > 0:
            den = den * r.den ** maxdeg[i]
    return RatFunc(num, den, normalized=True)


def _fmt_binding(values: Mapping[str, object]) -> str:
    parts = []
    for k in sorted(values):
        v = values[k]
        parts.append(f"{k}={v.to_str() if hasattr(v, 'to_str') else v}")
    return "{" + ", ".join(parts) + "}"


def _normalize(num: MultiPoly, den: MultiPoly):
    if not num:
        return ZERO, ONE
    if den.is_constant():
        c = den.constant_value()
        if c == 1:
            return num, den
        return num.scale(sdiv(1, c)), ONE
    if not num.is_constant():
        g = _gcd(num, den)
        if not g.is_one():
            num = num.divexact(g)
            den = den.divexact(g)
    lc = den.lc()
    if lc != 1:
        inv = sdiv(1, lc)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _add(a: RatFunc, b: RatFunc) -> RatFunc:
    if not a.num:
        return b
    if not b.num:
        return a
    if a.den == b.den:
        if a.den.is_one():
            return RatFunc(a.num + b.num, ONE, normalized=True)
        return RatFunc(a.num + b.num, a.den)
    if a.den.is_one():
        return RatFunc(a.num * b.den + b.num, b.den, normalized=True)
    if b.den.is_one():
        return RatFunc(b.num * a.den + a.num, a.den, normalized=True)
    g = _gcd(a.den, b.den)
    if g.is_one():
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den, normalized=True)
    ad = a.den.divexact(g)
    bd = b.den.divexact(g)
    num = a.num * bd + b.num * ad
    if not num:
        return ZERO_RF
    g2 = _gcd(num, g)
    if not g2.is_one():
        num = num.divexact(g2)
        g = g.divexact(g2)
    den = ad * bd * g
    lc = den.lc()
    if lc != 1:
        inv = sdiv(1, lc)
        num, den = num.scale(inv), den.scale(inv)
    return RatFunc(num, den, normalized=True)


def _mul(a: RatFunc, b: RatFunc) -> RatFunc:
    if not a.num or not b.num:
        return ZERO_RF
    if a.den.is_one() and b.den.is_one():
        return RatFunc(a.num * b.num, ONE, normalized=True)
    g1 = _gcd(a.num, b.den)
    g2 = _gcd(b.num, a.den)
    an, bd = (a.num, b.den) if g1.is_one() else (a.num.divexact(g1), b.den.divexact(g1))
    bn, ad = (b.num, a.den) if g2.is_one() else (b.num.divexact(g2), a.den.divexact(g2))
    num = an * bn
    den = ad * bd
    lc = den.lc()
    if lc != 1:
        inv = sdiv(1, lc)
        num, den = num.scale(inv), den.scale(inv)
    return RatFunc(num, den, normalized=True)


ZERO_RF = RatFunc(ZERO, ONE, normalized=True)
ONE_RF = RatFunc(ONE, ONE, normalized=True)


def rf(x) -> RatFunc:
    """Shorthand coercion: scalars, polynomials and formula strings."""
    return RatFunc.coerce(x)


# ---------------------------------------------------------------------------
# parser for the text form: + - * / ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_λ][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", "lambda" if name == "λ" else name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ValueError(f"unexpected token {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self) -> RatFunc:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            if self.peek() == ("op", "("):
                self.take()
                e = self.expr()
                self.take("op", ")")
                if not e.is_constant() or type(e.constant_value()) is not int:
                    raise ValueError("exponent must be an integer")
                n = e.constant_value()
            else:
                n = self.take("num")[1]
            return base ** (sign * n)
        return base

    def atom(self) -> RatFunc:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return RatFunc.coerce(val)
        if kind == "name":
            self.take()
            return RatFunc.var(val)
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        raise ValueError(f"unexpected token {val!r}")


def parse(text: str) -> RatFunc:
    """Parse the canonical text form (or any arithmetic expression)."""
    p = _Parser(_tokenize(text))
    if not p.toks:
        raise ValueError("empty expression")
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return out
