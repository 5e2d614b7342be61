"""The three exceptional families."""

from __future__ import annotations

from .base import (FamilyDefinition, Side, Term, algebra_table_relations, equal_chain, partition_relation,
                   rel, rf, zero_products)
from ..arith.ratfunc import parse


def _load_terms(table, lam):
    cache = {}
    out = []
    for coef, left, right in table:
        if coef not in cache:
            cache[coef] = parse(coef).substitute({"lambda": lam})
        out.append(Term(cache[coef], tuple(left), tuple(right)))
    return out


def _m3(a: int) -> int:
    return (a - 1) % 3 + 1


def definition_e6(lam, t) -> FamilyDefinition:
    from ._terms_e6 import TERMS
    A = Side("e", [("1", 1), ("2", 1), ("3", 1), ("M", 3)])
    B = Side("f", [("1", 2), ("2", 2), ("3", 2)])
    one = rf(1)
    bc = {}
    for a in (1, 2, 3):
        s = str(a)
        bc[(s, 1, 1)] = {(s, 1, 1): one, (s, 2, 1): lam, (s, 1, 2): t, (s, 2, 2): lam * t}
        bc[("M", a, a)] = {(s, 2, 2): one}
        bc[("M", _m3(a + 1), a)] = {(str(_m3(a + 2)), 1, 1): one}
        bc[("M", _m3(a + 2), a)] = {(str(_m3(a + 2)), 2, 1): one, (s, 1, 2): one}

    e = lambda a: A.name(str(_m3(a)))
    em = lambda b, c: A.name("M", _m3(b), _m3(c))
    f = lambda a, i, j: B.name(str(_m3(a)), i, j)
    idx = [(a, i, j) for a in (1, 2, 3) for i in (1, 2) for j in (1, 2)]
    rows = [(a, i) for a in (1, 2, 3) for i in (1, 2)]
    relations = [
        algebra_table_relations(A, "E6.mul.A", "tail algebra multiplication table"),
        algebra_table_relations(B, "E6.mul.B", "head algebra multiplication table"),
        partition_relation(A, "E6.unity.A", "sum e_a + sum e_{b,b} = 1"),
        partition_relation(B, "E6.unity.B", "sum f_{a,i,i} = 1"),
        rel("E6.fe_zero", "f_{a,i,j} e_b = 0 for a != b",
            [[(1, (f(a, i, j), e(b)))] for a, i, j in idx for b in (1, 2, 3) if a != b]),
        rel("E6.fe_lambda", "f_{a,i,2} e_a = lambda f_{a,i,1} e_a",
            [[(1, (f(a, i, 2), e(a))), (-lam, (f(a, i, 1), e(a)))] for a, i in rows]),
        rel("E6.f_next_zero", "f_{a,i,j} e_{a+1,b} = 0",
            [[(1, (f(a, i, j), em(a + 1, b)))] for a, i, j in idx for b in (1, 2, 3)]),
        rel("E6.f_col1_zero", "f_{a,i,1} e_{a,b} = 0",
            [[(1, (f(a, i, 1), em(a, b)))] for a, i in rows for b in (1, 2, 3)]),
        rel("E6.f_col2_zero", "f_{a+1,i,2} e_{a,b} = 0",
            [[(1, (f(a + 1, i, 2), em(a, b)))] for a, i in rows for b in (1, 2, 3)]),
        rel("E6.f_shift", "f_{a,i,2} e_{a,b} = f_{a,i,1} e_{a-1,b}",
            [[(1, (f(a, i, 2), em(a, b))), (-1, (f(a, i, 1), em(a - 1, b)))] for a, i in rows for b in (1, 2, 3)]),
    ]
    l3 = lam ** 3

    def identity(K):
        return [rf(0), -l3 * (l3 - 1) * K, l3 ** 2 - l3 - K + 2 * l3 * K, -(2 * l3 - 1 + K), rf(1)]

    def inverse(v, K):
        c = (v * (v + l3) * (v + l3 - 1) * (v + K)).inverse()
        return [-v.inverse(), (v ** 2 + 2 * l3 * v + l3 ** 2 - v - l3 + (v - 1 + 2 * l3) * K) * c,
                -(v + 2 * l3 - 1 + K) * c, c]

    return FamilyDefinition(
        family="E6", k=None, side_a=A, side_b=B, base_change=bc, terms=_load_terms(TERMS, lam),
        mu=l3 * (l3 - 1) / (l3 - t ** 3), relations=relations,
        identity=identity,
        identity_text="R^4 - (2lambda^3-1+K) R^3 + (lambda^6-lambda^3-K+2lambda^3 K) R^2"
                      " - lambda^3(lambda^3-1) K R = 0",
        inverse=inverse,
        inverse_text="(v+R)^-1 x = -x/v + (v(v+lambda^3)(v+lambda^3-1))^-1 (v+K)^-1 (R^3 x"
                     " - (v+2lambda^3-1+K) R^2 x + (v^2+2lambda^3 v+lambda^6-v-lambda^3+(v-1+2lambda^3)K) R x)",
        root_candidates=lambda mu: {"0": rf(0), "lambda^3": l3, "lambda^3 - 1": l3 - 1, "K": mu},
        dimension_formula="12",
    )


def _block_chain(Bs, fl, As, el, pairs, coefs=None):
    """f_{fl,i,j1} e_{el,i1,j} = ... along the listed (j, i') pairs, for all free i, j."""
    coefs = coefs or [1] * len(pairs)
    out = []
    for i in range(1, Bs.size[fl] + 1):
        for j in range(1, As.size[el] + 1):
            out += equal_chain([(c, (Bs.name(fl, i, a), As.name(el, b, j))) for (a, b), c in zip(pairs, coefs)])
    return out


def _off_zero(Bs, fl, As, el, allowed):
    return zero_products(Bs, [fl], As, [el], lambda f, g: (f[2], g[1]) not in allowed)


def definition_e7(lam, t) -> FamilyDefinition:
    from ._terms_e7 import TERMS
    A = Side("e", [("1", 1), ("2", 3), ("3", 2), ("4", 3), ("5", 1)])
    B = Side("f", [("1", 2), ("2", 4), ("3", 2)])
    one = rf(1)
    bc = {("1", 1, 1): {("1", 1, 1): one}, ("5", 1, 1): {("3", 1, 1): one}}
    for i in range(1, 4):
        for j in range(1, 4):
            if i <= 2 and j <= 2:
                bc[("2", i, j)] = {("1", i, j): one, ("2", i, j): one}
            else:
                bc[("2", i, j)] = {("2", i, j): one}
    sigma = {1: 2, 2: 1, 3: 4}
    for i in range(1, 4):
        for j in range(1, 4):
            d = {("2", sigma[i], sigma[j]): one}
            if i <= 2 and j <= 2:
                d[("3", i, j)] = one
            bc[("4", i, j)] = d

    def comb(*groups):
        d = {}
        for c, cells in groups:
            for i, j in cells:
                d[("2", i, j)] = d.get(("2", i, j), rf(0)) + c
        return d
    bc[("3", 1, 1)] = comb((one, [(1, 1), (1, 3), (3, 1), (3, 3), (1, 4), (3, 4), (4, 1), (4, 3), (4, 4)]))
    bc[("3", 1, 2)] = comb((one, [(1, 2), (1, 3), (3, 2), (3, 3), (4, 2), (4, 3)]), (t, [(1, 4), (3, 4), (4, 4)]))
    bc[("3", 2, 1)] = comb((one, [(2, 1), (2, 3), (2, 4), (3, 1), (3, 3), (3, 4)]), (lam, [(4, 1), (4, 3), (4, 4)]))
    bc[("3", 2, 2)] = comb((one, [(2, 2), (2, 3), (3, 2), (3, 3)]), (lam, [(4, 2), (4, 3)]),
                           (t, [(2, 4), (3, 4)]), (lam * t, [(4, 4)]))

    f2 = lambda i, j: B.name("2", i, j)
    e3 = lambda i, j: A.name("3", i, j)
    e3_zero = []
    for i in range(1, 5):
        for j in (1, 2):
            e3_zero += [[(1, (f2(i, 1), e3(2, j)))], [(1, (f2(i, 2), e3(1, j)))]]
    e3_chain = []
    for i in range(1, 5):
        for j in (1, 2):
            e3_chain += equal_chain([(1, (f2(i, 1), e3(1, j))), (1, (f2(i, 2), e3(2, j))), (1, (f2(i, 3), e3(1, j))),
                                     (1, (f2(i, 3), e3(2, j))), (1, (f2(i, 4), e3(1, j))),
                                     (lam.inverse(), (f2(i, 4), e3(2, j)))])
    relations = [
        algebra_table_relations(A, "E7.mul.A", "tail algebra multiplication table"),
        algebra_table_relations(B, "E7.mul.B", "head algebra multiplication table"),
        partition_relation(A, "E7.unity.A", "sum of tail idempotents = 1"),
        partition_relation(B, "E7.unity.B", "sum of head idempotents = 1"),
        rel("E7.block_zero", "f1 e3 = f1 e4 = f1 e5 = f2 e1 = f2 e5 = f3 e1 = f3 e2 = f3 e3 = 0",
            zero_products(B, ["1"], A, ["3", "4", "5"]) + zero_products(B, ["2"], A, ["1", "5"])
            + zero_products(B, ["3"], A, ["1", "2", "3"])),
        rel("E7.single_zero", "f_{1,i,2} e_1 = f_{3,i,2} e_5 = 0",
            [[(1, (B.name("1", i, 2), A.name("1")))] for i in (1, 2)]
            + [[(1, (B.name("3", i, 2), A.name("5")))] for i in (1, 2)]),
        rel("E7.f1e2_f3e4_zero", "f_{1,i,j} e_{2,i',j'} = f_{3,i,j} e_{4,i',j'} = 0 for j != i'",
            _off_zero(B, "1", A, "2", {(1, 1), (2, 2)}) + _off_zero(B, "3", A, "4", {(1, 1), (2, 2)})),
        rel("E7.f1e2_f3e4_eq", "f_{1,i,1} e_{2,1,j} = f_{1,i,2} e_{2,2,j}, f_{3,i,1} e_{4,1,j} = f_{3,i,2} e_{4,2,j}",
            _block_chain(B, "1", A, "2", [(1, 1), (2, 2)]) + _block_chain(B, "3", A, "4", [(1, 1), (2, 2)])),
        rel("E7.f2e2_zero", "f_{2,i,j} e_{2,i',j'} = 0 for j != i'", _off_zero(B, "2", A, "2", {(1, 1), (2, 2), (3, 3)})),
        rel("E7.f2e2_eq", "f_{2,i,1} e_{2,1,j} = f_{2,i,2} e_{2,2,j} = f_{2,i,3} e_{2,3,j}",
            _block_chain(B, "2", A, "2", [(1, 1), (2, 2), (3, 3)])),
        rel("E7.f2e4_zero", "f_{2,i,j} e_{4,i',j'} = 0 for (j, i') not in {(1,2), (2,1), (4,3)}",
            _off_zero(B, "2", A, "4", {(1, 2), (2, 1), (4, 3)})),
        rel("E7.f2e4_eq", "f_{2,i,1} e_{4,2,j} = f_{2,i,2} e_{4,1,j} = f_{2,i,4} e_{4,3,j}",
            _block_chain(B, "2", A, "4", [(1, 2), (2, 1), (4, 3)])),
        rel("E7.f2e3_zero", "f_{2,i,1} e_{3,2,j} = f_{2,i,2} e_{3,1,j} = 0", e3_zero),
        rel("E7.f2e3_eq", "f_{2,i,1} e_{3,1,j} = f_{2,i,2} e_{3,2,j} = f_{2,i,3} e_{3,1,j} = f_{2,i,3} e_{3,2,j}"
            " = f_{2,i,4} e_{3,1,j} = lambda^-1 f_{2,i,4} e_{3,2,j}", e3_chain),
    ]
    return FamilyDefinition(
        family="E7", k=None, side_a=A, side_b=B, base_change=bc, terms=_load_terms(TERMS, lam),
        mu=lam * (t - 1) / (t - lam), relations=relations,
        root_candidates=lambda mu: {"0": rf(0), "1": rf(1), "lambda": lam, "lambda - 1": lam - 1, "K": mu},
        dimension_formula="24",
    )


def definition_e8(lam, t) -> FamilyDefinition:
    from ._terms_e8 import TERMS
    A = Side("e", [("1", 2), ("2", 6), ("3", 4), ("4", 2)])
    B = Side("f", [("1", 4), ("2", 3), ("3", 5), ("4", 3), ("5", 1)])
    one = rf(1)
    s = lambda a, b: a <= b
    phi_one = {(1, 2), (1, 4), (1, 5), (2, 1), (2, 3), (2, 4), (3, 1), (3, 6)}
    psi_one = {(1, 1), (2, 2), (3, 4), (4, 6)}

    def phi(kk, kp, u):
        if (kp, kk) in phi_one:
            return one
        if (kk, kp) == (5, 3):
            return u
        return None

    bc = {}
    def put(d, key, c):
        if c is not None and c:
            d[key] = d.get(key, rf(0)) + c
    for i in range(1, 3):
        for j in range(1, 3):
            bc[("1", i, j)] = {("1", i, j): one}
            d = {("4", i, j): one}
            if s(i, 1) and s(j, 1):
                put(d, ("5", 1, 1), one)
            bc[("4", i, j)] = d
    for i in range(1, 5):
        for j in range(1, 5):
            d = {("3", i, j): one}
            if s(i, 3) and s(j, 3):
                put(d, ("4", i, j), one)
            bc[("3", i, j)] = d
    for i in range(1, 7):
        for j in range(1, 7):
            d = {}
            if s(i, 5) and s(j, 5):
                put(d, ("3", i, j), one)
            for ip in range(1, 4):
                for jp in range(1, 4):
                    a, b = phi(i, ip, lam), phi(j, jp, t)
                    if a is not None and b is not None:
                        put(d, ("2", ip, jp), a * b)
            for ip in range(1, 5):
                for jp in range(1, 5):
                    if (ip, i) in psi_one and (jp, j) in psi_one:
                        put(d, ("1", ip, jp), one)
            bc[("2", i, j)] = d

    f5 = B.name("5")
    f2e2_pairs = [(1, 2), (1, 4), (1, 5), (2, 1), (2, 3), (2, 4), (3, 1), (3, 6), (3, 5)]
    relations = [
        algebra_table_relations(A, "E8.mul.A", "tail algebra multiplication table"),
        algebra_table_relations(B, "E8.mul.B", "head algebra multiplication table, f_5^2 = f_5"),
        partition_relation(A, "E8.unity.A", "sum of tail idempotents = 1"),
        partition_relation(B, "E8.unity.B", "sum of head idempotents = 1"),
        rel("E8.block_zero", "f1 e3 = f1 e4 = f2 e1 = f2 e3 = f2 e4 = f3 e1 = f3 e4 = f4 e1 = f4 e2"
            " = f5 e1 = f5 e2 = f5 e3 = 0",
            zero_products(B, ["1"], A, ["3", "4"]) + zero_products(B, ["2"], A, ["1", "3", "4"])
            + zero_products(B, ["3"], A, ["1", "4"]) + zero_products(B, ["4"], A, ["1", "2"])
            + zero_products(B, ["5"], A, ["1", "2", "3"])),
        rel("E8.f5e4_zero", "f_5 e_{4,2,i} = 0", [[(1, (f5, A.name("4", 2, i)))] for i in (1, 2)]),
        rel("E8.f4e4", "f_{4,i,1} e_{4,1,j} = f_{4,i,2} e_{4,2,j}, f_{4,i,j} e_{4,i',j'} = 0 for j != i'",
            _block_chain(B, "4", A, "4", [(1, 1), (2, 2)]) + _off_zero(B, "4", A, "4", {(1, 1), (2, 2)})),
        rel("E8.f4e3", "f_{4,i,1} e_{3,1,j} = f_{4,i,2} e_{3,2,j} = f_{4,i,3} e_{3,3,j}, zero for j != i'",
            _block_chain(B, "4", A, "3", [(1, 1), (2, 2), (3, 3)])
            + _off_zero(B, "4", A, "3", {(1, 1), (2, 2), (3, 3)})),
        rel("E8.f3e3", "f_{3,i,a} e_{3,a,j} agree for a = 1..4, zero for j != i'",
            _block_chain(B, "3", A, "3", [(a, a) for a in range(1, 5)])
            + _off_zero(B, "3", A, "3", {(a, a) for a in range(1, 5)})),
        rel("E8.f3e2", "f_{3,i,a} e_{2,a,j} agree for a = 1..5, zero for j != i'",
            _block_chain(B, "3", A, "2", [(a, a) for a in range(1, 6)])
            + _off_zero(B, "3", A, "2", {(a, a) for a in range(1, 6)})),
        rel("E8.f1e1", "f_{1,i,1} e_{1,1,j} = f_{1,i,2} e_{1,2,j}, zero for j != i'",
            _block_chain(B, "1", A, "1", [(1, 1), (2, 2)]) + _off_zero(B, "1", A, "1", {(1, 1), (2, 2)})),
        rel("E8.f1e2", "f_{1,i,1} e_{2,1,j} = f_{1,i,2} e_{2,2,j} = f_{1,i,3} e_{2,4,j} = f_{1,i,4} e_{2,6,j},"
            " zero for (j, i') outside these pairs",
            _block_chain(B, "1", A, "2", [(1, 1), (2, 2), (3, 4), (4, 6)])
            + _off_zero(B, "1", A, "2", {(1, 1), (2, 2), (3, 4), (4, 6)})),
        rel("E8.f2e2", "f_{2,i,j} e_{2,i',j} agree along (1,2), (1,4), (1,5), (2,1), (2,3), (2,4), (3,1), (3,6)"
            " and equal lambda^-1 f_{2,i,3} e_{2,5,j}; zero for (j, i') outside these pairs",
            _block_chain(B, "2", A, "2", f2e2_pairs, [1] * 8 + [lam.inverse()])
            + _off_zero(B, "2", A, "2", set(f2e2_pairs))),
    ]
    return FamilyDefinition(
        family="E8", k=None, side_a=A, side_b=B, base_change=bc, terms=_load_terms(TERMS, lam),
        mu=lam * (t - 1) / (t - lam), relations=relations,
        root_candidates=lambda mu: {"0": rf(0), "1": rf(1), "lambda": lam, "lambda - 1": lam - 1, "K": mu},
        dimension_formula="60",
    )
