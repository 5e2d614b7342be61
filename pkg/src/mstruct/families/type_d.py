"""The two D-type families (even and odd index)."""

from __future__ import annotations

from .base import (FamilyDefinition, Side, Term, algebra_table_relations, equal_chain, partition_relation,
                   rel, rf, zero_products)


def _e(side_a: Side, side_b: Side):
    def e(n, i=1, j=1):
        s = side_a if str(n) in side_a.size else side_b
        return s.name(str(n), i, j)
    return e


def _middle_relations(prefix, A, B, e, alphas_lower, alphas_upper):
    """Zero and equality relations between a Mat2 tail block 2a and its neighbours 2a-1, 2a+1."""
    zeros, eqs = [], []
    for a in alphas_lower:
        zeros += zero_products(B, [str(2 * a - 1)], A, [str(2 * a)], lambda f, g: f[2] != g[1])
        for i in (1, 2):
            for j in (1, 2):
                eqs += equal_chain([(1, (e(2 * a - 1, i, 1), e(2 * a, 1, j))), (1, (e(2 * a - 1, i, 2), e(2 * a, 2, j)))])
    for a in alphas_upper:
        zeros += zero_products(B, [str(2 * a + 1)], A, [str(2 * a)], lambda f, g: f[2] != g[1])
        for i in (1, 2):
            for j in (1, 2):
                eqs += equal_chain([(1, (e(2 * a + 1, i, 1), e(2 * a, 1, j))), (1, (e(2 * a + 1, i, 2), e(2 * a, 2, j)))])
    return [
        rel(f"{prefix}.neighbour_zero", "e_{2a-1,i,j} e_{2a,i',j'} = e_{2a+1,i,j} e_{2a,i',j'} = 0 for j != i'", zeros),
        rel(f"{prefix}.neighbour_eq",
            "e_{2a-1,i,1} e_{2a,1,j} = e_{2a-1,i,2} e_{2a,2,j}, e_{2a+1,i,1} e_{2a,1,j} = e_{2a+1,i,2} e_{2a,2,j}", eqs),
    ]


def definition_even(k: int, lam, t) -> FamilyDefinition:
    if not isinstance(k, int) or k < 2:
        raise ValueError("family D_even needs an integer k >= 2")
    A = Side("e", [("1", 1), ("2", 1), (str(2 * k), 1), (str(2 * k + 1), 1)] + [(str(2 * a), 2) for a in range(2, k)])
    B = Side("e", [(str(2 * a - 1), 2) for a in range(2, k + 1)])
    e = _e(A, B)
    one = rf(1)

    bc = {("1", 1, 1): {("3", 1, 1): one}, ("2", 1, 1): {("3", 2, 2): one}}
    for a in range(2, k):
        for i in (1, 2):
            for j in (1, 2):
                bc[(str(2 * a), i, j)] = {(str(2 * a + 1), i, j): one, (str(2 * a - 1), i, j): -one}
    last = str(2 * k - 1)
    bc[(str(2 * k), 1, 1)] = {(last, 1, 1): one, (last, 2, 1): one, (last, 1, 2): one, (last, 2, 2): one}
    bc[(str(2 * k + 1), 1, 1)] = {(last, 1, 1): one, (last, 2, 1): lam, (last, 1, 2): t, (last, 2, 2): lam * t}

    T = []
    def add(c, left, right):
        T.append(Term(rf(c), tuple(left), tuple(right)))
    for a in range(1, k):
        b = 2 * a + 1
        add(lam, [e(1)], [e(b, 2, 2)]); add(-lam, [e(1)], [e(b, 2, 1)])
        add(1, [e(2)], [e(b, 1, 1)]); add(-1, [e(2)], [e(b, 1, 2)])
        add(1, [e(2 * k)], [e(b, 1, 1)]); add(lam, [e(2 * k)], [e(b, 2, 2)])
        add(lam, [e(2 * k + 1)], [e(b, 1, 1)]); add(lam, [e(2 * k + 1)], [e(b, 2, 2)])
    for a in range(2, k):
        for b in range(2, k + 1):
            add(lam, [e(2 * a, 1, 1)], [e(2 * b - 1, 2, 2)]); add(1, [e(2 * a, 2, 2)], [e(2 * b - 1, 1, 1)])
            if a < b:
                add(-lam, [e(2 * a, 1, 1)], [e(2 * b - 1, 2, 1)]); add(-1, [e(2 * a, 2, 2)], [e(2 * b - 1, 1, 2)])
            if b <= a:
                add(lam, [e(2 * a, 2, 1)], [e(2 * b - 1, 2, 2)]); add(1, [e(2 * a, 1, 2)], [e(2 * b - 1, 1, 1)])
    add(1 - lam, [e(2 * k - 1, 2, 2), e(2 * k + 1)], [])

    singles = ["1", "2", str(2 * k), str(2 * k + 1)]
    far = []
    for a in range(2, k + 1):
        for b in range(2, k):
            if a not in (b, b + 1):
                far += zero_products(B, [str(2 * a - 1)], A, [str(2 * b)])
    e3 = [[(1, (e(3, 1, 2), e(1)))], [(1, (e(3, 2, 2), e(1)))], [(1, (e(3, 1, 1), e(2)))], [(1, (e(3, 2, 1), e(2)))]]
    tail_even = []
    for i in (1, 2):
        tail_even += equal_chain([(1, (e(2 * k - 1, i, 1), e(2 * k))), (1, (e(2 * k - 1, i, 2), e(2 * k)))])
    tail_lam = [
        [(1, (e(2 * k - 1, 1, 2), e(2 * k + 1))), (-lam, (e(2 * k - 1, 1, 1), e(2 * k + 1)))],
        [(1, (e(2 * k - 1, 2, 2), e(2 * k + 1))), (-lam, (e(2 * k - 1, 2, 1), e(2 * k + 1)))],
    ]
    relations = [
        algebra_table_relations(A, "D_even.mul.A", "tail algebra multiplication table"),
        algebra_table_relations(B, "D_even.mul.B", "head algebra multiplication table"),
        partition_relation(A, "D_even.unity.A", "e_1 + e_2 + e_2k + e_2k+1 + sum e_{2a,i,i} = 1"),
        partition_relation(B, "D_even.unity.B", "sum e_{2a-1,i,i} = 1"),
        rel("D_even.head_single_zero", "e_{2a-1,i,j} e_b = 0 for 2 < a < k, b in {1, 2, 2k, 2k+1}",
            zero_products(B, [str(2 * a - 1) for a in range(3, k)], A, singles)),
        rel("D_even.far_zero", "e_{2a-1,i,j} e_{2b,i',j'} = 0 for a not in {b, b+1}", far),
        rel("D_even.e3_zero", "e_{3,1,2} e_1 = e_{3,2,2} e_1 = e_{3,1,1} e_2 = e_{3,2,1} e_2 = 0", e3),
    ]
    relations += _middle_relations("D_even", A, B, e, range(2, k), range(2, k))
    relations += [
        rel("D_even.tail_2k", "e_{2k-1,i,1} e_2k = e_{2k-1,i,2} e_2k", tail_even),
        rel("D_even.tail_2k+1", "e_{2k-1,i,2} e_2k+1 = lambda e_{2k-1,i,1} e_2k+1", tail_lam),
    ]

    def identity(K):
        return [rf(0), -lam * K, lam + K + lam * K, -(1 + lam + K), rf(1)]

    def inverse(v, K):
        c = (v * (v + 1) * (v + lam) * (v + K)).inverse()
        return [-v.inverse(), (v ** 2 + lam * v + v + lam + (1 + v + lam) * K) * c, -(1 + v + lam + K) * c, c]

    return FamilyDefinition(
        family="D_even", k=k, side_a=A, side_b=B, base_change=bc, terms=T,
        mu=lam * (t - 1) / (t - lam), relations=relations,
        identity=identity,
        identity_text="R^4 - (1+lambda+K) R^3 + (lambda+K+lambda K) R^2 - lambda K R = 0",
        inverse=inverse,
        inverse_text="(v+R)^-1 x = -x/v + (v(v+1)(v+lambda))^-1 (v+K)^-1 (R^3 x - (1+v+lambda+K) R^2 x"
                     " + (v^2+lambda v+v+lambda+(1+v+lambda)K) R x)",
        root_candidates=lambda mu: {"0": rf(0), "1": rf(1), "lambda": lam, "K": mu},
        dimension_formula="4k - 4",
    )


def definition_odd(k: int, lam, t) -> FamilyDefinition:
    if not isinstance(k, int) or k < 3:
        raise ValueError("family D_odd needs an integer k >= 3")
    A = Side("e", [("1", 1), ("2", 1)] + [(str(2 * a), 2) for a in range(2, k)])
    B = Side("e", [(str(2 * k - 1), 1), (str(2 * k), 1)] + [(str(2 * a - 1), 2) for a in range(2, k)])
    e = _e(A, B)
    one = rf(1)

    bc = {("1", 1, 1): {("3", 1, 1): one}, ("2", 1, 1): {("3", 2, 2): one}}
    for a in range(2, k - 1):
        for i in (1, 2):
            for j in (1, 2):
                bc[(str(2 * a), i, j)] = {(str(2 * a + 1), i, j): one, (str(2 * a - 1), i, j): -one}
    p, q, m = (str(2 * k - 1), 1, 1), (str(2 * k), 1, 1), str(2 * k - 3)
    for (i, j), c in {(1, 1): one, (2, 2): lam * t, (1, 2): t, (2, 1): lam}.items():
        d = {p: one, q: rf(c)}
        key = (m, i, j)
        d[key] = d.get(key, rf(0)) - one
        bc[(str(2 * k - 2), i, j)] = d

    T = []
    def add(c, left, right):
        T.append(Term(rf(c), tuple(left), tuple(right)))
    add(lam - 1, [e(1)], [e(2 * k - 1)])
    for a in range(2, k):
        add(lam - 1, [e(1)], [e(2 * a - 1, 2, 2)]); add(lam - 1, [e(2 * a, 1, 1)], [e(2 * k - 1)])
        add(-lam, [e(2)], [e(2 * a - 1, 1, 2)]); add(-1, [e(1)], [e(2 * a - 1, 2, 1)])
        add(lam, [e(2)], [e(2 * a - 1, 2, 2)]); add(lam, [e(1)], [e(2 * a - 1, 1, 1)])
    for a in range(2, k):
        for b in range(2, k):
            add(lam - 1, [e(2 * a, 1, 1)], [e(2 * b - 1, 2, 2)])
            add(lam, [e(2 * a, 1, 1)], [e(2 * b - 1, 1, 1)]); add(lam, [e(2 * a, 2, 2)], [e(2 * b - 1, 2, 2)])
            if b <= a:
                add(lam, [e(2 * a, 1, 2)], [e(2 * b - 1, 1, 1)]); add(1, [e(2 * a, 2, 1)], [e(2 * b - 1, 2, 2)])
            if a < b:
                add(-lam, [e(2 * a, 2, 2)], [e(2 * b - 1, 1, 2)]); add(-1, [e(2 * a, 1, 1)], [e(2 * b - 1, 2, 1)])
    add(lam - 1, [], [e(2 * k), e(2 * k - 2, 2, 2)])

    heads1 = [str(2 * k - 1), str(2 * k)]
    far = []
    for a in range(2, k):
        for b in range(2, k):
            if a not in (b, b + 1):
                far += zero_products(B, [str(2 * a - 1)], A, [str(2 * b)])
    e3 = [[(1, (e(3, 1, 2), e(1)))], [(1, (e(3, 2, 2), e(1)))], [(1, (e(3, 1, 1), e(2)))], [(1, (e(3, 2, 1), e(2)))]]
    n = 2 * k - 2
    tail_a = equal_chain([(1, (e(2 * k - 1), e(n, 1, 1))), (1, (e(2 * k - 1), e(n, 2, 1)))]) + \
        equal_chain([(1, (e(2 * k - 1), e(n, 1, 2))), (1, (e(2 * k - 1), e(n, 2, 2)))])
    tail_b = [
        [(1, (e(2 * k), e(n, 2, 1))), (-lam, (e(2 * k), e(n, 1, 1)))],
        [(1, (e(2 * k), e(n, 2, 2))), (-lam, (e(2 * k), e(n, 1, 2)))],
    ]
    relations = [
        algebra_table_relations(A, "D_odd.mul.A", "tail algebra multiplication table"),
        algebra_table_relations(B, "D_odd.mul.B", "head algebra multiplication table"),
        rel("D_odd.single_zero", "e_a e_b = 0 for a in {2k-1, 2k}, b in {1, 2}",
            zero_products(B, heads1, A, ["1", "2"])),
        partition_relation(A, "D_odd.unity.A", "e_1 + e_2 + sum e_{2a,i,i} = 1"),
        partition_relation(B, "D_odd.unity.B", "e_2k-1 + e_2k + sum e_{2a-1,i,i} = 1"),
        rel("D_odd.head_single_zero", "e_{2a-1,i,j} e_b = 0 for a > 2, b in {1, 2}",
            zero_products(B, [str(2 * a - 1) for a in range(3, k)], A, ["1", "2"])),
        rel("D_odd.far_zero", "e_{2a-1,i,j} e_{2b,i',j'} = 0 for a not in {b, b+1}", far),
        rel("D_odd.single_far_zero", "e_a e_{2b,i,j} = 0 for b < k-1, a in {2k-1, 2k}",
            zero_products(B, heads1, A, [str(2 * b) for b in range(2, k - 1)])),
        rel("D_odd.e3_zero", "e_{3,1,2} e_1 = e_{3,2,2} e_1 = e_{3,1,1} e_2 = e_{3,2,1} e_2 = 0", e3),
    ]
    relations += _middle_relations("D_odd", A, B, e, range(2, k), range(2, k - 1))
    relations += [
        rel("D_odd.tail_2k-1", "e_2k-1 e_{2k-2,1,j} = e_2k-1 e_{2k-2,2,j}", tail_a),
        rel("D_odd.tail_2k", "e_2k e_{2k-2,2,j} = lambda e_2k e_{2k-2,1,j}", tail_b),
    ]

    def identity(K):
        return [rf(0), -lam * (lam - 1) * K, lam ** 2 - lam - K + 2 * lam * K, -(2 * lam - 1 + K), rf(1)]

    def inverse(v, K):
        c = (v * (v + lam) * (v + lam - 1) * (v + K)).inverse()
        return [-v.inverse(), (v ** 2 + 2 * lam * v + lam ** 2 - v - lam + (v - 1 + 2 * lam) * K) * c,
                -(v + 2 * lam - 1 + K) * c, c]

    return FamilyDefinition(
        family="D_odd", k=k, side_a=A, side_b=B, base_change=bc, terms=T,
        mu=t * lam * (1 - lam) / (1 - t * lam), relations=relations,
        identity=identity,
        identity_text="R^4 - (2lambda-1+K) R^3 + (lambda^2-lambda-K+2lambda K) R^2 - lambda(lambda-1) K R = 0",
        inverse=inverse,
        inverse_text="(v+R)^-1 x = -x/v + (v(v+lambda)(v+lambda-1))^-1 (R^3 x - (v+2lambda-1+K) R^2 x"
                     " + (v^2+2lambda v+lambda^2-v-lambda+(v-1+2lambda)K) R x)(v+K)^-1",
        root_candidates=lambda mu: {"0": rf(0), "lambda": lam, "lambda - 1": lam - 1, "K": mu},
        dimension_formula="4k - 6",
    )
