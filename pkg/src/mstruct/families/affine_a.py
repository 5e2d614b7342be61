"""The cyclic family: k one-dimensional idempotents on each side."""

from __future__ import annotations

from .base import (FamilyDefinition, Side, Term, algebra_table_relations, partition_relation, rel, rf)


def definition(k: int, lam, t) -> FamilyDefinition:
    if not isinstance(k, int) or k < 2:
        raise ValueError("family A needs an integer k >= 2")
    A = Side("e", [(str(i), 1) for i in range(1, k + 1)])
    B = Side("f", [(str(i), 1) for i in range(1, k + 1)])
    e = lambda i: A.name(str(i))
    f = lambda i: B.name(str(i))

    # v_i = w_i - t w_{i-1}, indices mod k
    bc = {}
    for i in range(1, k + 1):
        prev = (i - 2) % k + 1
        bc[(str(i), 1, 1)] = {(str(i), 1, 1): rf(1), (str(prev), 1, 1): -t}

    terms = [Term(rf(1), (e(i),), (f(j),)) for i in range(1, k) for j in range(i, k)]
    terms.append(Term(rf(1), (f(k), e(k)), ()))

    zero_fe = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if (j - i) % k not in (0, 1):
                zero_fe.append([(1, (f(i), e(j)))])
    relations = [
        algebra_table_relations(A, "A.mul.e", "e_i e_j = delta_ij e_i"),
        algebra_table_relations(B, "A.mul.f", "f_i f_j = delta_ij f_i"),
        partition_relation(A, "A.unity.e", "e_1 + ... + e_k = 1"),
        partition_relation(B, "A.unity.f", "f_1 + ... + f_k = 1"),
        rel("A.fe_zero", "f_i e_j = 0 for j - i not in {0, 1} mod k", zero_fe),
    ]

    def identity(K):
        return [rf(0), K, -(K + 1), rf(1)]

    def inverse(v, K):
        c = (v * (v + 1) * (v + K)).inverse()
        return [v.inverse(), -(1 + v + K) * c, c]

    return FamilyDefinition(
        family="A", k=k, side_a=A, side_b=B, base_change=bc, terms=terms,
        mu=(1 - t ** k).inverse(), relations=relations,
        identity=identity, identity_text="K R - (K + 1) R^2 + R^3 = 0",
        inverse=inverse,
        inverse_text="(v+R)^-1 x = x/v + (v(v+1))^-1 (v+K)^-1 (R^2 x - (1+v+K) R x)",
        root_candidates=lambda mu: {"0": rf(0), "1": rf(1), "K": mu},
        dimension_formula="k",
    )


DEGENERACY = "1 - t^k"
