"""Common machinery for the affine families.

Every family is described by two semi-simple algebras (the tail side ``A``
and the head side ``B``), each a direct sum of matrix blocks, together with
a change of basis between the regular-module bases of the representation
space.  B acts by matrix units in the working basis ``w``; A acts by matrix
units in the basis ``v`` and is transported to ``w`` through the base-change
matrix ``P`` whose column ``a`` holds the ``w``-coordinates of ``v_a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from ..arith.ratfunc import RatFunc, parse
from ..linalg import FieldMatrix, SandwichOperator, SingularMatrix, determinant, mat_inverse

Word = Tuple[str, ...]
Basis = Tuple[str, int, int]

FAMILIES = ("A", "D_even", "D_odd", "E6", "E7", "E8")


class DegenerateParameter(ValueError):
    """Parameters on a degeneration locus of the family."""


@dataclass(frozen=True)
class Block:
    label: str
    size: int


class Side:
    """A direct sum of matrix blocks acting on itself by left multiplication."""

    def __init__(self, prefix: str, blocks: Sequence[Tuple[str, int]]):
        self.prefix = prefix
        self.blocks = [Block(str(l), n) for l, n in blocks]
        self.size = {b.label: b.size for b in self.blocks}
        self.basis: List[Basis] = []
        for b in self.blocks:
            for i in range(1, b.size + 1):
                for j in range(1, b.size + 1):
                    self.basis.append((b.label, i, j))
        self.index = {x: n for n, x in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def name(self, label: str, i: int = 1, j: int = 1) -> str:
        if self.size[label] == 1:
            return f"{self.prefix}[{label}]"
        return f"{self.prefix}[{label},{i},{j}]"

    def generators(self) -> List[Tuple[str, Basis]]:
        return [(self.name(*b), b) for b in self.basis]

    def action(self, g: Basis) -> FieldMatrix:
        """Matrix of the basis element g acting on the side's own basis."""
        lab, i, j = g
        n = self.size[lab]
        data = [{} for _ in self.basis]
        for jp in range(1, n + 1):
            data[self.index[(lab, i, jp)]] = {self.index[(lab, j, jp)]: 1}
        return FieldMatrix(self.dim, self.dim, data)

    def idempotents(self) -> List[str]:
        return [self.name(b.label, i, i) for b in self.blocks for i in range(1, b.size + 1)]


def format_basis(prefix: str, b: Basis, size: int) -> str:
    lab, i, j = b
    return f"{prefix}[{lab}]" if size == 1 else f"{prefix}[{lab},{i},{j}]"


@dataclass
class Relation:
    """sum(coef * word) = 0 for every instance; words are generator names."""

    rid: str
    text: str
    instances: List[List[Tuple[RatFunc, Word]]]


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: Optional[int] = None
    lam: object = "sym"
    t: object = "sym"

    def lam_value(self) -> RatFunc:
        return RatFunc.var("lambda") if self.lam in (None, "sym") else RatFunc.coerce(self.lam)

    def t_value(self) -> RatFunc:
        return RatFunc.var("t") if self.t in (None, "sym") else RatFunc.coerce(self.t)

    def is_symbolic(self) -> bool:
        return self.lam in (None, "sym") or self.t in (None, "sym")

    def to_json(self) -> dict:
        def enc(x):
            if x in (None, "sym"):
                return "sym"
            return RatFunc.coerce(x).to_str()
        out = {"family": self.family, "lambda": enc(self.lam), "t": enc(self.t)}
        if self.k is not None:
            out["k"] = self.k
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "FamilySpec":
        allowed = {"family", "k", "lambda", "t"}
        extra = set(obj) - allowed
        if extra:
            raise ValueError(f"unknown family spec fields: {sorted(extra)}")
        def dec(x):
            if x is None or x == "sym":
                return "sym"
            return parse(str(x))
        return FamilySpec(obj["family"], obj.get("k"), dec(obj.get("lambda", "sym")), dec(obj.get("t", "sym")))


@dataclass
class Term:
    """coef * (left word) x (right word)."""

    coef: RatFunc
    left: Word
    right: Word


@dataclass
class FamilyDefinition:
    """Static description of one family at fixed k and parameters."""

    family: str
    k: Optional[int]
    side_a: Side
    side_b: Side
    base_change: Dict[Basis, Dict[Basis, RatFunc]]
    terms: List[Term]
    mu: RatFunc
    relations: List[Relation]
    # annihilating polynomial of R, lowest coefficient first, as functions of K
    identity: Optional[Callable[[RatFunc], List[RatFunc]]] = None
    identity_text: str = ""
    # printed closed form of (v+R)^{-1} as coefficients of R^i, functions of (v, K)
    inverse: Optional[Callable[[RatFunc, RatFunc], List[RatFunc]]] = None
    inverse_text: str = ""
    # candidate roots used to describe derived minimal polynomials
    root_candidates: Callable[[RatFunc], Dict[str, RatFunc]] = lambda mu: {}
    dimension_formula: str = ""


@dataclass
class FamilyRep:
    """A built representation: generator matrices in the working basis."""

    spec: FamilySpec
    definition: FamilyDefinition
    dim: int
    P: FieldMatrix
    P_inv: FieldMatrix
    det_P: RatFunc
    mu: RatFunc
    R: SandwichOperator
    frame_generators: Dict[str, FieldMatrix]
    b_generators: Dict[str, FieldMatrix]
    _a_cache: Dict[str, FieldMatrix] = field(default_factory=dict)

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def generator_names(self) -> List[str]:
        return [n for n, _ in self.definition.side_a.generators()] + [n for n, _ in self.definition.side_b.generators()]

    def generator(self, name: str) -> FieldMatrix:
        if name in self.b_generators:
            return self.b_generators[name]
        if name not in self.frame_generators:
            raise KeyError(f"unknown generator {name}")
        m = self._a_cache.get(name)
        if m is None:
            m = self._a_cache[name] = self.P @ self.frame_generators[name] @ self.P_inv
        return m

    @property
    def generators(self) -> Dict[str, FieldMatrix]:
        return {n: self.generator(n) for n in self.generator_names}

    def is_a(self, name: str) -> bool:
        return name in self.frame_generators

    def word(self, w: Word) -> FieldMatrix:
        out = FieldMatrix.identity(self.dim)
        for g in w:
            out = out @ self.generator(g)
        return out

    def frame_word(self, w: Word) -> FieldMatrix:
        out = FieldMatrix.identity(self.dim)
        for g in w:
            out = out @ self.frame_generators[g]
        return out

    def basis_labels(self) -> List[str]:
        b = self.definition.side_b
        return [format_basis("w", x, b.size[x[0]]) for x in b.basis]


def build_from_definition(spec: FamilySpec, d: FamilyDefinition, *, degeneracy_text: str = "") -> FamilyRep:
    A, B = d.side_a, d.side_b
    if A.dim != B.dim:
        raise AssertionError("sides have different dimensions")
    n = B.dim
    entries: Dict[Tuple[int, int], RatFunc] = {}
    for a, comb in d.base_change.items():
        col = A.index[a]
        for b, c in comb.items():
            key = (B.index[b], col)
            entries[key] = entries.get(key, RatFunc.coerce(0)) + RatFunc.coerce(c)
    P = FieldMatrix.from_sparse(n, n, entries)
    det = determinant(P)
    if not det:
        raise DegenerateParameter(f"degenerate parameter: {degeneracy_text or 'base change determinant'} = 0 "
                                  f"({_spec_text(spec)})")
    try:
        P_inv = mat_inverse(P)
    except SingularMatrix as exc:  # pragma: no cover - guarded by det above
        raise DegenerateParameter(str(exc)) from exc
    frame = {name: A.action(g) for name, g in A.generators()}
    bgens = {name: B.action(g) for name, g in B.generators()}
    rep = FamilyRep(spec, d, n, P, P_inv, det, d.mu, SandwichOperator.zero(n), frame, bgens)
    rep.R = assemble_R(rep, d.terms)
    return rep


def _spec_text(spec: FamilySpec) -> str:
    parts = []
    if spec.k is not None:
        parts.append(f"k={spec.k}")
    if spec.lam not in (None, "sym"):
        parts.append(f"lambda={RatFunc.coerce(spec.lam).to_str()}")
    if spec.t not in (None, "sym"):
        parts.append(f"t={RatFunc.coerce(spec.t).to_str()}")
    return ", ".join(parts)


def assemble_R(rep: FamilyRep, terms: Sequence[Term]) -> SandwichOperator:
    """Assemble the sandwich operator, keeping A-side left factors in the v frame."""
    n = rep.dim
    right_cache: Dict[Word, FieldMatrix] = {}
    left_cache: Dict[Word, FieldMatrix] = {}

    def right(w: Word) -> Optional[FieldMatrix]:
        if not w:
            return None
        if w not in right_cache:
            right_cache[w] = rep.word(w)
        return right_cache[w]

    pairs = []
    left_term = None
    right_term = None
    for term in terms:
        if not term.right:
            m = rep.word(term.left).scale(term.coef)
            left_term = m if left_term is None else left_term + m
            continue
        if not term.left:
            m = rep.word(term.right).scale(term.coef)
            right_term = m if right_term is None else right_term + m
            continue
        if all(rep.is_a(g) for g in term.left):
            if term.left not in left_cache:
                left_cache[term.left] = rep.frame_word(term.left)
            a = left_cache[term.left]
        else:
            a = rep.P_inv @ rep.word(term.left) @ rep.P
        pairs.append((term.coef, a, right(term.right)))
    return SandwichOperator(pairs, left_term, right_term, (rep.P, rep.P_inv), n)


# ---------------------------------------------------------------------------
# helpers for family modules


def rf(x) -> RatFunc:
    return RatFunc.coerce(x)


def rel(rid: str, text: str, instances) -> Relation:
    return Relation(rid, text, [[(rf(c), tuple(w)) for c, w in inst] for inst in instances])


def zero_products(side_f: Side, labels_f: Sequence[str], side_e: Side, labels_e: Sequence[str],
                  cond: Callable[[Basis, Basis], bool] = lambda f, e: True):
    """Instances f e = 0 over all basis elements of the given blocks."""
    out = []
    for lf in labels_f:
        for lf_b in [b for b in side_f.basis if b[0] == lf]:
            for le in labels_e:
                for le_b in [b for b in side_e.basis if b[0] == le]:
                    if cond(lf_b, le_b):
                        out.append([(1, (side_f.name(*lf_b), side_e.name(*le_b)))])
    return out


def algebra_table_relations(side: Side, rid: str, text: str) -> Relation:
    """Block multiplication table: x_{a,i,j} x_{b,i',j'} = delta delta x_{a,i,j'}."""
    inst = []
    for x in side.basis:
        for y in side.basis:
            w = (side.name(*x), side.name(*y))
            if x[0] == y[0] and x[2] == y[1]:
                inst.append([(1, w), (-1, (side.name(x[0], x[1], y[2]),))])
            else:
                inst.append([(1, w)])
    return rel(rid, text, inst)


def partition_relation(side: Side, rid: str, text: str) -> Relation:
    inst = [[(1, (g,)) for g in side.idempotents()] + [(-1, ())]]
    return rel(rid, text, inst)


def equal_chain(words: Sequence[Tuple[object, Word]]):
    """Instances stating that consecutive scaled words agree."""
    out = []
    for (c1, w1), (c2, w2) in zip(words, words[1:]):
        out.append([(c1, w1), (-rf(c2), w2)])
    return out
