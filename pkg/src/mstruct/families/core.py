"""Building family representations and checking them."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..arith.ratfunc import DenominatorVanishes, RatFunc
from ..linalg import FieldMatrix, SandwichOperator, format_poly1
from . import affine_a, type_d, type_e
from .base import DegenerateParameter, FamilyDefinition, FamilyRep, FamilySpec, Relation, Word, build_from_definition

RANK_FAMILIES = ("A", "D_even", "D_odd")

# human-readable degeneration loci; the determinant itself is always checked
DEGENERACY = {
    "A": "1 - t^k",
    "D_even": "t - lambda",
    "D_odd": "1 - lambda t",
    "E6": "lambda^3 - t^3",
    "E7": "t - lambda",
    "E8": "t - lambda",
}


def definition_for(spec: FamilySpec) -> FamilyDefinition:
    lam, t = spec.lam_value(), spec.t_value()
    fam = spec.family
    if fam == "A":
        return affine_a.definition(spec.k, lam, t)
    if fam == "D_even":
        return type_d.definition_even(spec.k, lam, t)
    if fam == "D_odd":
        return type_d.definition_odd(spec.k, lam, t)
    if fam == "E6":
        return type_e.definition_e6(lam, t)
    if fam == "E7":
        return type_e.definition_e7(lam, t)
    if fam == "E8":
        return type_e.definition_e8(lam, t)
    raise ValueError(f"unknown family {fam!r}; expected one of A, D_even, D_odd, E6, E7, E8")


def _spec_bits(spec: FamilySpec) -> str:
    bits = []
    if spec.k is not None:
        bits.append(f"k={spec.k}")
    for name, val in (("lambda", spec.lam), ("t", spec.t)):
        if val not in (None, "sym"):
            bits.append(f"{name}={RatFunc.coerce(val).to_str()}")
    return ", ".join(bits)


def build_family(spec: FamilySpec) -> FamilyRep:
    """Generator matrices in the w basis, the operator R and the scalar mu."""
    if spec.family not in RANK_FAMILIES and spec.k is not None:
        spec = FamilySpec(spec.family, None, spec.lam, spec.t)
    lam = spec.lam_value()
    if spec.family in ("E7", "E8") and lam.is_zero():
        raise DegenerateParameter(f"degenerate parameter: lambda = 0 ({_spec_bits(spec)})")
    locus = DEGENERACY.get(spec.family, "")
    try:
        d = definition_for(spec)
        return build_from_definition(spec, d, degeneracy_text=locus)
    except (DegenerateParameter, ZeroDivisionError) as exc:
        raise DegenerateParameter(f"degenerate parameter: {locus} = 0 ({_spec_bits(spec)})") from exc


def build_R(rep: FamilyRep) -> SandwichOperator:
    return rep.R


# ---------------------------------------------------------------------------
# relations


class _WordCache:
    def __init__(self, rep: FamilyRep):
        self.rep = rep
        self.frame: Dict[Word, FieldMatrix] = {}
        self.work: Dict[Word, FieldMatrix] = {}

    def in_a(self, w: Word) -> bool:
        return all(self.rep.is_a(g) for g in w)

    def matrix(self, w: Word, framed: bool) -> FieldMatrix:
        store = self.frame if framed else self.work
        m = store.get(w)
        if m is None:
            m = store[w] = self.rep.frame_word(w) if framed else self.rep.word(w)
        return m


def relation_residual(cache: _WordCache, instance) -> FieldMatrix:
    # A-only relations are identities inside the tail algebra; they are checked in the v frame,
    # where the tail generators are matrix units.  Everything else uses the w basis.
    framed = all(cache.in_a(w) for _, w in instance)
    out = None
    for c, w in instance:
        m = cache.matrix(w, framed).scale(c)
        out = m if out is None else out + m
    return out


def verify_relations(rep: FamilyRep, relations: Optional[Sequence[Relation]] = None) -> dict:
    """Each printed relation family as an exact matrix identity; failures carry the residual."""
    cache = _WordCache(rep)
    rows = []
    ok = True
    for r in (relations if relations is not None else rep.definition.relations):
        entry = {"id": r.rid, "relation": r.text, "instances": len(r.instances)}
        bad = []
        for n, inst in enumerate(r.instances):
            res = relation_residual(cache, inst)
            if not res.is_zero():
                bad.append((n, inst, res))
        if bad:
            ok = False
            n, inst, res = bad[0]
            entry.update(status="fail", failing_instances=len(bad), first_failure={
                "index": n,
                "terms": [[c.to_str(), list(w)] for c, w in inst],
                "residual": res.to_json(),
            })
        else:
            entry["status"] = "pass"
        rows.append(entry)
    return {"check": "relations", "spec": rep.spec.to_json(), "status": "pass" if ok else "fail", "relations": rows}


# ---------------------------------------------------------------------------
# central scalar and polynomial identities


def central_scalar(rep: FamilyRep) -> dict:
    """K = R(1) must be mu times the identity."""
    K = rep.R(FieldMatrix.identity(rep.dim))
    scalar = K.scalar_multiple_of_identity()
    ok = scalar is not None and scalar == rep.mu
    out = {"check": "central_scalar", "spec": rep.spec.to_json(), "anchor": "K = R(1) = mu",
           "mu": rep.mu.to_str(), "status": "pass" if ok else "fail"}
    if scalar is None:
        out["witness"] = "R(1) is not a scalar matrix"
    elif not ok:
        out["witness"] = f"R(1) = ({scalar.to_str()}) * 1"
    return out


def invariant_classes(rep: FamilyRep) -> Tuple[str, List[FieldMatrix]]:
    """A set of matrix units whose R-invariant hull is all of Mat_N.

    When every right multiplier lies in the head algebra, the column index
    (block, *, j) is a spectator and R commutes with the commutant permuting j,
    so j = 1 per head block suffices.  Symmetrically, when every left factor
    lies in the tail algebra, rows in the v frame can be reduced.  Returns the
    coordinate system ("w" or "frame") and the units.
    """
    n = rep.dim
    d = rep.definition
    R = rep.R
    right_in_b = R.right_term is None and all(
        t.right == () or all(g in rep.b_generators for g in t.right) for t in d.terms)
    if right_in_b:
        B = d.side_b
        cols = [B.index[(lab, i, 1)] for lab in B.size for i in range(1, B.size[lab] + 1)]
        return "w", [FieldMatrix.unit(n, r, c) for c in sorted(cols) for r in range(n)]
    left_in_a = R.left_term is None and all(all(rep.is_a(g) for g in t.left) for t in d.terms if t.right)
    if left_in_a:
        A = d.side_a
        rows = [A.index[(lab, i, 1)] for lab in A.size for i in range(1, A.size[lab] + 1)]
        return "frame", [FieldMatrix.unit(n, r, c) for r in sorted(rows) for c in range(n)]
    return "w", [FieldMatrix.unit(n, r, c) for r in range(n) for c in range(n)]


def _applier(rep: FamilyRep, coords: str):
    return rep.R.apply if coords == "w" else rep.R.apply_conjugated


def apply_polynomial(coeffs: Sequence[RatFunc], apply, x: FieldMatrix) -> FieldMatrix:
    """sum_i coeffs[i] R^i(x), Horner form."""
    out = x.scale(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        out = apply(out)
        if c:
            out = out + x.scale(c)
    return out


def verify_R_identity(rep: FamilyRep, *, random_vectors: int = 2, seed: int = 0) -> dict:
    """The printed annihilating polynomial with K -> mu, or a derived minimal polynomial."""
    d = rep.definition
    coords, units = invariant_classes(rep)
    apply = _applier(rep, coords)
    out = {"check": "r_identity", "spec": rep.spec.to_json(), "basis_classes": coords, "elements": len(units)}
    if d.identity is not None:
        coeffs = d.identity(rep.mu)
        out["anchor"] = d.identity_text
        out["polynomial"] = format_poly1(coeffs, "R")
        for idx, x in enumerate(units):
            r = apply_polynomial(coeffs, apply, x)
            if not r.is_zero():
                out.update(status="fail", witness={"element": idx, "residual": r.to_json()})
                return out
        out["status"] = "pass"
        return out
    out.update(derive_minimal_polynomial(rep, random_vectors=random_vectors, seed=seed))
    return out


def derive_minimal_polynomial(rep: FamilyRep, *, random_vectors: int = 2, seed: int = 0) -> dict:
    """Minimal polynomial of R found from candidate roots, confirmed on random vectors.

    At symbolic parameters every invariant class element is used; at numeric
    parameters the classes are replaced by random integer combinations, which is
    a Schwartz-Zippel style certificate.
    """
    d = rep.definition
    coords, units = invariant_classes(rep)
    apply = _applier(rep, coords)
    cands = d.root_candidates(rep.mu)
    if rep.spec.is_symbolic():
        tests = units
        mode = "all_classes"
    else:
        rng = random.Random(seed)
        tests = []
        n = rep.dim
        for _ in range(max(1, random_vectors) + 1):
            ent = {}
            for u in units:
                (i, j), = u.nonzero_positions()
                ent[(i, j)] = rng.randint(-9, 9)
            tests.append(FieldMatrix.from_sparse(n, n, ent))
        mode = "random_combinations"
    # find the smallest subset of candidate roots whose product kills every test vector
    names = list(cands)
    chosen = list(names)
    def kills(subset):
        coeffs = _poly_from_roots([cands[s] for s in subset])
        return all(apply_polynomial(coeffs, apply, x).is_zero() for x in tests)
    if not kills(chosen):
        return {"status": "fail", "mode": mode, "witness": "candidate roots do not annihilate R",
                "candidates": {k: v.to_str() for k, v in cands.items()}}
    for name in list(names):
        trial = [s for s in chosen if s != name]
        if trial and kills(trial):
            chosen = trial
    coeffs = _poly_from_roots([cands[s] for s in chosen])
    degree = len(chosen)
    return {
        "status": "pass" if degree <= 4 else "fail",
        "mode": mode,
        "derived": True,
        "anchor": "degree 4 annihilating polynomial (derived)",
        "roots": chosen,
        "degree": degree,
        "polynomial": format_poly1(coeffs, "R"),
    }


def _poly_from_roots(roots: Sequence[RatFunc]) -> List[RatFunc]:
    p = [RatFunc.coerce(1)]
    for r in roots:
        q = [RatFunc.coerce(0)] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i + 1] = q[i + 1] + c
            q[i] = q[i] - r * c
        p = q
    return p


def annihilating_polynomial(rep: FamilyRep) -> List[RatFunc]:
    """Coefficients (lowest first) of a verified polynomial killing R, K already replaced by mu."""
    d = rep.definition
    if d.identity is not None:
        return d.identity(rep.mu)
    info = derive_minimal_polynomial(rep)
    if info["status"] != "pass":
        raise ArithmeticError("no annihilating polynomial of degree <= 4 found")
    cands = d.root_candidates(rep.mu)
    return _poly_from_roots([cands[s] for s in info["roots"]])


# ---------------------------------------------------------------------------
# sampling and opposite structures


def sample_parameters(family: str, k: Optional[int], count: int, seed: int,
                      lam=None, t=None) -> List[FamilySpec]:
    """Seeded non-degenerate rational (lambda, t) points; fixed coordinates are kept."""
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 50 * count + 50:
            raise DegenerateParameter("could not find non-degenerate sample parameters")
        lv = lam if lam not in (None, "sym") else Fraction(rng.randint(-40, 40), rng.randint(1, 13))
        tv = t if t not in (None, "sym") else Fraction(rng.randint(-40, 40), rng.randint(1, 13))
        spec = FamilySpec(family, k, RatFunc.coerce(lv) if not isinstance(lv, RatFunc) else lv,
                          RatFunc.coerce(tv) if not isinstance(tv, RatFunc) else tv)
        if not _generic(spec):
            continue
        out.append(spec)
    return out


def _generic(spec: FamilySpec) -> bool:
    lam, t = spec.lam_value(), spec.t_value()
    bad = [lam, lam - 1, lam + 1, t, t - 1, t + 1, t - lam, 1 - lam * t, lam ** 3 - t ** 3, 1 - t ** 4]
    return all(not b.is_zero() for b in bad)


def opposite_relations(relations: Sequence[Relation]) -> List[Relation]:
    """Relations of the opposite algebra: every word reversed."""
    return [Relation(r.rid + ".op", r.text + " (words reversed)",
                     [[(c, tuple(reversed(w))) for c, w in inst] for inst in r.instances]) for r in relations]


class TransposedRep:
    """Word evaluation on transposed generators with the sides exchanged."""

    def __init__(self, rep: FamilyRep):
        self.rep = rep
        self.dim = rep.dim
        self._gens: Dict[str, FieldMatrix] = {}

    def generator(self, name: str) -> FieldMatrix:
        m = self._gens.get(name)
        if m is None:
            m = self._gens[name] = self.rep.generator(name).transpose()
        return m

    def word(self, w: Word) -> FieldMatrix:
        out = FieldMatrix.identity(self.dim)
        for g in w:
            out = out @ self.generator(g)
        return out


def opposite_structure(rep: FamilyRep) -> dict:
    """Transpose every generator, swap the roles of the sides and re-verify all relations."""
    t = TransposedRep(rep)
    rows = []
    ok = True
    for r in opposite_relations(rep.definition.relations):
        status = "pass"
        for inst in r.instances:
            res = None
            for c, w in inst:
                m = t.word(w).scale(c)
                res = m if res is None else res + m
            if not res.is_zero():
                status = "fail"
                ok = False
                break
        rows.append({"id": r.rid, "status": status, "instances": len(r.instances)})
    return {"check": "opposite_structure", "spec": rep.spec.to_json(), "status": "pass" if ok else "fail",
            "tail_side": rep.definition.side_b.prefix + " (head generators of the original)",
            "relations": rows}


def export_json(rep: FamilyRep) -> dict:
    d = rep.definition
    gens = {}
    for name in rep.generator_names:
        gens[name] = rep.generator(name).to_json()
    return {
        "schema": "mstruct.family/1",
        "spec": rep.spec.to_json(),
        "dim": rep.dim,
        "dimension_formula": d.dimension_formula,
        "mu": rep.mu.to_str(),
        "basis": rep.basis_labels(),
        "tail_generators": [n for n, _ in d.side_a.generators()],
        "head_generators": [n for n, _ in d.side_b.generators()],
        "base_change": rep.P.to_json(),
        "generators": gens,
        "R_terms": [[t.coef.to_str(), list(t.left), list(t.right)] for t in d.terms],
    }
