"""Named verification suites over a family spec, shared by the CLI and the tests.

Each suite returns a report dict with a ``status`` of "pass" or "fail".  In
sampled mode the algebraic suites (relations, pencil, r_identity, inverse,
quiver) run at ``points`` seeded non-degenerate (lambda, t) points whenever
lambda or t is left symbolic (relations at no fewer than
``MIN_PARAMETER_POINTS``).  The Yang-Baxter suites sample spectral triples as
described in ``verify_ybe``.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from .algebra import (check_operator_pencil, inverse_from_polynomial, matrix_units, random_integer_matrices,
                      verify_inverse_formula, verify_S_lambda)
from .arith.ratfunc import RatFunc
from .dynkin import diagram_report, quiver_report
from .families import build_family
from .families.base import FamilyRep, FamilySpec
from .families.core import (_applier, annihilating_polynomial, central_scalar, invariant_classes,
                            opposite_structure, sample_parameters, verify_relations, verify_R_identity)
from .yangbaxter import FamilyRMatrix, laurent_check, unitarity_report, verify_ybe

SUITES = ("relations", "pencil", "r_identity", "inverse", "ybe_assoc", "ybe_lie", "quiver", "dynkin")
MODES = ("symbolic", "sampled")
MIN_PARAMETER_POINTS = 10
# Beyond this dimension the pencil suite uses random integer matrices.
PENCIL_UNIT_LIMIT = 4


def _status(items) -> str:
    return "pass" if all(i.get("status") in ("pass", "reported") for i in items) else "fail"


def parameter_points(spec: FamilySpec, mode: str, count: int, seed: int) -> List[FamilySpec]:
    if mode == "symbolic" or not spec.is_symbolic():
        return [spec]
    return sample_parameters(spec.family, spec.k, count, seed, lam=spec.lam, t=spec.t)


def _per_parameter(spec, mode, count, seed, fn: Callable[[FamilyRep], dict], check: str) -> dict:
    specs = parameter_points(spec, mode, count, seed)
    if len(specs) == 1:
        return fn(build_family(specs[0]))
    runs = []
    for s in specs:
        r = fn(build_family(s))
        runs.append(r)
        if r["status"] != "pass":
            break
    return {"check": check, "mode": mode, "seed": seed, "spec": spec.to_json(),
            "parameter_points": runs, "status": _status(runs)}


def suite_relations(spec, mode="symbolic", points=5, seed=0) -> dict:
    def run(rep):
        rel = verify_relations(rep)
        mu = central_scalar(rep)
        opp = opposite_structure(rep)
        return {"check": "relations", "spec": rep.spec.to_json(), "dim": rep.dim,
                "dimension_formula": rep.definition.dimension_formula,
                "relations": rel["relations"], "central_scalar": mu, "opposite_structure": opp,
                "status": _status([rel, mu, opp])}
    return _per_parameter(spec, mode, max(points, MIN_PARAMETER_POINTS), seed, run, "relations")


def suite_pencil(spec, mode="symbolic", points=5, seed=0) -> dict:
    """All unit triples for small algebras, else one random integer triple per parameter point.

    Both residuals are multilinear of degree <= 3 in the matrix entries, so a
    nonzero one survives a random triple with entries in [-1000, 1000] except
    with probability <= 3/2001.
    """
    def run(rep):
        if rep.dim <= PENCIL_UNIT_LIMIT:
            kind, elems, triples, pairs = "basis", matrix_units(rep.dim), None, None
        else:
            kind, elems = "random_integer", random_integer_matrices(rep.dim, 3, seed)
            triples, pairs = [(0, 1, 2)], [(0, 1)]
        pen = check_operator_pencil(rep.R, elems, triples=triples)
        s = verify_S_lambda(rep.R, elems, pairs=pairs)
        return {"check": "pencil", "spec": rep.spec.to_json(), "elements": kind,
                "pencil": pen, "s_identity": s, "status": _status([pen, s])}
    return _per_parameter(spec, mode, points, seed, run, "pencil")


def suite_r_identity(spec, mode="symbolic", points=5, seed=0) -> dict:
    return _per_parameter(spec, mode, points, seed, lambda rep: verify_R_identity(rep, seed=seed), "r_identity")


def suite_inverse(spec, mode="symbolic", points=5, seed=0) -> dict:
    """The printed (v+R)^-1, where one exists, and the one derived from the annihilating polynomial."""
    v = RatFunc.var("v")

    def run(rep):
        if mode == "sampled" and rep.dim > PENCIL_UNIT_LIMIT:
            # the residual is linear in x, so a random integer x exposes a nonzero one w.p. >= 2000/2001
            coords, units = "random_integer", random_integer_matrices(rep.dim, 2, seed)
            apply = rep.R.apply
        else:
            coords, units = invariant_classes(rep)
            apply = _applier(rep, coords)
        out = {"check": "inverse", "spec": rep.spec.to_json(), "elements": coords}
        derived = inverse_from_polynomial(annihilating_polynomial(rep), v)
        out["derived"] = verify_inverse_formula(rep.R, derived, v, units, apply=apply)
        parts = [out["derived"]]
        d = rep.definition
        if d.inverse is not None:
            printed = verify_inverse_formula(rep.R, d.inverse(v, rep.mu), v, units, apply=apply)
            printed["anchor"] = d.inverse_text
            out["printed"] = printed
            parts.append(printed)
        out["status"] = _status(parts)
        return out
    return _per_parameter(spec, mode, points, seed, run, "inverse")


def suite_ybe(spec, which: str, mode="sampled", points=5, seed=0) -> dict:
    r = FamilyRMatrix(spec)
    ybe = verify_ybe(r, which, mode=mode, points=points, seed=seed)
    parts = [ybe]
    out = {"check": which, "spec": spec.to_json(), which: ybe}
    if which == "ybe_assoc":
        out["laurent"] = laurent_check(r, mode=mode, seed=seed)
        out["unitarity"] = unitarity_report(r, seed=seed)
        parts += [out["laurent"], out["unitarity"]]
    out["status"] = _status(parts)
    return out


def suite_quiver(spec, mode="symbolic", points=5, seed=0) -> dict:
    specs = parameter_points(spec, mode, 1, seed)[:1]
    return quiver_report(build_family(specs[0]))


def suite_dynkin(spec, mode="symbolic", points=5, seed=0) -> dict:
    return diagram_report(spec.family, spec.k)


RUNNERS: Dict[str, Callable[..., dict]] = {
    "relations": suite_relations,
    "pencil": suite_pencil,
    "r_identity": suite_r_identity,
    "inverse": suite_inverse,
    "ybe_assoc": lambda spec, mode, points, seed: suite_ybe(spec, "ybe_assoc", mode, points, seed),
    "ybe_lie": lambda spec, mode, points, seed: suite_ybe(spec, "ybe_lie", mode, points, seed),
    "quiver": suite_quiver,
    "dynkin": suite_dynkin,
}


def run_suites(spec: FamilySpec, suites, *, mode: str = "sampled", points: int = 5, seed: int = 0) -> dict:
    names = list(SUITES) if "all" in suites else list(suites)
    results = []
    for name in names:
        if name not in RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        r = RUNNERS[name](spec, mode, points, seed)
        results.append({"suite": name, "status": r["status"], "report": r})
    return {"schema": "mstruct.verify/1", "spec": spec.to_json(), "mode": mode, "points": points, "seed": seed,
            "suites": results, "status": _status(results)}
