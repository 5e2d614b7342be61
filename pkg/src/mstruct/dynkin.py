"""Affine diagrams with a two-colouring, marks, multiplicity matrices and quiver data.

Vertex ids are the block labels of the family algebras, so a diagram lines up
with the representation built for the same family.  Tail vertices carry the
blocks of the first algebra (generators e), head vertices those of the second.
Canonical layouts (tails in lower case brackets, heads plain)::

    A, k:      [e1] - f1 - [e2] - f2 - ... - [ek] - fk - back to [e1]

    D_even, k: [e1]                              [e2k]
                   >- e3 - [e4] - e5 - ... - e(2k-1) -<
               [e2]                              [e2k+1]

    D_odd, k:  [e1]                                 e(2k-1)
                   >- e3 - [e4] - ... - [e(2k-2)] -<
               [e2]                                 e2k

    E6:        [e1] - f1 - [eM] - f2 - [e2]
                            |
                            f3
                            |
                           [e3]

    E7:        [e1] - f1 - [e2] - f2 - [e4] - f3 - [e5]
                                  |
                                 [e3]

    E8:        f5 - [e4] - f4 - [e3] - f3 - [e2] - f1 - [e1]
                                         |
                                         f2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .arith.ratfunc import RatFunc
from .linalg import FieldMatrix, determinant, kernel, rank

TAIL, HEAD = "tail", "head"


class DiagramError(ValueError):
    """Unsupported family or rank, or a graph without the required structure."""


class QuiverExtractionError(ArithmeticError):
    """A block of the identification map does not factor, or the assembled map is singular."""


@dataclass
class AffineDiagram:
    family: str
    k: Optional[int]
    vertices: List[str]
    sides: Dict[str, str]
    edges: List[Tuple[str, str]]  # (tail, head)
    marks: Dict[str, int] = field(default_factory=dict)

    @property
    def tails(self) -> List[str]:
        return [v for v in self.vertices if self.sides[v] == TAIL]

    @property
    def heads(self) -> List[str]:
        return [v for v in self.vertices if self.sides[v] == HEAD]

    def adjacency(self) -> Dict[str, List[str]]:
        adj = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def cartan(self) -> List[List[int]]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in self.edges:
            c[idx[a]][idx[b]] -= 1
            c[idx[b]][idx[a]] -= 1
        return c

    def opposite(self) -> "AffineDiagram":
        """Exchange the two sides; arrows are re-oriented from the new tails."""
        sides = {v: HEAD if s == TAIL else TAIL for v, s in self.sides.items()}
        return AffineDiagram(self.family + "^op", self.k, list(self.vertices), sides,
                             [(b, a) for a, b in self.edges], dict(self.marks))

    def to_json(self) -> dict:
        out = {"family": self.family,
               "vertices": [{"id": v, "side": self.sides[v], "mark": self.marks.get(v)} for v in self.vertices],
               "edges": [list(e) for e in self.edges]}
        if self.k is not None:
            out["k"] = self.k
        return out


def _layout(family: str, k: Optional[int]) -> Tuple[List[str], List[Tuple[str, str]]]:
    """Vertex list and undirected edges of the canonical layout."""
    if family == "A":
        if not isinstance(k, int) or k < 2:
            raise DiagramError("the cycle layout needs k >= 2 (2k vertices)")
        vs = [f"e{i}" for i in range(1, k + 1)] + [f"f{i}" for i in range(1, k + 1)]
        es = []
        for i in range(1, k + 1):
            es.append((f"e{i}", f"f{i}"))
            es.append((f"e{i % k + 1}", f"f{i}"))
        return vs, es
    if family == "D_even":
        if not isinstance(k, int) or k < 2:
            raise DiagramError("D_even needs k >= 2")
        chain = [f"e{i}" for i in range(3, 2 * k)]
        vs = ["e1", "e2", f"e{2 * k}", f"e{2 * k + 1}"] + chain
        es = list(zip(chain, chain[1:]))
        es += [("e1", "e3"), ("e2", "e3"), (f"e{2 * k}", f"e{2 * k - 1}"), (f"e{2 * k + 1}", f"e{2 * k - 1}")]
        return vs, es
    if family == "D_odd":
        if not isinstance(k, int) or k < 3:
            raise DiagramError("D_odd needs k >= 3")
        chain = [f"e{i}" for i in range(3, 2 * k - 1)]
        vs = ["e1", "e2", f"e{2 * k - 1}", f"e{2 * k}"] + chain
        es = list(zip(chain, chain[1:]))
        es += [("e1", "e3"), ("e2", "e3"), (f"e{2 * k - 1}", f"e{2 * k - 2}"), (f"e{2 * k}", f"e{2 * k - 2}")]
        return vs, es
    if family == "E6":
        vs = ["e1", "e2", "e3", "eM", "f1", "f2", "f3"]
        es = [("e1", "f1"), ("e2", "f2"), ("e3", "f3"), ("eM", "f1"), ("eM", "f2"), ("eM", "f3")]
        return vs, es
    if family == "E7":
        vs = ["e1", "e2", "e3", "e4", "e5", "f1", "f2", "f3"]
        es = [("e1", "f1"), ("e2", "f1"), ("e2", "f2"), ("e3", "f2"), ("e4", "f2"), ("e4", "f3"), ("e5", "f3")]
        return vs, es
    if family == "E8":
        vs = ["e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4", "f5"]
        es = [("e1", "f1"), ("e2", "f1"), ("e2", "f2"), ("e2", "f3"), ("e3", "f3"), ("e3", "f4"),
              ("e4", "f4"), ("e4", "f5")]
        return vs, es
    raise DiagramError(f"unsupported family {family!r}")


def two_colouring(vertices: Sequence[str], edges: Sequence[Tuple[str, str]]) -> Dict[str, int]:
    """Colour 0/1 with adjacent vertices differing; raises if impossible or disconnected."""
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    colour = {vertices[0]: 0}
    stack = [vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                raise DiagramError("the diagram has an odd cycle; no two-colouring exists")
    if len(colour) != len(vertices):
        raise DiagramError("the diagram is disconnected")
    return colour


def null_vector(cartan: Sequence[Sequence[int]]) -> List[int]:
    """The kernel generator of an affine Cartan matrix, positive with coprime entries."""
    m = FieldMatrix.from_rows(cartan)
    ker = kernel(m)
    if len(ker) != 1:
        raise DiagramError(f"Cartan matrix has a {len(ker)}-dimensional kernel; not affine")
    vals = [Fraction(str(ker[0].entry(i, 0).constant_value())) for i in range(m.rows)]
    den = 1
    for x in vals:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise DiagramError("kernel vector is not positive")
    return ints


def build_affine_diagram(family: str, k: Optional[int] = None) -> AffineDiagram:
    """Canonical layout, two-colouring (tail side contains e1) and marks from the Cartan kernel."""
    vs, es = _layout(family, k)
    colour = two_colouring(vs, es)
    tail_colour = colour["e1"]
    sides = {v: TAIL if colour[v] == tail_colour else HEAD for v in vs}
    oriented = [(a, b) if sides[a] == TAIL else (b, a) for a, b in es]
    d = AffineDiagram(family, k if family in ("A", "D_even", "D_odd") else None, vs, sides, oriented)
    marks = null_vector(d.cartan())
    d.marks = dict(zip(vs, marks))
    return d


# ---------------------------------------------------------------------------
# multiplicity matrices


@dataclass
class MultiplicityMatrix:
    rows: List[str]  # tail vertices, marks m_i
    cols: List[str]  # head vertices, marks n_j
    a: List[List[int]]

    def transpose(self) -> "MultiplicityMatrix":
        return MultiplicityMatrix(list(self.cols), list(self.rows),
                                  [[self.a[i][j] for i in range(len(self.rows))] for j in range(len(self.cols))])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "a": self.a}


def multiplicity_matrix(d: AffineDiagram) -> MultiplicityMatrix:
    """a_ij = number of edges between tail i and head j."""
    rows, cols = d.tails, d.heads
    ri = {v: i for i, v in enumerate(rows)}
    ci = {v: j for j, v in enumerate(cols)}
    a = [[0] * len(cols) for _ in rows]
    for t, h in d.edges:
        a[ri[t]][ci[h]] += 1
    return MultiplicityMatrix(rows, cols, a)


def check_adm(m: MultiplicityMatrix, marks: Mapping[str, int]) -> dict:
    """sum_j a_ij n_j = 2 m_i for every row and sum_i a_ij m_i = 2 n_j for every column."""
    bad = []
    for i, r in enumerate(m.rows):
        s = sum(m.a[i][j] * marks[c] for j, c in enumerate(m.cols))
        if s != 2 * marks[r]:
            bad.append({"row": r, "sum": s, "expected": 2 * marks[r]})
    for j, c in enumerate(m.cols):
        s = sum(m.a[i][j] * marks[r] for i, r in enumerate(m.rows))
        if s != 2 * marks[c]:
            bad.append({"col": c, "sum": s, "expected": 2 * marks[c]})
    out = {"check": "adm", "anchor": "sum_j a_ij n_j = 2 m_i, sum_i a_ij m_i = 2 n_j",
           "status": "pass" if not bad else "fail"}
    if bad:
        out["failures"] = bad
    return out


def check_indecomposable(m) -> bool:
    """True iff the bipartite graph of nonzero entries is connected (no block splitting)."""
    a = m.a if isinstance(m, MultiplicityMatrix) else [list(r) for r in m]
    r = len(a)
    s = len(a[0]) if r else 0
    if r + s <= 1:
        return True
    seen = {("r", 0)} if r else {("c", 0)}
    stack = list(seen)
    while stack:
        kind, i = stack.pop()
        nbrs = ([("c", j) for j in range(s) if a[i][j]] if kind == "r"
                else [("r", q) for q in range(r) if a[q][i]])
        for x in nbrs:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == r + s


def check_opposite_transpose(d: AffineDiagram) -> dict:
    m = multiplicity_matrix(d)
    mo = multiplicity_matrix(d.opposite())
    t = m.transpose()
    ok = mo.rows == t.rows and mo.cols == t.cols and mo.a == t.a
    return {"check": "opposite_transpose", "anchor": "A^t is the matrix of multiplicities of the opposite",
            "status": "pass" if ok else "fail"}


def diagram_report(family: str, k: Optional[int] = None) -> dict:
    d = build_affine_diagram(family, k)
    m = multiplicity_matrix(d)
    adm = check_adm(m, d.marks)
    indec = check_indecomposable(m)
    opp = check_opposite_transpose(d)
    adm_op = check_adm(multiplicity_matrix(d.opposite()), d.marks)
    ok = adm["status"] == "pass" and indec and opp["status"] == "pass" and adm_op["status"] == "pass"
    return {"check": "dynkin", "diagram": d.to_json(), "multiplicity_matrix": m.to_json(),
            "adm": adm, "indecomposable": indec, "opposite": opp, "adm_opposite": adm_op,
            "status": "pass" if ok else "fail"}


# ---------------------------------------------------------------------------
# quiver representations from family representations


@dataclass
class QuiverRep:
    node_dims: Dict[str, int]
    arrows: List[Tuple[str, str, FieldMatrix, FieldMatrix]]  # (tail, head, f_a, phi_a)
    determinant: RatFunc

    def to_json(self) -> dict:
        return {"node_dims": dict(self.node_dims),
                "arrows": [{"from": t, "to": h, "f": f.to_json(), "matrix": phi.to_json()}
                           for t, h, f, phi in self.arrows],
                "determinant": self.determinant.to_str()}


def _kron_factor(block: FieldMatrix, m: int, dm: int, n: int, dn: int) -> Optional[Tuple[FieldMatrix, FieldMatrix]]:
    """Write an (n*dn) x (m*dm) block as kron(f, phi), f n x m, phi dn x dm; None if impossible."""
    # reshuffle: row (j, i) = f[j][i], column (b, a) = phi[b][a]
    data = {}
    for r in range(n * dn):
        j, b = divmod(r, dn)
        for c in range(m * dm):
            i, a = divmod(c, dm)
            x = block.entry(r, c)
            if not x.is_zero():
                data[(j * m + i, b * dm + a)] = x
    if not data:
        return None
    M = FieldMatrix.from_sparse(n * m, dn * dm, data)
    if rank(M) != 1:
        raise QuiverExtractionError("block of the identification map is not a Kronecker product")
    (r0, c0) = min(data)
    pivot = data[(r0, c0)]
    f = FieldMatrix.from_sparse(n, m, {divmod(r, m): M.entry(r, c0) for r in range(n * m)
                                       if not M.entry(r, c0).is_zero()})
    phi = FieldMatrix.from_sparse(dn, dm, {divmod(c, dm): M.entry(r0, c) / pivot for c in range(dn * dm)
                                           if not M.entry(r0, c).is_zero()})
    return f, phi


def _block_indices(side, label: str) -> List[int]:
    size = side.size[label]
    return [side.index[(label, i, a)] for i in range(1, size + 1) for a in range(1, size + 1)]


def _vertex(side, label: str) -> str:
    return f"{side.prefix}{label}"


def extract_quiver_rep(rep, *, at: Optional[Mapping[str, object]] = None) -> QuiverRep:
    """Node spaces, arrow maps and the assembled identification map of a family representation.

    The basis adapted to the first algebra is the v frame (checked against the
    generator matrices), the one adapted to the second is the working w basis;
    the identification f is the base change between them.  Every block of f is
    factored as f_a (x) phi_a.  ``at`` specializes parameters before the
    assembled map is inverted.
    """
    d = rep.definition
    A, B = d.side_a, d.side_b
    P, Pinv = rep.P, rep.P_inv
    for name, g in A.generators():
        if Pinv @ rep.generator(name) @ P != A.action(g):
            raise QuiverExtractionError(f"v frame is not adapted to {name}")
    node_dims: Dict[str, int] = {}
    for side in (A, B):
        for blk in side.blocks:
            e = rep.generator(side.name(blk.label, 1, 1))
            node_dims[_vertex(side, blk.label)] = rank(e)
    arrows = []
    assembled: Dict[Tuple[int, int], RatFunc] = {}
    for x in A.blocks:
        cols = _block_indices(A, x.label)
        for y in B.blocks:
            rows = _block_indices(B, y.label)
            block = P.submatrix(rows, cols)
            fac = _kron_factor(block, x.size, node_dims[_vertex(A, x.label)],
                               y.size, node_dims[_vertex(B, y.label)])
            if fac is None:
                continue
            f, phi = fac
            if at:
                phi = phi.substitute(dict(at))
                f = f.substitute(dict(at))
            arrows.append((_vertex(A, x.label), _vertex(B, y.label), f, phi))
            kr = f.kron(phi)
            for r, rr in enumerate(rows):
                for c, cc in enumerate(cols):
                    val = kr.entry(r, c)
                    if not val.is_zero():
                        assembled[(rr, cc)] = val
    n = rep.dim
    F = FieldMatrix.from_sparse(n, n, assembled)
    target = P.substitute(dict(at)) if at else P
    if F != target:
        raise QuiverExtractionError("assembled map differs from the identification map")
    det = determinant(F)
    if det.is_zero():
        sym = determinant(P).to_str()
        raise QuiverExtractionError(f"assembled f is singular: det f = {sym} vanishes at {dict(at or {})}")
    return QuiverRep(node_dims, arrows, det)


def quiver_report(rep, *, at: Optional[Mapping[str, object]] = None) -> dict:
    """Extraction plus the checks that tie it to the diagram: dims = marks, sum rule, edges."""
    fam = rep.family
    diag = build_affine_diagram(fam, rep.spec.k)
    q = extract_quiver_rep(rep, at=at)
    d = rep.definition
    checks = []
    marks_ok = all(q.node_dims[v] == diag.marks[v] for v in diag.vertices)
    checks.append({"check": "node_dims_equal_marks", "status": "pass" if marks_ok else "fail"})
    block_ok = all(diag.marks[_vertex(s, b.label)] == b.size for s in (d.side_a, d.side_b) for b in s.blocks)
    checks.append({"check": "block_sizes_equal_marks", "status": "pass" if block_ok else "fail"})
    tail_sum = sum(b.size * q.node_dims[_vertex(d.side_a, b.label)] for b in d.side_a.blocks)
    head_sum = sum(b.size * q.node_dims[_vertex(d.side_b, b.label)] for b in d.side_b.blocks)
    sum_ok = tail_sum == head_sum == rep.dim
    checks.append({"check": "dimension_sum_rule", "dim": rep.dim, "tails": tail_sum, "heads": head_sum,
                   "status": "pass" if sum_ok else "fail"})
    edges = sorted((t, h) for t, h, _, _ in q.arrows)
    edges_ok = edges == sorted(diag.edges)
    checks.append({"check": "arrows_match_diagram", "status": "pass" if edges_ok else "fail"})
    ok = all(c["status"] == "pass" for c in checks)
    out = {"check": "quiver", "spec": rep.spec.to_json(), "quiver": q.to_json(), "checks": checks,
           "status": "pass" if ok else "fail"}
    if at:
        out["at"] = {k: RatFunc.coerce(v).to_str() for k, v in at.items()}
    return out
