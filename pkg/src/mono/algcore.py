"""Finite-dimensional algebras over the rationals.

An :class:`Algebra` stores structure constants ``mult[i][j]`` (sparse dicts)
giving the coordinates of ``b_i * b_j``.  Path algebras are built from a
:class:`QuiverPresentation`; paths are written in application order, so the
path ``("a", "b")`` means "a first, then b" and equals ``b * a`` in the
algebra.  With this convention the left projective at the source of a
single arrow 1 -> 2 is two-dimensional with top at 1 and socle at 2.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .errors import InputError
from .exactla import (ONE, ZERO, Matrix, RowReducer, kernel_basis, q,
                      vec_to_dict)

DEFAULT_PATH_CAP = 64
PATH_BUDGET = 20000


@dataclass
class QuiverPresentation:
    vertices: List[str]
    arrows: List[Tuple[str, str, str]]  # (name, source, target)
    relations: List[List[Tuple[mpq, Tuple[str, ...]]]] = field(default_factory=list)

    def validate(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow names")
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise InputError(f"arrow {name} has unknown endpoint")
        amap = {a[0]: a for a in self.arrows}
        for rel in self.relations:
            ends = set()
            for coeff, path in rel:
                if len(path) < 2:
                    raise InputError("relation paths must have length >= 2")
                for a in path:
                    if a not in amap:
                        raise InputError(f"unknown arrow {a} in relation")
                for a, b in zip(path, path[1:]):
                    if amap[a][2] != amap[b][1]:
                        raise InputError(f"path {list(path)} is not composable")
                ends.add((amap[path[0]][1], amap[path[-1]][2]))
            if len(ends) > 1:
                raise InputError("relation mixes paths with different endpoints")


class Algebra:
    """Unital associative algebra given by structure constants."""

    def __init__(self, name: str, mult, unit, basis_labels: Sequence[str],
                 provenance: Optional[QuiverPresentation] = None,
                 idempotents: Optional[List[List[mpq]]] = None,
                 check: bool = True):
        self.name = name
        self.dim = len(basis_labels)
        self.mult = [[{k: mpq(v) for k, v in cell.items() if v} for cell in row] for row in mult]
        self.unit = [mpq(x) for x in unit]
        self.basis_labels = list(basis_labels)
        self.provenance = provenance
        self.idempotents = idempotents
        self.paths = None        # basis paths for quiver algebras
        self.tri_info = None     # (base, n, index) for triangular algebras
        self._cache: dict = {}
        if len(self.mult) != self.dim or any(len(r) != self.dim for r in self.mult):
            raise InputError("structure constants have the wrong shape")
        if len(self.unit) != self.dim:
            raise InputError("unit vector has the wrong length")
        if check:
            self.check_axioms()

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim})"

    # arithmetic ----------------------------------------------------------
    def product(self, x: Sequence, y: Sequence) -> List[mpq]:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mult[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return out

    def basis_vector(self, i: int) -> List[mpq]:
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def left_matrix(self, x: Sequence) -> Matrix:
        cols = [self.product(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        cols = [self.product(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def check_axioms(self):
        d = self.dim
        for i in range(d):
            ei = self.basis_vector(i)
            if self.product(self.unit, ei) != ei or self.product(ei, self.unit) != ei:
                raise InputError(f"unit fails on basis element {self.basis_labels[i]}")
        for i in range(d):
            for j in range(d):
                ij = self.mult[i][j]
                for k in range(d):
                    lhs = [ZERO] * d
                    for m, c in ij.items():
                        for t, e in self.mult[m][k].items():
                            lhs[t] += c * e
                    rhs = [ZERO] * d
                    for m, c in self.mult[j][k].items():
                        for t, e in self.mult[i][m].items():
                            rhs[t] += c * e
                    if lhs != rhs:
                        raise InputError("structure constants are not associative "
                                         f"at ({self.basis_labels[i]}, {self.basis_labels[j]}, "
                                         f"{self.basis_labels[k]})")

    # derived data --------------------------------------------------------
    def generators(self) -> List[int]:
        """Indices of basis elements generating the algebra (greedy, cached)."""
        if "gens" in self._cache:
            return self._cache["gens"]
        if self.paths is not None:
            gens = [i for i, p in enumerate(self.paths) if len(p[2]) <= 1]
        else:
            gens = []
            span = RowReducer(self.dim)
            span.add(vec_to_dict(self.unit))
            for i in range(self.dim):
                if span.contains({i: ONE}):
                    continue
                gens.append(i)
                span = self._closure(gens)
        self._cache["gens"] = gens
        return gens

    def _closure(self, gens: List[int]) -> RowReducer:
        span = RowReducer(self.dim)
        span.add(vec_to_dict(self.unit))
        frontier = [list(self.unit)]
        while frontier:
            new = []
            for v in frontier:
                for g in gens:
                    w = self.product(self.basis_vector(g), v)
                    if span.add(vec_to_dict(w)):
                        new.append(w)
            frontier = new
        return span

    def trace_vector(self) -> List[mpq]:
        if "tr" not in self._cache:
            tr = []
            for k in range(self.dim):
                tr.append(sum((self.mult[k][j].get(j, ZERO) for j in range(self.dim)), ZERO))
            self._cache["tr"] = tr
        return self._cache["tr"]

    def opposite(self) -> "Algebra":
        if "op" not in self._cache:
            d = self.dim
            op = Algebra(self.name + "^op",
                         [[self.mult[j][i] for j in range(d)] for i in range(d)],
                         self.unit, self.basis_labels, idempotents=self.idempotents,
                         check=False)
            op._cache["op"] = self
            op._cache["gens"] = self.generators()
            self._cache["op"] = op
        return self._cache["op"]

    def to_json(self) -> dict:
        if self.provenance is not None:
            qp = self.provenance
            return {
                "name": self.name, "kind": "quiver", "vertices": list(qp.vertices),
                "arrows": [{"name": n, "from": s, "to": t} for n, s, t in qp.arrows],
                "relations": [[{"coeff": str(c), "path": list(p)} for c, p in rel]
                              for rel in qp.relations],
            }
        return {
            "name": self.name, "kind": "structure_constants", "dim": self.dim,
            "basis": list(self.basis_labels),
            "mult": [[[str(self.mult[i][j].get(k, ZERO)) for k in range(self.dim)]
                      for j in range(self.dim)] for i in range(self.dim)],
            "unit": [str(x) for x in self.unit],
        }


# ---------------------------------------------------------------------------
# path algebras


def _compose(p, r):
    """Concatenate path p followed by path r (application order)."""
    if p[1] != r[0]:
        return None
    return (p[0], r[1], p[2] + r[2])


def path_algebra(qp: QuiverPresentation, name: str = "A",
                 cap: int = DEFAULT_PATH_CAP) -> Algebra:
    """Quotient of the path algebra by the two-sided ideal of the relations."""
    qp.validate()
    amap = {a[0]: a for a in qp.arrows}
    rels = []
    for rel in qp.relations:
        terms = {}
        for c, path in rel:
            key = (amap[path[0]][1], amap[path[-1]][2], tuple(path))
            terms[key] = terms.get(key, ZERO) + q(c)
        terms = {k: v for k, v in terms.items() if v}
        if terms:
            rels.append(terms)
    maxrel = max((len(p[2]) for r in rels for p in r), default=0)

    layers = [[(v, v, ()) for v in qp.vertices]]

    def grow(upto):
        while len(layers) <= upto:
            nxt = []
            for p in layers[-1]:
                for name_, s, t in qp.arrows:
                    if s == p[1]:
                        nxt.append((p[0], t, p[2] + (name_,)))
            if len(nxt) > PATH_BUDGET:
                where = "-".join(nxt[0][2][:8])
                raise InputError("quotient is not finite-dimensional: path count exceeds "
                                 f"{PATH_BUDGET} at length {len(layers)} "
                                 f"(cycle through {where}...)")
            layers.append(nxt)

    def reduce_upto(L):
        grow(L)
        cols = [p for ln in range(L, -1, -1) for p in layers[ln]]
        index = {p: i for i, p in enumerate(cols)}
        rr = RowReducer(len(cols))
        for rel in rels:
            rl = max(len(p[2]) for p in rel)
            for i in range(0, L - rl + 1):
                for j in range(0, L - rl - i + 1):
                    for pre in layers[i]:
                        for post in layers[j]:
                            row = {}
                            for p, c in rel.items():
                                w = _compose(pre, p)
                                w = _compose(w, post) if w else None
                                if w is not None:
                                    row[index[w]] = row.get(index[w], ZERO) + c
                            if row:
                                rr.add(row)
        return cols, index, rr

    L = 1
    standard_prev = None
    while True:
        if L > cap:
            grow(cap)
            culprit = next((p for p in layers[cap]), None)
            where = "-".join(culprit[2][:8]) if culprit else "?"
            raise InputError(f"quotient is not finite-dimensional within path length cap {cap}; "
                             f"growing cycle through arrows {where}...")
        cols, index, rr = reduce_upto(L)
        if all(index[p] in rr.pivots for p in layers[L]):
            L2 = L + max(maxrel - 1, 0)
            cols2, index2, rr2 = reduce_upto(L2)
            std = [p for p in cols2 if index2[p] not in rr2.pivots]
            std1 = [p for p in cols if index[p] not in rr.pivots]
            if sorted(std) == sorted(std1):
                cols, index, rr = cols2, index2, rr2
                break
            if standard_prev == std:
                cols, index, rr = cols2, index2, rr2
                break
            standard_prev = std
            L = L2 + 1
            continue
        L += 1

    standard = [p for p in cols if index[p] not in rr.pivots]
    standard.sort(key=lambda p: (len(p[2]), _vorder(qp, p), p[2]))
    sidx = {p: i for i, p in enumerate(standard)}
    Lmax = max(len(p[2]) for p in cols)
    memo = {}

    def normal_form(p) -> Dict[int, mpq]:
        if p in memo:
            return memo[p]
        if p in sidx:
            res = {sidx[p]: ONE}
        elif len(p[2]) <= Lmax:
            row = rr.pivots[index[p]]
            res = {}
            for c, v in row.items():
                if c != index[p]:
                    res[sidx[cols[c]]] = res.get(sidx[cols[c]], ZERO) - v
        else:
            head = (p[0], amap[p[2][-2]][2], p[2][:-1])
            last = (head[1], p[1], p[2][-1:])
            res = {}
            for k, c in normal_form(head).items():
                w = _compose(standard[k], last)
                if w is None:
                    continue
                for k2, c2 in normal_form(w).items():
                    res[k2] = res.get(k2, ZERO) + c * c2
        res = {k: v for k, v in res.items() if v}
        memo[p] = res
        return res

    d = len(standard)
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i, pi in enumerate(standard):
        for j, pj in enumerate(standard):
            w = _compose(pj, pi)  # b_i * b_j = "b_j then b_i"
            if w is not None:
                mult[i][j] = normal_form(w)
    unit = [ONE if len(p[2]) == 0 else ZERO for p in standard]
    labels = [f"e{p[0]}" if not p[2] else ".".join(p[2]) for p in standard]
    idem = [[ONE if k == i else ZERO for k in range(d)]
            for i, p in enumerate(standard) if not p[2]]
    alg = Algebra(name, mult, unit, labels, provenance=qp, idempotents=idem, check=False)
    alg.paths = standard
    alg.check_axioms()
    return alg


def _vorder(qp, p):
    return qp.vertices.index(p[0])


def quiver_from_json(obj: dict) -> QuiverPresentation:
    try:
        vertices = [str(v) for v in obj["vertices"]]
        arrows = [(str(a["name"]), str(a["from"]), str(a["to"])) for a in obj.get("arrows", [])]
        relations = []
        for rel in obj.get("relations", []):
            relations.append([(q(t["coeff"]), tuple(str(x) for x in t["path"])) for t in rel])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed quiver algebra: {exc}") from exc
    return QuiverPresentation(vertices, arrows, relations)


def algebra_from_json(obj: dict) -> Algebra:
    if not isinstance(obj, dict):
        raise InputError("algebra JSON must be an object")
    kind = obj.get("kind")
    name = str(obj.get("name", "A"))
    if kind == "quiver":
        return path_algebra(quiver_from_json(obj), name=name)
    if kind == "structure_constants":
        try:
            d = int(obj["dim"])
            raw = obj["mult"]
            mult = [[vec_to_dict([q(x) for x in raw[i][j]]) for j in range(d)] for i in range(d)]
            unit = [q(x) for x in obj["unit"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"malformed structure constants: {exc}") from exc
        labels = obj.get("basis") or [f"b{i}" for i in range(d)]
        return Algebra(name, mult, unit, labels)
    raise InputError(f"unknown algebra kind {kind!r}")


# ---------------------------------------------------------------------------
# constructions


def triangular_algebra(a: Algebra, n: int) -> Algebra:
    """Upper triangular n x n matrices over ``a`` (cached per (a, n))."""
    if n < 1:
        raise InputError("n must be at least 1")
    key = ("tri", n)
    if key in a._cache:
        return a._cache[key]
    d = a.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {}
    labels = []
    for i, j in pairs:
        for k in range(d):
            index[(i, j, k)] = len(labels)
            labels.append(f"E{i + 1}{j + 1}|{a.basis_labels[k]}")
    D = len(labels)
    mult = [[{} for _ in range(D)] for _ in range(D)]
    for (i, j) in pairs:
        for (k, l) in pairs:
            if j != k:
                continue
            for x in range(d):
                for y in range(d):
                    prod = a.mult[x][y]
                    if prod:
                        mult[index[(i, j, x)]][index[(k, l, y)]] = {
                            index[(i, l, z)]: c for z, c in prod.items()}
    unit = [ZERO] * D
    for i in range(n):
        for k, c in enumerate(a.unit):
            if c:
                unit[index[(i, i, k)]] = c
    idem = None
    if a.idempotents is not None:
        idem = []
        for i in range(n):
            for e in a.idempotents:
                v = [ZERO] * D
                for k, c in enumerate(e):
                    if c:
                        v[index[(i, i, k)]] = c
                idem.append(v)
    t = Algebra(f"T{n}({a.name})", mult, unit, labels, idempotents=idem, check=False)
    t.tri_info = (a, n, index)
    base_gens = sorted(set(a.generators()) | {k for k, c in enumerate(a.unit) if c})
    gens = [index[(i, i, k)] for i in range(n) for k in base_gens]
    gens += [index[(i, i + 1, k)] for i in range(n - 1) for k, c in enumerate(a.unit) if c]
    t._cache["gens"] = gens
    a._cache[key] = t
    return t


def opposite(a: Algebra) -> Algebra:
    return a.opposite()


def radical(a: Algebra) -> List[List[mpq]]:
    """Basis of the Jacobson radical as the kernel of the trace form."""
    if "rad" in a._cache:
        return a._cache["rad"]
    tr = a.trace_vector()
    d = a.dim
    gram = [[sum((c * tr[k] for k, c in a.mult[i][j].items()), ZERO) for j in range(d)]
            for i in range(d)]
    basis = kernel_basis(Matrix(d, d, gram))
    a._cache["rad"] = basis
    return basis


def regular_modules(a: Algebra):
    """(left regular module, right regular module as a module over a^op)."""
    from .modrep import Module
    d = a.dim
    left = Module(a, d, [a.left_matrix(a.basis_vector(i)) for i in range(d)], check=False)
    op = a.opposite()
    right = Module(op, d, [a.right_matrix(a.basis_vector(i)) for i in range(d)], check=False)
    return left, right


# ---------------------------------------------------------------------------
# algebra maps


def quiver_map_images(src: Algebra, target: Algebra,
                      vertex_images: Dict[str, Sequence],
                      arrow_images: Dict[str, Sequence]) -> List[List[mpq]]:
    """Images of the path basis of ``src`` given images of its generators."""
    if src.paths is None:
        raise InputError("source algebra has no quiver presentation")
    out = []
    for (s, t, arrows) in src.paths:
        if not arrows:
            out.append([q(x) for x in vertex_images[s]])
            continue
        img = [q(x) for x in arrow_images[arrows[0]]]
        for name in arrows[1:]:
            img = target.product([q(x) for x in arrow_images[name]], img)
        out.append(img)
    return out


def verify_algebra_isomorphism(src: Algebra, target: Algebra,
                               images: Sequence[Sequence]) -> bool:
    """Check that b_i -> images[i] is a unital, multiplicative bijection."""
    if src.dim != target.dim or len(images) != src.dim:
        return False
    m = Matrix.from_columns(images, target.dim)
    from .exactla import rank
    if rank(m) != src.dim:
        return False
    if m.apply(src.unit) != list(target.unit):
        return False
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = [ZERO] * target.dim
            for k, c in src.mult[i][j].items():
                for t, v in enumerate(images[k]):
                    if v:
                        lhs[t] += c * v
            if lhs != target.product(images[i], images[j]):
                return False
    return True


def quotient_by_radical_dim(a: Algebra) -> int:
    return a.dim - len(radical(a))
