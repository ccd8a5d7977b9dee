"""Left modules over an :class:`~mono.algcore.Algebra` and their homological algebra.

A module is a vector space with one action matrix per algebra basis
element.  Hom spaces are intertwiner spaces, found as the null space of the
commutation constraints for a generating set of the algebra.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .algcore import Algebra, radical
from .errors import EXCEEDS, Decision, Inconclusive, InputError
from .exactla import (ONE, ZERO, Matrix, RowReducer, column_space, hstack,
                      inverse, kernel_basis, left_inverse, rank,
                      right_inverse, vec_to_dict)

DEFAULT_RES_CAP = 32
FITTING_RANDOM = 16


class Module:
    """Finite-dimensional left module given by action matrices."""

    def __init__(self, algebra: Algebra, dim: int, action: Sequence[Matrix],
                 check: bool = True, name: Optional[str] = None):
        self.algebra = algebra
        self.dim = dim
        self.action = list(action)
        self.name = name
        self._cache: dict = {}
        if len(self.action) != algebra.dim:
            raise InputError(f"module needs {algebra.dim} action matrices, got {len(self.action)}")
        for m in self.action:
            if m.shape != (dim, dim):
                raise InputError(f"action matrix has shape {m.shape}, expected {(dim, dim)}")
        if check:
            self.check()

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"Module{label}(dim={self.dim} over {self.algebra.name})"

    @classmethod
    def zero(cls, algebra: Algebra) -> "Module":
        z = Matrix.zeros(0, 0)
        return cls(algebra, 0, [z] * algebra.dim, check=False)

    def act(self, element: Sequence) -> Matrix:
        """Matrix of an algebra element given by coordinates."""
        out = Matrix.zeros(self.dim, self.dim)
        for k, c in enumerate(element):
            if c:
                out = out + self.action[k].scale(c)
        return out

    def gen_actions(self) -> List[Matrix]:
        if "gens" not in self._cache:
            self._cache["gens"] = [self.action[g] for g in _gen_order(self.algebra)]
        return self._cache["gens"]

    def check(self):
        a = self.algebra
        if not self.act(a.unit).is_identity() and self.dim:
            raise InputError("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i] @ self.action[j]
                rhs = self.act([a.mult[i][j].get(k, ZERO) for k in range(a.dim)])
                if lhs != rhs:
                    raise InputError(f"action violates the product "
                                     f"{a.basis_labels[i]}*{a.basis_labels[j]}")

    def is_stable(self, cols: Matrix) -> bool:
        """Whether the column span of ``cols`` is a submodule."""
        rr = RowReducer(self.dim)
        for c in cols.columns():
            rr.add(vec_to_dict(c))
        for g in self.gen_actions():
            for c in (g @ cols).columns():
                if not rr.contains(vec_to_dict(c)):
                    return False
        return True

    def to_json(self) -> dict:
        return {"algebra": self.algebra.name, "dim": self.dim,
                "action": {lab: m.to_json()
                           for lab, m in zip(self.algebra.basis_labels, self.action)}}


def _gen_order(a: Algebra) -> List[int]:
    """Generators with idempotent basis elements first; shared by all modules."""
    if "gen_order" not in a._cache:
        gens = a.generators()
        idem = [g for g in gens if a.mult[g][g] == {g: ONE}]
        a._cache["gen_order"] = idem + [g for g in gens if g not in idem]
    return a._cache["gen_order"]


class ModuleMap:
    """Intertwiner; ``matrix`` has shape (target.dim, source.dim)."""

    __slots__ = ("source", "target", "matrix", "meta")

    def __init__(self, source: Module, target: Module, matrix: Matrix, check: bool = False):
        if matrix.shape != (target.dim, source.dim):
            raise InputError(f"map matrix has shape {matrix.shape}, expected "
                             f"{(target.dim, source.dim)}")
        if source.algebra is not target.algebra:
            raise InputError("map between modules over different algebras")
        self.source, self.target, self.matrix = source, target, matrix
        self.meta = {}
        if check:
            self.check()

    def check(self):
        for a, b in zip(self.source.action, self.target.action):
            if self.matrix @ a != b @ self.matrix:
                raise InputError("matrix does not intertwine the module actions")

    def is_valid(self) -> bool:
        try:
            self.check()
            return True
        except InputError:
            return False

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        if other.target is not self.source and other.target.dim != self.source.dim:
            raise InputError("maps are not composable")
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other):
        return ModuleMap(self.source, self.target, self.matrix + other.matrix)

    def scale(self, c):
        return ModuleMap(self.source, self.target, self.matrix.scale(c))

    def is_injective(self) -> bool:
        return rank(self.matrix) == self.source.dim

    def is_surjective(self) -> bool:
        return rank(self.matrix) == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def __repr__(self):
        return f"ModuleMap({self.source.dim}->{self.target.dim})"


def identity_map(x: Module) -> ModuleMap:
    return ModuleMap(x, x, Matrix.identity(x.dim))


def zero_map(x: Module, y: Module) -> ModuleMap:
    return ModuleMap(x, y, Matrix.zeros(y.dim, x.dim))


# ---------------------------------------------------------------------------
# Hom


class HomSpace:
    """Basis of Hom(x, y) with cheap coordinates via the free unknowns."""

    def __init__(self, x: Module, y: Module, basis: List[Matrix], free: List[int]):
        self.x, self.y, self.mats, self.free = x, y, basis, free

    def __len__(self):
        return len(self.mats)

    @property
    def maps(self) -> List[ModuleMap]:
        return [ModuleMap(self.x, self.y, m) for m in self.mats]

    def coords(self, m: Matrix) -> List[mpq]:
        flat = m.flat()
        return [flat[f] for f in self.free]

    def combo(self, coeffs: Sequence) -> Matrix:
        out = Matrix.zeros(self.y.dim, self.x.dim)
        for c, m in zip(coeffs, self.mats):
            if c:
                out = out + m.scale(c)
        return out


def hom_space(x: Module, y: Module) -> HomSpace:
    if x.algebra is not y.algebra:
        raise InputError("hom between modules over different algebras")
    cache = x._cache.setdefault("hom", {})
    hit = cache.get(id(y))
    if hit is not None and hit[0] is y:
        return hit[1]
    dx, dy = x.dim, y.dim
    n = dx * dy
    rr = RowReducer(n)
    if n:
        for gx, gy in zip(x.gen_actions(), y.gen_actions()):
            xcols = [[(k, v) for k, v in enumerate(col) if v] for col in gx.columns()]
            yrows = [[(k, v) for k, v in enumerate(r) if v] for r in gy.data]
            for r in range(dy):
                yr = yrows[r]
                base = r * dx
                for c in range(dx):
                    row = {}
                    for k, v in yr:
                        idx = k * dx + c
                        row[idx] = row.get(idx, ZERO) + v
                    for k, v in xcols[c]:
                        idx = base + k
                        row[idx] = row.get(idx, ZERO) - v
                    row = {k: v for k, v in row.items() if v}
                    if row:
                        rr.add(row)
                if rr.rank == n:
                    break
            if rr.rank == n:
                break
    vecs = rr.kernel_basis()
    free = [f for f in range(n) if f not in rr.pivots]
    mats = [Matrix._raw(dy, dx, tuple(tuple(v[r * dx:(r + 1) * dx]) for r in range(dy)))
            for v in vecs]
    hs = HomSpace(x, y, mats, free)
    cache[id(y)] = (y, hs)
    return hs


def hom_basis(x: Module, y: Module) -> List[ModuleMap]:
    return hom_space(x, y).maps


def hom_dim(x: Module, y: Module) -> int:
    if x.dim == 0 or y.dim == 0:
        return 0
    return len(hom_space(x, y))


# ---------------------------------------------------------------------------
# sub/quotient/kernel/cokernel


def submodule(x: Module, cols: Matrix) -> Tuple[Module, ModuleMap]:
    """Induced module on the span of independent columns ``cols``."""
    k = cols.cols
    if k == 0:
        z = Module.zero(x.algebra)
        return z, ModuleMap(z, x, Matrix.zeros(x.dim, 0))
    L = left_inverse(cols)
    acts = [L @ a @ cols for a in x.action]
    sub = Module(x.algebra, k, acts, check=False)
    return sub, ModuleMap(sub, x, cols)


def quotient(x: Module, cols: Matrix) -> Tuple[Module, ModuleMap]:
    """Quotient of x by the span of ``cols`` with the canonical projection."""
    if cols.cols:
        ann = kernel_basis(cols.T)
    else:
        ann = [[ONE if i == j else ZERO for i in range(x.dim)] for j in range(x.dim)]
    c = len(ann)
    if c == 0:
        z = Module.zero(x.algebra)
        return z, ModuleMap(x, z, Matrix.zeros(0, x.dim))
    P = Matrix.from_rows(ann, x.dim)
    R = right_inverse(P)
    acts = [P @ a @ R for a in x.action]
    quo = Module(x.algebra, c, acts, check=False)
    return quo, ModuleMap(x, quo, P)


@dataclass
class KerCoker:
    ker: Module
    incl: ModuleMap
    coker: Module
    proj: ModuleMap


def kernel(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    kb = kernel_basis(f.matrix)
    return submodule(f.source, Matrix.from_columns(kb, f.source.dim) if kb
                     else Matrix.zeros(f.source.dim, 0))


def cokernel(f: ModuleMap) -> Tuple[Module, ModuleMap]:
    return quotient(f.target, column_space(f.matrix))


def image(f: ModuleMap) -> Tuple[Module, ModuleMap, ModuleMap]:
    """(image, inclusion into target, corestriction from source)."""
    cols = column_space(f.matrix)
    im, inc = submodule(f.target, cols)
    co = left_inverse(cols) @ f.matrix if cols.cols else Matrix.zeros(0, f.source.dim)
    return im, inc, ModuleMap(f.source, im, co)


def kernel_cokernel(f: ModuleMap) -> KerCoker:
    k, i = kernel(f)
    c, p = cokernel(f)
    return KerCoker(k, i, c, p)


def direct_sum(xs: Sequence[Module], algebra: Optional[Algebra] = None):
    """(sum, injections, projections) with block-diagonal actions."""
    if not xs:
        if algebra is None:
            raise InputError("empty direct sum needs an algebra")
        return Module.zero(algebra), [], []
    a = xs[0].algebra
    if any(x.algebra is not a for x in xs):
        raise InputError("direct sum over different algebras")
    acts = [Matrix.diag_blocks([x.action[k] for x in xs]) for k in range(a.dim)]
    total = sum(x.dim for x in xs)
    s = Module(a, total, acts, check=False)
    incs, projs = [], []
    off = 0
    for x in xs:
        inc = [[ONE if (i == off + j) else ZERO for j in range(x.dim)] for i in range(total)]
        I = Matrix(total, x.dim, inc)
        incs.append(ModuleMap(x, s, I))
        projs.append(ModuleMap(s, x, I.T))
        off += x.dim
    return s, incs, projs


def dsum(xs: Sequence[Module], algebra: Optional[Algebra] = None) -> Module:
    return direct_sum(xs, algebra)[0]


def map_direct_sum(fs: Sequence[ModuleMap], src: Module, tgt: Module) -> ModuleMap:
    return ModuleMap(src, tgt, Matrix.diag_blocks([f.matrix for f in fs]))


def dual(x: Module) -> Module:
    """Vector-space dual, a module over the opposite algebra."""
    d = x._cache.get("dual")
    if d is None:
        d = Module(x.algebra.opposite(), x.dim, [a.T for a in x.action], check=False)
        d._cache["dual"] = x
        x._cache["dual"] = d
    return d


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual(f.target), dual(f.source), f.matrix.T)


def radical_subspace(x: Module) -> Matrix:
    rad = radical(x.algebra)
    if not rad or x.dim == 0:
        return Matrix.zeros(x.dim, 0)
    return column_space(hstack([x.act(r) for r in rad]))


def top(x: Module) -> Tuple[Module, ModuleMap]:
    return quotient(x, radical_subspace(x))


# ---------------------------------------------------------------------------
# projectives, simples, covers


def indec_projectives(a: Algebra) -> List[Module]:
    """Representatives of the indecomposable projectives (cached)."""
    if "indproj" in a._cache:
        return a._cache["indproj"]
    from .algcore import regular_modules
    reg, _ = regular_modules(a)
    out = []
    if a.idempotents is not None:
        for e in a.idempotents:
            cols = column_space(a.right_matrix(e))
            p, _ = submodule(reg, cols)
            if not any(is_isomorphic(p, o).holds for o in out):
                out.append(p)
    else:
        for m, _mult in fitting_decompose(reg, 0):
            out.append(m)
    for i, p in enumerate(out):
        p.name = p.name or f"P{i + 1}"
    a._cache["indproj"] = out
    return out


def simples(a: Algebra) -> List[Module]:
    if "simples" not in a._cache:
        out = []
        for i, p in enumerate(indec_projectives(a)):
            s, _ = top(p)
            s.name = f"S{i + 1}"
            out.append(s)
        a._cache["simples"] = out
    return a._cache["simples"]


def indec_injectives(a: Algebra) -> List[Module]:
    if "indinj" not in a._cache:
        out = [dual(p) for p in indec_projectives(a.opposite())]
        a._cache["indinj"] = out
    return a._cache["indinj"]


def projective_cover(x: Module) -> ModuleMap:
    """Minimal projective cover; the map carries ``meta['summands']``."""
    if "cover" in x._cache:
        return x._cache["cover"]
    a = x.algebra
    projs = indec_projectives(a)
    W = RowReducer(x.dim)
    for c in radical_subspace(x).columns():
        W.add(vec_to_dict(c))
    chosen: List[Tuple[int, Matrix]] = []
    for pi, p in enumerate(projs):
        if W.rank == x.dim:
            break
        for m in hom_space(p, x).mats:
            if W.rank == x.dim:
                break
            grew = False
            for c in m.columns():
                if W.add(vec_to_dict(c)):
                    grew = True
            if grew:
                chosen.append((pi, m))
    if W.rank != x.dim:
        raise AssertionError("projective list does not cover the module")
    src, _, _ = direct_sum([projs[pi] for pi, _ in chosen], a)
    mat = hstack([m for _, m in chosen], rows=x.dim) if chosen else Matrix.zeros(x.dim, 0)
    f = ModuleMap(src, x, mat)
    f.meta["summands"] = [pi for pi, _ in chosen]
    x._cache["cover"] = f
    return f


def verify_cover_minimal(f: ModuleMap) -> bool:
    """Kernel of a surjection lies in the radical of its source."""
    k, inc = kernel(f)
    rad = RowReducer(f.source.dim)
    for c in radical_subspace(f.source).columns():
        rad.add(vec_to_dict(c))
    return f.is_surjective() and all(rad.contains(vec_to_dict(c)) for c in inc.matrix.columns())


def injective_envelope(x: Module) -> ModuleMap:
    if "envelope" not in x._cache:
        c = projective_cover(dual(x))
        e = dual_map(c)
        e.meta["summands"] = c.meta["summands"]
        x._cache["envelope"] = e
    return x._cache["envelope"]


def syzygy(x: Module) -> Tuple[ModuleMap, Module, ModuleMap]:
    """(cover P -> x, kernel module, inclusion of kernel into P)."""
    if "syz" not in x._cache:
        f = projective_cover(x)
        k, inc = kernel(f)
        x._cache["syz"] = (f, k, inc)
    return x._cache["syz"]


def cosyzygy(x: Module) -> Tuple[ModuleMap, Module, ModuleMap]:
    """(envelope x -> I, cokernel module, projection I -> cokernel)."""
    if "cosyz" not in x._cache:
        e = injective_envelope(x)
        c, p = cokernel(e)
        x._cache["cosyz"] = (e, c, p)
    return x._cache["cosyz"]


def omega(x: Module, k: int) -> Module:
    for _ in range(k):
        if x.dim == 0:
            return x
        x = syzygy(x)[1]
    return x


def ext_dim(x: Module, y: Module, j: int, cap: int = DEFAULT_RES_CAP) -> int:
    """dim Ext^j(x, y) from the minimal projective resolution of x."""
    if j < 0:
        raise InputError("Ext degree must be non-negative")
    if x.algebra is not y.algebra:
        raise InputError("Ext between modules over different algebras")
    if j == 0:
        return hom_dim(x, y)
    if y.dim == 0:
        return 0
    if j - 1 > cap:
        pd = proj_dim(x, cap)
        if pd is EXCEEDS:
            raise Inconclusive(f"Ext^{j} needs a resolution longer than the cap {cap}")
        return 0
    k = omega(x, j - 1)
    if k.dim == 0:
        return 0
    f, om, _ = syzygy(k)
    return hom_dim(om, y) - hom_dim(f.source, y) + hom_dim(k, y)


def proj_dim(x: Module, cap: int = DEFAULT_RES_CAP):
    """Length of the minimal projective resolution or EXCEEDS."""
    k = x
    for step in range(cap + 2):
        if k.dim == 0:
            return max(step - 1, 0)
        k = syzygy(k)[1]
    return EXCEEDS


def inj_dim(x: Module, cap: int = DEFAULT_RES_CAP):
    return proj_dim(dual(x), cap)


def is_projective(x: Module) -> bool:
    return x.dim == 0 or projective_cover(x).source.dim == x.dim


def is_injective(x: Module) -> bool:
    return is_projective(dual(x))


# ---------------------------------------------------------------------------
# decomposition and isomorphism


@dataclass
class Summand:
    module: Module
    incl: Matrix  # x.dim x module.dim
    proj: Matrix  # module.dim x x.dim


def _stable_power(phi: Matrix) -> Matrix:
    cur = phi
    r = rank(cur)
    while True:
        nxt = cur @ cur
        rn = rank(nxt)
        if rn == r:
            return nxt
        cur, r = nxt, rn


def _end_is_local_fast(x: Module, hs: HomSpace) -> Optional[bool]:
    """True when End(x)/rad is one-dimensional (certainly local)."""
    d = len(hs)
    if d == 1:
        return True
    if d > 14:
        return None
    mats = hs.mats
    mult = [[vec_to_dict(hs.coords(mats[i] @ mats[j])) for j in range(d)] for i in range(d)]
    unit = hs.coords(Matrix.identity(x.dim))
    e = Algebra("End", mult, unit, [f"g{i}" for i in range(d)], check=False)
    return d - len(radical(e)) == 1


def _find_split(x: Module, seed: int) -> Optional[Matrix]:
    hs = hom_space(x, x)
    if _end_is_local_fast(x, hs):
        return None
    mats = hs.mats

    def try_phi(phi):
        r = rank(phi)
        if r == 0 or r == x.dim:
            return None
        psi = _stable_power(phi)
        rp = rank(psi)
        if 0 < rp < x.dim:
            return psi
        return None

    for m in mats:
        got = try_phi(m)
        if got is not None:
            return got
    for i in range(len(mats)):
        for j in range(len(mats)):
            got = try_phi(mats[i] @ mats[j])
            if got is not None:
                return got
    rng = random.Random(seed * 7919 + x.dim)
    for _ in range(FITTING_RANDOM):
        phi = hs.combo([rng.randint(-4, 4) for _ in mats])
        got = try_phi(phi)
        if got is not None:
            return got
    return None


def decompose(x: Module, seed: int = 0) -> List[Summand]:
    """Split x into indecomposable summands with explicit embeddings."""
    key = ("decomp", seed)
    if key in x._cache:
        return x._cache[key]
    if x.dim == 0:
        return []
    psi = _find_split(x, seed)
    if psi is None:
        out = [Summand(x, Matrix.identity(x.dim), Matrix.identity(x.dim))]
    else:
        kb = kernel_basis(psi)
        K = Matrix.from_columns(kb, x.dim)
        I = column_space(psi)
        B = hstack([K, I])
        Binv = inverse(B)
        pk = Binv.submatrix(range(K.cols), range(x.dim))
        pi = Binv.submatrix(range(K.cols, x.dim), range(x.dim))
        out = []
        for cols, proj in ((K, pk), (I, pi)):
            sub, _ = submodule(x, cols)
            for s in decompose(sub, seed):
                out.append(Summand(s.module, cols @ s.incl, s.proj @ proj))
    out.sort(key=lambda s: s.module.dim)
    x._cache[key] = out
    return out


def fitting_decompose(x: Module, seed: int = 0) -> List[Tuple[Module, int]]:
    """Indecomposable summands grouped up to isomorphism, with multiplicities."""
    groups: List[List] = []
    for s in decompose(x, seed):
        for g in groups:
            if g[0].dim == s.module.dim and is_isomorphic(g[0], s.module, seed).holds:
                g[1] += 1
                break
        else:
            groups.append([s.module, 1])
    return [(m, k) for m, k in groups]


def is_indecomposable(x: Module, seed: int = 0) -> bool:
    return x.dim > 0 and len(decompose(x, seed)) == 1


def is_isomorphic(x: Module, y: Module, seed: int = 0) -> Decision:
    """Decide x ~= y; positive answers carry a verified invertible intertwiner."""
    if x.algebra is not y.algebra:
        return Decision(False, detail="different algebras")
    if x.dim != y.dim:
        return Decision(False, detail="dimension differs")
    if x.dim == 0:
        return Decision(True, certificate=ModuleMap(x, y, Matrix.zeros(0, 0)))
    hxy = hom_space(x, y)
    if len(hxy) == 0:
        return Decision(False, detail="Hom(x, y) = 0")
    if hom_dim(y, x) != len(hxy) or hom_dim(x, x) != hom_dim(y, y) or hom_dim(x, x) != len(hxy):
        return Decision(False, detail="hom-dimension obstruction")
    cands = list(hxy.mats)
    rng = random.Random(seed * 104729 + x.dim)
    for t in range(FITTING_RANDOM):
        lim = 3 if t < FITTING_RANDOM // 2 else 50
        cands.append(hxy.combo([rng.randint(-lim, lim) for _ in hxy.mats]))
    for m in cands:
        if rank(m) == x.dim:
            f = ModuleMap(x, y, m)
            f.check()
            return Decision(True, certificate=f)
    return Decision(False, detail="no certificate found", extra={"warning": True})


# ---------------------------------------------------------------------------
# JSON


def module_from_json(obj: dict, algebra: Algebra) -> Module:
    if not isinstance(obj, dict):
        raise InputError("module JSON must be an object")
    if "spaces" in obj:
        return quiver_module(algebra, obj["spaces"], obj.get("maps", {}))
    try:
        d = int(obj["dim"])
        act = obj["action"]
        mats = []
        for lab in algebra.basis_labels:
            if lab not in act:
                raise InputError(f"missing action for basis element {lab}")
            mats.append(Matrix.from_json(act[lab], d, d) if d else Matrix.zeros(0, 0))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed module: {exc}") from exc
    return Module(algebra, d, mats, check=True)


def quiver_module(algebra: Algebra, spaces: Dict[str, int], maps: Dict[str, object],
                  check: bool = True) -> Module:
    """Expand a representation (vertex spaces, arrow matrices) into a module."""
    qp = algebra.provenance
    if qp is None or algebra.paths is None:
        raise InputError("compact module form needs a quiver algebra")
    dims = {v: int(spaces.get(v, 0)) for v in qp.vertices}
    off = {}
    t = 0
    for v in qp.vertices:
        off[v] = t
        t += dims[v]
    amats = {}
    for name, s, tg in qp.arrows:
        raw = maps.get(name)
        if raw is None:
            amats[name] = Matrix.zeros(dims[tg], dims[s])
        elif isinstance(raw, Matrix):
            amats[name] = raw
        else:
            amats[name] = Matrix.from_json(raw, dims[tg], dims[s]) if dims[tg] else \
                Matrix.zeros(0, dims[s])
        if amats[name].shape != (dims[tg], dims[s]):
            raise InputError(f"arrow {name} matrix has the wrong shape")
    acts = []
    for (s, tg, arrows) in algebra.paths:
        if not arrows:
            m = Matrix.identity(dims[s])
        else:
            m = amats[arrows[0]]
            for nm in arrows[1:]:
                m = amats[nm] @ m
        full = [[ZERO] * t for _ in range(t)]
        for i in range(m.rows):
            for j in range(m.cols):
                if m.data[i][j]:
                    full[off[tg] + i][off[s] + j] = m.data[i][j]
        acts.append(Matrix(t, t, full))
    return Module(algebra, t, acts, check=check)
