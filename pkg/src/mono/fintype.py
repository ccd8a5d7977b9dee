"""Endomorphism algebras, global and relative dimension, bi-generators, and the
brute-force catalog oracle for monomorphism categories."""

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algcore import Algebra
from .errors import EXCEEDS, Decision, Inconclusive, is_finite
from .exactla import ZERO, Matrix, rank, vec_to_dict
from .modrep import (HomSpace, Module, ModuleMap, cokernel, decompose, dsum, fitting_decompose,
                     hom_dim, hom_space, image, indec_injectives, indec_projectives,
                     is_isomorphic, kernel, proj_dim, simples)
from .morcat import MorObject, from_flat, from_maps, m_of, sn_membership, to_flat

GLDIM_CAP = 16


@dataclass
class EndAlgebra:
    """End(M) with b_i * b_j = g_i o g_j; ``gamma`` is the opposite algebra."""

    module: Module
    base: Algebra
    hom_basis_maps: List[Matrix]
    hs: HomSpace
    orientation: str = "End"

    @property
    def algebra(self) -> Algebra:
        return self.base

    @property
    def maps(self) -> List[Matrix]:
        return self.hom_basis_maps

    @property
    def gamma(self) -> Algebra:
        return self.base.opposite()

    def element(self, coeffs) -> Matrix:
        return self.hs.combo(coeffs)


def end_algebra(M: Module) -> EndAlgebra:
    if "endalg" in M._cache:
        return M._cache["endalg"]
    hs = hom_space(M, M)
    mats = hs.mats
    d = len(mats)
    mult = [[vec_to_dict(hs.coords(mats[i] @ mats[j])) for j in range(d)] for i in range(d)]
    unit = hs.coords(Matrix.identity(M.dim)) if d else []
    idem = None
    if M.dim:
        idem = [hs.coords(s.incl @ s.proj) for s in decompose(M)]
    base = Algebra(f"End({M.name or 'M'})", mult, unit, [f"g{i}" for i in range(d)],
                   idempotents=idem, check=False)
    ea = EndAlgebra(M, base, mats, hs)
    M._cache["endalg"] = ea
    return ea


def global_dimension(a: Algebra, cap: int = GLDIM_CAP):
    """Largest projective dimension of a simple module, or EXCEEDS past ``cap``."""
    best = 0
    for s in simples(a):
        d = proj_dim(s, cap)
        if not is_finite(d):
            return EXCEEDS
        best = max(best, d)
    return best


# ---------------------------------------------------------------------------
# add(M)


def _types(M: Module, seed: int = 0) -> List[Module]:
    key = ("types", seed)
    if key not in M._cache:
        M._cache[key] = [m for m, _ in fitting_decompose(M, seed)]
    return M._cache[key]


def add_membership(x: Module, M: Module, seed: int = 0) -> Decision:
    """Every indecomposable summand of x is isomorphic to one of M."""
    if x.dim == 0:
        return Decision(True)
    types = _types(M, seed)
    certs = []
    for k, s in enumerate(decompose(x, seed)):
        for t, u in enumerate(types):
            if u.dim != s.module.dim:
                continue
            d = is_isomorphic(s.module, u, seed)
            if d.holds:
                certs.append((k, t))
                break
        else:
            return Decision(False, witness={"summand": k, "dim": s.module.dim})
    return Decision(True, certificate=certs)


# ---------------------------------------------------------------------------
# relative dimension


@dataclass
class RelDimTrace:
    x: Module
    M: Module
    steps: List[Tuple[ModuleMap, Module]] = field(default_factory=list)
    outcome: object = None


def rel_dim(x: Module, M: Module, cap: int = GLDIM_CAP, seed: int = 0) -> RelDimTrace:
    from .approx import minimal_right_approximation
    tr = RelDimTrace(x, M)
    cur = x
    for d in range(cap + 1):
        if add_membership(cur, M, seed).holds:
            tr.outcome = d
            return tr
        f = minimal_right_approximation(M, cur, seed)
        k, _ = kernel(f)
        tr.steps.append((f, k))
        cur = k
    tr.outcome = EXCEEDS
    return tr


# ---------------------------------------------------------------------------
# Hom(M, -) as a module over Gamma = End(M)^op


def hom_functor_module(M: Module, X: Module) -> Module:
    """Hom(M, X) with gamma . h = h o g_gamma."""
    ea = end_algebra(M)
    G = ea.gamma
    hx = hom_space(M, X)
    acts = []
    for g in ea.maps:
        cols = [hx.coords(h @ g) for h in hx.mats]
        acts.append(Matrix.from_columns(cols, len(hx)) if cols else Matrix.zeros(0, 0))
    return Module(G, len(hx), acts, check=False, name=f"Hom({M.name or 'M'},{X.name or 'X'})")


def hom_functor_map(M: Module, f: ModuleMap, src: Module, tgt: Module) -> ModuleMap:
    hs_src = hom_space(M, f.source)
    hs_tgt = hom_space(M, f.target)
    cols = [hs_tgt.coords(f.matrix @ h) for h in hs_src.mats]
    mat = Matrix.from_columns(cols, len(hs_tgt)) if cols else Matrix.zeros(len(hs_tgt), 0)
    return ModuleMap(src, tgt, mat)


def is_generator(M: Module) -> bool:
    a = M.algebra
    return all(add_membership(P, M).holds for P in indec_projectives(a))


@dataclass
class CokernelShiftInstance:
    X: Module
    T: Module
    M: Module
    u: ModuleMap
    v: ModuleMap
    Y: Module
    pd_hom: object
    pd_Y: object

    @property
    def holds(self) -> bool:
        return is_finite(self.pd_hom) and is_finite(self.pd_Y) and self.pd_Y == 2 + self.pd_hom


def cokernel_shift_instance(M: Module, T: Module, X: Module, cap: int = GLDIM_CAP,
                     seed: int = 0) -> CokernelShiftInstance:
    """Build 0 -> X -> T_0 -> T_1 by left add(T)-approximations and Y = Coker v_*."""
    from .approx import minimal_left_approximation
    u = minimal_left_approximation(T, X, seed)
    if not u.is_injective():
        raise Inconclusive("left add(T)-approximation of X is not injective")
    C, pc = cokernel(u)
    w = minimal_left_approximation(T, C, seed)
    v = ModuleMap(u.target, w.target, w.matrix @ pc.matrix)
    G0 = hom_functor_module(M, u.target)
    G1 = hom_functor_module(M, v.target)
    vs = hom_functor_map(M, v, G0, G1)
    Y, _ = cokernel(vs)
    HX = hom_functor_module(M, X)
    return CokernelShiftInstance(X, T, M, u, v, Y, proj_dim(HX, cap), proj_dim(Y, cap))


# ---------------------------------------------------------------------------
# bi-generators and the finite-type criterion


def _tn_injective_cogen_m(a: Algebra, n: int) -> Module:
    from .fixtures import DA
    return to_flat(m_of(DA(a), n))


def bigenerator_check(M, a: Algebra, n: int) -> Decision:
    flat = to_flat(M) if isinstance(M, MorObject) else M
    mor = from_flat(flat)
    d = sn_membership(mor)
    if not d.holds:
        return Decision(False, witness={"reason": "not in S_n", **(d.witness or {})})
    t = flat.algebra
    for k, P in enumerate(indec_projectives(t)):
        if not add_membership(P, flat).holds:
            return Decision(False, witness={"reason": "missing projective", "index": k,
                                            "dims": from_flat(P).dims})
    mD = _tn_injective_cogen_m(a, n)
    if not add_membership(mD, flat).holds:
        return Decision(False, witness={"reason": "m(D(A_A)) not in add(M)"})
    return Decision(True)


@dataclass
class Thm51Report:
    direction1: Optional[Decision] = None
    gldim: object = None
    direction2: Optional[Decision] = None
    table: List[dict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        ok = True
        if self.direction1 is not None:
            ok = ok and self.direction1.holds
        if self.direction2 is not None:
            ok = ok and self.direction2.holds
        return ok


def thm51_check(a: Algebra, n: int, M=None, sn_catalog=None, ambient=None,
                cap: int = GLDIM_CAP, seed: int = 0) -> Thm51Report:
    from .cotilt import perp_left
    rep = Thm51Report()
    if M is None and sn_catalog is not None:
        M = dsum([to_flat(o) for o in sn_catalog.objects], None)
    if M is None:
        raise ValueError("need M or an S_n catalog")
    flat = to_flat(M) if isinstance(M, MorObject) else M
    bg = bigenerator_check(flat, a, n)
    gd = global_dimension(end_algebra(flat).base, cap)
    rep.gldim = gd
    gd_ok = is_finite(gd) and gd <= 2
    if sn_catalog is not None:
        rep.direction1 = Decision(bg.holds and gd_ok, witness=bg.witness,
                                  detail=f"gl.dim End = {gd}")
    if ambient is not None:
        if not (bg.holds and gd_ok):
            rep.direction2 = Decision(False, detail="precondition unmet", witness=bg.witness)
            return rep
        mD = _tn_injective_cogen_m(a, n)
        bad = None
        for idx, x in enumerate(ambient.objects):
            fx = to_flat(x)
            lhs = add_membership(fx, flat, seed).holds
            rhs = perp_left(fx, mD).holds
            rep.table.append({"index": idx, "name": x.name, "add_M": lhs, "perp_mD": rhs})
            if lhs != rhs and bad is None:
                bad = idx
        rep.direction2 = Decision(bad is None, witness=None if bad is None else {"index": bad})
    return rep


# ---------------------------------------------------------------------------
# brute-force enumeration (oracle)


def _sums_up_to(inds: Sequence[Module], cap: int,
                a: Algebra) -> List[Tuple[Tuple[int, ...], Module]]:
    out = []
    dims = [m.dim for m in inds]

    def rec(start, mult, total):
        out.append(tuple(mult))
        for i in range(start, len(inds)):
            if total + dims[i] <= cap:
                mult.append(i)
                rec(i, mult, total + dims[i])
                mult.pop()

    rec(0, [], 0)
    res = []
    for combo in out:
        m = dsum([inds[i] for i in combo], a)
        res.append((combo, m))
    res.sort(key=lambda t: (t[1].dim, t[0]))
    return res


def _candidate_maps(y: Module, x: Module, rng: random.Random, mono: bool,
                    extra: int) -> List[Matrix]:
    hs = hom_space(y, x)
    if len(hs) == 0:
        cands = [Matrix.zeros(x.dim, y.dim)]
    else:
        cands = []
        if not mono:
            cands.append(Matrix.zeros(x.dim, y.dim))
        if len(hs) <= 6:
            cands.extend(hs.mats)
        for _ in range(extra):
            cands.append(hs.combo([rng.randint(-3, 3) for _ in range(len(hs))]))
    seen, out = set(), []
    for m in cands:
        if mono and rank(m) != y.dim:
            continue
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def enumerate_module_indecomposables(a: Algebra, dim_cap: int = 6, seed: int = 0,
                                     rounds: int = 4) -> List[Module]:
    """Indecomposables reachable from projectives, injectives and simples by kernels,
    images and cokernels of maps among themselves (a heuristic closure)."""
    if "modinds" in a._cache:
        return a._cache["modinds"]
    rng = random.Random(seed)
    found: List[Module] = []

    def add(m):
        for s in decompose(m, seed):
            u = s.module
            if u.dim > dim_cap:
                continue
            if not any(v.dim == u.dim and is_isomorphic(v, u, seed).holds for v in found):
                found.append(u)

    for m in list(indec_projectives(a)) + list(indec_injectives(a)) + list(simples(a)):
        add(m)
    for _ in range(rounds):
        before = len(found)
        cur = list(found)
        for x, y in itertools.product(cur, cur):
            for f in _candidate_maps(x, y, rng, False, 1):
                g = ModuleMap(x, y, f)
                for part in (kernel(g)[0], cokernel(g)[0], image(g)[0]):
                    if part.dim:
                        add(part)
        if len(found) == before:
            break
    found.sort(key=lambda m: m.dim)
    a._cache["modinds"] = found
    return found


def enumerate_sn_indecomposables(a: Algebra, n: int, dim_cap: int = 4, seed: int = 0,
                                 mono: bool = True, base: Optional[List[Module]] = None,
                                 budget: int = 200000, extra: int = 2):
    """Oracle catalog of indecomposable chains with branch dims <= ``dim_cap``.

    ``mono`` restricts to S_n; otherwise all of Mor_n is explored.
    """
    from .cotilt import Catalog
    from .fixtures import base_indecomposables
    inds = base if base is not None else base_indecomposables(a)
    rng = random.Random(seed)
    sums = _sums_up_to(inds, dim_cap, a)
    found: List[MorObject] = []
    layer_new: Dict[int, int] = {d: 0 for d in range(dim_cap + 1)}
    tried = 0
    partial = False
    seen_objects = set()

    def register(obj: MorObject, layer: int):
        fl = to_flat(obj)
        for s in decompose(fl, seed):
            sm = from_flat(s.module)
            if sum(sm.dims) == 0:
                continue
            if any(f.dims == sm.dims and is_isomorphic(to_flat(f), s.module, seed).holds
                   for f in found):
                continue
            found.append(sm)
            layer_new[layer] += 1

    def chains(level: int, top: Module):
        # yields lists [(module, map into previous)] for branches level+1..n
        if level == n:
            yield []
            return
        for _, y in sums:
            if mono and y.dim > top.dim:
                break
            for f in _candidate_maps(y, top, rng, mono, extra):
                for rest in chains(level + 1, y):
                    yield [(y, f)] + rest

    for combo, x1 in sums:
        for tail in chains(1, x1):
            tried += 1
            if tried > budget:
                partial = True
                break
            br = [x1] + [y for y, _ in tail]
            key = (tuple(b.dim for b in br), tuple(f for _, f in tail), combo)
            if key in seen_objects:
                continue
            seen_objects.add(key)
            obj = from_maps(a, br, [f for _, f in tail], check=False)
            register(obj, x1.dim)
        if partial:
            break
    for i, o in enumerate(found):
        o.name = o.name or f"{'S' if mono else 'M'}{n}#{i}:{o.dims}"
    stabilized = (not partial) and layer_new.get(dim_cap, 0) == 0
    cat = Catalog(a, n, found, stabilized, "oracle",
                  evidence={"dim_cap": dim_cap, "new_per_layer": layer_new,
                            "tried": tried, "partial": partial, "stabilized": stabilized})
    return cat


# ---------------------------------------------------------------------------
# End(m(D(A_A))) and T_n(A)^op


def end_m_cogenerator_isomorphism(a: Algebra, n: int) -> Decision:
    """Verify that e_ji (x) c  ->  (L_c^T on branches k <= j, block i <- j) is an
    algebra isomorphism from T_n(A)^op onto End(m(D(A_A))) under composition."""
    from .algcore import triangular_algebra
    from .fixtures import DA
    t = triangular_algebra(a, n)
    _, _, index = t.tri_info
    F = to_flat(m_of(DA(a), n))
    d = a.dim
    boff, off = 0, {}
    for k in range(1, n + 1):
        for i in range(k, n + 1):
            off[(k, i)] = boff + (i - k) * d
        boff += (n - k + 1) * d
    Lt = [a.left_matrix(a.basis_vector(c)).T for c in range(d)]
    images = [None] * t.dim
    for (j0, i0, c), idx in index.items():
        j, i = j0 + 1, i0 + 1
        rows = [[ZERO] * F.dim for _ in range(F.dim)]
        for k in range(1, j + 1):
            ro, co = off[(k, i)], off[(k, j)]
            blk = Lt[c]
            for r in range(d):
                for s in range(d):
                    if blk.data[r][s]:
                        rows[ro + r][co + s] = blk.data[r][s]
        images[idx] = Matrix(F.dim, F.dim, rows)

    def phi(v):
        out = Matrix.zeros(F.dim, F.dim)
        for k, c in enumerate(v):
            if c:
                out = out + images[k].scale(c)
        return out

    for k, m in enumerate(images):
        if not ModuleMap(F, F, m).is_valid():
            return Decision(False, witness={"reason": "image is not a module map", "basis": k})
    if not phi(t.unit).is_identity():
        return Decision(False, witness={"reason": "unit not preserved"})
    for x in range(t.dim):
        for y in range(t.dim):
            lhs = images[x] @ images[y]
            rhs = phi(t.product(t.basis_vector(y), t.basis_vector(x)))
            if lhs != rhs:
                return Decision(False, witness={"reason": "not multiplicative",
                                                "pair": [t.basis_labels[x], t.basis_labels[y]]})
    r = rank(Matrix.from_columns([m.flat() for m in images], F.dim * F.dim))
    end_dim = hom_dim(F, F)
    ok = r == t.dim == end_dim
    return Decision(ok, certificate={"dim_T": t.dim, "dim_End": end_dim, "rank": r},
                    witness=None if ok else {"reason": "not bijective", "rank": r,
                                             "dim_End": end_dim})
