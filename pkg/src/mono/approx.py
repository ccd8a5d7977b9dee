"""Right minimal approximation of a chain by the monomorphism category.

For each connecting map phi_i the kernel is embedded into its injective
envelope IKer phi_i, the embedding is extended to all of X_{i+1}, and the
extended maps are stacked under phi_i so every connecting map becomes
injective.  The counit projects back onto the original branches.
"""

import random
from dataclasses import dataclass
from typing import List, Sequence, Union

from .errors import Decision
from .exactla import Matrix, kernel_basis, rank, solve
from .modrep import (Module, ModuleMap, dsum, hom_space, injective_envelope,
                     kernel)
from .morcat import (MorMap, MorObject, from_maps, mor_dual, to_flat,
                     zero_object)


@dataclass
class IKerData:
    index: int             # i, 1-based
    ker: Module
    ker_incl: ModuleMap    # Ker phi_i -> X_{i+1}
    envelope: ModuleMap    # e_i': Ker phi_i -> IKer phi_i
    extension: ModuleMap   # e_i: X_{i+1} -> IKer phi_i


@dataclass
class RMonResult:
    input: MorObject
    ikers: List[IKerData]
    output: MorObject
    counit: MorMap
    kernel: MorObject
    kernel_incl: MorMap


def _extend(k_incl: ModuleMap, env: ModuleMap, choice: int) -> Matrix:
    """Some e with e . k_incl = env, varied by ``choice`` over the solution set."""
    X = k_incl.target
    I = env.target
    if I.dim == 0:
        return Matrix.zeros(0, X.dim)
    hs = hom_space(X, I)
    cols = [(m @ k_incl.matrix).flat() for m in hs.mats]
    target = env.matrix.flat()
    if not cols:
        raise AssertionError("no maps into the injective envelope")
    A = Matrix.from_columns(cols, len(target))
    c = solve(A, target)
    if c is None:
        raise AssertionError("extension system unsolvable; the envelope is not injective")
    if choice:
        rng = random.Random(choice)
        for z in kernel_basis(A):
            t = rng.randint(1, 5)
            c = [a + t * b for a, b in zip(c, z)]
    return hs.combo(c)


def rmon(x: MorObject, choice: int = 0) -> RMonResult:
    n, a = x.n, x.algebra
    ik: List[IKerData] = []
    for i in range(1, n):
        f = x.phi[i - 1]
        K, inc = kernel(f)
        env = injective_envelope(K)
        e = _extend(inc, env, choice)
        ik.append(IKerData(i, K, inc, env, ModuleMap(x.branches[i], env.target, e)))
    I = [d.envelope.target for d in ik]  # I[i-1] = IKer phi_i
    X = x.branches

    def comps(i):  # summands of rMon(X)_i (1-based)
        return [X[i - 1]] + (I[i - 1:] if i <= n - 1 else [])

    R = [dsum(comps(i), a) for i in range(1, n + 1)]
    thetas = []
    for i in range(1, n):
        rows = comps(i)
        cols = comps(i + 1)
        grid = [[None] * len(cols) for _ in rows]
        grid[0][0] = x.phi[i - 1].matrix
        grid[1][0] = ik[i - 1].extension.matrix
        for t in range(2, len(rows)):
            grid[t][t - 1] = Matrix.identity(rows[t].dim)
        thetas.append(Matrix.block(grid, [m.dim for m in rows], [m.dim for m in cols]))
    out = from_maps(a, R, thetas, check=False)
    counit_c = []
    for i in range(1, n + 1):
        parts = comps(i)
        m = Matrix.block([[Matrix.identity(X[i - 1].dim)] + [None] * (len(parts) - 1)],
                         [X[i - 1].dim], [p.dim for p in parts])
        counit_c.append(ModuleMap(R[i - 1], X[i - 1], m))
    counit = MorMap(out, x, counit_c)

    Kb = [dsum(I[i - 1:], a) if i <= n - 1 else dsum([], a) for i in range(1, n + 1)]
    kmaps = []
    for i in range(1, n):
        rows = I[i - 1:]
        cols = I[i:]
        grid = [[None] * len(cols) for _ in rows]
        for t in range(1, len(rows)):
            grid[t][t - 1] = Matrix.identity(rows[t].dim)
        kmaps.append(Matrix.block(grid, [m.dim for m in rows], [m.dim for m in cols]))
    kobj = from_maps(a, Kb, kmaps, check=False) if n > 1 else zero_object(a, n)
    kinc = []
    for i in range(1, n + 1):
        parts = comps(i)
        if i <= n - 1:
            grid = [[None] * (len(parts) - 1)]
            for t in range(1, len(parts)):
                grid.append([Matrix.identity(parts[t].dim) if s == t - 1 else None
                             for s in range(len(parts) - 1)])
            m = Matrix.block(grid, [p.dim for p in parts], [p.dim for p in parts[1:]])
        else:
            m = Matrix.zeros(R[i - 1].dim, 0)
        kinc.append(ModuleMap(Kb[i - 1], R[i - 1], m))
    return RMonResult(x, ik, out, counit, kobj, MorMap(kobj, out, kinc))


def _flat_map(f: Union[MorMap, ModuleMap]) -> ModuleMap:
    return f.flat_map() if isinstance(f, MorMap) else f


def is_right_approximation(f: Union[MorMap, ModuleMap], testers: Sequence) -> Decision:
    """Hom(Y, source) -> Hom(Y, target) onto for every tester Y."""
    g = _flat_map(f)
    for idx, Y in enumerate(testers):
        fy = to_flat(Y) if isinstance(Y, MorObject) else Y
        if fy.dim == 0:
            continue
        h_src = hom_space(fy, g.source)
        h_tgt = hom_space(fy, g.target)
        if len(h_tgt) == 0:
            continue
        imgs = [h_tgt.coords(g.matrix @ m) for m in h_src.mats]
        r = rank(Matrix.from_rows(imgs, len(h_tgt))) if imgs else 0
        if r != len(h_tgt):
            return Decision(False, witness={"tester": idx, "rank": r, "needed": len(h_tgt)})
    return Decision(True)


def is_right_minimal(f: Union[MorMap, ModuleMap]) -> Decision:
    """K = {k in End(source) : f k = 0} must lie in rad End(source)."""
    from .algcore import radical
    from .fintype import end_algebra
    g = _flat_map(f)
    S = g.source
    if S.dim == 0:
        return Decision(True)
    ea = end_algebra(S)
    mats = ea.maps
    cols = [(g.matrix @ m).flat() for m in mats]
    A = Matrix.from_columns(cols, g.target.dim * S.dim) if cols else Matrix.zeros(0, 0)
    K = kernel_basis(A)
    if not K:
        return Decision(True, certificate={"K_dim": 0})
    rad = radical(ea.algebra)
    from .exactla import in_span
    for v in K:
        if not in_span(rad, v):
            return Decision(False, witness={"endomorphism": [str(c) for c in v]})
    return Decision(True, certificate={"K_dim": len(K), "rad_dim": len(rad)})


@dataclass
class LEpiResult:
    input: MorObject
    output: MorObject
    unit: MorMap
    dual_result: RMonResult


def lepi(x: MorObject, choice: int = 0) -> LEpiResult:
    """Left minimal approximation by the epimorphism category, via duality."""
    d = mor_dual(x)
    r = rmon(d, choice)
    out = mor_dual(r.output)
    n = x.n
    comps = []
    for i in range(1, n + 1):
        c = r.counit.components[n - i]
        comps.append(ModuleMap(x.branches[i - 1], out.branches[i - 1], c.matrix.T))
    return LEpiResult(x, out, MorMap(x, out, comps), r)


def is_left_approximation(f: MorMap, testers: Sequence) -> Decision:
    """Hom(target, Y) -> Hom(source, Y) onto for every tester Y."""
    g = f.flat_map()
    for idx, Y in enumerate(testers):
        fy = to_flat(Y) if isinstance(Y, MorObject) else Y
        if fy.dim == 0:
            continue
        h_tgt = hom_space(g.target, fy)
        h_src = hom_space(g.source, fy)
        if len(h_src) == 0:
            continue
        imgs = [h_src.coords(m @ g.matrix) for m in h_tgt.mats]
        r = rank(Matrix.from_rows(imgs, len(h_src))) if imgs else 0
        if r != len(h_src):
            return Decision(False, witness={"tester": idx})
    return Decision(True)


# ---------------------------------------------------------------------------
# minimal add(M)-approximations of modules


def minimal_right_approximation(M: Module, x: Module, seed: int = 0) -> ModuleMap:
    """Evaluation map from copies of the summand types of M, pruned greedily.

    A copy is dropped whenever the rest still induces surjections on
    Hom(U, -) for every summand type U.  ``meta['types']`` lists the copies.
    """
    from .fintype import _types
    types = _types(M, seed)
    copies = []  # (type index, matrix U_t -> x)
    for t, u in enumerate(types):
        for m in hom_space(u, x).mats:
            copies.append((t, m))
    targets = [hom_space(u, x) for u in types]
    contrib = []
    for s, f in copies:
        per = []
        for t, u in enumerate(types):
            per.append([targets[t].coords(f @ h) for h in hom_space(u, types[s]).mats])
        contrib.append(per)

    def still_onto(keep):
        for t, ht in enumerate(targets):
            if len(ht) == 0:
                continue
            rows = [v for c in keep for v in contrib[c][t]]
            if not rows or rank(Matrix.from_rows(rows, len(ht))) != len(ht):
                return False
        return True

    keep = list(range(len(copies)))
    for c in range(len(copies)):
        trial = [k for k in keep if k != c]
        if still_onto(trial):
            keep = trial
    src = dsum([types[copies[k][0]] for k in keep], x.algebra)
    if keep:
        from .exactla import hstack
        mat = hstack([copies[k][1] for k in keep], rows=x.dim)
    else:
        mat = Matrix.zeros(x.dim, 0)
    f = ModuleMap(src, x, mat)
    f.meta["types"] = [copies[k][0] for k in keep]
    return f


def minimal_left_approximation(M: Module, x: Module, seed: int = 0) -> ModuleMap:
    """Dual of the minimal right approximation of D(x) by add(D(M))."""
    from .modrep import dual
    g = minimal_right_approximation(dual(M), dual(x), seed)
    tgt = dual(g.source)
    f = ModuleMap(x, tgt, g.matrix.T)
    f.meta["types"] = g.meta["types"]
    return f
