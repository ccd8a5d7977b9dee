"""Perpendicular categories, (co)tilting verification and catalog-level checks of
the reciprocity identities between A-mod and chains."""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from .algcore import Algebra, triangular_algebra
from .errors import Decision, Inconclusive, InputError, is_finite
from .exactla import Matrix, rank
from .modrep import (Module, ModuleMap, cokernel, decompose, dsum, dual, ext_dim, hom_dim,
                     hom_space, identity_map, indec_projectives, inj_dim, is_isomorphic,
                     kernel, proj_dim, syzygy)
from .morcat import (MorMap, MorObject, SubcatSpec, _seq_exact, fn_membership, m_i, m_of,
                     mor_direct_sum, mor_from_json, p_i, p_of, sn_membership, to_flat)

RES_CAP = 32
DEPTH_CAP = 16

Obj = Union[Module, MorObject]


def _flat(x: Obj) -> Module:
    return to_flat(x) if isinstance(x, MorObject) else x


# ---------------------------------------------------------------------------
# catalogs


class Catalog:
    """Finite list of indecomposables over which subcategory equalities are decided."""

    def __init__(self, algebra: Algebra, n: Optional[int], objects: Sequence[Obj],
                 claims_complete: bool, provenance: str, flags: Optional[dict] = None,
                 evidence: Optional[dict] = None):
        self.algebra = algebra
        self.n = n
        self.objects = list(objects)
        self.claims_complete = bool(claims_complete)
        self.provenance = provenance
        self.flags = dict(flags or {})
        self.evidence = dict(evidence or {})

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def flats(self) -> List[Module]:
        return [_flat(o) for o in self.objects]

    def validate(self, seed: int = 0) -> Decision:
        """Each object indecomposable and no two isomorphic."""
        fl = self.flats()
        for i, m in enumerate(fl):
            if len(decompose(m, seed)) != 1:
                return Decision(False, witness={"index": i, "reason": "decomposable"})
        for i in range(len(fl)):
            for j in range(i):
                if fl[i].dim == fl[j].dim and is_isomorphic(fl[i], fl[j], seed).holds:
                    return Decision(False, witness={"index": i, "duplicate_of": j})
        return Decision(True)

    def to_json(self) -> dict:
        return {"algebra": self.algebra.to_json(), "n": self.n,
                "objects": [dict(o.to_json(), name=o.name) for o in self.objects],
                "claims_complete": self.claims_complete, "provenance": self.provenance,
                "flags": self.flags}


def catalog_from_json(obj: dict, algebra: Optional[Algebra] = None) -> Catalog:
    from .algcore import algebra_from_json
    from .modrep import module_from_json
    if not isinstance(obj, dict) or "objects" not in obj:
        raise InputError("catalog JSON needs an 'objects' list")
    if algebra is None:
        if not isinstance(obj.get("algebra"), dict):
            raise InputError("catalog JSON needs an embedded algebra or --algebra")
        algebra = algebra_from_json(obj["algebra"])
    n = obj.get("n")
    objs = []
    for raw in obj["objects"]:
        if n is None:
            o = module_from_json(raw, algebra)
        else:
            o = mor_from_json(raw, algebra)
        o.name = raw.get("name") if isinstance(raw, dict) else None
        objs.append(o)
    return Catalog(algebra, n, objs, obj.get("claims_complete", False),
                   obj.get("provenance", ""), flags=obj.get("flags"))


# ---------------------------------------------------------------------------
# perpendicular categories


def _inj_dim_cached(T: Module, cap: int):
    key = ("injdim", cap)
    if key not in T._cache:
        T._cache[key] = inj_dim(T, cap)
    return T._cache[key]


def _proj_dim_cached(T: Module, cap: int):
    key = ("projdim", cap)
    if key not in T._cache:
        T._cache[key] = proj_dim(T, cap)
    return T._cache[key]


def perp_left(x: Obj, T: Obj, mode="auto", cap: int = RES_CAP) -> Decision:
    """x in perp-left of T: Ext^i(x, T) = 0 for all i >= 1.

    ``mode`` is "auto" (bound by inj.dim T) or an int bound.
    """
    x, T = _flat(x), _flat(T)
    if x.dim == 0 or T.dim == 0:
        return Decision(True)
    if mode == "auto":
        r = _inj_dim_cached(T, cap)
        if not is_finite(r):
            raise Inconclusive(f"inj.dim of {T.name or 'T'} exceeds cap {cap}")
    else:
        r = int(mode)
    for i in range(1, r + 1):
        d = ext_dim(x, T, i, cap)
        if d:
            return Decision(False, witness={"degree": i, "ext_dim": d})
    return Decision(True, certificate={"bound": r})


def perp_right(x: Obj, T: Obj, mode="auto", cap: int = RES_CAP) -> Decision:
    """x in the right perpendicular of T: Ext^i(T, x) = 0 for all i >= 1."""
    x, T = _flat(x), _flat(T)
    if x.dim == 0 or T.dim == 0:
        return Decision(True)
    if mode == "auto":
        r = _proj_dim_cached(T, cap)
        if not is_finite(r):
            r = _inj_dim_cached(x, cap)
        if not is_finite(r):
            raise Inconclusive("neither proj.dim T nor inj.dim x is finite within cap")
    else:
        r = int(mode)
    for i in range(1, r + 1):
        d = ext_dim(T, x, i, cap)
        if d:
            return Decision(False, witness={"degree": i, "ext_dim": d})
    return Decision(True, certificate={"bound": r})


def both_perp_spec(T: Module, label: str = "", **opts) -> SubcatSpec:
    return SubcatSpec.named(label or f"perp({T.name or 'T'}) both sides",
                            lambda m: perp_left(m, T, **opts).holds
                            and perp_right(m, T, **opts).holds)


# ---------------------------------------------------------------------------
# resolutions by add(T)


@dataclass
class CoresolutionCert:
    """Exact sequence built from add(T) ending (or starting) at ``target``.

    direction "resolves": 0 -> T_s -> ... -> T_0 -> target -> 0, maps[0]: T_0 -> target.
    direction "coresolves": 0 -> target -> T_0 -> ... -> T_s -> 0, maps[0]: target -> T_0.
    """

    target: Module
    terms: List[Module]
    maps: List[ModuleMap]
    direction: str = "resolves"

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def verify(self, T: Module, seed: int = 0) -> Decision:
        from .fintype import add_membership
        seq = self.sequence()
        ok, node = _seq_exact([f.matrix for f in seq[0]], seq[1])
        if not ok:
            return Decision(False, witness={"reason": "not exact", "node": node})
        for f in self.maps:
            if not f.is_valid():
                return Decision(False, witness={"reason": "not a module map"})
        for k, t in enumerate(self.terms):
            if not add_membership(t, T, seed).holds:
                return Decision(False, witness={"reason": "term outside add(T)", "term": k})
        return Decision(True)

    def sequence(self):
        """(maps in order of composition, node dims) for the exactness test."""
        if self.direction == "resolves":
            maps = list(reversed(self.maps))
            dims = [t.dim for t in reversed(self.terms)] + [self.target.dim]
        else:
            maps = list(self.maps)
            dims = [self.target.dim] + [t.dim for t in self.terms]
        return maps, dims

    def to_json(self) -> dict:
        return {"direction": self.direction, "target_dim": self.target.dim,
                "term_dims": [t.dim for t in self.terms],
                "maps": [f.matrix.to_json() for f in self.maps]}


def add_resolution(Y: Module, T: Module, depth: int = DEPTH_CAP, seed: int = 0):
    """Iterated minimal right add(T)-approximations of Y.

    Returns a CoresolutionCert, ``None`` if some approximation is not onto
    (then no such sequence exists), or raises Inconclusive past ``depth``.
    """
    from .approx import minimal_right_approximation
    from .fintype import add_membership
    terms: List[Module] = []
    maps: List[ModuleMap] = []
    cur, cur_incl = Y, identity_map(Y)
    for k in range(depth + 1):
        if k > 0 and cur.dim == 0:
            return CoresolutionCert(Y, terms, maps)
        if add_membership(cur, T, seed).holds:
            terms.append(cur)
            maps.append(cur_incl)
            return CoresolutionCert(Y, terms, maps)
        f = minimal_right_approximation(T, cur, seed)
        if not f.is_surjective():
            return None
        terms.append(f.source)
        maps.append(ModuleMap(f.source, cur_incl.target, cur_incl.matrix @ f.matrix))
        K, inc = kernel(f)
        cur, cur_incl = K, inc
    raise Inconclusive(f"no add(T)-resolution of length <= {depth}")


def add_coresolution(Y: Module, T: Module, depth: int = DEPTH_CAP, seed: int = 0):
    """0 -> Y -> T_0 -> ... -> T_s -> 0 by duality from add_resolution over A^op."""
    c = add_resolution(dual(Y), dual(T), depth, seed)
    if c is None:
        return None
    terms = [dual(t) for t in c.terms]
    maps = []
    for k, f in enumerate(c.maps):
        src = Y if k == 0 else terms[k - 1]
        maps.append(ModuleMap(src, terms[k], f.matrix.T))
    return CoresolutionCert(Y, terms, maps, "coresolves")


def _DA(a: Algebra) -> Module:
    from .fixtures import DA
    return DA(a)


def _reg(a: Algebra) -> Module:
    from .fixtures import regular
    return regular(a)


def is_cotilting(T: Module, r_cap: Optional[int] = None, s_cap: int = DEPTH_CAP,
                 cap: int = RES_CAP, seed: int = 0) -> Decision:
    r_cap = cap if r_cap is None else r_cap
    r = inj_dim(T, cap)
    if not is_finite(r) or r > r_cap:
        return Decision(False, witness={"condition": "i", "inj_dim": str(r)})
    for i in range(1, r + 1):
        d = ext_dim(T, T, i, cap)
        if d:
            return Decision(False, witness={"condition": "ii", "degree": i, "ext_dim": d})
    cert = add_resolution(_DA(T.algebra), T, s_cap, seed)
    if cert is None:
        return Decision(False, witness={"condition": "iii"})
    return Decision(True, certificate={"inj_dim": r, "coresolution": cert})


def is_tilting(T: Module, r_cap: Optional[int] = None, s_cap: int = DEPTH_CAP,
               cap: int = RES_CAP, seed: int = 0) -> Decision:
    r_cap = cap if r_cap is None else r_cap
    r = proj_dim(T, cap)
    if not is_finite(r) or r > r_cap:
        return Decision(False, witness={"condition": "i", "proj_dim": str(r)})
    for i in range(1, r + 1):
        d = ext_dim(T, T, i, cap)
        if d:
            return Decision(False, witness={"condition": "ii", "degree": i, "ext_dim": d})
    cert = add_coresolution(_reg(T.algebra), T, s_cap, seed)
    if cert is None:
        return Decision(False, witness={"condition": "iii"})
    return Decision(True, certificate={"proj_dim": r, "coresolution": cert})


# ---------------------------------------------------------------------------
# m(T) for cotilting T


def _sum_map(src_parts: List[MorObject], tgt_parts: List[MorObject],
             grid: List[List[Optional[MorMap]]]) -> MorMap:
    """Block MorMap between direct sums; grid[r][c] maps src_parts[c] -> tgt_parts[r]."""
    n = src_parts[0].n
    S = mor_direct_sum(src_parts)
    Tt = mor_direct_sum(tgt_parts)
    comps = []
    for j in range(n):
        rows = [p.branches[j].dim for p in tgt_parts]
        cols = [p.branches[j].dim for p in src_parts]
        g = [[grid[r][c].components[j].matrix if grid[r][c] is not None else None
              for c in range(len(src_parts))] for r in range(len(tgt_parts))]
        comps.append(ModuleMap(S.branches[j], Tt.branches[j], Matrix.block(g, rows, cols)))
    return MorMap(S, Tt, comps)


def _chain_map(f: ModuleMap, src: MorObject, tgt: MorObject, active, sign=1) -> MorMap:
    """Componentwise f on branches j with active(j), zero elsewhere."""
    comps = []
    for j in range(src.n):
        s, t = src.branches[j], tgt.branches[j]
        if active(j + 1) and s.dim and t.dim:
            m = f.matrix if sign == 1 else f.matrix.scale(-1)
        else:
            m = Matrix.zeros(t.dim, s.dim)
        comps.append(ModuleMap(s, t, m))
    return MorMap(src, tgt, comps)


@dataclass
class MTiltResult:
    T: Module
    n: int
    mor: MorObject
    module: Module
    base_inj_dim: int
    inj_dim: object
    self_orthogonal: bool
    terms: List[MorObject]
    maps: List[MorMap]
    target: MorObject
    exact: bool
    terms_in_add: bool
    target_is_cogenerator: bool
    end_dim: int
    expected_end_dim: int

    @property
    def holds(self) -> bool:
        return (is_finite(self.inj_dim) and self.inj_dim <= self.base_inj_dim + 1
                and self.self_orthogonal and self.exact and self.terms_in_add
                and self.target_is_cogenerator and self.end_dim == self.expected_end_dim)

    def summary(self) -> dict:
        return {"n": self.n, "base_inj_dim": self.base_inj_dim, "inj_dim": str(self.inj_dim),
                "self_orthogonal": self.self_orthogonal, "exact": self.exact,
                "terms_in_add": self.terms_in_add,
                "target_is_cogenerator": self.target_is_cogenerator,
                "term_dims": [t.dims for t in self.terms],
                "end_dim": self.end_dim, "expected_end_dim": self.expected_end_dim,
                "holds": self.holds}


def _pi_coresolution(i: int, n: int, cert: CoresolutionCert):
    """Terms C_0..C_{s+1} and maps for the p_i(D(A_A)) piece, as part lists."""
    Ts, ds = cert.terms, cert.maps
    s = len(Ts) - 1
    D = cert.target
    if i == n:
        parts = [[("m", k)] for k in range(s + 1)]
    else:
        parts = [[("m", 0)]] + [[("m", k), ("mi", k - 1)] for k in range(1, s + 1)] \
            + [[("mi", s)]]
    cut = n - i

    def obj(p):
        kind, k = p
        return m_i(Ts[k], n, n) if kind == "m" else m_i(Ts[k], cut, n)

    objs = [[obj(p) for p in ps] for ps in parts]

    def block(sp, so, tp, to):
        (sk, skk), (tk, tkk) = sp, tp
        if sk == "m" and tk == "m" and tkk == skk - 1:
            return _chain_map(ds[skk], so, to, lambda j: True)
        if sk == "mi" and tk == "m" and tkk == skk:
            return _chain_map(identity_map(Ts[skk]), so, to, lambda j: j <= cut)
        if sk == "mi" and tk == "mi" and tkk == skk - 1:
            return _chain_map(ds[skk], so, to, lambda j: j <= cut, sign=-1)
        return None

    target = p_i(D, i, n)
    maps = [_sum_map(objs[0], [target],
                     [[_chain_map(ds[0], objs[0][0], target, lambda j: j >= n - i + 1)]])]
    for k in range(1, len(parts)):
        grid = [[block(sp, so, tp, to) for sp, so in zip(parts[k], objs[k])]
                for tp, to in zip(parts[k - 1], objs[k - 1])]
        maps.append(_sum_map(objs[k], objs[k - 1], grid))
    return [mor_direct_sum(o) for o in objs], maps, target


def _diag_mormap(fs: List[MorMap], src: MorObject, tgt: MorObject) -> MorMap:
    comps = []
    for j in range(src.n):
        comps.append(ModuleMap(src.branches[j], tgt.branches[j],
                               Matrix.diag_blocks([f.components[j].matrix for f in fs])))
    return MorMap(src, tgt, comps)


def build_mtilt(T: Module, n: int, cap: int = RES_CAP, s_cap: int = DEPTH_CAP,
                seed: int = 0) -> MTiltResult:
    from .fintype import add_membership
    ct = is_cotilting(T, None, s_cap, cap, seed)
    if not ct.holds:
        raise InputError(f"T is not cotilting: {ct.witness}")
    r = ct.certificate["inj_dim"]
    cert: CoresolutionCert = ct.certificate["coresolution"]
    a = T.algebra
    mT = m_of(T, n)
    F = to_flat(mT)
    idim = inj_dim(F, cap)
    selfo = is_finite(idim) and all(ext_dim(F, F, i, cap) == 0 for i in range(1, idim + 1))

    pieces = [_pi_coresolution(i, n, cert) for i in range(1, n + 1)]
    depth = max(len(p[0]) for p in pieces)
    terms, maps = [], []
    target = mor_direct_sum([p[2] for p in pieces])
    zero = lambda: m_i(Module.zero(a), 1, n)
    for k in range(depth):
        ts = [p[0][k] if k < len(p[0]) else zero() for p in pieces]
        terms.append(mor_direct_sum(ts))
    for k in range(depth):
        fs = []
        for p in pieces:
            if k < len(p[1]):
                fs.append(p[1][k])
            else:
                src = p[0][k] if k < len(p[0]) else zero()
                tgt = (p[0][k - 1] if k - 1 < len(p[0]) else zero()) if k else p[2]
                fs.append(MorMap(src, tgt, [ModuleMap(s, t, Matrix.zeros(t.dim, s.dim))
                                            for s, t in zip(src.branches, tgt.branches)]))
        tgt = terms[k - 1] if k else target
        maps.append(_diag_mormap(fs, terms[k], tgt))
    for f in maps:
        f.check()
    seq_maps = [f.flat() for f in reversed(maps)]
    dims = [t.total_dim for t in reversed(terms)] + [target.total_dim]
    exact, _ = _seq_exact(seq_maps, dims)
    in_add = all(add_membership(to_flat(t), F, seed).holds for t in terms)
    tn = triangular_algebra(a, n)
    cogen = is_isomorphic(to_flat(target), _DA(tn), seed).holds
    end_dim = hom_dim(F, F)
    expected = n * (n + 1) // 2 * hom_dim(T, T)
    return MTiltResult(T, n, mT, F, r, idim, selfo, terms, maps, target, exact, in_add, cogen,
                       end_dim, expected)


# ---------------------------------------------------------------------------
# catalog-level identity checks


@dataclass
class IdentityReport:
    identity: str
    equal: bool
    rows: List[dict] = field(default_factory=list)
    disagreements: List[int] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def lhs_set(self) -> List[int]:
        return [r["index"] for r in self.rows if r["lhs"]]

    @property
    def rhs_set(self) -> List[int]:
        return [r["index"] for r in self.rows if r["rhs"]]

    @property
    def witness(self):
        if not self.disagreements:
            return None
        r = self.rows[self.disagreements[0]]
        return {"index": r["index"], "name": r["name"], "lhs": r["lhs"], "rhs": r["rhs"]}

    def to_json(self) -> dict:
        return {"identity": self.identity, "equal": self.equal, "rows": self.rows,
                "disagreements": self.disagreements, "witness": self.witness,
                "extra": self.extra}


def _compare(identity: str, catalog: Catalog, lhs_fn, rhs_fn) -> IdentityReport:
    rep = IdentityReport(identity, True)
    for idx, x in enumerate(catalog.objects):
        lhs = bool(lhs_fn(x))
        rhs = bool(rhs_fn(x))
        rep.rows.append({"index": idx, "name": x.name, "lhs": lhs, "rhs": rhs})
        if lhs != rhs:
            rep.disagreements.append(idx)
    rep.equal = not rep.disagreements
    return rep


def reciprocity_check(T: Module, n: int, catalog: Catalog, mode="auto",
                      cap: int = RES_CAP) -> IdentityReport:
    """S_n(perp-left T) against perp-left m(T), object by object."""
    if catalog.n != n:
        raise InputError(f"catalog is for n={catalog.n}, not {n}")
    spec = SubcatSpec.perp_left(T, mode=mode, cap=cap)
    mT = to_flat(m_of(T, n))
    return _compare("THM31", catalog,
                    lambda x: sn_membership(x, spec).holds,
                    lambda x: perp_left(to_flat(x), mT, mode, cap).holds)


IDENTITIES = {
    # id: (side, base subcategory, [(perp side, chain module)], hypothesis kind)
    "PROP36": ("S", "perp_left_T", [("left", "mT"), ("left", "pT"), ("left", "mD")], None),
    "PROP38": ("S", "perp_right_T", [("right", "mT"), ("left", "mD")], None),
    "PROP38B": ("S", "both_T", [("left", "mT"), ("right", "mT")], "resolution_of_DA"),
    "THM31P_I": ("F", "perp_right_T", [("right", "pT"), ("right", "mT"), ("right", "pA")], None),
    "THM31P_II": ("F", "perp_right_T", [("right", "pT")], "coresolution_of_A"),
    "THM31P_III": ("F", "perp_right_T", [("right", "pT")], "tilting"),
    "THM31P_IV": ("F", "all", [("right", "pA")], None),
    "THM31P_V": ("F", "perp_right_DA", [("right", "pD")], "left_selfinjective_dim"),
    "THM31P_VI": ("F", "perp_left_T", [("left", "pT"), ("right", "pA")], None),
    "THM31P_VII": ("F", "both_T", [("right", "pT"), ("left", "pT")], "coresolution_of_A"),
    "COR33": ("S", "perp_left_A", [("left", "mA")], "right_selfinjective_dim"),
}


def derive_hypothesis(identity: str, T: Module, cap: int = RES_CAP, seed: int = 0):
    """Compute the certificate an identity needs, or None when it fails."""
    kind = IDENTITIES[identity][3]
    a = T.algebra
    if kind is None:
        return None
    if kind == "resolution_of_DA":
        return add_resolution(_DA(a), T, DEPTH_CAP, seed)
    if kind == "coresolution_of_A":
        return add_coresolution(_reg(a), T, DEPTH_CAP, seed)
    if kind == "tilting":
        d = is_tilting(T, None, DEPTH_CAP, cap, seed)
        return d if d.holds else None
    if kind == "left_selfinjective_dim":
        d = inj_dim(_reg(a), cap)
        return d if is_finite(d) else None
    if kind == "right_selfinjective_dim":
        from .algcore import regular_modules
        d = inj_dim(regular_modules(a)[1], cap)
        return d if is_finite(d) else None
    raise InputError(f"unknown hypothesis kind {kind}")


def _verify_hypothesis(kind: str, hyp, T: Module, cap: int, seed: int):
    a = T.algebra
    if hyp is None:
        raise InputError(f"identity needs a '{kind}' certificate")
    if kind in ("resolution_of_DA", "coresolution_of_A"):
        want_dir = "resolves" if kind == "resolution_of_DA" else "coresolves"
        want_tgt = _DA(a) if kind == "resolution_of_DA" else _reg(a)
        if not isinstance(hyp, CoresolutionCert) or hyp.direction != want_dir:
            raise InputError(f"'{kind}' certificate has the wrong shape")
        if not is_isomorphic(hyp.target, want_tgt, seed).holds or not hyp.verify(T, seed).holds:
            raise InputError(f"'{kind}' certificate does not verify")
        return
    if kind == "tilting":
        if not isinstance(hyp, Decision) or not is_tilting(T, None, DEPTH_CAP, cap, seed).holds:
            raise InputError("tilting certificate does not verify")
        return
    if kind in ("left_selfinjective_dim", "right_selfinjective_dim"):
        from .algcore import regular_modules
        m = _reg(a) if kind.startswith("left") else regular_modules(a)[1]
        if inj_dim(m, cap) != hyp:
            raise InputError(f"'{kind}' certificate does not match")
        return
    raise InputError(f"unknown hypothesis kind {kind}")


def identity_check(identity: str, T: Module, n: int, catalog: Catalog, hypothesis=None,
                   mode="auto", cap: int = RES_CAP, seed: int = 0) -> IdentityReport:
    if identity not in IDENTITIES:
        raise InputError(f"unknown identity {identity}; choose from {sorted(IDENTITIES)}")
    if catalog.n != n:
        raise InputError(f"catalog is for n={catalog.n}, not {n}")
    side, base, rhs_parts, kind = IDENTITIES[identity]
    if kind is not None:
        _verify_hypothesis(kind, hypothesis, T, cap, seed)
    a = T.algebra
    D, A = _DA(a), _reg(a)
    opts = {"mode": mode, "cap": cap}
    specs = {
        "all": SubcatSpec.all(),
        "perp_left_T": SubcatSpec.perp_left(T, **opts),
        "perp_right_T": SubcatSpec.perp_right(T, **opts),
        "both_T": both_perp_spec(T, **opts),
        "perp_right_DA": SubcatSpec.perp_right(D, **opts),
        "perp_left_A": SubcatSpec.perp_left(A, **opts),
    }
    spec = specs[base]
    lazy: Dict[str, Module] = {}
    builders = {"mT": lambda: m_of(T, n), "pT": lambda: p_of(T, n), "mD": lambda: m_of(D, n),
                "pA": lambda: p_of(A, n), "mA": lambda: m_of(A, n), "pD": lambda: p_of(D, n)}

    def chain_module(key):
        if key not in lazy:
            lazy[key] = to_flat(builders[key]())
        return lazy[key]

    member = sn_membership if side == "S" else fn_membership

    def rhs(x):
        fx = to_flat(x)
        for where, key in rhs_parts:
            Z = chain_module(key)
            test = perp_left(fx, Z, mode, cap) if where == "left" else perp_right(fx, Z, mode, cap)
            if not test.holds:
                return False
        return True

    rep = _compare(identity, catalog, lambda x: member(x, spec).holds, rhs)
    if identity == "THM31P_IV":
        rep.extra["proj_dim_pA"] = str(proj_dim(chain_module("pA"), cap))
    if identity == "PROP38B":
        rep.extra["note"] = "second clause; requires the resolution hypothesis"
    return rep


# ---------------------------------------------------------------------------
# resolving subcategories and finite resolutions


def _extension_modules(Z: Module, X: Module, rng: random.Random, samples: int = 3):
    """Middle terms of extensions 0 -> X -> E -> Z -> 0 from cocycles on the syzygy."""
    if Z.dim == 0 or X.dim == 0:
        return []
    cover, K, inc = syzygy(Z)
    if K.dim == 0:
        return []
    hs = hom_space(K, X)
    if len(hs) == 0:
        return []
    P = cover.source
    cands = list(hs.mats) + [hs.combo([rng.randint(-3, 3) for _ in range(len(hs))])
                             for _ in range(samples)]
    out = []
    for h in cands:
        # pushout: (X + P) / {(-h k, inc k)}
        col = Matrix.block([[h.scale(-1)], [inc.matrix]], [X.dim, P.dim], [K.dim])
        src = dsum([X, P], Z.algebra)
        E, _ = cokernel(ModuleMap(K, src, col))
        out.append(E)
    return out


def resolving_check(spec: SubcatSpec, catalog: Catalog, seed: int = 0,
                    samples: int = 3) -> Decision:
    """Projectives inside, closed under extensions and under kernels of epis,
    tested within the catalog's additive closure."""
    flats = catalog.flats()
    if not flats:
        return Decision(True)
    alg = flats[0].algebra
    for k, P in enumerate(indec_projectives(alg)):
        if not spec.contains(P):
            return Decision(False, witness={"reason": "projective missing", "index": k})
    members = [m for m in flats if spec.contains(m)]
    rng = random.Random(seed)

    def summands_ok(E):
        whole = spec.contains(E)
        parts = all(spec.contains(s.module) for s in decompose(E, seed))
        return whole, parts

    for i, Z in enumerate(members):
        for j, X in enumerate(members):
            for E in _extension_modules(Z, X, rng, samples):
                whole, parts = summands_ok(E)
                if not whole or not parts:
                    return Decision(False, witness={"reason": "extension", "pair": [i, j]})
            hs = hom_space(X, Z)
            cands = list(hs.mats) + [hs.combo([rng.randint(-3, 3) for _ in range(len(hs))])
                                     for _ in range(samples if len(hs) else 0)]
            for m in cands:
                if rank(m) != Z.dim:
                    continue
                K, _ = kernel(ModuleMap(X, Z, m))
                whole, parts = summands_ok(K)
                if not whole or not parts:
                    return Decision(False, witness={"reason": "kernel of epi", "pair": [j, i]})
    return Decision(True, certificate={"members": len(members)})


def hat_membership(x: Obj, spec: SubcatSpec, depth: int, catalog: Catalog,
                   seed: int = 0) -> Decision:
    """Finite resolution of x by spec members via minimal approximations."""
    from .approx import minimal_right_approximation
    x = _flat(x)
    members = [m for m in catalog.flats() if spec.contains(m)]
    M = dsum(members, x.algebra)
    cur = x
    steps = []
    for d in range(depth + 1):
        if spec.contains(cur):
            return Decision(True, certificate={"length": d, "steps": steps})
        f = minimal_right_approximation(M, cur, seed)
        if not f.is_surjective():
            return Decision(False, witness={"reason": "approximation not onto", "step": d})
        K, inc = kernel(f)
        steps.append({"term_dim": f.source.dim, "kernel_dim": K.dim})
        cur = K
    raise Inconclusive(f"no resolution of length <= {depth}")
