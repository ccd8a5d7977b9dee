"""Gorenstein profiles, Cohen-Macaulay membership and the chain-level checks built on them.

Gorenstein-projective membership is decided as membership in the left
perpendicular of the regular module, which is valid over Gorenstein
algebras only; other algebras are refused as inconclusive.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from .algcore import Algebra, regular_modules, triangular_algebra
from .cotilt import Catalog, IdentityReport, _compare, perp_left, perp_right
from .errors import Decision, Inconclusive, is_finite
from .modrep import Module, inj_dim
from .morcat import (MorObject, SubcatSpec, fn_membership, m_i, sn_membership, to_flat)

RES_CAP = 32


@dataclass
class GorensteinProfile:
    algebra: Algebra
    left_selfinj_dim: object
    right_selfinj_dim: object

    @property
    def is_gorenstein(self) -> bool:
        return is_finite(self.left_selfinj_dim) and is_finite(self.right_selfinj_dim)

    @property
    def is_selfinjective(self) -> bool:
        return self.left_selfinj_dim == 0 and self.right_selfinj_dim == 0

    def to_json(self) -> dict:
        return {"algebra": self.algebra.name, "left_selfinj_dim": str(self.left_selfinj_dim),
                "right_selfinj_dim": str(self.right_selfinj_dim),
                "is_gorenstein": self.is_gorenstein, "is_selfinjective": self.is_selfinjective}


def profile(a: Algebra, cap: int = RES_CAP) -> GorensteinProfile:
    key = ("profile", cap)
    if key not in a._cache:
        left, right = regular_modules(a)
        a._cache[key] = GorensteinProfile(a, inj_dim(left, cap), inj_dim(right, cap))
    return a._cache[key]


def _regular(a: Algebra) -> Module:
    from .fixtures import regular
    return regular(a)


def _cogen(a: Algebra) -> Module:
    from .fixtures import DA
    return DA(a)


def cm_membership(x, cap: int = RES_CAP) -> Decision:
    """x in the left perpendicular of the regular module."""
    fx = to_flat(x) if isinstance(x, MorObject) else x
    return perp_left(fx, _regular(fx.algebra), "auto", cap)


def cocm_membership(x, cap: int = RES_CAP) -> Decision:
    """x in the right perpendicular of D(A_A)."""
    fx = to_flat(x) if isinstance(x, MorObject) else x
    return perp_right(fx, _cogen(fx.algebra), "auto", cap)


def cm_reciprocity(a: Algebra, n: int, catalog: Catalog, cap: int = RES_CAP) -> IdentityReport:
    """CM(T_n(A)) against S_n(CM(A)) over the catalog."""
    if not is_finite(profile(a, cap).right_selfinj_dim):
        raise Inconclusive("inj.dim A_A is not finite within cap")
    spec = SubcatSpec.perp_left(_regular(a), cap=cap)
    return _compare("COR41", catalog,
                    lambda x: cm_membership(x, cap).holds,
                    lambda x: sn_membership(x, spec).holds)


def gproj_membership(x, cap: int = RES_CAP) -> Decision:
    fx = to_flat(x) if isinstance(x, MorObject) else x
    prof = profile(fx.algebra, cap)
    if not prof.is_gorenstein:
        raise Inconclusive(f"{fx.algebra.name} is not Gorenstein within cap; "
                           "Gorenstein-projectivity is only decided over Gorenstein algebras")
    d = cm_membership(fx, cap)
    d.detail = "Gproj = CM over a Gorenstein algebra (assumed)"
    return d


def ginj_membership(x, cap: int = RES_CAP) -> Decision:
    fx = to_flat(x) if isinstance(x, MorObject) else x
    prof = profile(fx.algebra, cap)
    if not prof.is_gorenstein:
        raise Inconclusive(f"{fx.algebra.name} is not Gorenstein within cap")
    d = cocm_membership(fx, cap)
    d.detail = "Ginj = CoCM over a Gorenstein algebra (assumed)"
    return d


@dataclass
class Thm44Report:
    selfinjective: bool
    sets_equal: bool
    rows: List[dict] = field(default_factory=list)
    witness: Optional[dict] = None
    probe: Optional[dict] = None

    @property
    def consistent(self) -> bool:
        return self.selfinjective == self.sets_equal

    def to_json(self) -> dict:
        return {"selfinjective": self.selfinjective, "sets_equal": self.sets_equal,
                "consistent": self.consistent, "rows": self.rows, "witness": self.witness,
                "probe": self.probe}


def thm44_check(a: Algebra, n: int, catalog: Catalog, cap: int = RES_CAP) -> Thm44Report:
    """Gproj(T_n(A)) = S_n(A) over the catalog, compared with self-injectivity of A."""
    prof = profile(a, cap)
    rep = _compare("THM44", catalog,
                   lambda x: gproj_membership(x, cap).holds,
                   lambda x: sn_membership(x).holds)
    out = Thm44Report(prof.is_selfinjective, rep.equal, rep.rows)
    for r in rep.rows:
        if r["rhs"] and not r["lhs"]:
            out.witness = {"index": r["index"], "name": r["name"], "in_S_n": True,
                           "gproj": False}
            break
    probe = m_i(_cogen(a), 1, n)
    probe.name = "(D(A_A),0,...,0)"
    out.probe = {"name": probe.name, "in_S_n": sn_membership(probe).holds,
                 "gproj": gproj_membership(probe, cap).holds}
    return out


@dataclass
class GinjReport:
    cocm: IdentityReport
    both_rows: List[dict]

    @property
    def holds(self) -> bool:
        return self.cocm.equal and all(r["both"] == r["m_shape"] for r in self.both_rows)

    def to_json(self) -> dict:
        return {"cocm": self.cocm.to_json(), "both_rows": self.both_rows, "holds": self.holds}


def _is_m_shape(x: MorObject) -> bool:
    return all(f.is_iso() for f in x.phi)


def ginj_suite(a: Algebra, n: int, catalog: Catalog, cap: int = RES_CAP) -> GinjReport:
    """CoCM(T_n(A)) = F_n(CoCM(A)), and objects both Gproj and Ginj are m_n(M) shaped."""
    if not is_finite(profile(a, cap).left_selfinj_dim):
        raise Inconclusive("inj.dim _A A is not finite within cap")
    spec = SubcatSpec.perp_right(_cogen(a), cap=cap)
    cocm = _compare("COR42", catalog,
                    lambda x: cocm_membership(x, cap).holds,
                    lambda x: fn_membership(x, spec).holds)
    rows = []
    tn_gor = profile(triangular_algebra(a, n), cap).is_gorenstein
    for idx, x in enumerate(catalog.objects):
        both = tn_gor and gproj_membership(x, cap).holds and ginj_membership(x, cap).holds
        X1 = x.branches[0]
        shape = _is_m_shape(x) and (X1.dim == 0 or (cm_membership(X1, cap).holds
                                                    and cocm_membership(X1, cap).holds))
        rows.append({"index": idx, "name": x.name, "both": both, "m_shape": shape})
    return GinjReport(cocm, rows)
