"""Bundled algebras, modules and catalogs used by the tests and the CLI."""

import random
from functools import lru_cache
from typing import Dict, List

from .algcore import Algebra, QuiverPresentation, path_algebra, regular_modules
from .exactla import Matrix
from .modrep import Module, dual, hom_space, quiver_module
from .morcat import MorObject, from_maps


@lru_cache(maxsize=None)
def kA2() -> Algebra:
    """Path algebra of 1 -> 2 (arrow a)."""
    return path_algebra(QuiverPresentation(["1", "2"], [("a", "1", "2")]), name="kA2")


@lru_cache(maxsize=None)
def lambda_t(t: int) -> Algebra:
    """Q[x]/(x^t) as the loop quiver with relation x^t."""
    rel = [[(1, tuple(["x"] * t))]] if t >= 2 else []
    if t < 2:
        return path_algebra(QuiverPresentation(["1"], []), name="Q")
    return path_algebra(QuiverPresentation(["1"], [("x", "1", "1")], rel), name=f"Lambda{t}")


def lambda2() -> Algebra:
    return lambda_t(2)


@lru_cache(maxsize=None)
def square_algebra() -> Algebra:
    """Commutative square: alpha, beta on top, gamma, delta below, beta.alpha = delta.gamma."""
    qp = QuiverPresentation(
        ["l", "t", "b", "r"],
        [("alpha", "l", "t"), ("beta", "t", "r"), ("gamma", "l", "b"), ("delta", "b", "r")],
        [[(1, ("alpha", "beta")), (-1, ("gamma", "delta"))]])
    return path_algebra(qp, name="square")


@lru_cache(maxsize=None)
def path_A3() -> Algebra:
    return path_algebra(QuiverPresentation(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]),
                        name="kA3")


@lru_cache(maxsize=None)
def semisimple_QxQ() -> Algebra:
    return path_algebra(QuiverPresentation(["1", "2"], []), name="QxQ")


@lru_cache(maxsize=None)
def kA2_modules() -> Dict[str, Module]:
    a = kA2()
    S1 = quiver_module(a, {"1": 1}, {})
    S2 = quiver_module(a, {"2": 1}, {})
    P1 = quiver_module(a, {"1": 1, "2": 1}, {"a": [["1"]]})
    for nm, m in (("S1", S1), ("S2", S2), ("P1", P1)):
        m.name = nm
    return {"S1": S1, "S2": S2, "P1": P1}


@lru_cache(maxsize=None)
def lambda2_modules() -> Dict[str, Module]:
    a = lambda2()
    J1 = quiver_module(a, {"1": 1}, {})
    J2 = quiver_module(a, {"1": 2}, {"x": [["0", "0"], ["1", "0"]]})
    J1.name, J2.name = "J1", "J2"
    return {"J1": J1, "J2": J2}


def lambda_modules(t: int) -> List[Module]:
    """Jordan blocks J_1..J_t over Q[x]/(x^t)."""
    a = lambda_t(t)
    out = []
    for k in range(1, t + 1):
        rows = [["1" if i == j + 1 else "0" for j in range(k)] for i in range(k)]
        m = quiver_module(a, {"1": k}, {"x": rows})
        m.name = f"J{k}"
        out.append(m)
    return out


def DA(a: Algebra) -> Module:
    """The injective cogenerator D(A_A) as a left module."""
    if "DA" not in a._cache:
        _, right = regular_modules(a)
        d = dual(right)
        d.name = "D(A_A)"
        a._cache["DA"] = d
    return a._cache["DA"]


def regular(a: Algebra) -> Module:
    if "reg" not in a._cache:
        left, _ = regular_modules(a)
        left.name = "A"
        a._cache["reg"] = left
    return a._cache["reg"]


def _mat(rows) -> Matrix:
    return Matrix.from_rows(rows) if rows else None


@lru_cache(maxsize=None)
def rem310_objects() -> List[MorObject]:
    """The eleven indecomposable chains X_2 -> X_1 over kA2 (AR quiver order)."""
    a = kA2()
    md = kA2_modules()
    S1, S2, P1 = md["S1"], md["S2"], md["P1"]
    Z = Module.zero(a)

    def obj(name, x1, x2, m):
        mat = m if m is not None else Matrix.zeros(x1.dim, x2.dim)
        return from_maps(a, [x1, x2], [mat], name=name)

    # P1 basis: (e1-part, a-part); the socle S2 sits in the second coordinate.
    sigma = Matrix.from_rows([["0"], ["1"]])
    proj = Matrix.from_rows([["1", "0"]])
    return [
        obj("(S2,0)", S2, Z, None),
        obj("(P1,0)", P1, Z, None),
        obj("(S2,S2)", S2, S2, Matrix.identity(1)),
        obj("(P1,S2)_sigma", P1, S2, sigma),
        obj("(P1,P1)", P1, P1, Matrix.identity(2)),
        obj("(0,S2)", Z, S2, None),
        obj("(S1,0)", S1, Z, None),
        obj("(S1,P1)_p", S1, P1, proj),
        obj("(0,P1)", Z, P1, None),
        obj("(S1,S1)", S1, S1, Matrix.identity(1)),
        obj("(0,S1)", Z, S1, None),
    ]


REM310_PROJECTIVE = ["(S2,0)", "(P1,0)", "(S2,S2)", "(P1,P1)"]


def rem310_catalog():
    from .cotilt import Catalog
    return Catalog(kA2(), 2, list(rem310_objects()), True,
                   "Auslander-Reiten quiver of T_2(kA2), eleven indecomposables",
                   flags={o.name: ("projective" if o.name in REM310_PROJECTIVE else "")
                          for o in rem310_objects()})


def base_indecomposables(a: Algebra) -> List[Module]:
    """Known indecomposable A-modules for the bundled representation-finite algebras."""
    if a is kA2():
        md = kA2_modules()
        return [md["S2"], md["P1"], md["S1"]]
    if a.name.startswith("Lambda") and a.provenance is not None:
        t = a.dim
        return lambda_modules(t)
    from .fintype import enumerate_module_indecomposables
    return enumerate_module_indecomposables(a)


def random_module(a: Algebra, rng: random.Random, max_pieces: int = 2) -> Module:
    from .modrep import dsum
    inds = base_indecomposables(a)
    k = rng.randint(0, max_pieces)
    return dsum([rng.choice(inds) for _ in range(k)], a)


def random_map(x: Module, y: Module, rng: random.Random) -> Matrix:
    hs = hom_space(x, y)
    if not len(hs):
        return Matrix.zeros(y.dim, x.dim)
    mode = rng.random()
    if mode < 0.25:
        coeffs = [0] * len(hs)
        coeffs[rng.randrange(len(hs))] = 1
    elif mode < 0.35:
        coeffs = [0] * len(hs)
    else:
        coeffs = [rng.randint(-2, 2) for _ in range(len(hs))]
    return hs.combo(coeffs)


def random_mor_object(a: Algebra, n: int, rng: random.Random, max_pieces: int = 2) -> MorObject:
    br = [random_module(a, rng, max_pieces) for _ in range(n)]
    mats = [random_map(br[i + 1], br[i], rng) for i in range(n - 1)]
    return from_maps(a, br, mats, check=False)


def square_to_t2_images() -> List[List]:
    """Images of the square quiver's path basis in T_2(kA2)."""
    from .algcore import quiver_map_images, triangular_algebra
    sq, t = square_algebra(), triangular_algebra(kA2(), 2)
    lab = {l: i for i, l in enumerate(t.basis_labels)}

    def e(label):
        v = [0] * t.dim
        v[lab[label]] = 1
        return v

    verts = {"l": e("E22|e1"), "t": e("E22|e2"), "b": e("E11|e1"), "r": e("E11|e2")}
    arrows = {"alpha": e("E22|a"), "beta": e("E12|e2"), "gamma": e("E12|e1"),
              "delta": e("E11|a")}
    return quiver_map_images(sq, t, verts, arrows)


_ALGEBRAS = {"kA2": kA2, "lambda2": lambda2, "square": square_algebra, "kA3": path_A3,
             "QxQ": semisimple_QxQ}


def algebra_by_name(name: str) -> Algebra:
    if name in _ALGEBRAS:
        return _ALGEBRAS[name]()
    if name.startswith("lambda") and name[6:].isdigit():
        return lambda_t(int(name[6:]))
    raise KeyError(name)


@lru_cache(maxsize=None)
def oracle_catalog(alg: str, n: int, dim_cap: int, mono: bool = True):
    """Cached brute-force catalog of S_n (mono) or Mor_n objects."""
    from .fintype import enumerate_sn_indecomposables
    return enumerate_sn_indecomposables(algebra_by_name(alg), n, dim_cap, mono=mono)


def merged_catalog(*cats):
    """Union of catalogs over one algebra and n, deduplicated up to isomorphism."""
    from .cotilt import Catalog
    from .morcat import mor_is_isomorphic
    objs = []
    for c in cats:
        for o in c.objects:
            if not any(p.dims == o.dims and mor_is_isomorphic(p, o).holds for p in objs):
                objs.append(o)
    first = cats[0]
    return Catalog(first.algebra, first.n, objs, all(c.claims_complete for c in cats),
                   "+".join(c.provenance for c in cats),
                   evidence={"parts": [c.evidence for c in cats]})
