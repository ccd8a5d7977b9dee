"""The acceptance suite: eleven checks on the bundled fixtures.

Each ``criterion_N`` returns a CriterionResult; ``run_all`` runs them in
order.  Used by ``mono selftest`` and by tests/test_acceptance.py.
"""

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .algcore import triangular_algebra
from .approx import is_right_approximation, is_right_minimal, lepi, rmon
from .cotilt import build_mtilt, derive_hypothesis, identity_check, reciprocity_check
from .errors import is_finite
from .fintype import (add_membership, bigenerator_check, end_algebra,
                      end_m_cogenerator_isomorphism, hom_functor_module,
                      cokernel_shift_instance, rel_dim, thm51_check)
from .fixtures import (DA, kA2, kA2_modules, lambda2, lambda2_modules, merged_catalog,
                       oracle_catalog, random_module, random_mor_object, regular,
                       rem310_catalog, rem310_objects)
from .goren import cm_reciprocity, thm44_check
from .modrep import dsum, indec_projectives, inj_dim, proj_dim
from .morcat import (MorMap, ShortExact, adjunction_dims, ext_identity_dims, m_i_map, m_of,
                     mor_direct_sum, mor_is_isomorphic, p_i_map, sn_membership,
                     snake_sequences, to_flat)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    budget: float
    details: Dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        timing = f"{self.seconds:.1f}s / {self.budget:.0f}s"
        return f"{mark} criterion {self.number:2d}: {self.title} ({timing})"


def _timed(number: int, title: str, budget: float, fn: Callable[[], tuple]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, details = fn()
    dt = time.perf_counter() - t0
    return CriterionResult(number, title, bool(ok) and dt < budget, dt, budget, details)


REM310_S_ADD_A = ["(S2,0)", "(P1,0)", "(S2,S2)", "(P1,P1)"]


def _names(cat, idxs):
    return sorted(cat.objects[i].name for i in idxs)


def criterion_1(seed: int = 0) -> CriterionResult:
    def run():
        a, md, cat = kA2(), kA2_modules(), rem310_catalog()
        T = dsum([md["S1"], md["S2"]], a)
        rep = reciprocity_check(T, 2, cat)
        lhs, rhs = _names(cat, rep.lhs_set), _names(cat, rep.rhs_set)
        want = sorted(REM310_S_ADD_A)
        return rep.equal and lhs == want and rhs == want, {"lhs": lhs, "rhs": rhs}
    return _timed(1, "worked example: reciprocity holds for S(1)+S(2)", 10, run)


def criterion_2(seed: int = 0) -> CriterionResult:
    def run():
        md, cat = kA2_modules(), rem310_catalog()
        out, ok = {}, True
        for nm in ("S1", "S2", "P1"):
            t0 = time.perf_counter()
            rep = reciprocity_check(md[nm], 2, cat)
            dt = time.perf_counter() - t0
            out[nm] = {"equal": rep.equal, "witness": rep.witness, "seconds": round(dt, 3)}
            ok = ok and not rep.equal and rep.witness is not None and dt < 10
        return ok, out
    return _timed(2, "worked example: reciprocity fails for S(1), S(2), P(1)", 30, run)


def _cor32_case(a, n, cat):
    mD = to_flat(m_of(DA(a), n))
    rep = reciprocity_check(DA(a), n, cat)
    sn = [i for i, x in enumerate(cat.objects) if sn_membership(x).holds]
    idim = inj_dim(mD)
    iso = end_m_cogenerator_isomorphism(a, n)
    t = triangular_algebra(a, n)
    ok = (rep.equal and rep.lhs_set == sn and idim == 1 and iso.holds
          and end_algebra(mD).base.dim == t.dim)
    return ok, {"objects": len(cat), "S_n_members": len(sn), "inj_dim_mD": str(idim),
                "end_dim": end_algebra(mD).base.dim, "dim_T": t.dim, "iso": iso.holds}


def criterion_3(seed: int = 0) -> CriterionResult:
    def run():
        out, ok = {}, True
        cases = [
            ("kA2 n=2", kA2(), 2, rem310_catalog()),
            ("lambda2 n=2", lambda2(), 2, merged_catalog(oracle_catalog("lambda2", 2, 4, False),
                                                         oracle_catalog("lambda2", 2, 6, True))),
            ("lambda2 n=3", lambda2(), 3, merged_catalog(oracle_catalog("lambda2", 3, 2, False),
                                                         oracle_catalog("lambda2", 3, 4, True))),
        ]
        for label, a, n, cat in cases:
            good, det = _cor32_case(a, n, cat)
            out[label] = det
            ok = ok and good
        return ok, out
    return _timed(3, "S_n(A) = perp-left of m(D(A_A)); inj.dim 1; End = T_n(A)^op", 60, run)


def criterion_4(seed: int = 0) -> CriterionResult:
    def run():
        res = build_mtilt(DA(kA2()), 2)
        s = res.summary()
        return res.holds and res.inj_dim == 1 and res.base_inj_dim == 0, s
    return _timed(4, "m(D(A_A)) is 1-cotilting with an explicit coresolution", 30, run)


def _sn_catalog(alg: str, n: int):
    if alg == "kA2" and n == 2:
        return [o for o in rem310_objects() if sn_membership(o).holds]
    cap = {("kA2", 3): 3, ("lambda2", 2): 6, ("lambda2", 3): 4}[(alg, n)]
    return oracle_catalog(alg, n, cap, True).objects


def _rmon_probe(x, testers) -> Dict:
    r = rmon(x)
    r1 = rmon(x, choice=1)
    res = {
        "in_S_n": sn_membership(r.output).holds,
        "counit_epi": r.counit.is_epi(),
        "right_approx": is_right_approximation(r.counit, testers).holds,
        "right_minimal": is_right_minimal(r.counit).holds,
        "choice_independent": mor_is_isomorphic(r.output, r1.output).holds,
    }
    if sn_membership(x).holds:
        res["fixes_S_n"] = (r.output.dims == x.dims
                            and all(c.matrix.is_identity() for c in r.counit.components))
    return res


def criterion_5(seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        algs = {"kA2": kA2(), "lambda2": lambda2()}
        objs = [("kA2", 2, o) for o in rem310_objects()]
        plan = [("kA2", 2, 8), ("kA2", 3, 7), ("lambda2", 2, 8), ("lambda2", 3, 7)]
        for alg, n, k in plan:
            for _ in range(k):
                objs.append((alg, n, random_mor_object(algs[alg], n, rng)))
        fails = []
        for idx, (alg, n, x) in enumerate(objs):
            res = _rmon_probe(x, _sn_catalog(alg, n))
            if not all(res.values()):
                fails.append({"index": idx, "algebra": alg, "n": n, "dims": x.dims, **res})
        return not fails, {"objects": len(objs), "failures": fails}
    return _timed(5, "rMon is a right minimal S_n-approximation", 120, run)


def _s_and_f_objects(rng, count):
    algs = [(kA2(), 2), (kA2(), 3), (lambda2(), 2), (lambda2(), 3)]
    out = []
    for k in range(count):
        a, n = algs[k % len(algs)]
        x = random_mor_object(a, n, rng)
        out.append((x, random_module(a, rng, 2)))
    return out


def criterion_6(seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed + 6)
        pairs = _s_and_f_objects(rng, 52)
        counts: Dict[str, int] = {}
        fails = []
        for x, M in pairs:
            s_obj = rmon(x).output
            f_obj = lepi(x).output
            for obj in (x, s_obj, f_obj):
                for row in adjunction_dims(obj, M):
                    counts[row["id"]] = counts.get(row["id"], 0) + 1
                    if not row["equal"]:
                        fails.append(row)
            for j in range(0, 4):
                for obj in (s_obj, f_obj):
                    for row in ext_identity_dims(obj, M, j):
                        if row["applies"]:
                            key = f"{row['id']}@{j}"
                            counts[key] = counts.get(key, 0) + 1
                            if not row["equal"]:
                                fails.append(dict(row, j=j))
        low = {k: v for k, v in counts.items() if v < 50}
        return not fails and not low, {"pairs": len(pairs), "counts": counts,
                                       "failures": fails[:5], "under_50": low}
    return _timed(6, "Hom/Ext identities between A-mod and chains", 120, run)


def _module_ses_kA2():
    md = kA2_modules()
    S1, S2, P1 = md["S1"], md["S2"], md["P1"]
    from .modrep import ModuleMap
    from .exactla import Matrix
    inc = ModuleMap(S2, P1, Matrix.from_rows([["0"], ["1"]]))
    prj = ModuleMap(P1, S1, Matrix.from_rows([["1", "0"]]))
    return inc, prj


def _module_ses_lambda2():
    md = lambda2_modules()
    J1, J2 = md["J1"], md["J2"]
    from .modrep import ModuleMap
    from .exactla import Matrix
    inc = ModuleMap(J1, J2, Matrix.from_rows([["0"], ["1"]]))
    prj = ModuleMap(J2, J1, Matrix.from_rows([["1", "0"]]))
    return inc, prj


def _split_ses(x, y):
    s = mor_direct_sum([x, y])
    from .exactla import Matrix
    from .modrep import ModuleMap
    lc, rc = [], []
    for j in range(x.n):
        dx, dy = x.branches[j].dim, y.branches[j].dim
        inc = Matrix.block([[Matrix.identity(dx)], [None]], [dx, dy], [dx])
        prj = Matrix.block([[None, Matrix.identity(dy)]], [dy], [dx, dy])
        lc.append(ModuleMap(x.branches[j], s.branches[j], inc))
        rc.append(ModuleMap(s.branches[j], y.branches[j], prj))
    return ShortExact(MorMap(x, s, lc), MorMap(s, y, rc))


def criterion_7(seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed + 7)
        seqs = []
        for x in rem310_objects():
            r = rmon(x)
            seqs.append(("rmon kernel " + x.name, ShortExact(r.kernel_incl, r.counit)))
        for label, (inc, prj) in (("kA2", _module_ses_kA2()), ("lambda2", _module_ses_lambda2())):
            for n in (2, 3):
                for i in range(1, n + 1):
                    seqs.append((f"m_{i} {label} n={n}",
                                 ShortExact(m_i_map(inc, i, n), m_i_map(prj, i, n))))
                    seqs.append((f"p_{i} {label} n={n}",
                                 ShortExact(p_i_map(inc, i, n), p_i_map(prj, i, n))))
        for k in range(6):
            a = kA2() if k % 2 == 0 else lambda2()
            n = 2 + k % 2
            x = random_mor_object(a, n, rng)
            y = random_mor_object(a, n, rng)
            seqs.append((f"split #{k}", _split_ses(x, y)))
            r = rmon(x)
            seqs.append((f"rmon kernel random #{k}", ShortExact(r.kernel_incl, r.counit)))
        bad = [lab for lab, s in seqs if not snake_sequences(s).exact]
        return len(seqs) >= 20 and not bad, {"sequences": len(seqs), "failures": bad}
    return _timed(7, "both six-term snake sequences are exact", 60, run)


def criterion_8(seed: int = 0) -> CriterionResult:
    def run():
        amb = merged_catalog(oracle_catalog("lambda2", 2, 4, False),
                             oracle_catalog("lambda2", 2, 6, True))
        rl = thm44_check(lambda2(), 2, amb)
        rk = thm44_check(kA2(), 2, rem310_catalog())
        ok = (rl.selfinjective and rl.sets_equal and rl.consistent
              and not rk.selfinjective and not rk.sets_equal and rk.consistent
              and rk.probe["in_S_n"] and not rk.probe["gproj"])
        return ok, {"lambda2": {"selfinjective": rl.selfinjective, "sets_equal": rl.sets_equal},
                    "kA2": {"selfinjective": rk.selfinjective, "sets_equal": rk.sets_equal,
                            "probe": rk.probe, "catalog_witness": rk.witness}}
    return _timed(8, "Gproj(T_2(A)) = S_2(A) exactly when A is self-injective", 60, run)


def criterion_9(seed: int = 0) -> CriterionResult:
    def run():
        a, cat = kA2(), rem310_catalog()
        cm = cm_reciprocity(a, 2, cat)
        A = regular(a)
        cor = identity_check("COR33", A, 2, cat, derive_hypothesis("COR33", A))
        rows_cm = [(r["index"], r["rhs"], r["lhs"]) for r in cm.rows]
        rows_cor = [(r["index"], r["lhs"], r["rhs"]) for r in cor.rows]
        return cm.equal and cor.equal and rows_cm == rows_cor, {
            "cm_members": cm.lhs_set, "cor33_members": cor.lhs_set}
    return _timed(9, "CM reciprocity agrees with the perp-left(A) identity table", 30, run)


def criterion_10(seed: int = 0) -> CriterionResult:
    def run():
        a = lambda2()
        sn = oracle_catalog("lambda2", 2, 6, True)
        amb = merged_catalog(oracle_catalog("lambda2", 2, 4, False), sn)
        rep = thm51_check(a, 2, sn_catalog=sn, ambient=amb)
        M = dsum([to_flat(o) for o in sn.objects], None)
        ok = (sn.claims_complete and bigenerator_check(M, a, 2).holds
              and is_finite(rep.gldim) and rep.gldim <= 2
              and rep.direction1.holds and rep.direction2.holds)
        return ok, {"catalog_size": len(sn), "evidence": sn.evidence, "gldim": str(rep.gldim),
                    "ambient_size": len(amb)}
    return _timed(10, "finite type: bi-generator with gl.dim End <= 2", 300, run)


def _rel_dim_pairs():
    a, L = kA2(), lambda2()
    md, ld = kA2_modules(), lambda2_modules()
    cat = rem310_catalog()
    sn = [to_flat(o) for o in cat.objects if sn_membership(o).holds]
    T2 = sn[0].algebra
    mD = to_flat(m_of(DA(a), 2))
    gens = [
        dsum(sn, None),
        dsum([mD] + list(indec_projectives(T2)), None),
        dsum([md["S1"], md["S2"], md["P1"]], a),
        dsum([md["S2"], md["P1"], md["S1"]], a),
        dsum([ld["J1"], ld["J2"]], L),
    ]
    non_gens = [
        dsum([mD], None),
        dsum([md["P1"], md["S1"]], a),
        dsum([ld["J1"]], L),
    ]
    xs = {T2: [to_flat(o) for o in cat.objects],
          a: [md["S1"], md["S2"], md["P1"]], L: [ld["J1"], ld["J2"]]}
    return gens, non_gens, xs


def criterion_11(seed: int = 0) -> CriterionResult:
    def run():
        gens, non_gens, xs = _rel_dim_pairs()
        fails, checked = [], 0
        for M, is_gen in [(m, True) for m in gens] + [(m, False) for m in non_gens]:
            for x in xs[M.algebra]:
                rd = rel_dim(x, M).outcome
                pd = proj_dim(hom_functor_module(M, x))
                checked += 1
                if is_finite(rd) and (not is_finite(pd) or pd > rd):
                    fails.append({"kind": "inequality", "rel": str(rd), "pd": str(pd)})
                if is_gen and rd != pd:
                    fails.append({"kind": "equality", "rel": str(rd), "pd": str(pd)})
        # the cokernel construction for X outside add(T), T = m(D(A_A))
        instances = []
        for alg, cat in (("kA2", rem310_catalog()), ("lambda2", oracle_catalog("lambda2", 2, 6))):
            a = kA2() if alg == "kA2" else lambda2()
            T = to_flat(m_of(DA(a), 2))
            objs = [to_flat(o) for o in cat.objects if sn_membership(o).holds]
            Ms = [dsum(objs, None), dsum([T] + list(indec_projectives(T.algebra)), None)]
            for X in objs:
                if add_membership(X, T).holds:
                    continue
                for M in Ms:
                    inst = cokernel_shift_instance(M, T, X)
                    if is_finite(inst.pd_hom):
                        instances.append({"algebra": alg, "pd_hom": inst.pd_hom,
                                          "pd_Y": str(inst.pd_Y), "holds": inst.holds})
        good = [i for i in instances if i["holds"]]
        ok = not fails and len(good) == len(instances) and len(good) >= 5
        return ok, {"pairs": checked, "failures": fails, "instances": instances}
    return _timed(11, "relative dimension and the pd + 2 cokernel construction", 60, run)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def run_all(seed: int = 0, only=None) -> List[CriterionResult]:
    out = []
    for k, fn in enumerate(CRITERIA, start=1):
        if only and k not in only:
            continue
        out.append(fn(seed))
    return out
