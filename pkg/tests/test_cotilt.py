import pytest
from hypothesis import given, strategies as st

from mono.cotilt import (IDENTITIES, Catalog, add_coresolution, add_resolution, build_mtilt,
                         catalog_from_json, derive_hypothesis, hat_membership, identity_check,
                         is_cotilting, is_tilting, perp_left, perp_right, reciprocity_check,
                         resolving_check)
from mono.errors import Inconclusive, InputError
from mono.fixtures import (DA, REM310_PROJECTIVE, kA2, kA2_modules, lambda2, lambda2_modules,
                           regular, rem310_catalog)
from mono.modrep import dsum, is_projective
from mono.morcat import SubcatSpec, m_of, sn_membership, to_flat

MD = kA2_modules()
NAMED = {"S1": MD["S1"], "S2": MD["S2"], "P1": MD["P1"], "DA": DA(kA2()), "A": regular(kA2())}


def _names(cat, idx):
    return sorted(cat.objects[i].name for i in idx)


def test_catalog_is_eleven_distinct_indecomposables():
    cat = rem310_catalog()
    assert len(cat) == 11 and cat.claims_complete
    assert cat.validate().holds
    flagged = sorted(k for k, v in cat.flags.items() if v == "projective")
    assert flagged == sorted(REM310_PROJECTIVE)
    for o in cat.objects:
        assert is_projective(to_flat(o)) == (o.name in REM310_PROJECTIVE)


def test_catalog_json_round_trip():
    cat = rem310_catalog()
    back = catalog_from_json(cat.to_json())
    assert len(back) == 11 and [o.name for o in back] == [o.name for o in cat]
    assert back.validate().holds
    with pytest.raises(InputError):
        catalog_from_json({"n": 2})


def test_duplicate_catalog_fails_validation():
    cat = rem310_catalog()
    dup = Catalog(cat.algebra, 2, cat.objects + cat.objects[:1], True, "test")
    assert dup.validate().witness == {"index": 11, "duplicate_of": 0}


def test_reciprocity_worked_example():
    cat = rem310_catalog()
    rep = reciprocity_check(dsum([MD["S1"], MD["S2"]]), 2, cat)
    want = ["(P1,0)", "(P1,P1)", "(S2,0)", "(S2,S2)"]
    assert rep.equal
    assert _names(cat, rep.lhs_set) == want and _names(cat, rep.rhs_set) == want


@pytest.mark.parametrize("name,witness", [("S1", "(0,S2)"), ("S2", "(0,P1)"), ("P1", "(0,S1)")])
def test_reciprocity_fails_for_single_modules(name, witness):
    rep = reciprocity_check(MD[name], 2, rem310_catalog())
    assert not rep.equal
    assert rep.witness["name"] == witness
    assert rep.witness["rhs"] and not rep.witness["lhs"]


def test_reciprocity_needs_matching_n():
    with pytest.raises(InputError):
        reciprocity_check(MD["S1"], 3, rem310_catalog())


@given(st.sampled_from(list(NAMED)), st.sampled_from(list(NAMED)))
def test_perp_of_a_sum_is_the_intersection(t1, t2):
    T1, T2 = NAMED[t1], NAMED[t2]
    T = dsum([T1, T2])
    for x in rem310_catalog().objects:
        for Z in (x.branches[0], x.branches[1]):
            both = perp_left(Z, T1).holds and perp_left(Z, T2).holds
            assert perp_left(Z, T).holds == both


def test_perp_inconclusive_without_finite_injective_dimension():
    J1 = lambda2_modules()["J1"]
    with pytest.raises(Inconclusive):
        perp_left(J1, J1, cap=3)
    assert perp_left(J1, J1, mode=2).holds is False


def test_perp_right_examples():
    assert perp_right(MD["S2"], MD["S1"]).holds is False
    assert perp_right(MD["S1"], MD["S2"]).holds


def test_cotilting_verdicts():
    d = is_cotilting(DA(kA2()))
    assert d.holds and d.certificate["inj_dim"] == 0
    a = is_cotilting(regular(kA2()))
    assert a.holds and a.certificate["inj_dim"] == 1
    assert a.certificate["coresolution"].verify(regular(kA2())).holds
    bad = is_cotilting(dsum([MD["S1"], MD["S2"]]))
    assert not bad.holds and bad.witness["condition"] == "ii"
    assert is_tilting(DA(kA2())).holds


def test_resolution_certificates():
    A, D = regular(kA2()), DA(kA2())
    res = add_resolution(D, A)
    assert res.direction == "resolves" and res.verify(A).holds and res.length == 1
    cores = add_coresolution(A, D)
    assert cores.direction == "coresolves" and cores.verify(D).holds
    assert add_resolution(MD["S1"], MD["S2"]) is None


@pytest.mark.parametrize("alg,n", [("kA2", 2), ("kA2", 3), ("lambda2", 2)])
def test_mtilt_certificate(alg, n):
    a = kA2() if alg == "kA2" else lambda2()
    res = build_mtilt(DA(a), n)
    assert res.holds
    assert res.inj_dim == 1 and res.exact and res.terms_in_add
    assert res.end_dim == res.expected_end_dim


@pytest.mark.parametrize("identity", sorted(IDENTITIES))
@pytest.mark.parametrize("tname", ["A", "DA"])
def test_identities_hold_given_their_hypotheses(identity, tname):
    T = NAMED[tname]
    hyp = derive_hypothesis(identity, T)
    if IDENTITIES[identity][3] is not None and hyp is None:
        with pytest.raises(InputError):
            identity_check(identity, T, 2, rem310_catalog(), None)
        return
    rep = identity_check(identity, T, 2, rem310_catalog(), hyp)
    assert rep.equal, rep.witness


def test_unknown_identity_and_missing_hypothesis():
    with pytest.raises(InputError):
        identity_check("NOPE", NAMED["A"], 2, rem310_catalog())
    with pytest.raises(InputError):
        identity_check("PROP38B", NAMED["DA"], 2, rem310_catalog(), None)


def test_resolving_subcategories():
    cat = Catalog(kA2(), None, [MD["S1"], MD["S2"], MD["P1"]], True, "kA2 indecomposables")
    assert resolving_check(SubcatSpec.perp_left(regular(kA2())), cat).holds
    assert resolving_check(SubcatSpec.all(), cat).holds
    assert not resolving_check(SubcatSpec.add([MD["S1"]]), cat).holds


def test_finite_resolution_by_projectives():
    cat = Catalog(kA2(), None, [MD["S1"], MD["S2"], MD["P1"]], True, "kA2 indecomposables")
    spec = SubcatSpec.perp_left(regular(kA2()))
    d = hat_membership(MD["S1"], spec, 3, cat)
    assert d.holds and d.certificate["length"] == 1


def test_m_of_cogenerator_is_in_its_own_perp():
    mD = to_flat(m_of(DA(kA2()), 2))
    assert perp_left(mD, mD).holds
    assert sn_membership(m_of(DA(kA2()), 2)).holds
