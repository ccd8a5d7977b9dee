import random

from hypothesis import given, strategies as st

from mono.approx import (is_left_approximation, is_right_approximation, is_right_minimal, lepi,
                         minimal_left_approximation, minimal_right_approximation, rmon)
from mono.exactla import Matrix
from mono.fixtures import (kA2, kA2_modules, lambda2, oracle_catalog, random_mor_object,
                           rem310_objects)
from mono.modrep import ModuleMap, dsum
from mono.morcat import (MorMap, fn_membership, mor_direct_sum, mor_is_isomorphic, sn_membership,
                         zero_object)

seeds = st.integers(0, 10_000)
OBJ = {o.name: o for o in rem310_objects()}
S2_KA2 = [o for o in rem310_objects() if sn_membership(o).holds]
F2_KA2 = [o for o in rem310_objects() if fn_membership(o).holds]


def test_rmon_of_socle_chain():
    r = rmon(OBJ["(0,S2)"])
    assert mor_is_isomorphic(r.output, OBJ["(P1,S2)_sigma"]).holds


def test_rmon_of_projection_chain():
    r = rmon(OBJ["(S1,P1)_p"])
    want = mor_direct_sum([OBJ["(S1,0)"], OBJ["(P1,P1)"]])
    assert mor_is_isomorphic(r.output, want).holds
    assert r.kernel.dims == [2, 0]


def test_rmon_fixes_members():
    for o in S2_KA2:
        r = rmon(o)
        assert r.output.dims == o.dims
        assert all(c.matrix.is_identity() for c in r.counit.components)


@given(seeds)
def test_rmon_kA2_n2_properties(seed):
    x = random_mor_object(kA2(), 2, random.Random(seed))
    r = rmon(x)
    assert sn_membership(r.output).holds
    assert r.counit.is_epi()
    assert is_right_approximation(r.counit, S2_KA2).holds
    assert is_right_minimal(r.counit).holds
    assert mor_is_isomorphic(r.output, rmon(x, choice=3).output).holds


@given(seeds)
def test_rmon_lambda2_n3_properties(seed):
    x = random_mor_object(lambda2(), 3, random.Random(seed))
    r = rmon(x)
    assert sn_membership(r.output).holds and r.counit.is_epi()
    assert is_right_approximation(r.counit, oracle_catalog("lambda2", 3, 4).objects).holds
    assert is_right_minimal(r.counit).holds


@given(seeds)
def test_lepi_properties(seed):
    x = random_mor_object(kA2(), 2, random.Random(seed))
    r = lepi(x)
    assert fn_membership(r.output).holds
    assert is_left_approximation(r.unit, F2_KA2).holds


def test_zero_map_is_not_an_approximation():
    x = OBJ["(P1,P1)"]
    z = zero_object(kA2(), 2)
    f = MorMap(z, x, [ModuleMap(zb, xb, Matrix.zeros(xb.dim, 0))
                      for zb, xb in zip(z.branches, x.branches)])
    assert not is_right_approximation(f, S2_KA2).holds


def test_redundant_summand_is_not_minimal():
    x = OBJ["(S2,S2)"]
    s = mor_direct_sum([x, x])
    comps = [ModuleMap(sb, xb, Matrix.from_rows([[1, 0]]))
             for sb, xb in zip(s.branches, x.branches)]
    assert not is_right_minimal(MorMap(s, x, comps)).holds


def test_minimal_module_approximations():
    md = kA2_modules()
    M = dsum([md["S1"], md["S2"]])
    f = minimal_right_approximation(M, md["P1"])
    assert f.source.dim == 1 and not f.is_surjective()
    g = minimal_right_approximation(dsum([md["P1"], md["S1"]]), md["S1"])
    assert g.source.dim == 1 and g.is_surjective()
    u = minimal_left_approximation(dsum([md["P1"], md["S1"]]), md["S2"])
    assert u.target.dim == 2 and u.is_injective()


@given(seeds)
def test_minimal_right_approximation_factorises(seed):
    rng = random.Random(seed)
    md = kA2_modules()
    M = dsum([md["S2"], md["P1"]])
    x = random_mor_object(kA2(), 2, rng).branches[0]
    if x.dim == 0:
        return
    f = minimal_right_approximation(M, x)
    assert is_right_approximation(f, [md["S2"], md["P1"]]).holds
    assert is_right_minimal(f).holds
