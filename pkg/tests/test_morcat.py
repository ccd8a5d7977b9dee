import random

import pytest
from hypothesis import given, strategies as st

from mono.approx import lepi, rmon
from mono.errors import InputError
from mono.fixtures import (kA2, kA2_modules, lambda2, random_module, random_mor_object,
                           rem310_objects)
from mono.modrep import hom_dim, is_injective, is_projective
from mono.morcat import (MorObject, ShortExact, adjunction_dims, classify_projinj,
                         ext_identity_dims, fn_membership, fn_to_sn, from_flat, m_i,
                         mor_direct_sum, mor_dual, mor_from_json, mor_is_isomorphic, p_i,
                         sn_membership, sn_to_fn, snake_sequences, to_flat)

seeds = st.integers(0, 10_000)
setups = st.sampled_from([("kA2", 2), ("kA2", 3), ("lambda2", 2), ("lambda2", 3)])


def _obj(seed, setup):
    name, n = setup
    a = kA2() if name == "kA2" else lambda2()
    rng = random.Random(seed)
    return random_mor_object(a, n, rng), random_module(a, rng, 2)


def test_planting_shapes():
    P1 = kA2_modules()["P1"]
    assert m_i(P1, 2, 3).dims == [2, 2, 0]
    assert p_i(P1, 2, 3).dims == [0, 2, 2]
    with pytest.raises(InputError):
        m_i(P1, 0, 2)


@given(seeds, setups)
def test_flat_round_trip(seed, setup):
    x, _ = _obj(seed, setup)
    y = from_flat(to_flat(x))
    assert y.dims == x.dims
    assert mor_is_isomorphic(x, from_flat(_rebuilt(x))).holds


def _rebuilt(x):
    # a fresh flat module without the cached back-link
    from mono.modrep import Module
    f = to_flat(x)
    return Module(f.algebra, f.dim, f.action, check=False)


def test_membership_on_the_eleven_objects():
    objs = rem310_objects()
    s = [i for i, o in enumerate(objs) if sn_membership(o).holds]
    f = [i for i, o in enumerate(objs) if fn_membership(o).holds]
    assert s == [0, 1, 2, 3, 4, 6, 9]
    assert f == [2, 4, 5, 7, 8, 9, 10]


@given(seeds, setups)
def test_duality_swaps_mono_and_epi(seed, setup):
    x, _ = _obj(seed, setup)
    assert sn_membership(x).holds == fn_membership(mor_dual(x)).holds
    assert mor_dual(mor_dual(x)) is x


@given(seeds, setups)
def test_cokernel_and_kernel_functors_are_inverse(seed, setup):
    x, _ = _obj(seed, setup)
    s = rmon(x).output
    back = fn_to_sn(sn_to_fn(s))
    assert mor_is_isomorphic(back, s).holds
    f = lepi(x).output
    assert mor_is_isomorphic(sn_to_fn(fn_to_sn(f)), f).holds


@given(seeds, setups)
def test_hom_adjunctions(seed, setup):
    x, M = _obj(seed, setup)
    assert all(r["equal"] for r in adjunction_dims(x, M))


@given(seeds, setups, st.integers(1, 2))
def test_ext_identities(seed, setup, j):
    x, M = _obj(seed, setup)
    for obj in (rmon(x).output, lepi(x).output):
        assert all(r["equal"] for r in ext_identity_dims(obj, M, j))


def _split(x, y):
    from mono.exactla import Matrix
    from mono.modrep import ModuleMap
    from mono.morcat import MorMap
    s = mor_direct_sum([x, y])
    lc, rc = [], []
    for j in range(x.n):
        dx, dy = x.branches[j].dim, y.branches[j].dim
        lc.append(ModuleMap(x.branches[j], s.branches[j],
                            Matrix.block([[Matrix.identity(dx)], [None]], [dx, dy], [dx])))
        rc.append(ModuleMap(s.branches[j], y.branches[j],
                            Matrix.block([[None, Matrix.identity(dy)]], [dy], [dx, dy])))
    return ShortExact(MorMap(x, s, lc), MorMap(s, y, rc))


@given(seeds, setups)
def test_snake_sequences_exact(seed, setup):
    x, _ = _obj(seed, setup)
    y, _ = _obj(seed + 1, setup)
    assert snake_sequences(_split(x, y)).exact
    r = rmon(x)
    assert snake_sequences(ShortExact(r.kernel_incl, r.counit)).exact


def test_snake_rejects_non_exact_input():
    x = rem310_objects()[4]
    inc = _split(x, x).left
    with pytest.raises(InputError):
        snake_sequences(ShortExact(inc, inc))


@pytest.mark.parametrize("make,n", [(kA2, 2), (lambda2, 3)])
def test_projective_and_injective_chains(make, n):
    projs, injs = classify_projinj(make(), n)
    assert all(is_projective(to_flat(p)) for p in projs)
    assert all(is_injective(to_flat(i)) for i in injs)
    t = to_flat(projs[0]).algebra
    assert sum(to_flat(p).dim for p in projs) == t.dim


def test_direct_sum_dims():
    objs = rem310_objects()
    s = mor_direct_sum([objs[3], objs[7]])
    assert s.dims == [3, 3]
    assert hom_dim(to_flat(s), to_flat(s)) >= 2


def test_json_round_trip_and_validation():
    a = kA2()
    for o in rem310_objects():
        back = mor_from_json(o.to_json(), a)
        assert back.dims == o.dims and mor_is_isomorphic(back, o).holds
    obj = rem310_objects()[3].to_json()
    obj["phi"] = [[["1"], ["0"]]]  # S2 -> P1 onto the top: not a module map
    with pytest.raises(InputError):
        mor_from_json(obj, a)
    obj["n"] = 3
    with pytest.raises(InputError):
        mor_from_json(obj, a)
    with pytest.raises(InputError):
        MorObject(a, [], [])
