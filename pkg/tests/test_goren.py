import pytest

from mono.cotilt import derive_hypothesis, identity_check
from mono.errors import Inconclusive
from mono.fixtures import DA, kA2, lambda2, merged_catalog, oracle_catalog, regular, rem310_catalog
from mono.goren import (cm_membership, cm_reciprocity, ginj_membership, ginj_suite,
                        gproj_membership, profile, thm44_check)
from mono.algcore import Algebra, triangular_algebra
from mono.morcat import m_i, m_of


@pytest.mark.parametrize("make,n,dims", [(kA2, 0, (1, 1)), (lambda2, 0, (0, 0)),
                                         (kA2, 2, (2, 2)), (lambda2, 2, (1, 1))])
def test_self_injective_dimensions(make, n, dims):
    a = make() if n == 0 else triangular_algebra(make(), n)
    p = profile(a)
    assert (p.left_selfinj_dim, p.right_selfinj_dim) == dims
    assert p.is_gorenstein


def test_selfinjectivity_flags():
    assert profile(lambda2()).is_selfinjective
    assert not profile(kA2()).is_selfinjective


def _local_nongorenstein():
    # k<x, y>/(x, y)^2 with x y = y x = 0: radical square zero with two loops
    mult = [[{0: 1}, {1: 1}, {2: 1}], [{1: 1}, {}, {}], [{2: 1}, {}, {}]]
    return Algebra("rad2_two_loops", mult, [1, 0, 0], ["e", "x", "y"])


def test_non_gorenstein_is_refused():
    a = _local_nongorenstein()
    assert not profile(a, cap=4).is_gorenstein
    from mono.algcore import regular_modules
    with pytest.raises(Inconclusive):
        gproj_membership(regular_modules(a)[0], cap=4)
    with pytest.raises(Inconclusive):
        ginj_membership(regular_modules(a)[0], cap=4)


def test_gproj_differs_from_monomorphisms_over_kA2():
    rep = thm44_check(kA2(), 2, rem310_catalog())
    assert rep.consistent and not rep.selfinjective and not rep.sets_equal
    assert rep.probe == {"name": "(D(A_A),0,...,0)", "in_S_n": True, "gproj": False}
    assert rep.witness is not None and rep.witness["in_S_n"]


def test_gproj_equals_monomorphisms_over_lambda2():
    amb = merged_catalog(oracle_catalog("lambda2", 2, 4, False),
                         oracle_catalog("lambda2", 2, 6, True))
    rep = thm44_check(lambda2(), 2, amb)
    assert rep.selfinjective and rep.sets_equal


def test_cm_reciprocity_agrees_with_identity_table():
    cat = rem310_catalog()
    cm = cm_reciprocity(kA2(), 2, cat)
    A = regular(kA2())
    cor = identity_check("COR33", A, 2, cat, derive_hypothesis("COR33", A))
    assert cm.equal and cor.equal
    assert [(r["lhs"], r["rhs"]) for r in cm.rows] == [(r["rhs"], r["lhs"]) for r in cor.rows]


def test_cm_members_over_kA2_are_the_projective_chains():
    cat = rem310_catalog()
    members = [o.name for o in cat.objects if cm_membership(o).holds]
    assert sorted(members) == sorted(["(S2,0)", "(P1,0)", "(S2,S2)", "(P1,P1)"])


def test_cogenerator_chain_is_not_gorenstein_projective():
    probe = m_i(DA(kA2()), 1, 2)
    assert not gproj_membership(probe).holds
    assert not gproj_membership(m_of(DA(kA2()), 2)).holds


@pytest.mark.parametrize("alg", ["kA2", "lambda2"])
def test_ginj_suite(alg):
    if alg == "kA2":
        a, cat = kA2(), rem310_catalog()
    else:
        a, cat = lambda2(), oracle_catalog("lambda2", 2, 4, False)
    rep = ginj_suite(a, 2, cat)
    assert rep.holds
