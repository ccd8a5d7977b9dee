import pytest
from hypothesis import given, strategies as st

from mono.algcore import (Algebra, algebra_from_json, quotient_by_radical_dim, radical,
                          triangular_algebra, verify_algebra_isomorphism)
from mono.errors import InputError
from mono.fixtures import (kA2, lambda2, lambda_t, path_A3, semisimple_QxQ, square_algebra,
                           square_to_t2_images)

ALGEBRAS = [kA2, lambda2, path_A3, semisimple_QxQ, square_algebra, lambda: lambda_t(3)]


@pytest.mark.parametrize("make,dim", [(kA2, 3), (lambda2, 2), (path_A3, 6), (semisimple_QxQ, 2),
                                      (square_algebra, 9), (lambda: lambda_t(3), 3)])
def test_dimensions(make, dim):
    assert make().dim == dim


@pytest.mark.parametrize("make", ALGEBRAS)
def test_associative_and_unital(make):
    a = make()
    basis = [a.basis_vector(i) for i in range(a.dim)]
    for x in basis:
        assert a.product(a.unit, x) == x and a.product(x, a.unit) == x
        for y in basis:
            for z in basis:
                assert a.product(a.product(x, y), z) == a.product(x, a.product(y, z))


@pytest.mark.parametrize("make,n", [(kA2, 2), (kA2, 3), (lambda2, 2), (lambda2, 3)])
def test_triangular_dimension(make, n):
    a = make()
    t = triangular_algebra(a, n)
    assert t.dim == n * (n + 1) // 2 * a.dim
    assert t.tri_info[1] == n


def test_radical_dimensions():
    assert len(radical(kA2())) == 1
    assert len(radical(lambda2())) == 1
    assert len(radical(semisimple_QxQ())) == 0
    assert quotient_by_radical_dim(triangular_algebra(kA2(), 2)) == 4


def test_opposite_is_an_involution():
    a = kA2()
    op = a.opposite()
    assert op.opposite() is a
    x, y = a.basis_vector(0), a.basis_vector(2)
    assert op.product(x, y) == a.product(y, x)


def test_square_quiver_matches_t2_of_kA2():
    images = square_to_t2_images()
    assert verify_algebra_isomorphism(square_algebra(), triangular_algebra(kA2(), 2), images)


def test_bad_images_are_rejected():
    t = triangular_algebra(kA2(), 2)
    images = square_to_t2_images()
    images = [images[0]] * len(images)
    assert not verify_algebra_isomorphism(square_algebra(), t, images)


@pytest.mark.parametrize("make", ALGEBRAS)
def test_json_round_trip(make):
    a = make()
    b = algebra_from_json(a.to_json())
    assert b.dim == a.dim and b.basis_labels == a.basis_labels
    assert b.mult == a.mult and b.unit == a.unit


def test_structure_constant_json_round_trip():
    t = triangular_algebra(lambda2(), 2)
    b = algebra_from_json(t.to_json())
    assert b.mult == t.mult


def test_unknown_kind_rejected():
    with pytest.raises(InputError):
        algebra_from_json({"kind": "mystery"})


def test_non_associative_constants_rejected():
    mult = [[{0: 1}, {1: 1}], [{1: 1}, {0: 1, 1: 1}]]
    Algebra("ok", mult, [1, 0], ["u", "x"])  # Q[x]/(x^2 - x - 1)
    # x * u = u breaks the unit law
    with pytest.raises(InputError):
        Algebra("bad", [[{0: 1}, {1: 1}], [{0: 1}, {1: 1}]], [1, 0], ["u", "x"])


@given(st.integers(2, 5))
def test_truncated_polynomial_nilpotent(t):
    a = lambda_t(t)
    x = a.basis_vector(a.basis_labels.index("x"))
    p = x
    for _ in range(t - 1):
        p = a.product(p, x)
    assert all(c == 0 for c in p)

