import pytest
from hypothesis import given, strategies as st

import sympy_oracle as so
from mono.errors import InputError
from mono.exactla import (Matrix, column_space, hstack, inverse, kernel_basis, left_inverse, q,
                          rank, right_inverse, solve, vstack)

small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Matrix.from_rows([[draw(small) for _ in range(c)] for _ in range(r)])


def test_rational_parsing():
    assert q("3/6") == q(1) / 2
    assert q(" -2 ") == -2
    with pytest.raises(InputError):
        q("x")


def test_identity_and_zero():
    assert Matrix.identity(3).is_identity()
    assert Matrix.zeros(2, 3).is_zero()
    assert (Matrix.identity(2) @ Matrix.identity(2)).is_identity()


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == so.rank(m)


@given(matrices())
def test_kernel_basis_is_a_basis(m):
    kb = kernel_basis(m)
    assert len(kb) == m.cols - so.rank(m)
    for v in kb:
        assert all(x == 0 for x in m.apply(v))
    if kb:
        assert rank(Matrix.from_columns(kb, m.cols)) == len(kb)


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_systems(m, coeffs):
    x = coeffs[:m.cols]
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None and m.apply(sol) == b


def test_solve_inconsistent_returns_none():
    m = Matrix.from_rows([[1, 0], [1, 0]])
    assert solve(m, [1, 2]) is None


@given(matrices(4, 4))
def test_inverse_when_full_rank(m):
    if m.rows != m.cols or so.rank(m) < m.rows:
        return
    assert (inverse(m) @ m).is_identity()


@given(matrices())
def test_one_sided_inverses(m):
    cs = column_space(m)
    if cs.cols:
        assert (left_inverse(cs) @ cs).is_identity()
    rs = column_space(m.T).T
    if rs.rows:
        assert (rs @ right_inverse(rs)).is_identity()


def test_stacking_shapes():
    a = Matrix.identity(2)
    assert hstack([a, a]).shape == (2, 4)
    assert vstack([a, a]).shape == (4, 2)


def test_json_round_trip():
    m = Matrix.from_rows([["1/2", 0], [-3, "7/5"]])
    assert Matrix.from_json(m.to_json(), 2, 2) == m


def test_json_shape_mismatch_is_input_error():
    with pytest.raises(InputError):
        Matrix.from_json([["1", "2"]], 2, 2)
