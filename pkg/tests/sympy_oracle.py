"""Independent reference computations with sympy, used to cross-check mono."""

import sympy


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(str(m[i, j])))


def rank(m) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_sympy(m).rank()


def hom_dim(x, y) -> int:
    """dim Hom_A(x, y) from every basis element's action (no generator shortcut)."""
    dx, dy = x.dim, y.dim
    if dx == 0 or dy == 0:
        return 0
    blocks = []
    for ax, ay in zip(x.action, y.action):
        X, Y = to_sympy(ax), to_sympy(ay)
        blocks.append(sympy.kronecker_product(X.T, sympy.eye(dy))
                      - sympy.kronecker_product(sympy.eye(dx), Y))
    big = sympy.Matrix.vstack(*blocks)
    return dx * dy - big.rank()


def ext1_dim(x, y, syz) -> int:
    """Ext^1 from 0 -> K -> P -> x -> 0 with P projective, via the long exact sequence."""
    cover, K, _ = syz
    return hom_dim(K, y) - hom_dim(cover.source, y) + hom_dim(x, y)
