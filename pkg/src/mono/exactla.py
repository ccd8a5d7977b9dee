"""Exact rational linear algebra.

Everything downstream is built on the immutable :class:`Matrix` of
``gmpy2.mpq`` entries and three primitives: :func:`rank`,
:func:`kernel_basis` and :func:`solve`.  Row reduction always produces the
reduced row echelon form, which is unique for a given row space, so every
derived basis is reproducible bit for bit.  Pivots are chosen column by
column, taking the first nonzero entry from the top.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from gmpy2 import mpq

from .errors import InputError

ZERO = mpq(0)
ONE = mpq(1)


def q(x) -> mpq:
    """Coerce an int, str ("p/q" or "p"), Fraction or mpq to mpq."""
    if isinstance(x, str):
        s = x.strip()
        try:
            return mpq(s)
        except ValueError as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise InputError("floating point values are not accepted")
    try:
        return mpq(x)
    except (TypeError, ValueError) as exc:
        raise InputError(f"not a rational: {x!r}") from exc


def qstr(x) -> str:
    return str(mpq(x))


class Matrix:
    """Dense immutable matrix over the rationals (row-major)."""

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, rows: int, cols: int, data):
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)
        self._hash = None
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise InputError(f"matrix shape mismatch: expected {rows}x{cols}")

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, rows, cols, data):
        m = object.__new__(cls)
        m.rows, m.cols, m.data, m._hash = rows, cols, data, None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = (ZERO,) * cols
        return cls._raw(rows, cols, (z,) * rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n))
                                    for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [tuple(q(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [list(c) for c in columns]
        data = tuple(tuple(mpq(c[i]) for c in columns) for i in range(rows))
        return cls._raw(rows, len(columns), data)

    @classmethod
    def diag_blocks(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        r = sum(b.rows for b in blocks)
        c = sum(b.cols for b in blocks)
        out = [[ZERO] * c for _ in range(r)]
        ro = co = 0
        for b in blocks:
            for i in range(b.rows):
                row = out[ro + i]
                for j, v in enumerate(b.data[i]):
                    if v:
                        row[co + j] = v
            ro += b.rows
            co += b.cols
        return cls._raw(r, c, tuple(tuple(x) for x in out))

    @classmethod
    def block(cls, grid: Sequence[Sequence[Optional["Matrix"]]],
              row_sizes: Sequence[int], col_sizes: Sequence[int]) -> "Matrix":
        """Assemble from a grid of blocks; ``None`` entries are zero blocks."""
        r, c = sum(row_sizes), sum(col_sizes)
        out = [[ZERO] * c for _ in range(r)]
        ro = 0
        for bi, brow in enumerate(grid):
            co = 0
            for bj, b in enumerate(brow):
                if b is not None:
                    if b.rows != row_sizes[bi] or b.cols != col_sizes[bj]:
                        raise InputError("block size mismatch")
                    for i in range(b.rows):
                        row = out[ro + i]
                        for j, v in enumerate(b.data[i]):
                            if v:
                                row[co + j] = v
                co += col_sizes[bj]
            ro += row_sizes[bi]
        return cls._raw(r, c, tuple(tuple(x) for x in out))

    # access ---------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> List[mpq]:
        return [r[j] for r in self.data]

    def columns(self) -> List[List[mpq]]:
        return [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(rows), len(cols),
                           tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def flat(self) -> List[mpq]:
        return [v for r in self.data for v in r]

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zeros(self.cols, 0)
        return Matrix._raw(self.cols, self.rows, tuple(zip(*self.data)))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix._raw(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, c) -> "Matrix":
        c = mpq(c)
        return Matrix._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        c = other.cols
        od = other.data
        out = []
        for r in self.data:
            acc = [ZERO] * c
            for k, a in enumerate(r):
                if a:
                    bk = od[k]
                    for j in range(c):
                        b = bk[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(self.rows, c, tuple(out))

    def apply(self, v: Sequence) -> List[mpq]:
        if len(v) != self.cols:
            raise InputError("vector length mismatch")
        out = []
        for r in self.data:
            s = ZERO
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(s)
        return out

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols))

    def _same(self, other):
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.to_json()})"

    # serialization ----------------------------------------------------------
    def to_json(self) -> list:
        return [[str(v) for v in r] for r in self.data]

    @classmethod
    def from_json(cls, obj, rows: Optional[int] = None, cols: Optional[int] = None) -> "Matrix":
        if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
            raise InputError("matrix must be a list of rows")
        if rows is not None and len(obj) != rows:
            raise InputError(f"matrix has {len(obj)} rows, expected {rows}")
        if not obj:
            return cls.zeros(0, cols or 0)
        m = cls.from_rows(obj)
        if cols is not None and m.cols != cols:
            raise InputError(f"matrix has {m.cols} columns, expected {cols}")
        return m


def hstack(ms: Sequence[Matrix], rows: Optional[int] = None) -> Matrix:
    if not ms:
        return Matrix.zeros(rows or 0, 0)
    r = ms[0].rows
    if any(m.rows != r for m in ms):
        raise InputError("hstack row mismatch")
    return Matrix._raw(r, sum(m.cols for m in ms),
                       tuple(sum((m.data[i] for m in ms), ()) for i in range(r)))


def vstack(ms: Sequence[Matrix], cols: Optional[int] = None) -> Matrix:
    if not ms:
        return Matrix.zeros(0, cols or 0)
    c = ms[0].cols
    if any(m.cols != c for m in ms):
        raise InputError("vstack column mismatch")
    return Matrix._raw(sum(m.rows for m in ms), c, sum((m.data for m in ms), ()))


# ---------------------------------------------------------------------------
# row reduction


class RowReducer:
    """Incremental sparse RREF.

    Rows are dicts ``{col: value}``.  The stored rows stay fully reduced, so
    the final state is the unique RREF of the span of all rows added.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> row dict (normalized, reduced)

    def reduce(self, row: dict) -> dict:
        r = {k: v for k, v in row.items() if v}
        piv = self.pivots
        for c in [c for c in r if c in piv]:
            coef = r.get(c)
            if not coef:
                continue
            for k, v in piv[c].items():
                nv = r.get(k, ZERO) - coef * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        inv = ONE / r[lead]
        r = {k: v * inv for k, v in r.items()}
        for c, prow in self.pivots.items():
            coef = prow.get(lead)
            if coef:
                for k, v in r.items():
                    nv = prow.get(k, ZERO) - coef * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[lead] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def kernel_basis(self) -> List[List[mpq]]:
        """Basis of vectors orthogonal to every row (right null space)."""
        n = self.ncols
        piv = self.pivots
        out = []
        for f in range(n):
            if f in piv:
                continue
            v = [ZERO] * n
            v[f] = ONE
            for c, prow in piv.items():
                a = prow.get(f)
                if a:
                    v[c] = -a
            out.append(v)
        return out

    def rref_rows(self) -> List[dict]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def _dense_rref(m: Matrix):
    a = [list(r) for r in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    pr = 0
    for c in range(cols):
        if pr >= rows:
            break
        sel = None
        for i in range(pr, rows):
            if a[i][c]:
                sel = i
                break
        if sel is None:
            continue
        a[pr], a[sel] = a[sel], a[pr]
        prow = a[pr]
        inv = ONE / prow[c]
        for j in range(c, cols):
            if prow[j]:
                prow[j] *= inv
        for i in range(rows):
            if i != pr:
                f = a[i][c]
                if f:
                    ri = a[i]
                    for j in range(c, cols):
                        if prow[j]:
                            ri[j] -= f * prow[j]
        pivots.append(c)
        pr += 1
    return a[:pr], pivots


def rref(m: Matrix):
    """Return (reduced rows as a Matrix, pivot column list)."""
    rows, piv = _dense_rref(m)
    return Matrix._raw(len(rows), m.cols, tuple(tuple(r) for r in rows)), piv


def rank(m: Matrix) -> int:
    return len(_dense_rref(m)[1])


def kernel_basis(m: Matrix) -> List[List[mpq]]:
    """Basis of the right null space, one free column at a time."""
    rows, piv = _dense_rref(m)
    n = m.cols
    pset = set(piv)
    out = []
    for f in range(n):
        if f in pset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for r, c in enumerate(piv):
            a = rows[r][f]
            if a:
                v[c] = -a
        out.append(v)
    return out


def solve(m: Matrix, b: Sequence) -> Optional[List[mpq]]:
    """Some x with m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise InputError(f"right-hand side has length {len(b)}, expected {m.rows}")
    aug = hstack([m, Matrix.from_columns([[q(x) for x in b]], m.rows)]) if m.rows else None
    if aug is None:
        return [ZERO] * m.cols
    rows, piv = _dense_rref(aug)
    if piv and piv[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, c in enumerate(piv):
        x[c] = rows[r][m.cols]
    return x


def solve_many(m: Matrix, bs: Matrix) -> Optional[Matrix]:
    """Solve m X = bs column-wise in one elimination; None if any fails."""
    aug = hstack([m, bs])
    rows, piv = _dense_rref(aug)
    if any(c >= m.cols for c in piv):
        return None
    out = [[ZERO] * bs.cols for _ in range(m.cols)]
    for r, c in enumerate(piv):
        out[c] = rows[r][m.cols:]
    return Matrix._raw(m.cols, bs.cols, tuple(tuple(r) for r in out))


def column_space(m: Matrix) -> Matrix:
    """Columns forming the RREF basis of the column space (canonical)."""
    rows, _ = _dense_rref(m.T)
    return Matrix._raw(m.rows, len(rows), tuple(zip(*rows))) if rows else Matrix.zeros(m.rows, 0)


def pivot_columns(m: Matrix) -> List[int]:
    return _dense_rref(m)[1]


def left_inverse(k: Matrix) -> Matrix:
    """L with L k = I for k of full column rank."""
    piv = pivot_columns(k.T)  # independent rows of k
    if len(piv) != k.cols:
        raise InputError("matrix does not have full column rank")
    sub = k.submatrix(piv, range(k.cols))
    inv = inverse(sub)
    out = [[ZERO] * k.rows for _ in range(k.cols)]
    for jj, r in enumerate(piv):
        for i in range(k.cols):
            out[i][r] = inv.data[i][jj]
    return Matrix._raw(k.cols, k.rows, tuple(tuple(r) for r in out))


def right_inverse(p: Matrix) -> Matrix:
    """R with p R = I for p of full row rank."""
    return left_inverse(p.T).T


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise InputError("inverse of a non-square matrix")
    x = solve_many(m, Matrix.identity(m.rows))
    if x is None or rank(m) != m.rows:
        raise InputError("matrix is singular")
    return x


def vec_to_dict(v: Iterable) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    rr = RowReducer(len(v))
    for w in vectors:
        rr.add(vec_to_dict(w))
    return rr.contains(vec_to_dict(v))


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Optional[List[mpq]]:
    """Coordinates of v in the (independent) list ``basis``, or None."""
    if not basis:
        return [] if not any(v) else None
    m = Matrix.from_columns(basis, len(v))
    return solve(m, v)
