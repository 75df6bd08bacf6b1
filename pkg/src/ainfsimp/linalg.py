"""Sparse exact matrices and exact linear solving over a field.

Matrices are stored row-major as ``{row: {col: scalar}}`` with zero entries
never stored.  Solving and kernel extraction run textbook fraction-free-ish
Gaussian elimination on a dense copy: the systems that arise here (vectorized
map equations) stay small, so clarity wins over sparsity tricks.

Pivot conventions are fixed so that everything downstream is deterministic:
elimination always picks the leftmost available pivot column and the first
nonzero row, and free variables in a solution are set to zero.
"""

from __future__ import annotations


class DimensionError(ValueError):
    """Shape mismatch in a matrix operation."""


class Matrix:
    """An exact sparse matrix over ``field``."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows=None):
        if nrows < 0 or ncols < 0:
            raise DimensionError("negative matrix dimension")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    # -- construction ------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        one = field.one()
        return cls(field, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_rows(cls, field, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        m = cls(field, nrows, ncols)
        for i, row in enumerate(dense):
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            for j, v in enumerate(row):
                m.set(i, j, v if not isinstance(v, int) else field.from_int(v))
        return m

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries):
        """Build from an iterable of (row, col, scalar)."""
        m = cls(field, nrows, ncols)
        for i, j, v in entries:
            m.add_to(i, j, v)
        return m

    def copy(self):
        return Matrix(self.field, self.nrows, self.ncols,
                      {i: dict(r) for i, r in self.rows.items()})

    # -- entry access ------------------------------------------------------

    def get(self, i, j):
        row = self.rows.get(i)
        if row is None:
            return self.field.zero()
        return row.get(j, self.field.zero())

    def set(self, i, j, v):
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise DimensionError(f"entry ({i},{j}) outside {self.nrows}x{self.ncols}")
        if v == self.field.zero():
            row = self.rows.get(i)
            if row is not None:
                row.pop(j, None)
                if not row:
                    del self.rows[i]
        else:
            self.rows.setdefault(i, {})[j] = v

    def add_to(self, i, j, v):
        self.set(i, j, self.get(i, j) + v)

    def entries(self):
        for i, row in self.rows.items():
            for j, v in row.items():
                yield i, j, v

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def is_zero(self):
        return not self.rows

    def to_dense(self):
        zero = self.field.zero()
        out = [[zero] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    # -- arithmetic --------------------------------------------------------

    def _same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError(
                f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __add__(self, other):
        self._same_shape(other)
        out = self.copy()
        for i, j, v in other.entries():
            out.add_to(i, j, v)
        return out

    def __sub__(self, other):
        self._same_shape(other)
        out = self.copy()
        for i, j, v in other.entries():
            out.add_to(i, j, -v)
        return out

    def __neg__(self):
        return Matrix(self.field, self.nrows, self.ncols,
                      {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def scaled(self, c):
        if c == self.field.zero():
            return Matrix.zeros(self.field, self.nrows, self.ncols)
        return Matrix(self.field, self.nrows, self.ncols,
                      {i: {j: c * v for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        out = Matrix(self.field, self.nrows, other.ncols)
        zero = self.field.zero()
        for i, arow in self.rows.items():
            acc = {}
            for k, a in arow.items():
                brow = other.rows.get(k)
                if brow is None:
                    continue
                for j, b in brow.items():
                    prod = a * b
                    cur = acc.get(j)
                    acc[j] = prod if cur is None else cur + prod
            acc = {j: v for j, v in acc.items() if v != zero}
            if acc:
                out.rows[i] = acc
        return out

    def apply(self, vec):
        """Matrix-vector product; ``vec`` is a list of scalars."""
        if len(vec) != self.ncols:
            raise DimensionError("vector length mismatch")
        zero = self.field.zero()
        out = [zero] * self.nrows
        for i, row in self.rows.items():
            s = zero
            for j, v in row.items():
                s = s + v * vec[j]
            out[i] = s
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return (self - other).is_zero()

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _echelonize(dense, field, ncols):
    """In-place row echelon form; returns the list of pivot columns."""
    zero = field.zero()
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(dense):
            break
        pivot_row = None
        for i in range(r, len(dense)):
            if dense[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        dense[r], dense[pivot_row] = dense[pivot_row], dense[r]
        inv = field.one() / dense[r][c]
        dense[r] = [inv * v for v in dense[r]]
        for i in range(len(dense)):
            if i != r and dense[i][c] != zero:
                f = dense[i][c]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(A):
    dense = A.to_dense()
    return len(_echelonize(dense, A.field, A.ncols))


def solve_linear(A, b):
    """Solve A x = b exactly; free variables are set to zero.

    Returns the solution as a list of scalars, or ``None`` when the system
    is inconsistent.
    """
    if A.nrows != len(b):
        raise DimensionError("right-hand side length mismatch")
    field = A.field
    zero = field.zero()
    aug = [row + [bv] for row, bv in zip(A.to_dense(), list(b))]
    pivots = _echelonize(aug, field, A.ncols)
    for i in range(len(pivots), A.nrows):
        if aug[i][A.ncols] != zero:
            return None
    x = [zero] * A.ncols
    for r, c in enumerate(pivots):
        x[c] = aug[r][A.ncols]
    return x


def inverse(A):
    """Exact inverse of a square matrix, or ``None`` if singular."""
    if A.nrows != A.ncols:
        raise DimensionError("inverse of a non-square matrix")
    field = A.field
    n = A.nrows
    ident = Matrix.identity(field, n).to_dense()
    aug = [row + irow for row, irow in zip(A.to_dense(), ident)]
    pivots = _echelonize(aug, field, n)
    if len(pivots) < n:
        return None
    out = Matrix.zeros(field, n, n)
    for i in range(n):
        for j in range(n):
            out.set(i, j, aug[i][n + j])
    return out


def kernel_basis(A):
    """An exact basis of the null space of A, one vector per free column."""
    field = A.field
    zero, one = field.zero(), field.one()
    dense = A.to_dense()
    pivots = _echelonize(dense, field, A.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(A.ncols):
        if free in pivot_set:
            continue
        v = [zero] * A.ncols
        v[free] = one
        for r, c in enumerate(pivots):
            v[c] = -dense[r][free]
        basis.append(v)
    return basis
