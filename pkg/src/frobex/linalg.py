"""Exact matrices and vectors over a cyclotomic field.

Matrices keep only their nonzero entries (one dict per row); the public
view is still the dense row-major one. Tensor products pair basis indices
row-major: (i, j) -> i * dim_B + j.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import FieldMismatchError, ShapeError
from .scalars import CycField, CycScalar, Number


class Vec:
    """Dense column vector."""

    __slots__ = ("field", "entries")

    def __init__(self, field: CycField, entries: Iterable[Number]):
        self.field = field
        self.entries = tuple(field.coerce(e) for e in entries)

    @classmethod
    def zeros(cls, field, n):
        return cls(field, [field.zero()] * n)

    @classmethod
    def basis(cls, field, n, i):
        v = [field.zero()] * n
        v[i] = field.one()
        return cls(field, v)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if len(self) != len(other):
            raise ShapeError(f"vector lengths {len(self)} and {len(other)}")

    def __add__(self, other):
        self._check(other)
        return Vec(self.field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return Vec(self.field, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Vec(self.field, [-a for a in self.entries])

    def scale(self, c: Number):
        c = self.field.coerce(c)
        return Vec(self.field, [c * a for a in self.entries])

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def as_column(self) -> "Mat":
        return Mat(self.field, len(self), 1, [{0: e} if e else {} for e in self.entries])

    def as_row(self) -> "Mat":
        return Mat(self.field, 1, len(self), [{j: e for j, e in enumerate(self.entries) if e}])

    def sort_key(self):
        return tuple(e.sort_key() for e in self.entries)

    def to_strings(self) -> List[str]:
        return [str(e) for e in self.entries]

    def __repr__(self):
        return f"Vec({self.to_strings()})"


class Mat:
    """Exact rows x cols matrix, sparse by row."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: CycField, rows: int, cols: int, data: Sequence[Dict[int, CycScalar]]):
        if rows < 0 or cols < 0:
            raise ShapeError("negative dimension")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = tuple(data)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, field: CycField, rows: Sequence[Sequence[Number]], cols: Optional[int] = None) -> "Mat":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged rows")
            d = {}
            for j, e in enumerate(r):
                s = field.coerce(e)
                if s:
                    d[j] = s
            data.append(d)
        return cls(field, len(rows), cols, data)

    @classmethod
    def from_columns(cls, field: CycField, columns: Sequence[Vec], rows: Optional[int] = None) -> "Mat":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        data: List[Dict[int, CycScalar]] = [{} for _ in range(rows)]
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise ShapeError("column length mismatch")
            for i, e in enumerate(c):
                if e:
                    data[i][j] = e
        return cls(field, rows, len(columns), data)

    @classmethod
    def from_dict(cls, field, rows, cols, entries: Dict[Tuple[int, int], Number]) -> "Mat":
        data: List[Dict[int, CycScalar]] = [{} for _ in range(rows)]
        for (i, j), e in entries.items():
            s = field.coerce(e)
            if s:
                data[i][j] = s
        return cls(field, rows, cols, data)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, [{} for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        one = field.one()
        return cls(field, n, n, [{i: one} for i in range(n)])

    # -- access -----------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i].get(j, self.field.zero())

    def row_items(self, i):
        return self._data[i].items()

    def nonzeros(self):
        for i, row in enumerate(self._data):
            for j, e in row.items():
                yield i, j, e

    def nnz(self):
        return sum(len(r) for r in self._data)

    def column(self, j) -> Vec:
        z = self.field.zero()
        return Vec(self.field, [r.get(j, z) for r in self._data])

    def columns(self) -> List[Vec]:
        return [self.column(j) for j in range(self.cols)]

    def row(self, i) -> Vec:
        z = self.field.zero()
        r = self._data[i]
        return Vec(self.field, [r.get(j, z) for j in range(self.cols)])

    @property
    def entries(self) -> List[List[CycScalar]]:
        z = self.field.zero()
        return [[r.get(j, z) for j in range(self.cols)] for r in self._data]

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_strings()})"

    def sort_key(self):
        return tuple(e.sort_key() for row in self.entries for e in row)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.field is other.field
            and self.shape == other.shape
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self._data)))

    def first_difference(self, other: "Mat") -> Optional[Tuple[int, int]]:
        """First (row, col) in row-major order where the entries differ."""
        _same(self, other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} vs {other.shape}")
        for i, (a, b) in enumerate(zip(self._data, other._data)):
            if a != b:
                for j in sorted(set(a) | set(b)):
                    if a.get(j) != b.get(j):
                        return (i, j)
        return None

    def is_zero(self):
        return not any(self._data)

    def is_identity(self):
        return self.rows == self.cols and self == Mat.identity(self.field, self.rows)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        _same(self, other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        data = []
        for a, b in zip(self._data, other._data):
            d = dict(a)
            for j, e in b.items():
                s = d[j] + e if j in d else e
                if s:
                    d[j] = s
                else:
                    d.pop(j, None)
            data.append(d)
        return Mat(self.field, self.rows, self.cols, data)

    def __neg__(self):
        return Mat(self.field, self.rows, self.cols, [{j: -e for j, e in r.items()} for r in self._data])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Number):
        c = self.field.coerce(c)
        if not c:
            return Mat.zeros(self.field, self.rows, self.cols)
        return Mat(self.field, self.rows, self.cols, [{j: c * e for j, e in r.items()} for r in self._data])

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Vec):
            return self.apply(other)
        return mat_mul(self, other)

    def apply(self, v: Vec) -> Vec:
        if self.field is not v.field:
            raise FieldMismatchError(f"{self.field} vs {v.field}")
        if self.cols != len(v):
            raise ShapeError(f"cannot apply {self.shape} to length {len(v)}")
        z = self.field.zero()
        out = []
        ve = v.entries
        for r in self._data:
            acc = z
            for j, e in r.items():
                x = ve[j]
                if x:
                    acc = acc + e * x
            out.append(acc)
        return Vec(self.field, out)

    @property
    def T(self) -> "Mat":
        data: List[Dict[int, CycScalar]] = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, e in r.items():
                data[j][i] = e
        return Mat(self.field, self.cols, self.rows, data)


def _same(a, b):
    if a.field is not b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")


def mat_mul(A: Mat, B: Mat) -> Mat:
    _same(A, B)
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    bd = B._data
    data = []
    for r in A._data:
        acc: Dict[int, CycScalar] = {}
        for k, a in r.items():
            for j, b in bd[k].items():
                p = a * b
                if j in acc:
                    acc[j] = acc[j] + p
                else:
                    acc[j] = p
        data.append({j: e for j, e in acc.items() if e})
    return Mat(A.field, A.rows, B.cols, data)


def compose(*mats: Mat) -> Mat:
    """Right-to-left composite: compose(A, B, C) = A @ B @ C."""
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = mat_mul(m, out)
    return out


def kron(A: Mat, B: Mat) -> Mat:
    """Tensor product A (x) B with row-major index pairing."""
    _same(A, B)
    br, bc = B.rows, B.cols
    data: List[Dict[int, CycScalar]] = []
    for ra in A._data:
        for rb in B._data:
            d = {}
            for j, a in ra.items():
                off = j * bc
                for l, b in rb.items():
                    d[off + l] = a * b
            data.append(d)
    return Mat(A.field, A.rows * br, A.cols * bc, data)


def kron_all(*mats: Mat) -> Mat:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def direct_sum(A: Mat, B: Mat) -> Mat:
    """Block diagonal A (+) B."""
    _same(A, B)
    data = [dict(r) for r in A._data]
    for r in B._data:
        data.append({A.cols + j: e for j, e in r.items()})
    return Mat(A.field, A.rows + B.rows, A.cols + B.cols, data)


def swap_map(d1: int, d2: int, field: CycField) -> Mat:
    """Symmetry V1 (x) V2 -> V2 (x) V1, e_i (x) e_j -> e_j (x) e_i."""
    one = field.one()
    data: List[Dict[int, CycScalar]] = [{} for _ in range(d1 * d2)]
    for i in range(d1):
        for j in range(d2):
            data[j * d1 + i][i * d2 + j] = one
    return Mat(field, d2 * d1, d1 * d2, data)


def vec_kron(a: Vec, b: Vec) -> Vec:
    if a.field is not b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return Vec(a.field, [x * y for x in a.entries for y in b.entries])


# -- elimination ------------------------------------------------------------


def rref(M: Mat) -> Tuple[List[List[CycScalar]], List[int]]:
    """Reduced row echelon form (dense rows) and pivot columns."""
    rows = M.entries
    pivots: List[int] = []
    r = 0
    for c in range(M.cols):
        p = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv if e else e for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(M: Mat) -> int:
    return len(rref(M)[1])


class LinearSolution:
    """Particular solution plus a nullspace basis."""

    def __init__(self, particular: Vec, nullspace: List[Vec], free: List[int]):
        self.particular = particular
        self.nullspace = nullspace
        self.free = free

    @property
    def unique(self):
        return not self.nullspace

    def __repr__(self):
        return f"LinearSolution({self.particular}, nullspace={self.nullspace})"


def solve_linear(A: Mat, b: Vec) -> Optional[LinearSolution]:
    """All solutions of A x = b, or None when the system is inconsistent.

    Gauss-Jordan elimination over the exact field, pivoting on the first
    nonzero entry of each column.
    """
    _same(A, b)
    if len(b) != A.rows:
        raise ShapeError(f"rhs length {len(b)} vs {A.rows} rows")
    F = A.field
    aug = Mat.from_rows(F, [list(r) + [b[i]] for i, r in enumerate(A.entries)], A.cols + 1)
    rows, pivots = rref(aug)
    if A.cols in pivots:
        return None
    n = A.cols
    x = [F.zero()] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero()] * n
        v[f] = F.one()
        for r, c in enumerate(pivots):
            if rows[r][f]:
                v[c] = -rows[r][f]
        basis.append(Vec(F, v))
    return LinearSolution(Vec(F, x), basis, free)


def nullspace(A: Mat) -> List[Vec]:
    sol = solve_linear(A, Vec.zeros(A.field, A.rows))
    return sol.nullspace


def inverse(M: Mat) -> Optional[Mat]:
    """Matrix inverse, or None when singular."""
    if M.rows != M.cols:
        raise ShapeError("inverse of non-square matrix")
    n = M.rows
    F = M.field
    if n == 0:
        return Mat.zeros(F, 0, 0)
    ident = Mat.identity(F, n).entries
    aug = Mat.from_rows(F, [list(r) + ident[i] for i, r in enumerate(M.entries)], 2 * n)
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return Mat.from_rows(F, [r[n:] for r in rows[:n]], n)


def is_invertible(M: Mat) -> bool:
    return M.rows == M.cols and rank(M) == M.rows


def trace(M: Mat):
    acc = M.field.zero()
    for i in range(min(M.rows, M.cols)):
        acc = acc + M[i, i]
    return acc


def charpoly(M: Mat) -> Tuple[CycScalar, ...]:
    """Characteristic polynomial det(xI - M), coefficients ascending (Faddeev-LeVerrier)."""
    n = M.rows
    F = M.field
    coeffs = [F.zero()] * (n + 1)
    coeffs[n] = F.one()
    I = Mat.identity(F, n)
    Mk = Mat.zeros(F, n, n)
    c = F.one()
    for k in range(1, n + 1):
        Mk = mat_mul(M, Mk + I.scale(c))
        c = -trace(Mk) / k
        coeffs[n - k] = c
    return tuple(coeffs)


def format_matrix(M: Mat) -> str:
    return "\n".join("[" + ", ".join(row) + "]" for row in M.to_strings())
