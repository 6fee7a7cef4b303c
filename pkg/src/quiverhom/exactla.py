"""Exact dense linear algebra over the rationals and prime fields.

Matrices are immutable, row-major and tiny; everything here is plain Python
arithmetic on :class:`fractions.Fraction` (rationals) or reduced ``int``
residues (prime fields).  No floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: ``FieldSpec("rational")`` or ``FieldSpec("prime", p)``."""

    kind: str = "rational"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no characteristic")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"p must be a prime integer, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x) -> object:
        """Coerce ``x`` (int, Fraction, or ``"num/den"`` string) into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def reduce(self, x):
        return x if self.p is None else x % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def elements(self) -> list:
        """All field elements; only defined for prime fields."""
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return list(range(self.p))

    def to_json(self) -> dict:
        if self.p is None:
            return {"kind": "rational"}
        return {"kind": "prime", "p": self.p}

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldSpec.rational()


def scalar_to_json(x):
    """Integers stay integers; proper fractions become ``"num/den"``."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return x.numerator
        return f"{x.numerator}/{x.denominator}"
    return int(x)


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(field, len(rows), cols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("ragged columns")
        return cls.from_rows(field, [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def _raw(cls, field: FieldSpec, rows: list[list], cols: int) -> "Matrix":
        # rows already hold reduced field scalars
        return cls(field, len(rows), cols, tuple(x for r in rows for x in r))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def to_json(self) -> list[list]:
        return [[scalar_to_json(x) for x in r] for r in self.to_rows()]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> "Matrix":
        c = self.cols
        return Matrix(
            self.field, self.cols, self.rows,
            tuple(self.entries[i * c + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        red = self.field.reduce
        a, b = self.to_rows(), other.to_rows()
        bt = list(zip(*b)) if b else [()] * other.cols
        out = [[red(sum((x * y for x, y in zip(r, c)), self.field.zero)) for c in bt] for r in a]
        return Matrix._raw(self.field, out, other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        red = self.field.reduce
        return Matrix(self.field, self.rows, self.cols, tuple(red(x + y) for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        red = self.field.reduce
        return Matrix(self.field, self.rows, self.cols, tuple(red(-x) for x in self.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        red = self.field.reduce
        return Matrix(self.field, self.rows, self.cols, tuple(red(c * x) for x in self.entries))

    def select_rows(self, idx: Iterable[int]) -> "Matrix":
        rows = [self.row(i) for i in idx]
        return Matrix._raw(self.field, rows, self.cols)

    def select_cols(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        return Matrix._raw(self.field, [[r[j] for j in idx] for r in self.to_rows()], len(idx))

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_json()!r}, shape={self.shape})"


def hstack(field: FieldSpec, rows: int, blocks: Sequence[Matrix]) -> Matrix:
    for b in blocks:
        if b.rows != rows:
            raise ValueError("hstack row mismatch")
    cols = sum(b.cols for b in blocks)
    out = [[x for b in blocks for x in b.row(i)] for i in range(rows)]
    return Matrix._raw(field, out, cols)


def vstack(field: FieldSpec, cols: int, blocks: Sequence[Matrix]) -> Matrix:
    for b in blocks:
        if b.cols != cols:
            raise ValueError("vstack column mismatch")
    out = [r for b in blocks for r in b.to_rows()]
    return Matrix._raw(field, out, cols)


def block_diag(field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[field.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix._raw(field, out, cols)


def _rref_rows(field: FieldSpec, rows: list[list], ncols: int, stop: Optional[int] = None):
    """In-place Gauss-Jordan on a list of rows; pivots searched in columns < stop."""
    red, inv = field.reduce, field.inv
    stop = ncols if stop is None else stop
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(stop):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        piv = rows[r]
        s = inv(piv[c])
        if s != 1:
            piv = rows[r] = [red(x * s) for x in piv]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [red(x - f * y) for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (leftmost column, topmost row)."""
    rows, pivots = _rref_rows(m.field, m.to_rows(), m.cols)
    return Matrix._raw(m.field, rows, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.field, m.to_rows(), m.cols)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of ``{v : m @ v == 0}``.

    The basis vector attached to free column ``f`` has a 1 at ``f`` and 0 at
    every other free column, so the coordinates of a kernel vector in this
    basis are just its entries at the free columns (see :func:`free_columns`).
    """
    field = m.field
    rows, pivots = _rref_rows(field, m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    cols = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = field.reduce(-rows[i][f])
        cols.append(v)
    return Matrix.from_columns(field, cols, m.cols) if cols else Matrix.zeros(field, m.cols, 0)


def free_columns(m: Matrix) -> list[int]:
    pivots = set(_rref_rows(m.field, m.to_rows(), m.cols)[1])
    return [c for c in range(m.cols) if c not in pivots]


def solve(m: Matrix, b: Matrix) -> Optional[Matrix]:
    """A particular solution ``x`` of ``m @ x == b``, or ``None`` if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if m.rows != b.rows:
        raise ValueError(f"solve: {m.rows} equations but right-hand side has {b.rows} rows")
    field = m.field
    aug = [m.row(i) + b.row(i) for i in range(m.rows)]
    rows, pivots = _rref_rows(field, aug, m.cols + b.cols)
    if pivots and pivots[-1] >= m.cols:
        return None
    x = [[field.zero] * b.cols for _ in range(m.cols)]
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols:]
    return Matrix._raw(field, x, b.cols)


def column_space(m: Matrix) -> tuple[Matrix, list[int]]:
    """Canonical basis of the column space (as columns) and its pivot coordinates."""
    rows, pivots = _rref_rows(m.field, m.T.to_rows(), m.rows)
    basis = rows[:len(pivots)]
    if not basis:
        return Matrix.zeros(m.field, m.rows, 0), []
    return Matrix._raw(m.field, basis, m.rows).T, pivots


def coimage_projection(m: Matrix) -> tuple[Matrix, int]:
    """Surjection ``q`` from the codomain of ``m`` with ``q @ m == 0``.

    The complement of the column space is spanned by the standard basis
    vectors at the non-pivot coordinates of the canonical column-space
    basis; ``q`` reads off those coordinates.
    """
    q, _ = _coimage(m)
    return q, q.rows


def cokernel_section(m: Matrix) -> tuple[Matrix, Matrix]:
    """``(q, s)`` with ``q`` as in :func:`coimage_projection` and ``q @ s == I``."""
    return _coimage(m)


def _coimage(m: Matrix) -> tuple[Matrix, Matrix]:
    field = m.field
    n = m.rows
    basis, pivots = column_space(m)
    pivset = set(pivots)
    comp = [j for j in range(n) if j not in pivset]
    q = [[field.zero] * n for _ in comp]
    for k, j in enumerate(comp):
        q[k][j] = field.one
        for i, p in enumerate(pivots):
            q[k][p] = field.reduce(-basis[j, i])
    s = [[field.one if comp[k] == i else field.zero for k in range(len(comp))] for i in range(n)]
    return Matrix._raw(field, q, n), Matrix._raw(field, s, len(comp))
