"""Dense square matrices of rationals, with a lower-triangular specialisation."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PrecisionError, SingularMatrixError
from .series import Series

ZERO = Fraction(0)


class Matrix:
    """Immutable dense n x n matrix over Q."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def identity(cls, n: int):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.rows[i])

    def column(self, k: int) -> list[Fraction]:
        return [r[k] for r in self.rows]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def crop(self, n: int):
        if n > self.dim:
            raise ValueError(f"cannot crop a {self.dim}x{self.dim} matrix to {n}")
        return type(self)([r[:n] for r in self.rows[:n]])

    def is_lower_triangular(self) -> bool:
        return all(not v for i, r in enumerate(self.rows) for v in r[i + 1:])

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product; ``vec`` may be a Series (its first dim coefficients)."""
        if isinstance(vec, Series):
            vec = [vec[i] for i in range(self.dim)]
        if len(vec) != self.dim:
            raise ValueError("vector length does not match dimension")
        return [sum((a * b for a, b in zip(r, vec) if a and b), ZERO) for r in self.rows]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = [[sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols] for r in self.rows]
        if isinstance(self, TriMatrix) and isinstance(other, TriMatrix):
            return TriMatrix(out)
        return Matrix(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        out = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        kind = TriMatrix if isinstance(self, TriMatrix) and isinstance(other, TriMatrix) else Matrix
        return kind(out)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.to_lists() == [list(r) for r in other]
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[[str(v) for v in r] for r in self.rows]})"

    def __str__(self):
        cells = [[str(v) for v in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


class TriMatrix(Matrix):
    """Lower-triangular matrix; every array family builds one of these."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not self.is_lower_triangular():
            raise ValueError("entries above the diagonal must be zero")

    @classmethod
    def from_columns(cls, columns: Sequence[Series], n: int) -> "TriMatrix":
        """Column k of the result holds coefficients 0..n-1 of ``columns[k]``."""
        if len(columns) < n:
            raise ValueError(f"need {n} column series, got {len(columns)}")
        grid = [[ZERO] * n for _ in range(n)]
        for k, col in enumerate(columns[:n]):
            if col.order < n - 1:
                raise PrecisionError(
                    f"column {k} is known only to order {col.order}, need {n - 1}"
                )
            for i in range(n):
                grid[i][k] = col[i]
        return cls(grid)

    def inverse(self) -> "TriMatrix":
        """Exact inverse by forward substitution."""
        n = self.dim
        a = self.rows
        if any(not a[i][i] for i in range(n)):
            raise SingularMatrixError("zero on the diagonal")
        inv = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = 1 / a[j][j]
            for i in range(j + 1, n):
                acc = sum((a[i][k] * inv[k][j] for k in range(j, i) if a[i][k]), ZERO)
                inv[i][j] = -acc / a[i][i]
        return TriMatrix(inv)

    def column_series(self, k: int) -> Series:
        """Column k as a Series known to order dim - 1."""
        return Series(self.column(k))
