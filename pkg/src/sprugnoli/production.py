"""Production matrices and their striped recurrence sequences.

For a lower-triangular M the production matrix is P = M^-1 M', where M' is M
with its top row removed.  Row r+1 of M equals row r of M times P.  Column 0
of P is the Z sequence; column k >= 1 carries stripe (k-1) mod m shifted down
to start at row k-1.  For Riordan arrays m = 1 (the A sequence), Sprugnoli
arrays have m = 2 (A and B), and order-m tuples have m stripes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotStripedError, SingularMatrixError
from .matrix import Matrix, TriMatrix
from .series import Series
from .triple import SprugnoliTriple, compute_r1, compute_r2, sprugnoli_apply

STRIPE_NAMES = "ABCDEFGH"


@dataclass(frozen=True)
class ProductionStripes:
    period: int
    z: tuple[Fraction, ...]
    stripes: tuple[tuple[Fraction, ...], ...]

    def stripe(self, name: str) -> tuple[Fraction, ...]:
        return self.stripes[STRIPE_NAMES.index(name.upper())]

    def stripe_for_column(self, k: int) -> tuple[Fraction, ...]:
        """Recurrence coefficients used for column k >= 1."""
        return self.stripes[(k - 1) % self.period]


def production_matrix(m: TriMatrix) -> Matrix:
    """P = M^-1 M' of dimension dim(M) - 1.

    The cropped window only uses rows and columns of M that are fully
    determined, so every reported entry is exact.
    """
    n = m.dim - 1
    if n < 1:
        raise ValueError("need at least a 2x2 matrix")
    if any(not m[i, i] for i in range(m.dim)):
        raise SingularMatrixError("zero on the diagonal")
    head = m.crop(n)
    shifted = Matrix([m.rows[i + 1][:n] for i in range(n)])
    return head.inverse() @ shifted


def extract_stripes(p: Matrix, period: int, tolerance: Fraction = Fraction(0)) -> ProductionStripes:
    """Read Z and the ``period`` stripes off P, verifying that every column of
    a residue class carries the same shifted sequence."""
    n = p.dim
    for i in range(n):
        for j in range(i + 2, n):
            if p[i, j]:
                raise NotStripedError(f"entry ({i},{j}) above the superdiagonal is {p[i, j]}")
    z = tuple(p.column(0))
    stripes = []
    for j in range(period):
        k0 = j + 1
        if k0 >= n:
            stripes.append(())
            continue
        ref = tuple(p[k0 - 1 + i, k0] for i in range(n - k0 + 1))
        for k in range(k0 + period, n, period):
            for i in range(n - k + 1):
                got = p[k - 1 + i, k]
                if abs(got - ref[i]) > tolerance:
                    raise NotStripedError(
                        f"stripe {STRIPE_NAMES[j]}: column {k} row {k - 1 + i} has {got}, "
                        f"column {k0} has {ref[i]}"
                    )
        stripes.append(ref)
    return ProductionStripes(period, z, tuple(stripes))


def reconstruct(stripes: ProductionStripes, n: int) -> Matrix:
    """Rebuild the n x n production matrix from its stripes."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(min(n, len(stripes.z))):
        rows[i][0] = stripes.z[i]
    for k in range(1, n):
        s = stripes.stripe_for_column(k)
        for i, v in enumerate(s):
            if k - 1 + i < n:
                rows[k - 1 + i][k] = v
    return Matrix(rows)


@dataclass
class RecurrenceReport:
    ok: bool
    checked: int
    violation: Optional[tuple[int, int, Fraction, Fraction]] = None  # (n, k, expected, got)

    def __bool__(self):
        return self.ok


def _dot(row, coeffs, start):
    total = Fraction(0)
    for i, c in enumerate(coeffs):
        j = start + i
        if j >= len(row):
            break
        total += row[j] * c
    return total


def recurrence_check(m: TriMatrix, stripes: ProductionStripes) -> RecurrenceReport:
    """Verify t[n,0] = row(n-1).Z and t[n,k] = row(n-1)[k-1:].stripe for every
    entry on or below the diagonal with n >= 1."""
    checked = 0
    for n in range(1, m.dim):
        prev = m.row(n - 1)
        need = n  # nonzero entries of row n-1 are at indices 0..n-1
        if len(stripes.z) < need:
            break
        for k in range(0, n + 1):
            if k == 0:
                expected = _dot(prev, stripes.z, 0)
            else:
                s = stripes.stripe_for_column(k)
                if len(s) < need - (k - 1):
                    return RecurrenceReport(True, checked)
                expected = _dot(prev, s, k - 1)
            got = m[n, k]
            checked += 1
            if expected != got:
                return RecurrenceReport(False, checked, (n, k, expected, got))
    return RecurrenceReport(True, checked)


@dataclass(frozen=True)
class ClosedFormStripes:
    z: Series
    a: Series
    b: Series
    agrees: bool = True
    mismatch: tuple = field(default=())


def ab_series_closed_form(t: SprugnoliTriple) -> ClosedFormStripes:
    """Z, A, B generating functions of the production matrix of (g, f1, f2):

    A = (1, r1, r2) . (f1/x),  B = (1/x) (1, r1, r2) . f2,
    Z = (1, r1, r2) . ((1 - g0/g)/x).
    """
    r2 = compute_r2(t.f2)
    r1 = compute_r1(t.f1, r2)
    core = SprugnoliTriple(Series.one(t.order), r1, r2)
    a = sprugnoli_apply(core, t.f1.div_x())
    b = sprugnoli_apply(core, t.f2).div_x()
    z = sprugnoli_apply(core, ((1 - t.g.coeff(0) / t.g)).div_x())
    return ClosedFormStripes(z, a, b)


def check_closed_form(t: SprugnoliTriple, dim: int) -> ClosedFormStripes:
    """Cross-validate the closed-form Z, A, B against the matrix-derived stripes;
    on disagreement both are reported in ``mismatch``."""
    from .triple import build_sprugnoli

    cf = ab_series_closed_form(t)
    st = extract_stripes(production_matrix(build_sprugnoli(t, dim + 1)), 2)
    problems = []
    for name, ser, seq in (("Z", cf.z, st.z), ("A", cf.a, st.stripes[0]), ("B", cf.b, st.stripes[1])):
        n = min(len(seq), ser.order + 1)
        if list(ser.coeffs[:n]) != list(seq[:n]):
            problems.append((name, list(ser.coeffs[:n]), list(seq[:n])))
    return ClosedFormStripes(cf.z, cf.a, cf.b, not problems, tuple(problems))
