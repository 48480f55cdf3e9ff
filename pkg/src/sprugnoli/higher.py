"""Order-m generalisation: arrays from tuples (g, f1, ..., fm).

With k = q*m + r (0 <= r < m) column k is generated by

    g * f1 * ... * fr * (x^(m-1) fm)^q

where fm is supported on exponents congruent to 1 mod m.  For m = 2 this is
exactly a Sprugnoli array.  Only the matrix-level group operations are
offered for m >= 3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GroupMembershipError, PrecisionError
from .matrix import TriMatrix
from .production import ProductionStripes
from .series import Series


@dataclass(frozen=True)
class GeneralTuple:
    g: Series
    fs: tuple[Series, ...]  # f1 .. fm; the last one is the stretched component

    def __post_init__(self):
        object.__setattr__(self, "fs", tuple(self.fs))
        m = len(self.fs)
        if m < 2:
            raise GroupMembershipError("need at least f1 and f2")
        if not self.g.in_f0:
            raise GroupMembershipError("g must have a nonzero constant term")
        for i, f in enumerate(self.fs, 1):
            if not f.in_f1:
                raise GroupMembershipError(f"f{i} must have valuation exactly 1")
        bad = [i for i, c in enumerate(self.fm.coeffs) if c and i % m != 1]
        if bad:
            raise GroupMembershipError(f"f{m} has coefficients off the 1 mod {m} support: {bad}")

    @property
    def m(self) -> int:
        return len(self.fs)

    @property
    def fm(self) -> Series:
        return self.fs[-1]

    @property
    def order(self) -> int:
        return min([self.g.order] + [f.order for f in self.fs])

    @classmethod
    def identity(cls, m: int, order: int) -> "GeneralTuple":
        return cls(Series.one(order), (Series.x(order),) * m)


def column_factors(m: int, k: int) -> tuple[tuple[int, ...], int]:
    """Which f_i (1-based, i < m) multiply column k, and the power of x^(m-1) fm."""
    q, r = divmod(k, m)
    return tuple(range(1, r + 1)), q


def cosine_exponents(k: int) -> tuple[int, int]:
    """The m = 3 exponents of f1 and f2 written with cosines, rounded to integers."""
    e1 = 2 / 3 * (1 - math.cos(2 * math.pi * k / 3))
    e2 = 2 / 3 * (0.5 + math.cos(2 * math.pi * (k + 1) / 3))
    return round(e1), round(e2)


def general_columns(t: GeneralTuple, n: int) -> list[Series]:
    m = t.m
    stretch = t.fm.mul_x(m - 1)
    heads = [t.g]
    for f in t.fs[:-1]:
        heads.append(heads[-1] * f)
    cols = []
    for k in range(n):
        q, r = divmod(k, m)
        cols.append(heads[r] if q == 0 else cols[k - m] * stretch)
    return cols


def build_general(t: GeneralTuple, n: int) -> TriMatrix:
    if n > t.order + 1:
        raise PrecisionError(f"dimension {n} exceeds truncation order {t.order} + 1")
    return TriMatrix.from_columns(general_columns(t, n), n)


def general_apply(t: GeneralTuple, h: Series) -> Series:
    """sum_r g f1..fr * h_r(x^(m-1) fm), h_r the r-th m-section of h."""
    m = t.m
    stretch = t.fm.mul_x(m - 1)
    weight = t.g
    total = None
    for r in range(m):
        if r:
            weight = weight * t.fs[r - 1]
        term = weight * h.section(m, r).compose(stretch)
        total = term if total is None else total + term
    return total.at_most(min(t.order, h.order))


def general_mul(a: GeneralTuple, b: GeneralTuple, n: int) -> TriMatrix:
    return build_general(a, n) @ build_general(b, n)


@dataclass
class GeneralInverse:
    matrix: TriMatrix
    readback: Optional[GeneralTuple]
    regenerates: bool
    reason: str = ""


def read_back(mat: TriMatrix, m: int) -> GeneralTuple:
    """Recover (g, f1, ..., fm) from the first m+1 columns of an array."""
    cols = [mat.column_series(k) for k in range(m + 1)]
    g = cols[0]
    fs = [cols[i] / cols[i - 1] for i in range(1, m)]
    fm = (cols[m] / cols[0]).div_x(m - 1)
    return GeneralTuple(g, tuple(fs) + (fm,))


def general_inv(t: GeneralTuple, n: int) -> GeneralInverse:
    """Exact inverse matrix plus an attempt to read a tuple back off it.

    Read-back divides columns by each other and by x^(m-1), which costs
    precision, so it works from a larger inverse when the tuple allows and
    the regeneration test runs at the dimension the read-back supports.
    """
    big = max(n, min(t.order + 1, n + t.m))
    full = build_general(t, big).inverse()
    inv = full.crop(n)
    try:
        back = read_back(full, t.m)
        d = min(n, back.order + 1)
        ok = build_general(back, d) == full.crop(d)
        return GeneralInverse(inv, back, ok, "" if ok else "read-back tuple does not regenerate the matrix")
    except (ArithmeticError, ValueError) as exc:
        return GeneralInverse(inv, None, False, str(exc))


@dataclass(frozen=True)
class StripeSumReport:
    sums: tuple[Fraction, ...]
    zero_indices: tuple[int, ...]
    periodic_zeros: bool  # zero at every index = 1 mod period inside the window


def stripe_zero_pattern(stripes: ProductionStripes) -> StripeSumReport:
    """Element-wise sum A + B + C + ... over the common window of the stripes."""
    length = min(len(s) for s in stripes.stripes)
    sums = tuple(sum((s[i] for s in stripes.stripes), Fraction(0)) for i in range(length))
    zeros = tuple(i for i, v in enumerate(sums) if not v)
    m = stripes.period
    periodic = all(not sums[i] for i in range(1, length, m))
    return StripeSumReport(sums, zeros, periodic)
