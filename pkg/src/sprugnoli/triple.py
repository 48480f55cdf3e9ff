"""Sprugnoli arrays (g, f1, f2): construction, action, product and inverse.

Column k of the matrix of (g, f1, f2) is generated by
``g * f1^(k mod 2) * (x f2)^(k // 2)``, where g is in F0, f1 in F1, and f2 is
an odd member of F1.

Every formal square root sqrt(x f2) that appears in the group law cancels
against the oddness of f2 or v2, so the computations below work with
bisections and with the compressed series sigma = (x f2)^e instead:
``x r2 = sigma_bar(x^2)`` and the third product component is
``f2 * v2^o(x f2)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupMembershipError, PrecisionError
from .matrix import TriMatrix
from .riordan import RiordanPair, build_riordan
from .series import Series


@dataclass(frozen=True)
class SprugnoliTriple:
    g: Series
    f1: Series
    f2: Series

    def __post_init__(self):
        if not self.g.in_f0:
            raise GroupMembershipError("g must have a nonzero constant term")
        if not self.f1.in_f1:
            raise GroupMembershipError("f1 must have valuation exactly 1")
        if not (self.f2.in_f1 and self.f2.is_odd):
            raise GroupMembershipError("f2 must be odd with a nonzero linear term")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f1.order, self.f2.order)

    @classmethod
    def identity(cls, order: int) -> "SprugnoliTriple":
        x = Series.x(order)
        return cls(Series.one(order), x, x)

    def truncate(self, order: int) -> "SprugnoliTriple":
        return SprugnoliTriple(self.g.truncate(order), self.f1.truncate(order), self.f2.truncate(order))


@dataclass(frozen=True)
class InverseParts:
    """Intermediate series of the inverse: (1, r1, r2) = (1, f1, f2)^-1 and (w, s1, s2)."""

    r1: Series
    r2: Series
    w: Series
    s1: Series
    s2: Series


def sprugnoli_columns(t: SprugnoliTriple, n: int) -> list[Series]:
    xf2 = t.f2.mul_x()
    cols = [t.g]
    for k in range(1, n):
        cols.append(cols[-1] * t.f1 if k % 2 else cols[-2] * xf2)
    return cols


def build_sprugnoli(t: SprugnoliTriple, n: int) -> TriMatrix:
    """t[n,k] = [x^n] g f1^(k mod 2) (x f2)^(k // 2)."""
    if n > t.order + 1:
        raise PrecisionError(f"dimension {n} exceeds truncation order {t.order} + 1")
    return TriMatrix.from_columns(sprugnoli_columns(t, n), n)


def aeration_split(t: SprugnoliTriple, n: int) -> tuple[TriMatrix, TriMatrix]:
    """Even-column part (aerated stretched (g, x f2)) and odd-column part
    (aerated stretched (g f1, x f2)); the two sum to the full array."""
    full = build_sprugnoli(t, n)
    even = [[v if k % 2 == 0 else 0 for k, v in enumerate(row)] for row in full.rows]
    odd = [[v if k % 2 == 1 else 0 for k, v in enumerate(row)] for row in full.rows]
    return TriMatrix(even), TriMatrix(odd)


def _bisected_action(a: Series, b: Series, h: Series, inner: Series) -> Series:
    """a * h^e(inner) + b * h^o(inner)."""
    return a * h.bisect_even().compose(inner) + b * h.bisect_odd().compose(inner)


def sprugnoli_apply(t: SprugnoliTriple, h: Series) -> Series:
    """(g, f1, f2) . h = g h^e(x f2) + g f1 h^o(x f2)."""
    n = min(t.order, h.order)
    return _bisected_action(t.g, t.g * t.f1, h, t.f2.mul_x()).at_most(n)


def third_component(f2: Series, v2: Series) -> Series:
    """(1/x) sqrt(x f2) v2(sqrt(x f2)), which for odd v2 is f2 * v2^o(x f2)."""
    return (f2 * v2.bisect_odd().compose(f2.mul_x())).at_most(min(f2.order, v2.order))


def sprugnoli_mul(a: SprugnoliTriple, b: SprugnoliTriple) -> SprugnoliTriple:
    n = min(a.order, b.order)
    first = sprugnoli_apply(a, b.g)
    second = sprugnoli_apply(a, b.g * b.f1) / first
    return SprugnoliTriple(first.at_most(n), second.at_most(n), third_component(a.f2, b.f2).at_most(n))


def compute_r2(f2: Series) -> Series:
    """r2 = (1/x) (reversion of sqrt(x f2))^2, computed as sigma_bar(x^2)/x."""
    if not (f2.in_f1 and f2.is_odd):
        raise GroupMembershipError("f2 must be odd with a nonzero linear term")
    sigma = f2.mul_x().bisect_even()
    xr2 = sigma.revert().aerate(2, 0)
    r2 = xr2.div_x()
    if r2.order < f2.order and r2.order % 2 == 1:
        # r2 is odd, so the next (even) coefficient is known to vanish
        r2 = Series(r2.coeffs + (0,))
    return r2.at_most(f2.order)


def compute_r1(f1: Series, r2: Series) -> Series:
    """r1 = (x - f1^e(x r2)) / f1^o(x r2)."""
    xr2 = r2.mul_x()
    n = min(f1.order, r2.order)
    x = Series.x(n + 1)
    num = x - f1.bisect_even().compose(xr2)
    den = f1.bisect_odd().compose(xr2)
    if not den.in_f0:
        raise GroupMembershipError("f1 must have a nonzero linear term")
    return (num / den).at_most(n)


def inverse_parts(t: SprugnoliTriple) -> InverseParts:
    n = t.order
    r2 = compute_r2(t.f2)
    r1 = compute_r1(t.f1, r2)
    xr2 = r2.mul_x()
    ginv = 1 / t.g
    ge = ginv.bisect_even().compose(xr2)
    go = ginv.bisect_odd().compose(xr2)
    w = (ge + r1 * go).at_most(n)
    # w(0) = 1/g(0); checked anyway since a truncation slip here would divide by x
    if not w.in_f0:
        raise ArithmeticError("w lost its constant term")
    s1 = ((xr2 * go + r1 * ge) / w).at_most(n)
    return InverseParts(r1=r1, r2=r2, w=w, s1=s1, s2=r2)


def sprugnoli_inv(t: SprugnoliTriple) -> SprugnoliTriple:
    """(g, f1, f2)^-1 = (1, r1, r2) . (1/g, x, x) = (w, s1, r2)."""
    p = inverse_parts(t)
    return SprugnoliTriple(p.w, p.s1, p.s2)


def sums_gf(t: SprugnoliTriple, mode: str = "rows") -> Series:
    """Row sums g(1+f1)/(1 - x f2) or diagonal sums g(1+x f1)/(1 - x^3 f2).

    Both come from the bivariate gf at y = 1 and y = x.
    """
    if mode == "rows":
        out = t.g * (1 + t.f1) / (1 - t.f2.mul_x())
    elif mode in ("diagonals", "diags"):
        out = t.g * (1 + t.f1.mul_x()) / (1 - t.f2.mul_x(3))
    else:
        raise ValueError(f"mode must be 'rows' or 'diagonals', not {mode!r}")
    return out.at_most(t.order)


def bivariate_gf(t: SprugnoliTriple, y: Series) -> Series:
    """g (1 + y f1) / (1 - y^2 x f2), for y a constant or a series with y(0) allowed."""
    return (t.g * (1 + y * t.f1) / (1 - y * y * t.f2.mul_x())).at_most(t.order)


def from_riordan_sqrt_case(g: Series, f2: Series) -> SprugnoliTriple:
    """(g, sqrt(x f2), f2), whose matrix is the Riordan array (g, sqrt(x f2))."""
    f1 = f2.mul_x().sqrt().at_most(min(g.order, f2.order))
    return SprugnoliTriple(g, f1, f2)


def as_riordan(t: SprugnoliTriple) -> RiordanPair:
    return RiordanPair(t.g, t.f1)


def riordan_matrix_of_sqrt_case(t: SprugnoliTriple, n: int) -> TriMatrix:
    return build_riordan(as_riordan(t), n)
