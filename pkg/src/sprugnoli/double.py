"""The double Riordan group.

An element <<g, f1, f2>> has even g and odd f1, f2; its columns are
g, g f1, g f1 f2, g f1^2 f2, ...  The group law is usually written with
h = sqrt(f1 f2).  Because G is even and F1, F2 are odd, h only ever enters
through h^2 = f1 f2 (G(h) = G^e(f1 f2), F(h)/h = F^o(f1 f2)), so no square
root is taken here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupMembershipError, PrecisionError
from .matrix import TriMatrix
from .series import Series


@dataclass(frozen=True)
class DoubleTriple:
    g: Series
    f1: Series
    f2: Series

    def __post_init__(self):
        if not (self.g.in_f0 and self.g.is_even):
            raise GroupMembershipError("g must be even with nonzero constant term")
        for name in ("f1", "f2"):
            f = getattr(self, name)
            if not (f.in_f1 and f.is_odd):
                raise GroupMembershipError(f"{name} must be odd with nonzero linear term")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f1.order, self.f2.order)

    @classmethod
    def identity(cls, order: int) -> "DoubleTriple":
        x = Series.x(order)
        return cls(Series.one(order), x, x)


def double_columns(d: DoubleTriple, n: int) -> list[Series]:
    cols = [d.g]
    for k in range(1, n):
        cols.append(cols[-1] * (d.f1 if k % 2 else d.f2))
    return cols


def build_double(d: DoubleTriple, n: int) -> TriMatrix:
    """a[n,k] = [x^n] g f1^floor((k+1)/2) f2^floor(k/2)."""
    if n > d.order + 1:
        raise PrecisionError(f"dimension {n} exceeds truncation order {d.order} + 1")
    return TriMatrix.from_columns(double_columns(d, n), n)


def double_mul(a: DoubleTriple, b: DoubleTriple) -> DoubleTriple:
    """<<g,f1,f2>> . <<G,F1,F2>> = <<g G(h), (f1/h) F1(h), (f2/h) F2(h)>>, h^2 = f1 f2."""
    n = min(a.order, b.order)
    hh = a.f1 * a.f2
    return DoubleTriple(
        (a.g * b.g.bisect_even().compose(hh)).at_most(n),
        (a.f1 * b.f1.bisect_odd().compose(hh)).at_most(n),
        (a.f2 * b.f2.bisect_odd().compose(hh)).at_most(n),
    )


def double_inv(d: DoubleTriple) -> DoubleTriple:
    """Inverse via hbar^2 = rho_bar(x^2), rho = (f1 f2) compressed."""
    n = d.order
    rho = (d.f1 * d.f2).bisect_even()
    hbar_sq = rho.revert().aerate(2, 0)
    x = Series.x(n + 1)
    return DoubleTriple(
        (1 / d.g.bisect_even().compose(hbar_sq)).at_most(n),
        (x / d.f1.bisect_odd().compose(hbar_sq)).at_most(n),
        (x / d.f2.bisect_odd().compose(hbar_sq)).at_most(n),
    )
