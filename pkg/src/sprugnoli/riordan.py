"""Ordinary and vertically stretched Riordan arrays."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupMembershipError, PrecisionError
from .matrix import TriMatrix
from .series import Series


def _check_dim(order: int, n: int) -> None:
    if n > order + 1:
        raise PrecisionError(f"dimension {n} exceeds truncation order {order} + 1")


@dataclass(frozen=True)
class RiordanPair:
    """(g, f) with g in F0 and f in F1; column k of its matrix is g*f^k."""

    g: Series
    f: Series

    def __post_init__(self):
        if not self.g.in_f0:
            raise GroupMembershipError("g must have a nonzero constant term")
        if not self.f.in_f1:
            raise GroupMembershipError("f must have valuation exactly 1")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @classmethod
    def identity(cls, order: int) -> "RiordanPair":
        return cls(Series.one(order), Series.x(order))


@dataclass(frozen=True)
class StretchedPair:
    """(g, xf) with g in F0 and the stored series xf of valuation exactly 2."""

    g: Series
    xf: Series

    def __post_init__(self):
        if not self.g.in_f0:
            raise GroupMembershipError("g must have a nonzero constant term")
        if not self.xf.in_f(2):
            raise GroupMembershipError("xf must have valuation exactly 2")

    @property
    def order(self) -> int:
        return min(self.g.order, self.xf.order)


def _power_columns(g: Series, step: Series, n: int) -> list[Series]:
    cols = [g]
    for _ in range(1, n):
        cols.append(cols[-1] * step)
    return cols


def build_riordan(p: RiordanPair, n: int) -> TriMatrix:
    """t[n,k] = [x^n] g f^k."""
    _check_dim(p.order, n)
    return TriMatrix.from_columns(_power_columns(p.g, p.f, n), n)


def riordan_apply(p: RiordanPair, h: Series) -> Series:
    """Action on a series: (g, f) . h = g * h(f)."""
    return (p.g * h.compose(p.f)).at_most(min(p.order, h.order))


def riordan_mul(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    n = min(a.order, b.order)
    return RiordanPair(
        (a.g * b.g.compose(a.f)).at_most(n),
        b.f.compose(a.f).at_most(n),
    )


def riordan_inv(p: RiordanPair) -> RiordanPair:
    fbar = p.f.revert()
    return RiordanPair((1 / p.g.compose(fbar)).at_most(p.order), fbar)


def build_stretched(s: StretchedPair, n: int) -> TriMatrix:
    """Column k generated by g * (xf)^k."""
    _check_dim(s.order, n)
    return TriMatrix.from_columns(_power_columns(s.g, s.xf, n), n)


def stretched_apply(s: StretchedPair, h: Series) -> Series:
    return (s.g * h.compose(s.xf)).at_most(min(s.order, h.order))
