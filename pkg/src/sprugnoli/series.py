"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores only the coefficients that are known for certain,
``coeffs[0] .. coeffs[order]``; everything beyond ``order`` is an unknown
``O(x^(order+1))`` tail.  Arithmetic propagates that precision the way a
big-O term would (products gain precision from valuations, division by ``x``
loses one coefficient), so a result never reports a coefficient that its
inputs did not determine.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    CompositionError,
    DivisionUndefinedError,
    NoRationalSqrtError,
    NotInvertibleError,
    PrecisionError,
    ReversionError,
)

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational coefficient")


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """Cauchy product of two coefficient lists, truncated to indices 0..n."""
    out = [ZERO] * (n + 1)
    lb = len(b)
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        for j in range(min(lb, n + 1 - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _reciprocal(a: Sequence[Fraction], n: int) -> list[Fraction]:
    a0 = a[0]
    out = [ZERO] * (n + 1)
    out[0] = 1 / a0
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j]:
                acc += a[j] * out[k - j]
        out[k] = -acc / a0
    return out


def _horner(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> list[Fraction]:
    """outer(inner) truncated to 0..n; inner[0] must be zero."""
    out = [ZERO] * (n + 1)
    for c in reversed(outer):
        out = _convolve(out, inner, n)
        out[0] += c
    return out


def _rational_sqrt(q: Fraction) -> Fraction:
    if q < 0:
        raise NoRationalSqrtError(f"{q} has no real square root")
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp != p or rd * rd != d:
        raise NoRationalSqrtError(f"{q} is not the square of a rational")
    return Fraction(rp, rd)


class Series:
    """A power series known exactly up to and including ``x**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_poly(cls, coeffs: Sequence[Scalar], order: int) -> "Series":
        """A polynomial, padded with zeros (or cut) to the given order."""
        c = list(coeffs[: order + 1])
        return cls(c + [0] * (order + 1 - len(c)))

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series":
        return cls.from_poly([value], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> "Series":
        return cls.from_poly([0] * k + [c], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.monomial(1, order)

    # -- basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return len(self.coeffs)

    def coeff(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise PrecisionError(f"coefficient {n} is outside the known range 0..{self.order}")
        return self.coeffs[n]

    __getitem__ = coeff

    def in_f(self, r: int) -> bool:
        """Membership in F_r: valuation exactly r (with the leading term known)."""
        return r <= self.order and self.valuation == r

    @property
    def in_f0(self) -> bool:
        return self.in_f(0)

    @property
    def in_f1(self) -> bool:
        return self.in_f(1)

    @property
    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    @property
    def is_odd(self) -> bool:
        return all(not c for c in self.coeffs[0::2])

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise PrecisionError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def at_most(self, order: int) -> "Series":
        """Truncate to ``order`` when more is known; never extends."""
        return self if self.order <= order else Series(self.coeffs[: order + 1])

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"Series([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if c.denominator == 1 or not mono else f"({c})"
                terms.append(cs + ("*" + mono if mono else ""))
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(x^{self.order + 1})"

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            # scalars are exact, so they never limit precision
            return Series.constant(other, max(self.order, 0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series(a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs[: n + 1]))

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Series":
        c = _frac(c)
        return Series(c * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        # (A + O(x^(a+1)))(B + O(x^(b+1))) = AB + O(x^(min(a + vB, b + vA) + 1))
        n = min(self.order + other.valuation, other.order + self.valuation)
        return Series(_convolve(self.coeffs, other.coeffs, n))

    __rmul__ = __mul__

    def mul_x(self, k: int = 1) -> "Series":
        """Multiply by the exact monomial x^k; precision grows by k."""
        return Series((ZERO,) * k + self.coeffs)

    def div_x(self, k: int = 1) -> "Series":
        """Divide by x^k; the first k coefficients must be known zeros."""
        if k > self.order + 1:
            raise DivisionUndefinedError(f"order-{self.order} series cannot be divided by x^{k}")
        if any(self.coeffs[:k]):
            raise DivisionUndefinedError(f"series has valuation {self.valuation} < {k}")
        return Series(self.coeffs[k:])

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires membership in F0."""
        if self.order < 0 or not self.coeffs[0]:
            raise NotInvertibleError("only series with a nonzero constant term are invertible")
        return Series(_reciprocal(self.coeffs, self.order))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionUndefinedError("division by zero scalar")
            return self.scale(1 / _frac(other))
        if not isinstance(other, Series):
            return NotImplemented
        vb = other.valuation
        if vb > other.order:
            raise DivisionUndefinedError("denominator is zero to its known precision")
        if vb == 0:
            return self * other.inverse()
        if self.valuation < vb:
            if self.valuation <= self.order:
                raise DivisionUndefinedError(
                    f"numerator valuation {self.valuation} < denominator valuation {vb}"
                )
            raise DivisionUndefinedError("numerator is not known far enough to cancel x-powers")
        return self.div_x(vb) / other.div_x(vb)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse().scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        if k == 0:
            return Series.one(max(self.order, 0))
        result = None
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- composition ---------------------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """``self(inner)``; the inner series must have valuation at least 1."""
        if inner.order >= 0 and inner.coeffs[0]:
            raise CompositionError("inner series must have zero constant term")
        v = inner.valuation
        m = self.order
        # first known nonzero coefficient of degree >= 1 drives sensitivity to the inner tail
        lead = next((i for i in range(1, m + 1) if self.coeffs[i]), m + 1)
        n = min(v * (m + 1) - 1, inner.order + v * (lead - 1))
        if n < 0:
            return Series([])
        return Series(_horner(self.coeffs, inner.coeffs, n))

    __call__ = compose

    def derivative(self) -> "Series":
        return Series(i * c for i, c in enumerate(self.coeffs) if i)

    def revert(self) -> "Series":
        """Compositional inverse u with self(u) = x and u(0) = 0 (Newton iteration)."""
        if not self.in_f1:
            raise ReversionError("only series in F1 have a compositional inverse")
        n = self.order
        s = self.coeffs
        ds = [i * c for i, c in enumerate(s) if i]
        target = [ZERO, ONE] + [ZERO] * (n - 1)
        u = [ZERO] * (n + 1)
        u[1] = 1 / s[1]
        while True:
            resid = _horner(s, u, n)
            delta = [r - t for r, t in zip(resid, target)]
            if not any(delta):
                return Series(u)
            slope = _horner(ds, u, n)
            step = _convolve(delta, _reciprocal(slope, n), n)
            u = [a - b for a, b in zip(u, step)]

    def sqrt(self) -> "Series":
        """Square root with positive leading coefficient, staying inside Q[[x]]."""
        v = self.valuation
        if v > self.order:
            raise NoRationalSqrtError("square root of a series not known to be nonzero")
        if v % 2:
            raise NoRationalSqrtError(f"odd valuation {v}")
        a = self.coeffs[v:]
        n = len(a) - 1
        t = [ZERO] * (n + 1)
        t[0] = _rational_sqrt(a[0])
        for k in range(1, n + 1):
            acc = sum((t[i] * t[k - i] for i in range(1, k)), ZERO)
            t[k] = (a[k] - acc) / (2 * t[0])
        return Series(t).mul_x(v // 2) if v else Series(t)

    # -- sections and aerations ---------------------------------------------

    def section(self, m: int, r: int) -> "Series":
        """Coefficients at indices m*i + r, as a series in x^i."""
        if m < 1 or not 0 <= r < m:
            raise ValueError(f"need m >= 1 and 0 <= r < m, got m={m}, r={r}")
        return Series(self.coeffs[r::m])

    def bisect_even(self) -> "Series":
        return self.section(2, 0)

    def bisect_odd(self) -> "Series":
        return self.section(2, 1)

    def aerate(self, m: int, r: int, order: int | None = None) -> "Series":
        """Spread coefficient i onto index m*i + r, zeros elsewhere."""
        if m < 1 or not 0 <= r < m:
            raise ValueError(f"need m >= 1 and 0 <= r < m, got m={m}, r={r}")
        known = m * (self.order + 1) + r - 1
        if order is None:
            order = known
        elif order > known:
            raise PrecisionError(f"aeration is only determined up to order {known}")
        out = [ZERO] * (order + 1)
        for i, c in enumerate(self.coeffs):
            j = m * i + r
            if j > order:
                break
            out[j] = c
        return Series(out)


def jacobi_cf(b: Sequence[Scalar], lam: Sequence[Scalar], order: int) -> Series:
    """Expand 1/(1 - b0 x - l0 x^2/(1 - b1 x - l1 x^2/(...))) to the given order.

    ``b`` and ``lam`` repeat cyclically.  The fraction is evaluated bottom-up
    from depth ceil(order/2) + 1, deep enough that the discarded tail only
    touches coefficients beyond ``order``.
    """
    if not b or not lam:
        raise ValueError("coefficient sequences must be non-empty")
    b = [_frac(c) for c in b]
    lam = [_frac(c) for c in lam]
    depth = -(-order // 2) + 1
    x = Series.x(order)
    x2 = Series.monomial(2, order)
    tail = Series.one(order)
    for k in reversed(range(depth)):
        tail = (1 - x * b[k % len(b)] - x2 * tail * lam[k % len(lam)]).inverse()
    return tail.at_most(order)
