"""Truncated power series with exact rational coefficients z^0..z^N."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .polynomial import Poly, RatFunc, frac_str, parse_fraction


class TruncatedSeries:
    """Coefficients of z^0..z^order. Binary operations truncate to the smaller order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        if len(c) > order + 1:
            c = c[: order + 1]
        else:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.order = order
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncatedSeries":
        return cls(p.coeffs[: order + 1], order)

    @classmethod
    def from_rational_function(cls, r: RatFunc, order: int) -> "TruncatedSeries":
        """Taylor expansion at 0; needs den(0) != 0."""
        den = r.den.coeffs
        if den[0] == 0:
            raise ValueError(f"{r} is not a power series (pole at 0)")
        inv0 = 1 / den[0]
        num = r.num
        out = [Fraction(0)] * (order + 1)
        nz = [(k, c) for k, c in enumerate(den) if k and c]
        for n in range(order + 1):
            acc = num[n]
            for k, c in nz:
                if k > n:
                    break
                acc -= c * out[n - k]
            out[n] = acc * inv0
        return cls(out, order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order})"

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equality on the common truncation."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        other = self._coerce(other)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        # both sides are often sparse (substituted series, sparse products)
        rhs = [(j, b) for j, b in enumerate(other.coeffs[: n + 1]) if b]
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j, b in rhs:
                if i + j > n:
                    break
                out[i + j] += a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        return TruncatedSeries.from_rational_function(RatFunc(1, Poly(self.coeffs)), self.order)

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def substitute_power(self, d: int) -> "TruncatedSeries":
        return substitute_power(self, d)

    def partial_sum(self, x) -> Fraction:
        """Exact value of sum_{n<=order} c_n x^n."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        if isinstance(other, Poly):
            return TruncatedSeries.from_poly(other, self.order)
        if isinstance(other, RatFunc):
            return TruncatedSeries.from_rational_function(other, self.order)
        raise TypeError(f"cannot combine a series with {type(other).__name__}")

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        return cls([parse_fraction(s) for s in obj["coeffs"]], int(obj["order"]))


def substitute_power(s: TruncatedSeries, d: int) -> TruncatedSeries:
    """s(z) -> s(z^d), keeping the order of ``s``."""
    if d < 2:
        raise ValueError("substitution exponent must be at least 2")
    out = [Fraction(0)] * (s.order + 1)
    for k in range(s.order // d + 1):
        out[d * k] = s.coeffs[k]
    return TruncatedSeries(out, s.order)
