"""Midpoint-radius enclosures with exact rational endpoints.

Arithmetic is exact until the midpoint grows beyond a size threshold; then the
midpoint is rounded to a dyadic rational and the rounding error is added to
the radius, so the enclosure property is kept by every operation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from ..exact_algebra.polynomial import frac_str, parse_fraction


def _size(x: Fraction) -> int:
    return max(x.numerator.bit_length(), x.denominator.bit_length())


def round_down(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def round_up(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


@dataclass(frozen=True)
class BallReal:
    mid: Fraction
    rad: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.mid, Fraction):
            object.__setattr__(self, "mid", Fraction(self.mid))
        if not isinstance(self.rad, Fraction):
            object.__setattr__(self, "rad", Fraction(self.rad))
        if self.rad < 0:
            raise ValueError("ball radius must be non-negative")

    @classmethod
    def exact(cls, x) -> "BallReal":
        return cls(Fraction(x), Fraction(0))

    @property
    def lower(self) -> Fraction:
        return self.mid - self.rad

    @property
    def upper(self) -> Fraction:
        return self.mid + self.rad

    @property
    def mag(self) -> Fraction:
        """Upper bound for |x| over the ball."""
        return abs(self.mid) + self.rad

    def contains(self, x) -> bool:
        if isinstance(x, BallReal):
            return self.lower <= x.lower and x.upper <= self.upper
        return abs(Fraction(x) - self.mid) <= self.rad

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def intersects(self, other: "BallReal") -> bool:
        return abs(self.mid - other.mid) <= self.rad + other.rad

    def widen(self, eps) -> "BallReal":
        return BallReal(self.mid, self.rad + Fraction(eps))

    # arithmetic
    def __neg__(self) -> "BallReal":
        return BallReal(-self.mid, self.rad)

    def __add__(self, other) -> "BallReal":
        other = _ball(other)
        return BallReal(self.mid + other.mid, self.rad + other.rad)

    __radd__ = __add__

    def __sub__(self, other) -> "BallReal":
        other = _ball(other)
        return BallReal(self.mid - other.mid, self.rad + other.rad)

    def __rsub__(self, other) -> "BallReal":
        return _ball(other) - self

    def __mul__(self, other) -> "BallReal":
        other = _ball(other)
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return BallReal(self.mid * other.mid, rad)

    __rmul__ = __mul__

    def reciprocal(self) -> "BallReal":
        m = abs(self.mid)
        if m <= self.rad:
            raise ZeroDivisionError("reciprocal of a ball containing zero")
        # max |1/x - 1/m| over |x - m| <= r
        return BallReal(1 / self.mid, self.rad / (m * (m - self.rad)))

    def __truediv__(self, other) -> "BallReal":
        return self * _ball(other).reciprocal()

    def __rtruediv__(self, other) -> "BallReal":
        return _ball(other) * self.reciprocal()

    def settle(self, bits: int, threshold: int | None = None) -> "BallReal":
        """Round to a dyadic midpoint with ``bits`` fractional bits.

        With ``threshold`` set, leaves the ball alone unless its midpoint or
        radius needs more than ``threshold`` bits.
        """
        if threshold is not None and _size(self.mid) <= threshold and _size(self.rad) <= threshold:
            return self
        mid = round_down(self.mid, bits)
        err = self.mid - mid
        rad = round_up(self.rad + err, bits)
        return BallReal(mid, rad)

    def decimal(self, digits: int) -> str:
        return decimal_string(self.mid, digits)

    def to_json(self, prec_bits: int) -> dict:
        return {
            "mid": frac_str(self.mid),
            "rad": frac_str(self.rad),
            "decimal": self.decimal(decimal_digits(prec_bits)),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BallReal":
        return cls(parse_fraction(obj["mid"]), parse_fraction(obj["rad"]))

    def __str__(self) -> str:
        return f"[{self.decimal(20)} +/- {float(self.rad):.3g}]"


def _ball(x) -> BallReal:
    if isinstance(x, BallReal):
        return x
    if isinstance(x, (int, Fraction)):
        return BallReal(Fraction(x))
    raise TypeError(f"cannot treat {type(x).__name__} as a ball")


def decimal_digits(prec_bits: int) -> int:
    return math.ceil(prec_bits * 0.301)


def decimal_string(x: Fraction, digits: int) -> str:
    """``x`` correctly rounded (half-even) to ``digits`` significant digits."""
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN, Emax=10**9, Emin=-(10**9))
    q = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(q, "f") if q.adjusted() > -30 else format(q, "e")


POWER_FLOOR_BITS = 1 << 16


def power_upper(r: Fraction, e: int, bits: int = 64) -> Fraction:
    """A dyadic rational >= r**e for 0 <= r < 1, without forming r**e exactly.

    Uses square-and-multiply on ``bits``-bit mantissas rounded upward.
    Results below 2^-POWER_FLOOR_BITS are returned as that power of two,
    which is still an upper bound and keeps the denominator representable.
    """
    if r < 0 or r >= 1:
        raise ValueError("power_upper needs 0 <= r < 1")
    if r == 0:
        return Fraction(0) if e else Fraction(1)
    if e * _size(r) <= 4 * bits:
        return r**e
    # r <= m 2^k with integer m of at most `bits` bits
    def up(x: Fraction) -> tuple[int, int]:
        shift = bits - (x.numerator.bit_length() - x.denominator.bit_length()) + 1
        if shift >= 0:
            m = -((-x.numerator << shift) // x.denominator)
        else:
            m = -((-x.numerator) // (x.denominator << -shift))
        return m, -shift

    def norm(m: int, k: int) -> tuple[int, int]:
        extra = m.bit_length() - bits
        if extra > 0:
            m = -((-m) >> extra)
            k += extra
        return m, k

    base = norm(*up(r))
    acc = (1, 0)
    while e:
        if e & 1:
            acc = norm(acc[0] * base[0], acc[1] + base[1])
        e >>= 1
        if e:
            base = norm(base[0] * base[0], 2 * base[1])
    m, k = acc
    if k + m.bit_length() < -POWER_FLOOR_BITS:
        return Fraction(1, 1 << POWER_FLOOR_BITS)
    return Fraction(m << k) if k >= 0 else Fraction(m, 1 << -k)
