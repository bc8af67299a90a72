"""Dense univariate polynomials and rational functions over the rationals.

Coefficients are :class:`fractions.Fraction`; index = exponent. Both types
are immutable and kept in canonical form, so ``==`` is structural equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def frac_str(x: Fraction) -> str:
    """Always ``p/q``, never a decimal (``1`` becomes ``1/1``)."""
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse ``p/q`` or an integer. Decimals are refused to keep inputs exact."""
    s = text.strip()
    if any(c in s for c in ".eE"):
        raise ValueError(f"expected an exact fraction p/q, got {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"expected an exact fraction p/q, got {text!r}") from None


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # construction helpers
    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_terms(cls, terms: dict[int, object]) -> "Poly":
        if not terms:
            return cls()
        c = [Fraction(0)] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += _as_fraction(v)
        return cls(c)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                x = "z" if k == 1 else f"z^{k}"
                body = x if mag == 1 else f"{mag}*{x}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations
    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        inv_lead = 1 / other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lead
            if c == 0:
                continue
            q[k - dq] = c
            for i, b in enumerate(other.coeffs):
                rem[k - dq + i] -= c * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, d: int) -> "Poly":
        """p(z) -> p(z^d)."""
        if d < 1:
            raise ValueError("substitution exponent must be positive")
        out = [Fraction(0)] * (d * self.degree + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[d * k] = c
        return Poly(out)

    def valuation_at_one(self) -> int:
        """Multiplicity of the root z = 1."""
        if not self.coeffs:
            raise ValueError("zero polynomial has infinite multiplicity")
        root, k, p = Poly([-1, 1]), 0, self
        while True:
            q, r = p.divmod(root)
            if r:
                return k
            p, k = q, k + 1

    def to_json(self) -> list[str]:
        return [frac_str(c) for c in self.coeffs]


def _lift(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


Z = Poly([0, 1])
ONE = Poly([1])


class RatFunc:
    """num/den with den monic and gcd(num, den) = 1; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _lift(num)
        den = ONE if den is None else _lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), ONE
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def display_parts(self) -> tuple[Poly, Poly]:
        """num, den rescaled so that den(0) = 1 when possible (e.g. z/(1 - z))."""
        c0 = self.den[0]
        if c0 == 0 or c0 == 1:
            return self.num, self.den
        return self.num * (1 / c0), self.den * (1 / c0)

    def __str__(self) -> str:
        num, den = self.display_parts()
        if den == ONE:
            return str(num)
        n = str(num)
        if len([c for c in num.coeffs if c]) > 1:
            n = f"({n})"
        return f"{n}/({den})"

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _rf(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-_rf(other))

    def __rsub__(self, other) -> "RatFunc":
        return _rf(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _rf(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _rf(other) / self

    def __pow__(self, e: int) -> "RatFunc":
        if e >= 0:
            return RatFunc(self.num**e, self.den**e)
        return RatFunc(self.den ** (-e), self.num ** (-e))

    def substitute_power(self, d: int) -> "RatFunc":
        return RatFunc(self.num.substitute_power(d), self.den.substitute_power(d))

    def __call__(self, x) -> Fraction:
        return eval_rational_function(self, x)

    def to_json(self) -> dict:
        num, den = self.display_parts()
        return {"num": num.to_json(), "den": den.to_json()}


def _rf(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


def eval_rational_function(r: RatFunc, x) -> Fraction:
    """Exact value ``num(x)/den(x)``; :class:`PoleError` when ``den(x) == 0``."""
    x = _as_fraction(x)
    den = r.den(x)
    if den == 0:
        raise PoleError(f"{r} has a pole at z = {x}")
    return r.num(x) / den

