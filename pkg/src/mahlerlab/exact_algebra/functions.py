"""The named Mahler functions, their exact expansions and functional equations.

    T_d(z)     = prod_{n>=0} (1 - z^{d^n})
    U_d(z)     = prod_{n>=0} (1 + z^{2 d^n})
    G_{d,j}(z) = sum_{n>=0} z^{d^n} / (1 - z^{d^{n+j}})
    fTMM, fRPF, fC : generating functions of Thue-Morse, paperfolding, Cantor
    Fcoons(z)  = sum_{n>=0} z^{2^n} / (1 + z^{2^n})
    Gcoons(z)  = sum_{n>=0} z^{2^n} / (1 - z^{2^n})   (= G_{2,0})
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .. import sequences
from .polynomial import ONE, Z, Poly, RatFunc
from .series import TruncatedSeries, substitute_power

FAMILY_KINDS = ("T", "U", "G")
NAMED_KINDS = ("fTMM", "fRPF", "fC", "Fcoons", "Gcoons")


@dataclass(frozen=True)
class FunctionId:
    kind: str
    d: int = 2
    j: int = 0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS + NAMED_KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        if self.kind in NAMED_KINDS:
            # parameters are fixed for the named functions
            object.__setattr__(self, "d", 2 if self.kind != "fC" else 3)
            object.__setattr__(self, "j", 0)
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.j < 0:
            raise ValueError("j must be non-negative")

    @property
    def label(self) -> str:
        if self.kind in ("T", "U"):
            return f"{self.kind}({self.d})"
        if self.kind == "G":
            return f"G({self.d},{self.j})"
        return self.kind

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str) -> "FunctionId":
        """Accepts T2, T(2), U3, G2_2, G(2,2), fTMM, fRPF, fC, F, Fcoons, G, Gcoons."""
        s = text.strip()
        named = {
            "ftmm": "fTMM", "frpf": "fRPF", "fc": "fC",
            "f": "Fcoons", "fcoons": "Fcoons", "g": "Gcoons", "gcoons": "Gcoons",
        }
        if s.lower() in named:
            return cls(named[s.lower()])
        m = re.fullmatch(r"([TU])\(?(\d+)\)?", s)
        if m:
            return cls(m.group(1), int(m.group(2)))
        m = re.fullmatch(r"G\(?(\d+)[_,](\d+)\)?", s)
        if m:
            return cls("G", int(m.group(1)), int(m.group(2)))
        raise ValueError(f"cannot parse function name {text!r}")


def T(d: int) -> FunctionId:
    return FunctionId("T", d)


def U(d: int) -> FunctionId:
    return FunctionId("U", d)


def G(d: int, j: int) -> FunctionId:
    return FunctionId("G", d, j)


FTMM = FunctionId("fTMM")
FRPF = FunctionId("fRPF")
FC = FunctionId("fC")
FCOONS = FunctionId("Fcoons")
GCOONS = FunctionId("Gcoons")


def _powers(d: int, start: int, limit: int):
    e = start
    while e <= limit:
        yield e
        e *= d


def _int_coefficients(f: FunctionId, N: int) -> list[int]:
    c = [0] * (N + 1)
    if f.kind in ("T", "U"):
        c[0] = 1
        sign = -1 if f.kind == "T" else 1
        # factors with smallest exponent > N are 1 + O(z^{N+1})
        for e in _powers(f.d, 1 if f.kind == "T" else 2, N):
            for k in range(N, e - 1, -1):
                c[k] += sign * c[k - e]
    elif f.kind in ("G", "Gcoons"):
        d, j = f.d, f.j
        for e in _powers(d, 1, N):
            step = e * d**j
            for k in range(e, N + 1, step):
                c[k] += 1
    elif f.kind == "Fcoons":
        for e in _powers(2, 1, N):
            for m, k in enumerate(range(e, N + 1, e)):
                c[k] += -1 if m & 1 else 1
    else:
        kind = {
            "fTMM": sequences.SequenceKind.THUE_MORSE,
            "fRPF": sequences.SequenceKind.PAPERFOLDING,
            "fC": sequences.SequenceKind.CANTOR,
        }[f.kind]
        c = sequences.prefix(kind, N + 1)
    return c


def series_of(f: FunctionId, N: int) -> TruncatedSeries:
    """Exact expansion of ``f`` through z^N."""
    if N < 1:
        raise ValueError("series order must be at least 1")
    return TruncatedSeries(_int_coefficients(f, N), N)


def functional_equation(f: FunctionId) -> tuple[RatFunc, RatFunc]:
    """(a, b) with f(z^d) = a(z) f(z) + b(z) for the T, U, G families."""
    if f.kind == "T":
        return RatFunc(ONE, ONE - Z), RatFunc(0)
    if f.kind == "U":
        return RatFunc(ONE, ONE + Z**2), RatFunc(0)
    if f.kind in ("G", "Gcoons"):
        return RatFunc(1), RatFunc(-Z, ONE - Poly.monomial(f.d**f.j))
    raise ValueError(
        f"{f.label} has no first-order Mahler equation of this form; check it through its bridge identity"
    )


def check_mahler_equation(s: TruncatedSeries, d: int, a: RatFunc, b: RatFunc) -> bool:
    """Does ``s(z^d) = a(z) s(z) + b(z)`` hold through the order of ``s``?

    Denominators are cleared first, so only sparse polynomial products occur.
    """
    N = s.order
    lcm = a.den * b.den // a.den.gcd(b.den)
    lhs = substitute_power(s, d) * TruncatedSeries.from_poly(lcm, N)
    ra = a.num * (lcm // a.den)
    rb = b.num * (lcm // b.den)
    rhs = s * TruncatedSeries.from_poly(ra, N) + TruncatedSeries.from_poly(rb, N)
    return lhs == rhs


def verify_functional_equation(f: FunctionId, N: int) -> bool:
    a, b = functional_equation(f)
    return check_mahler_equation(series_of(f, N), f.d, a, b)


class Bridge(str, Enum):
    TMM = "TMM_bridge"
    RPF = "RPF_bridge"
    CANTOR = "Cantor_bridge"
    G21_RATIONAL = "G21_rational"
    U2_RATIONAL = "U2_rational"
    FCOONS = "Fcoons_bridge"

    @classmethod
    def parse(cls, name: str) -> "Bridge":
        try:
            return cls(name)
        except ValueError:
            pass
        for b in cls:
            if b.name.lower() == name.lower():
                return b
        raise ValueError(f"unknown bridge identity {name!r}")


BRIDGE_TEXT = {
    Bridge.TMM: "T(2) = 1/(1-z) - 2 fTMM",
    Bridge.RPF: "G(2,2) = z fRPF",
    Bridge.CANTOR: "U(3) = fC",
    Bridge.G21_RATIONAL: "G(2,1) = z/(1-z)",
    Bridge.U2_RATIONAL: "U(2) = 1/(1-z^2)",
    Bridge.FCOONS: "Fcoons = 2z/(1-z) - G(2,0)",
}


def bridge_sides(bridge: Bridge | str, N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of a bridge identity expanded through z^N."""
    bridge = Bridge.parse(bridge) if not isinstance(bridge, Bridge) else bridge
    geo = TruncatedSeries.from_rational_function(RatFunc(ONE, ONE - Z), N)
    zs = TruncatedSeries.from_poly(Z, N)
    if bridge is Bridge.TMM:
        return series_of(T(2), N), geo - series_of(FTMM, N) * 2
    if bridge is Bridge.RPF:
        return series_of(G(2, 2), N), zs * series_of(FRPF, N)
    if bridge is Bridge.CANTOR:
        return series_of(U(3), N), series_of(FC, N)
    if bridge is Bridge.G21_RATIONAL:
        return series_of(G(2, 1), N), TruncatedSeries.from_rational_function(RatFunc(Z, ONE - Z), N)
    if bridge is Bridge.U2_RATIONAL:
        return series_of(U(2), N), TruncatedSeries.from_rational_function(RatFunc(ONE, ONE - Z**2), N)
    return series_of(FCOONS, N), zs * geo * 2 - series_of(G(2, 0), N)


def verify_bridge_identity(bridge: Bridge | str, N: int) -> bool:
    if N < 1:
        raise ValueError("series order must be at least 1")
    lhs, rhs = bridge_sides(bridge, N)
    return lhs == rhs


def lambert_coefficient(k: int) -> int:
    """Coefficient of z^k in Gcoons: number of n with 2^n | k, i.e. v_2(k) + 1."""
    if k <= 0:
        return 0
    return ((k & -k).bit_length())


__all__ = [
    "FunctionId", "T", "U", "G", "FTMM", "FRPF", "FC", "FCOONS", "GCOONS",
    "series_of", "functional_equation", "check_mahler_equation",
    "verify_functional_equation", "Bridge", "BRIDGE_TEXT", "bridge_sides",
    "verify_bridge_identity", "lambert_coefficient"
]
