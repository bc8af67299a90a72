"""Certified evaluation of the Mahler functions at rational points 0 < |alpha| < 1.

Every value is a finite partial product / partial sum computed in ball
arithmetic plus an explicit rational bound on the omitted tail. With
r = |alpha| and exponents e_n growing like d^n, e_{N+k} >= k e_{N+1}, so

    sum_{n>N} r^{e_n} <= q / (1 - q),        q = r^{e_{N+1}}

which gives the three tail bounds used here:

* products (T_d, U_d): |prod_{n>N} (1 +- x_n) - 1| <= exp(S) - 1 <= S + S^2,
  valid for S <= 1/2 (S the sum above); this is a *relative* bound.
* sums (G_{d,j}, Fcoons, Gcoons): each term is at most r^{d^n} / (1 - q),
  so the tail is at most q / (1 - q)^2.
* coefficient series with 0/1 coefficients (fTMM, fRPF, fC):
  sum_{n>N} r^n = r^{N+1} / (1 - r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .. import sequences
from ..exact_algebra.functions import FunctionId, G, T, U, lambert_coefficient
from .ball import BallReal, power_upper, round_up

GUARD_BITS = 64
MIN_PREC = 8
# keeps every target well above the floor of power_upper
MAX_PREC = 1 << 15


class InvalidPointError(ValueError):
    pass


class TailBoundError(ValueError):
    """The product tail bound needs S <= 1/2; the caller must raise N."""


class NoBridgeError(ValueError):
    pass


@dataclass(frozen=True)
class EvalPoint:
    alpha: Fraction

    def __post_init__(self):
        a = self.alpha
        if not isinstance(a, Fraction):
            if isinstance(a, float):
                raise InvalidPointError("evaluation points must be exact rationals")
            a = Fraction(a)
            object.__setattr__(self, "alpha", a)
        if not 0 < abs(a) < 1:
            raise InvalidPointError(f"need 0 < |alpha| < 1, got {a}")

    @property
    def r(self) -> Fraction:
        return abs(self.alpha)


def _point(p) -> EvalPoint:
    return p if isinstance(p, EvalPoint) else EvalPoint(Fraction(p))


_PRODUCTS = ("T", "U")
_SUMS = ("G", "Gcoons", "Fcoons")
_COEFF = ("fTMM", "fRPF", "fC")


def _exponent(f: FunctionId, n: int) -> int:
    e = f.d**n
    return 2 * e if f.kind == "U" else e


def tail_bound(kind: str, f: FunctionId, p, N: int) -> Fraction:
    """Proven bound on everything past index N.

    ``kind="product"`` (T, U): bound on |prod_{n>N} factor - 1|, relative.
    ``kind="sum"``: absolute bound on the omitted terms (G, Fcoons, Gcoons)
    or on the omitted coefficients (fTMM, fRPF, fC).
    """
    p = _point(p)
    if N < 0:
        raise ValueError("N must be non-negative")
    r = p.r
    if kind == "product":
        if f.kind not in _PRODUCTS:
            raise ValueError(f"{f.label} is not an infinite product")
        q = power_upper(r, _exponent(f, N + 1))
        S = q / (1 - q)
        if S > Fraction(1, 2):
            raise TailBoundError(f"tail sum {float(S):.3g} > 1/2 at N={N}; increase N")
        return S + S * S
    if kind != "sum":
        raise ValueError(f"unknown tail kind {kind!r}")
    if f.kind in _SUMS:
        q = power_upper(r, f.d ** (N + 1))
        return q / (1 - q) ** 2
    if f.kind in _COEFF:
        return power_upper(r, N + 1) / (1 - r)
    raise ValueError(f"{f.label} is an infinite product; use kind='product'")


def _lambert_tail(p: EvalPoint, N: int) -> Fraction:
    # coefficients v_2(k) + 1 <= k, and sum_{k>N} k r^k in closed form
    r = p.r
    return power_upper(r, N + 1) * ((N + 1) - N * r) / (1 - r) ** 2


def _least_index(bound, target: Fraction, guess: int = 0) -> int:
    """Least N >= 0 with bound(N) <= target, for bound non-increasing in N."""
    N = max(guess, 0)
    while True:
        try:
            ok = bound(N) <= target
        except TailBoundError:
            ok = False
        if ok:
            break
        N = N + 1 if N < 64 else N + N // 8
    # step back down in case the guess (or the coarse stride) overshot
    lo = 0
    hi = N
    while lo < hi:
        mid = (lo + hi) // 2
        try:
            ok = bound(mid) <= target
        except TailBoundError:
            ok = False
        if ok:
            hi = mid
        else:
            lo = mid + 1
    return hi


def choose_terms(f: FunctionId, p, prec_bits: int) -> int:
    """Least N with tail_bound(N) <= 2^-(prec+2)."""
    p = _point(p)
    target = Fraction(1, 1 << (prec_bits + 2))
    kind = "product" if f.kind in _PRODUCTS else "sum"
    guess = 0
    if f.kind in _COEFF:
        r = float(p.r)
        guess = max(int((prec_bits + 2) / -math.log2(r)) - 8, 0)
    return _least_index(lambda n: tail_bound(kind, f, p, n), target, guess)


class _Ctx:
    """Working precision for one evaluation."""

    def __init__(self, prec_bits: int, guard: int):
        self.bits = prec_bits + guard
        self.threshold = 4 * prec_bits

    def settle(self, b: BallReal) -> BallReal:
        return b.settle(self.bits, self.threshold)

    def power(self, alpha: Fraction, k: int) -> BallReal:
        size = max(alpha.numerator.bit_length(), alpha.denominator.bit_length())
        if k * size <= self.threshold:
            return BallReal(alpha**k)
        ub = power_upper(abs(alpha), k)
        if ub < Fraction(1, 1 << self.bits):
            return BallReal(Fraction(0), ub)
        acc, base = BallReal(Fraction(1)), BallReal(alpha)
        while k:
            if k & 1:
                acc = self.settle(acc * base)
            k >>= 1
            if k:
                base = self.settle(base * base)
        return acc


def _eval_product(f: FunctionId, p: EvalPoint, N: int, ctx: _Ctx) -> BallReal:
    sign = -1 if f.kind == "T" else 1
    acc = BallReal(Fraction(1))
    for n in range(N + 1):
        acc = ctx.settle(acc * (1 + sign * ctx.power(p.alpha, _exponent(f, n))))
    rel = tail_bound("product", f, p, N)
    return ctx.settle(acc.widen(acc.mag * rel))


def _eval_sum(f: FunctionId, p: EvalPoint, N: int, ctx: _Ctx) -> BallReal:
    acc = BallReal(Fraction(0))
    a = p.alpha
    for n in range(N + 1):
        x = ctx.power(a, f.d**n)
        if f.kind == "Fcoons":
            den = 1 + x
        else:
            den = 1 - (x if f.j == 0 else ctx.power(a, f.d ** (n + f.j)))
        acc = ctx.settle(acc + x / den)
    return ctx.settle(acc.widen(tail_bound("sum", f, p, N)))


def _horner(coeffs, alpha: Fraction) -> Fraction:
    """Exact sum c_n alpha^n using integer arithmetic only."""
    a, b = alpha.numerator, alpha.denominator
    acc, bpow = 0, 1
    for c in reversed(coeffs):
        acc = acc * a + c * bpow
        bpow *= b
    return Fraction(acc, bpow // b)


_SEQ = {
    "fTMM": sequences.SequenceKind.THUE_MORSE,
    "fRPF": sequences.SequenceKind.PAPERFOLDING,
    "fC": sequences.SequenceKind.CANTOR,
}


def _eval_coefficients(f: FunctionId, p: EvalPoint, N: int, ctx: _Ctx) -> BallReal:
    mid = _horner(sequences.prefix(_SEQ[f.kind], N + 1), p.alpha)
    return ctx.settle(BallReal(mid, tail_bound("sum", f, p, N)))


def _check_prec(prec_bits: int) -> None:
    if prec_bits < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} bits")
    if prec_bits > MAX_PREC:
        raise ValueError(f"precision above {MAX_PREC} bits is not supported")


def _certify(compute, prec_bits: int) -> BallReal:
    target = Fraction(1, 1 << prec_bits)
    guard = GUARD_BITS
    for _ in range(6):
        ball = compute(_Ctx(prec_bits, guard))
        if ball.rad <= target:
            # 2^-prec lies on the rounding grid, so this cannot push rad past it
            return BallReal(ball.mid, round_up(ball.rad, prec_bits + guard))
        guard *= 2
    raise ArithmeticError(f"could not reach radius 2^-{prec_bits}")


@lru_cache(maxsize=4096)
def _evaluate(f: FunctionId, alpha: Fraction, prec_bits: int) -> BallReal:
    p = EvalPoint(alpha)
    N = choose_terms(f, p, prec_bits)
    if f.kind in _PRODUCTS:
        impl = _eval_product
    elif f.kind in _SUMS:
        impl = _eval_sum
    else:
        impl = _eval_coefficients
    g = G(2, 0) if f.kind == "Gcoons" else f
    return _certify(lambda ctx: impl(g, p, N, ctx), prec_bits)


def evaluate(f: FunctionId, p, prec_bits: int) -> BallReal:
    """Enclosure of f(alpha) with radius at most 2^-prec_bits."""
    _check_prec(prec_bits)
    p = _point(p)
    return _evaluate(f, p.alpha, prec_bits)


def _extra_bits(x: Fraction) -> int:
    """Bits needed so that multiplying by x loses nothing: >= log2|x| + 1."""
    x = abs(x)
    return max(x.numerator.bit_length() - x.denominator.bit_length() + 1, 0) + 1


def _eval_lambert(p: EvalPoint, prec_bits: int) -> BallReal:
    target = Fraction(1, 1 << (prec_bits + 2))
    guess = max(int((prec_bits + 2) / -math.log2(float(p.r))) - 8, 0)
    N = _least_index(lambda n: _lambert_tail(p, n), target, guess)
    mid = _horner([lambert_coefficient(k) for k in range(N + 1)], p.alpha)
    ctx = _Ctx(prec_bits, GUARD_BITS)
    return ctx.settle(BallReal(mid, _lambert_tail(p, N)))


BRIDGE_PARTNER = {
    "fTMM": "T(2)", "fRPF": "G(2,2)", "fC": "U(3)", "Fcoons": "G(2,0)", "Gcoons": "G(2,0)",
}


def eval_two_routes(f: FunctionId, p, prec_bits: int) -> tuple[BallReal, BallReal]:
    """Two independent enclosures of f(alpha).

    The first comes from the defining series/sum of ``f``; the second goes
    through its bridge partner:

        fTMM   = (1/(1-z) - T_2) / 2
        fRPF   = G_{2,2} / z
        fC     = U_3
        Fcoons = 2z/(1-z) - G_{2,0}
        Gcoons = sum_k (v_2(k)+1) z^k   (Lambert expansion of G_{2,0})
    """
    _check_prec(prec_bits)
    p = _point(p)
    a = p.alpha
    if f.kind not in BRIDGE_PARTNER:
        raise NoBridgeError(f"{f.label} has no bridge partner")
    direct = evaluate(f, p, prec_bits)
    if f.kind == "fTMM":
        bridged = (1 / (1 - a) - evaluate(T(2), p, prec_bits + 1)) * Fraction(1, 2)
    elif f.kind == "fRPF":
        bridged = evaluate(G(2, 2), p, prec_bits + _extra_bits(1 / a)) * (1 / a)
    elif f.kind == "fC":
        bridged = evaluate(U(3), p, prec_bits)
    elif f.kind == "Fcoons":
        bridged = 2 * a / (1 - a) - evaluate(G(2, 0), p, prec_bits)
    else:
        bridged = _eval_lambert(p, prec_bits)
    return direct, bridged
