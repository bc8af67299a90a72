"""Decide the rational-solution questions behind the Mahler-method independence criterion.

Additive family, with D = d^m:

    g(z^d) = g(z) - sum_{j=0}^m c_j z / (1 - z^{d^j})

A rational solution must be g = A(z) / (1 - z^D) with deg A <= D
(the standard denominator bound for such equations). Multiplying by 1 - z^{dD} turns the
equation into a finite linear system in the D + 1 coefficients of A, which is
solved exactly; solvability then reduces to linear conditions on c.

Multiplicative family, factor base {1 - z, 1 + z^2}:

    r(z^d) = (1 - z)^{-n1} (1 + z^2)^{-n2} r(z)

Writing r = s/t in lowest terms, same-sign exponents force one of s, t to be
constant and leave t(z^d) = p(z) t(z) with p a product of the base factors;
mixed signs are ruled out by the multiplicity of the root z = 1, which
z -> z^d preserves.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .exact_algebra.linalg import nullspace_vector, rref
from .exact_algebra.polynomial import ONE, Z, Poly, RatFunc


@dataclass(frozen=True)
class AdditiveFeqInstance:
    d: int
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if not self.c:
            raise ValueError("need at least one coefficient c_0")
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))

    @property
    def m(self) -> int:
        return len(self.c) - 1

    def equation_rhs(self) -> RatFunc:
        """sum_j c_j z / (1 - z^{d^j})."""
        total = RatFunc(0)
        for j, cj in enumerate(self.c):
            if cj:
                total = total + RatFunc(Z * cj, ONE - Poly.monomial(self.d**j))
        return total

    def is_solution(self, g: RatFunc) -> bool:
        return g.substitute_power(self.d) == g - self.equation_rhs()


@dataclass(frozen=True)
class MultiplicativeFeqInstance:
    d: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")

    def multiplier(self) -> RatFunc:
        """(1 - z)^{-n1} (1 + z^2)^{-n2}."""
        return RatFunc(ONE - Z) ** (-self.n1) * RatFunc(ONE + Z**2) ** (-self.n2)

    def is_solution(self, r: RatFunc) -> bool:
        return not r.is_zero() and r.substitute_power(self.d) == self.multiplier() * r


@dataclass
class DeciderVerdict:
    solvable: bool
    witness: RatFunc | None
    certificate: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "solvable": self.solvable,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class _AdditiveSystem:
    D: int
    n_equations: int
    rank: int
    constraints: tuple[tuple[Fraction, ...], ...]  # rows K with K c = 0
    solution_map: tuple[tuple[int, tuple[Fraction, ...]], ...]  # a_i = sum_j coef_j c_j


@lru_cache(maxsize=64)
def _additive_system(d: int, m: int) -> _AdditiveSystem:
    D = d**m
    top = d * D
    # unknown a_i is column i; c_j is column D + 1 + j
    rows: dict[int, dict[int, int]] = {}

    def add(row: int, col: int, v: int) -> None:
        r = rows.setdefault(row, {})
        x = r.get(col, 0) + v
        if x:
            r[col] = x
        else:
            r.pop(col, None)

    for i in range(D + 1):
        add(d * i, i, 1)  # A(z^d)
        for k in range(d):  # -A(z) (1 + z^D + ... + z^{(d-1)D})
            add(i + k * D, i, -1)
    for j in range(m + 1):
        step = d**j
        for k in range(top // step):  # + c_j z (1 - z^{dD}) / (1 - z^{d^j})
            add(1 + k * step, D + 1 + j, 1)
    echelon = rref(rows.values(), list(range(D + 1)))
    constraints = []
    solution = []
    for pc, r in echelon:
        ccoef = tuple(Fraction(r.get(D + 1 + j, 0)) for j in range(m + 1))
        if pc < 0:
            constraints.append(ccoef)
        else:
            # free a's are set to 0; the rref row reads pv a_pc + sum ... = 0
            pv = r[pc]
            solution.append((pc, tuple(-x / pv for x in ccoef)))
    basis = rref(
        ({j: int(x) for j, x in enumerate(row) if x} for row in constraints), list(range(m + 1))
    )
    constraints = tuple(
        tuple(Fraction(r.get(j, 0)) for j in range(m + 1)) for _, r in basis
    )
    return _AdditiveSystem(
        D=D,
        n_equations=top + 1,
        rank=sum(1 for pc, _ in echelon if pc >= 0),
        constraints=constraints,
        solution_map=tuple(solution),
    )


def decide_additive(inst: AdditiveFeqInstance | None = None, *, d: int | None = None,
                    c: Sequence | None = None) -> DeciderVerdict:
    """Is there g in Q(z) with g(z^d) = g(z) - sum_j c_j z/(1 - z^{d^j})?"""
    if inst is None:
        inst = AdditiveFeqInstance(d, tuple(c))
    d, m, c = inst.d, inst.m, inst.c
    system = _additive_system(d, m)
    D = system.D
    desc = (
        f"ansatz g = A(z)/(1 - z^{D}) with deg A <= {D} (denominator bound, d={d}, m={m}); "
        f"cleared by 1 - z^{d * D}: {system.n_equations} linear equations in {D + 1} unknowns, "
        f"rank {system.rank}; solvable iff {len(system.constraints)} linear condition(s) on c hold"
    )
    violated = [k for k, row in enumerate(system.constraints)
                if sum(x * cj for x, cj in zip(row, c)) != 0]
    if violated:
        return DeciderVerdict(
            False, None,
            desc + f"; condition(s) {violated} violated, so no rational solution (relies on the denominator bound)",
            {"conditions": [list(map(str, row)) for row in system.constraints]},
        )
    coeffs = [Fraction(0)] * (D + 1)
    for pc, row in system.solution_map:
        coeffs[pc] = sum((x * cj for x, cj in zip(row, c)), Fraction(0))
    g = RatFunc(Poly(coeffs), ONE - Poly.monomial(D))
    # constants solve the homogeneous equation; pin g(0) = 0
    g = g - g(0)
    if not inst.is_solution(g):
        raise AssertionError(f"additive witness {g} failed substitution check")
    return DeciderVerdict(True, g, desc + "; consistent, witness verified by exact substitution")


def solve_poly_scaling(p: Poly, d: int) -> Poly | None:
    """Nonzero t with t(z^d) = p(z) t(z), or None when there is none.

    Comparing degrees forces (d - 1) deg t = deg p.
    """
    if p.is_zero():
        raise ValueError("p must be nonzero")
    if d < 2:
        raise ValueError("d must be at least 2")
    if p.degree % (d - 1):
        return None
    n = p.degree // (d - 1)
    L = lcm(*(c.denominator for c in p.coeffs))
    pi = [int(c * L) for c in p.coeffs]
    rows: dict[int, dict[int, int]] = {}
    for i in range(n + 1):
        r = rows.setdefault(d * i, {})
        r[i] = r.get(i, 0) + L
        for k, pk in enumerate(pi):
            if pk:
                r = rows.setdefault(i + k, {})
                r[i] = r.get(i, 0) - pk
    vec = nullspace_vector([{k: v for k, v in r.items() if v} for r in rows.values()], n + 1)
    if vec is None:
        return None
    t = Poly(vec)
    low = next(c for c in t.coeffs if c)
    t = t * (1 / low)
    assert t.substitute_power(d) == p * t
    return t


def decide_multiplicative(inst: MultiplicativeFeqInstance | None = None, *, d: int | None = None,
                          n1: int = 0, n2: int = 0) -> DeciderVerdict:
    """Is there r in Q(z), r != 0, with r(z^d) = (1-z)^{-n1} (1+z^2)^{-n2} r(z)?"""
    if inst is None:
        inst = MultiplicativeFeqInstance(d, n1, n2)
    d, n1, n2 = inst.d, inst.n1, inst.n2
    if (n1 >= 0 and n2 >= 0) or (n1 <= 0 and n2 <= 0):
        sign = 1 if (n1 >= 0 and n2 >= 0) else -1
        p = (ONE - Z) ** abs(n1) * (ONE + Z**2) ** abs(n2)
        which = "s" if sign > 0 else "t"
        other = "t" if sign > 0 else "s"
        head = (
            f"r = s/t coprime; exponents share a sign, so {which}(z^d) divides {which}(z) "
            f"and {which} is constant; remaining equation {other}(z^{d}) = p(z) {other}(z) "
            f"with p = {p}, forcing deg {other} = {p.degree}/{d - 1}"
        )
        t = solve_poly_scaling(p, d)
        if t is None:
            why = ("degree not divisible" if p.degree % (d - 1)
                   else f"homogeneous system in {p.degree // (d - 1) + 1} unknowns has only the zero solution")
            return DeciderVerdict(False, None, f"{head}; {why}")
        r = RatFunc(ONE, t) if sign > 0 else RatFunc(t)
        if not inst.is_solution(r):
            raise AssertionError(f"multiplicative witness {r} failed substitution check")
        return DeciderVerdict(True, r, f"{head}; kernel vector {t}, witness verified by exact substitution")
    # mixed signs: z -> z^d keeps the multiplicity of z = 1 in s and t, while
    # the multiplier contributes (1 - z)^{-n1}; so n1 = 0, contradicting n1 != 0
    mult = (ONE - Z) ** abs(n1)
    return DeciderVerdict(
        False, None,
        f"mixed signs (n1={n1}, n2={n2}): multiplicity of z = 1 is invariant under z -> z^{d} "
        f"on both sides but the multiplier carries (1 - z)^{-n1} (order {mult.valuation_at_one()} at z = 1); "
        "impossible unless n1 = 0",
    )
