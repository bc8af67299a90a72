"""Bounded-height search for polynomial relations among certified real values.

Algebraic dependence of x_1..x_k with total degree <= D is linear dependence
of the monomials x^e, |e| <= D. Linear relations are looked for with LLL on
the lattice spanned by the rows (e_i | round(2^P x_i)). A reduced row whose
first block is a small integer vector a with |sum a_i x_i| < 2^(-P/2) is a
candidate; candidates are re-checked against freshly evaluated balls at
twice the precision. Non-detection only means "nothing up to these bounds".
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Callable, Sequence

from ..evaluation import BallReal, evaluate
from ..exact_algebra.functions import FunctionId
from .lattice import lll_reduce

DEFAULT_MAX_MONOMIALS = 500


class PrecisionError(ValueError):
    pass


class MonomialLimitError(ValueError):
    pass


@dataclass(frozen=True)
class RelationValue:
    """A labelled real that can be re-enclosed at any precision.

    ``source`` is a FunctionId (evaluated at ``alpha``), an exact rational,
    or a fixed BallReal (which cannot be refined).
    """

    label: str
    source: FunctionId | Fraction | BallReal
    alpha: Fraction | None = None
    evaluator: Callable[[FunctionId, Fraction, int], BallReal] | None = field(default=None, compare=False)

    def at(self, prec_bits: int) -> BallReal:
        if isinstance(self.source, FunctionId):
            return (self.evaluator or evaluate)(self.source, self.alpha, prec_bits)
        if isinstance(self.source, BallReal):
            return self.source
        return BallReal.exact(self.source)

    @classmethod
    def function(cls, f: FunctionId, alpha, label: str | None = None, evaluator=None) -> "RelationValue":
        return cls(label or f.label, f, Fraction(alpha), evaluator)

    @classmethod
    def constant(cls, x, label: str | None = None) -> "RelationValue":
        x = Fraction(x)
        return cls(label or str(x), x)


def monomial_exponents(k: int, degree: int, include_constant: bool = True) -> list[tuple[int, ...]]:
    """Exponent tuples with total degree <= ``degree``, graded, lex-descending within a degree."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], left: int, slots: int):
        if slots == 1:
            yield prefix + (left,)
            return
        for e in range(left, -1, -1):
            yield from rec(prefix + (e,), left - e, slots - 1)

    for t in range(0 if include_constant else 1, degree + 1):
        out.extend(rec((), t, k))
    return out


def monomial_count(k: int, degree: int, include_constant: bool = True) -> int:
    return comb(k + degree, degree) - (0 if include_constant else 1)


def monomial_vector(values: Sequence[BallReal], degree: int, include_constant: bool = True,
                    max_monomials: int = DEFAULT_MAX_MONOMIALS) -> list[BallReal]:
    """Balls for all monomials of total degree <= ``degree`` in ``values``."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    k = len(values)
    count = monomial_count(k, degree, include_constant)
    if count > max_monomials:
        raise MonomialLimitError(f"{count} monomials exceed the limit {max_monomials}")
    powers = []
    for v in values:
        row = [BallReal(Fraction(1))]
        for _ in range(degree):
            row.append(row[-1] * v)
        powers.append(row)
    out = []
    for e in monomial_exponents(k, degree, include_constant):
        m = BallReal(Fraction(1))
        for i, ei in enumerate(e):
            if ei:
                m = m * powers[i][ei]
        out.append(m)
    return out


def normalize_relation(a: Sequence[int]) -> list[int]:
    """Divide out the content and make the last nonzero entry positive."""
    g = reduce(gcd, a, 0)
    if g == 0:
        raise ValueError("zero relation")
    a = [x // g for x in a]
    last = next(x for x in reversed(a) if x)
    return [-x for x in a] if last < 0 else a


def residual(a: Sequence[int], reals: Sequence[BallReal]) -> BallReal:
    acc = BallReal(Fraction(0))
    for ai, x in zip(a, reals):
        if ai:
            acc = acc + x * ai
    return acc


def precision_floor(n: int, height: int) -> int:
    return 16 * n + 2 * math.ceil(math.log2(max(height, 2)))


def find_integer_relation(reals: Sequence[BallReal], height: int, prec_bits: int) -> list[int] | None:
    """Shortest small integer relation among ``reals`` found by LLL, or None."""
    n = len(reals)
    if n < 2:
        raise ValueError("need at least two reals")
    if height < 1:
        raise ValueError("height bound must be positive")
    floor = precision_floor(n, height)
    if prec_bits < floor:
        raise PrecisionError(f"precision {prec_bits} below floor {floor} for {n} values, height {height}")
    limit = Fraction(1, 1 << prec_bits)
    if any(x.rad > limit for x in reals):
        raise PrecisionError(f"input radius exceeds 2^-{prec_bits}")
    scale = 1 << prec_bits
    basis = []
    for i, x in enumerate(reals):
        row = [0] * n
        row[i] = 1
        row.append(round(x.mid * scale))
        basis.append(row)
    reduced = lll_reduce(basis)
    tol = Fraction(1, 1 << (prec_bits // 2))
    best = None
    for row in reduced:
        a = row[:n]
        if not any(a) or max(abs(v) for v in a) > height:
            continue
        if residual(a, reals).mag >= tol:
            continue
        norm = sum(v * v for v in a)
        if best is None or norm < best[0]:
            best = (norm, a)
    return normalize_relation(best[1]) if best else None


def _enclose(values: Sequence[RelationValue], degree: int, include_constant: bool,
             prec_bits: int, max_monomials: int, strict: bool = True) -> list[BallReal]:
    """Monomial balls with radius <= 2^-prec_bits.

    Fixed balls cannot be refined; with ``strict=False`` the best available
    enclosure is returned instead of raising.
    """
    limit = Fraction(1, 1 << prec_bits)
    refinable = any(isinstance(v.source, FunctionId) for v in values)
    extra = 16 + 8 * degree
    for _ in range(8):
        balls = [v.at(prec_bits + extra) for v in values]
        mons = monomial_vector(balls, degree, include_constant, max_monomials)
        if all(m.rad <= limit for m in mons):
            return mons
        if not refinable:
            break
        extra *= 2
    if not strict:
        return mons
    raise PrecisionError(f"could not enclose monomials to 2^-{prec_bits}")


def verify_relation(candidate: Sequence[int], values: Sequence[RelationValue], prec_bits: int, *,
                    degree: int = 1, include_constant: bool = True) -> bool:
    """Re-evaluate at 2*prec_bits and check that the relation's ball contains 0.

    A True result is numerical evidence at that precision, not a proof.
    """
    if not any(candidate):
        raise ValueError("candidate relation must be nonzero")
    mons = _enclose(values, degree, include_constant, 2 * prec_bits, DEFAULT_MAX_MONOMIALS, strict=False)
    if len(mons) != len(candidate):
        raise ValueError(f"candidate has {len(candidate)} entries, basis has {len(mons)}")
    return residual(candidate, mons).contains_zero()


@dataclass
class RelationQuery:
    values: list[RelationValue]
    degree: int = 3
    height: int = 10**6
    prec_bits: int = 2048
    include_constant: bool = True
    max_monomials: int = DEFAULT_MAX_MONOMIALS

    def __post_init__(self):
        if not self.values:
            raise ValueError("need at least one value")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if self.height < 1:
            raise ValueError("height must be positive")
        count = monomial_count(len(self.values), self.degree, self.include_constant)
        if count > self.max_monomials:
            raise MonomialLimitError(f"{count} monomials exceed the limit {self.max_monomials}")


@dataclass
class RelationReport:
    outcome: str  # "found" | "none_up_to_bounds"
    relation: list[int] | None
    verified: bool
    degree: int
    height: int
    prec_bits: int
    monomial_basis: list[tuple[int, ...]]
    labels: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    def equation(self) -> str:
        if not self.relation:
            return ""
        terms = []
        for a, e in zip(self.relation, self.monomial_basis):
            if not a:
                continue
            factors = [lab if p == 1 else f"{lab}^{p}" for lab, p in zip(self.labels, e) if p]
            mono = "*".join(factors)
            mag = abs(a)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
            terms.append(("-" if a < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s + " = 0"

    def summary(self) -> str:
        bounds = f"degree <= {self.degree}, height <= {self.height}, prec {self.prec_bits} bits"
        if self.found:
            tag = "verified at 2x precision" if self.verified else "NOT verified"
            return f"found: {self.equation()} ({tag}; {bounds})"
        return f"none up to bounds ({bounds})"

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "relation": self.relation,
            "monomials": [list(e) for e in self.monomial_basis],
            "bounds": {"degree": self.degree, "height": self.height, "prec": self.prec_bits},
            "verified": self.verified,
            "labels": list(self.labels),
        }


def search_algebraic_relation(q: RelationQuery) -> RelationReport:
    """Run one bounded relation search and verify any hit at doubled precision."""
    basis = monomial_exponents(len(q.values), q.degree, q.include_constant)
    mons = _enclose(q.values, q.degree, q.include_constant, q.prec_bits, q.max_monomials)
    report = RelationReport(
        outcome="none_up_to_bounds", relation=None, verified=False,
        degree=q.degree, height=q.height, prec_bits=q.prec_bits,
        monomial_basis=basis, labels=[v.label for v in q.values],
    )
    if len(mons) < 2:
        return report
    rel = find_integer_relation(mons, q.height, q.prec_bits)
    if rel is None or not residual(rel, mons).contains_zero():
        return report
    if verify_relation(rel, q.values, q.prec_bits, degree=q.degree, include_constant=q.include_constant):
        report.outcome = "found"
        report.relation = rel
        report.verified = True
    return report
