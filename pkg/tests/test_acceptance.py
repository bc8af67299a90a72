"""Acceptance criteria, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py``; one PASS/FAIL line per
criterion is printed in the terminal summary.
"""
import importlib
import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

from mahlerlab.evaluation import BallReal, eval_two_routes, evaluate
from mahlerlab.exact_algebra import (
    FC, FCOONS, FRPF, FTMM, GCOONS, Bridge, G, T, U, series_of, verify_bridge_identity,
    verify_functional_equation,
)
from mahlerlab.feq_decider import (
    AdditiveFeqInstance, MultiplicativeFeqInstance, decide_additive, decide_multiplicative,
)
from mahlerlab.independence import RelationQuery, RelationValue, normalize_relation, search_algebraic_relation
from mahlerlab.sequences import SequenceKind, prefix

_eval_mod = importlib.import_module("mahlerlab.evaluation.evaluate")
_feq_mod = importlib.import_module("mahlerlab.feq_decider")

HALF = Fraction(1, 2)


@pytest.fixture
def stopwatch():
    # start every criterion cold so the time budget is honest
    _eval_mod._evaluate.cache_clear()
    _feq_mod._additive_system.cache_clear()
    t0 = time.perf_counter()
    return lambda: time.perf_counter() - t0


@pytest.mark.criterion(1, "functional equations of T(d), U(d), G(d,j) exact at order 256, < 10 s")
def test_functional_equation_suite(stopwatch):
    fns = [T(d) for d in (2, 3, 4, 5)] + [U(d) for d in (2, 3, 4, 5)]
    fns += [G(d, j) for d in (2, 3, 4, 5) for j in (0, 1, 2, 3)]
    assert len(fns) == 24
    failed = [f.label for f in fns if not verify_functional_equation(f, 256)]
    assert failed == []
    assert stopwatch() < 10


@pytest.mark.criterion(2, "six bridge identities exact at order 256, < 5 s")
def test_bridge_suite(stopwatch):
    assert len(Bridge) == 6
    failed = [b.value for b in Bridge if not verify_bridge_identity(b, 256)]
    assert failed == []
    assert stopwatch() < 5


@pytest.mark.criterion(3, "coefficients of T2, U3, G(2,2) equal 1-2t_n, v_n, u_(n-1) for n <= 512, < 5 s")
def test_coefficient_bridges(stopwatch):
    N = 512
    t = prefix(SequenceKind.THUE_MORSE, N + 1)
    v = prefix(SequenceKind.CANTOR, N + 1)
    u = prefix(SequenceKind.PAPERFOLDING, N + 1)
    t2, u3, g22 = series_of(T(2), N), series_of(U(3), N), series_of(G(2, 2), N)
    for n in range(N + 1):
        assert t2[n] == 1 - 2 * t[n]
        assert u3[n] == v[n]
        assert g22[n] == (u[n - 1] if n else 0)
    assert stopwatch() < 5


def _c_vectors(m, rng):
    grid = [c for c in itertools.product((-2, -1, 0, 1, 2), repeat=m + 1)] if m <= 2 else \
        [c for c in itertools.product((-1, 0, 1), repeat=m + 1)]
    extra = [tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m + 1)) for _ in range(25)]
    return [tuple(Fraction(x) for x in c) for c in grid] + extra


@pytest.mark.criterion(4, "decider verdicts match the expected truth table, positive witnesses re-verified, < 30 s")
def test_decider_truth_table(stopwatch):
    rng = random.Random(4)
    checked = 0
    for m in range(4):
        for c in _c_vectors(m, rng):
            nonzero = any(c)
            for d in (2, 3, 4, 5):
                v = decide_additive(d=d, c=c)
                if d == 2:
                    expected = all(x == 0 for j, x in enumerate(c) if j != 1)
                else:
                    expected = not nonzero
                assert v.solvable == expected, (d, c)
                if v.solvable:
                    assert AdditiveFeqInstance(d, c).is_solution(v.witness)
                checked += 1
    for d in (2, 3, 4, 5):
        for n1 in range(-3, 4):
            for n2 in range(-3, 4):
                v = decide_multiplicative(d=d, n1=n1, n2=n2)
                expected = (n1 == 0) if d == 2 else (n1 == 0 and n2 == 0)
                assert v.solvable == expected, (d, n1, n2)
                if v.solvable:
                    assert MultiplicativeFeqInstance(d, n1, n2).is_solution(v.witness)
                checked += 1
    assert checked > 1000
    assert stopwatch() < 30


@pytest.mark.criterion(5, "two-route enclosures intersect at prec 256 with radii <= 2^-256, < 10 s")
def test_two_route_evaluation(stopwatch):
    limit = Fraction(1, 2**256)
    for f in (FTMM, FRPF, FC, FCOONS, GCOONS):
        for alpha in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(-1, 2)):
            a, b = eval_two_routes(f, alpha, 256)
            assert a.rad <= limit and b.rad <= limit, (f.label, alpha)
            assert a.intersects(b), (f.label, alpha)
    assert stopwatch() < 10


@pytest.mark.criterion(6, "planted bridge relations recovered at alpha = 1/2, prec 512, H = 10^3, < 10 s")
def test_planted_relation_recovery(stopwatch):
    # T2 + 2 fTMM - 2 = 0 over (1, T2, fTMM)
    vals = [RelationValue.function(T(2), HALF), RelationValue.function(FTMM, HALF)]
    rep = search_algebraic_relation(RelationQuery(vals, degree=1, height=10**3, prec_bits=512))
    assert rep.found and rep.relation == normalize_relation([-2, 1, 2])
    # G22 - (1/2) fRPF = 0 over (G22, fRPF)
    vals = [RelationValue.function(G(2, 2), HALF), RelationValue.function(FRPF, HALF)]
    rep = search_algebraic_relation(
        RelationQuery(vals, degree=1, height=10**3, prec_bits=512, include_constant=False))
    assert rep.found and rep.relation == normalize_relation([2, -1])
    assert stopwatch() < 10


@pytest.mark.criterion(7, "no relation of degree 2, height 10^4 at prec 1024 for the four independence tuples, < 60 s")
def test_independence_corroboration(stopwatch):
    suites = {
        "fTMM, fRPF, Gcoons": [FTMM, FRPF, GCOONS],
        "T2, G(2,0), G(2,2)": [T(2), G(2, 0), G(2, 2)],
        "T3, U3, G(3,0), G(3,1)": [T(3), U(3), G(3, 0), G(3, 1)],
        "fTMM, fRPF, Fcoons, fC": [FTMM, FRPF, FCOONS, FC],
    }
    for name, fns in suites.items():
        vals = [RelationValue.function(f, HALF) for f in fns]
        rep = search_algebraic_relation(RelationQuery(vals, degree=2, height=10**4, prec_bits=1024))
        assert rep.outcome == "none_up_to_bounds", (name, rep.relation)
    assert stopwatch() < 60


@pytest.mark.criterion(8, "Fcoons(1/2) at prec 128 encloses the Fermat reciprocal sum, midpoint within 2^-120, < 1 s")
def test_fermat_reciprocal_sum(stopwatch):
    ball = evaluate(FCOONS, HALF, 128)
    # partial sum to n = 7; the rest is below sum_{n>=8} 2^-(2^n) < 2^-255
    s7 = sum(Fraction(1, 2 ** (2**n) + 1) for n in range(8))
    assert ball.contains(BallReal(s7 + Fraction(1, 2**256), Fraction(1, 2**256)))
    s6 = sum(Fraction(1, 2 ** (2**n) + 1) for n in range(7))
    assert abs(ball.mid - s6) <= Fraction(1, 2**120)
    assert stopwatch() < 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
