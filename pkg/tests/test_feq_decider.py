import itertools
import random
from fractions import Fraction

import pytest

from mahlerlab.exact_algebra import ONE, Z, Poly, RatFunc, series_of, G
from mahlerlab.exact_algebra.series import TruncatedSeries
from mahlerlab.feq_decider import (
    AdditiveFeqInstance, MultiplicativeFeqInstance, decide_additive, decide_multiplicative,
    solve_poly_scaling,
)


def test_additive_examples():
    v = decide_additive(d=2, c=(0, 1))
    assert v.solvable and v.witness == RatFunc(Z, ONE - Z)
    assert not decide_additive(d=3, c=(0, 1)).solvable
    assert not decide_additive(d=2, c=(0, 0, 1)).solvable


@pytest.mark.parametrize("d, m", [(2, 0), (3, 2), (5, 1), (4, 3)])
def test_additive_zero_c_has_zero_witness(d, m):
    v = decide_additive(d=d, c=(0,) * (m + 1))
    assert v.solvable and v.witness.is_zero()


def test_additive_witness_matches_g21_series():
    # G(2,1) itself solves the c = (0, 1) equation
    w = decide_additive(d=2, c=(0, 1)).witness
    assert TruncatedSeries.from_rational_function(w, 100) == series_of(G(2, 1), 100)


def test_multiplicative_examples():
    v = decide_multiplicative(d=2, n1=0, n2=1)
    assert v.solvable and v.witness == RatFunc(ONE, ONE - Z**2)
    assert not decide_multiplicative(d=3, n1=0, n2=1).solvable
    assert not decide_multiplicative(d=2, n1=1, n2=0).solvable
    for d in (2, 3, 4, 5):
        v = decide_multiplicative(d=d, n1=0, n2=0)
        assert v.solvable and v.witness == RatFunc(1)


def test_solve_poly_scaling_examples():
    # t(z^2) = (1 + z^2) t(z) is solved by 1 - z^2 since 1 - z^4 = (1 - z^2)(1 + z^2)
    assert solve_poly_scaling(ONE + Z**2, 2) == ONE - Z**2
    assert solve_poly_scaling(ONE, 2) == ONE
    assert solve_poly_scaling(ONE + Z + Z**2, 3) == ONE - Z
    assert solve_poly_scaling(ONE + Z**2, 3) is None
    assert solve_poly_scaling(ONE + Z, 3) is None


def test_solve_poly_scaling_rejects_zero():
    with pytest.raises(ValueError):
        solve_poly_scaling(Poly([]), 2)


def _nonzero_c(rng, m):
    while True:
        c = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(m + 1))
        if any(c):
            return c


def test_additive_unsolvable_for_d_at_least_3():
    # for d >= 3 no nonzero c admits a rational solution
    rng = random.Random(20260115)
    for _ in range(200):
        d = rng.choice((3, 4, 5))
        m = rng.randint(0, 3)
        assert not decide_additive(d=d, c=_nonzero_c(rng, m)).solvable


def test_additive_d2_solvable_iff_only_c1():
    # for d = 2 the equation is solvable exactly when only c_1 is nonzero
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(0, 4)
        c = _nonzero_c(rng, m)
        if rng.random() < 0.3 and m >= 1:
            c = tuple(x if j == 1 else Fraction(0) for j, x in enumerate(c))
        expected = all(x == 0 for j, x in enumerate(c) if j != 1)
        v = decide_additive(d=2, c=c)
        assert v.solvable == expected, c
        if v.solvable:
            assert AdditiveFeqInstance(2, c).is_solution(v.witness)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_additive_exhaustive_small_c(m):
    for c in itertools.product((-1, 0, 1), repeat=m + 1):
        nonzero = any(c)
        for d in (2, 3, 4):
            v = decide_additive(d=d, c=c)
            if d >= 3:
                assert v.solvable == (not nonzero)
            else:
                assert v.solvable == all(x == 0 for j, x in enumerate(c) if j != 1)


def test_condition_ii_table():
    for d in (2, 3, 4, 5):
        for n1 in range(-3, 4):
            for n2 in range(-3, 4):
                v = decide_multiplicative(d=d, n1=n1, n2=n2)
                expected = n1 == 0 if d == 2 else (n1 == 0 and n2 == 0)
                assert v.solvable == expected, (d, n1, n2)
                if v.solvable:
                    assert MultiplicativeFeqInstance(d, n1, n2).is_solution(v.witness)


def test_sign_symmetry():
    for d in (2, 3, 4):
        for n1 in range(-3, 4):
            for n2 in range(-3, 4):
                a = decide_multiplicative(d=d, n1=n1, n2=n2)
                b = decide_multiplicative(d=d, n1=-n1, n2=-n2)
                assert a.solvable == b.solvable
                if a.solvable:
                    assert a.witness * b.witness == RatFunc(1)


def test_scaled_c_same_verdict():
    rng = random.Random(3)
    for _ in range(40):
        d = rng.choice((2, 3))
        c = _nonzero_c(rng, rng.randint(0, 3))
        k = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert decide_additive(d=d, c=c).solvable == decide_additive(d=d, c=tuple(k * x for x in c)).solvable


def test_additive_unsolvable_has_no_low_degree_solution():
    # independent brute-force: g = A/(1 - z^D) for small D never works for (3, (0, 1))
    inst = AdditiveFeqInstance(3, (Fraction(0), Fraction(1)))
    for D in (1, 2, 3):
        for coeffs in itertools.product((-1, 0, 1), repeat=D + 1):
            g = RatFunc(Poly(coeffs), ONE - Poly.monomial(D))
            assert not inst.is_solution(g)


def test_verdict_json():
    obj = decide_additive(d=2, c=(0, 1)).to_json()
    assert obj["solvable"] is True
    assert obj["witness"] == {"num": RatFunc(Z, ONE - Z).to_json()["num"], "den": RatFunc(Z, ONE - Z).to_json()["den"]}
    assert isinstance(obj["certificate"], str) and obj["certificate"]
    assert decide_multiplicative(d=3, n1=0, n2=1).to_json()["witness"] is None


def test_invalid_instances():
    with pytest.raises(ValueError):
        AdditiveFeqInstance(1, (Fraction(1),))
    with pytest.raises(ValueError):
        AdditiveFeqInstance(2, ())
    with pytest.raises(ValueError):
        MultiplicativeFeqInstance(1, 0, 0)
