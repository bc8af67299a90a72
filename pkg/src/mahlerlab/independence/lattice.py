"""Exact integer LLL reduction (integral Gram-Schmidt variant, Cohen Alg. 2.6.7).

All quantities are Python ints: ``d[i]`` are the Gram determinants and
``lam[k][j]`` the scaled Gram-Schmidt coefficients, so no rounding ever
occurs and the output is deterministic.
"""
from __future__ import annotations

from fractions import Fraction


def _dot(u: list[int], v: list[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def lll_reduce(basis: list[list[int]], delta: Fraction = Fraction(99, 100)) -> list[list[int]]:
    """LLL-reduce the rows of ``basis`` (assumed linearly independent)."""
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    b = [list(row) for row in basis]
    n = len(b)
    if n <= 1:
        return b
    dn, dd = delta.numerator, delta.denominator
    d = [0] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    d[0] = 1
    d[1] = _dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("basis vectors must be linearly independent")

    def reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            bl = b[l]
            b[k] = [x - q * y for x, y in zip(b[k], bl)]
            lam[k][l] -= q * d[l + 1]
            lk, ll = lam[k], lam[l]
            for i in range(l):
                lk[i] -= q * ll[i]

    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k + 1] = u
            if d[k + 1] == 0:
                raise ValueError("basis vectors must be linearly independent")
        reduce(k, k - 1)
        if dd * d[k + 1] * d[k - 1] < dn * d[k] * d[k] - dd * lam[k][k - 1] ** 2:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            mu = lam[k][k - 1]
            B = (d[k - 1] * d[k + 1] + mu * mu) // d[k]
            for i in range(k + 1, kmax + 1):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - mu * t) // d[k]
                lam[i][k - 1] = (B * t + mu * lam[i][k]) // d[k + 1]
            d[k] = B
            if k > 1:
                k -= 1
        else:
            for l in range(k - 2, -1, -1):
                reduce(k, l)
            k += 1
    return b
