"""Fraction-free Gaussian elimination on sparse integer matrices.

Rows are ``{column: int}`` dicts. Elimination uses cross-multiplication and
divides each updated row by the gcd of its entries, so everything stays in
the integers until a solution is read off.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

Row = dict[int, int]


def _primitive(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _combine(pv: int, row: Row, e: int, prow: Row) -> Row:
    """pv*row - e*prow, dropping zeros."""
    out = {k: pv * v for k, v in row.items()} if pv != 1 else dict(row)
    for k, v in prow.items():
        x = out.get(k, 0) - e * v
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def rref(rows: Iterable[Row], columns: list[int]) -> list[tuple[int, Row]]:
    """Reduced row echelon form, pivoting over ``columns`` in the given order.

    Returns ``(pivot_column, row)`` pairs; every pivot column is zero in all
    other returned rows. Zero rows are dropped.
    """
    pending = [_primitive(dict(r)) for r in rows if r]
    done: list[tuple[int, Row]] = []
    for col in columns:
        idx = None
        best = None
        for i, r in enumerate(pending):
            v = r.get(col)
            if v and (best is None or len(r) < best):
                idx, best = i, len(r)
        if idx is None:
            continue
        prow = pending.pop(idx)
        pv = prow[col]
        if pv < 0:
            prow = {k: -v for k, v in prow.items()}
            pv = -pv
        nxt = []
        for r in pending:
            e = r.get(col)
            if e:
                r = _primitive(_combine(pv, r, e, prow))
            if r:
                nxt.append(r)
        pending = nxt
        reduced = []
        for pc, r in done:
            e = r.get(col)
            if e:
                r = _primitive(_combine(pv, r, e, prow))
                if r[pc] < 0:
                    r = {k: -v for k, v in r.items()}
            reduced.append((pc, r))
        done = reduced
        done.append((col, prow))
    # rows left in `pending` only touch columns outside `columns`
    done.extend((-1, r) for r in pending if r)
    return done


def nullspace_vector(rows: Iterable[Row], ncols: int) -> list[Fraction] | None:
    """A nonzero x with M x = 0 (first free column set to 1), or None."""
    echelon = rref(rows, list(range(ncols)))
    pivots = {pc for pc, _ in echelon}
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    x = [Fraction(0)] * ncols
    x[f] = Fraction(1)
    for pc, r in echelon:
        x[pc] = Fraction(-r.get(f, 0), r[pc])
    return x


def rank(rows: Iterable[Row], ncols: int) -> int:
    return sum(1 for pc, _ in rref(rows, list(range(ncols))) if pc >= 0)
