"""Exact Smith normal form over the integers.

Two entry points: :func:`smith_form` for dense matrices and
:func:`sparse_smith_form` for large sparse relation matrices, which first
eliminates unit pivots in sparse storage and hands the (small) remainder
to the dense routine.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

__all__ = ["SmithForm", "smith_form", "sparse_smith_form"]


@dataclass(frozen=True)
class SmithForm:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an ``nrows x ncols`` matrix."""

    factors: tuple
    nrows: int
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def free_rank(self) -> int:
        """Free rank of the cokernel ``Z^ncols / rowspace``."""
        return self.ncols - self.rank

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.factors if d > 1)

    def diagonal(self):
        """Full diagonal, padded with zeros to ``min(nrows, ncols)``."""
        return self.factors + (0,) * (min(self.nrows, self.ncols) - self.rank)


def _normalise(diag):
    """Turn a list of nonzero diagonal entries into a divisibility chain."""
    d = sorted(abs(x) for x in diag if x)
    ones = 0
    while ones < len(d) and d[ones] == 1:
        ones += 1
    unit, d = d[:ones], d[ones:]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return tuple(unit + d)


def _dense_diagonal(a):
    """Diagonalise ``a`` (list of lists, modified in place) by unimodular ops."""
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        clean = False
            rt = a[t]
            for j in range(t + 1, n):
                if rt[j]:
                    q = rt[j] // piv
                    if q:
                        for i in range(t, m):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if rt[j]:
                        clean = False
            if clean:
                break
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(a[t][t])
        t += 1
    return diag


def smith_form(matrix) -> SmithForm:
    """Invariant factors of a dense integer matrix (sequence of rows)."""
    a = [[int(x) for x in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    return SmithForm(_normalise(_dense_diagonal(a)), nrows, ncols)


def sparse_smith_form(rows, ncols) -> SmithForm:
    """Invariant factors of a sparse matrix given as ``{column: value}`` rows.

    Unit entries are used as pivots first, shortest rows first and, within
    a row, the column with the fewest entries (ties by index).  Every unit
    pivot removes one row and one column without changing the cokernel.
    What remains has no unit entries and is finished densely.
    """
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    nrows = len(rows)
    col_rows = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    alive = [True] * nrows
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    units = 0
    while heap:
        length, i = heapq.heappop(heap)
        if not alive[i] or length != len(rows[i]):
            continue
        r = rows[i]
        if not r:
            alive[i] = False
            continue
        unit_cols = [c for c, v in r.items() if v in (1, -1)]
        if not unit_cols:
            continue  # revisited if another elimination changes it
        c = min(unit_cols, key=lambda x: (len(col_rows[x]), x))
        u = r[c]
        for k in sorted(col_rows[c]):
            if k == i:
                continue
            other = rows[k]
            factor = other[c] * u
            for cc, v in r.items():
                new = other.get(cc, 0) - factor * v
                if new:
                    if cc not in other:
                        col_rows[cc].add(k)
                    other[cc] = new
                else:
                    if cc in other:
                        del other[cc]
                        col_rows[cc].discard(k)
            heapq.heappush(heap, (len(other), k))
        for cc in r:
            col_rows[cc].discard(i)
        del col_rows[c]
        alive[i] = False
        units += 1
    rest = [rows[i] for i in range(nrows) if alive[i] and rows[i]]
    cols = sorted({c for r in rest for c in r})
    index = {c: j for j, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for out, r in zip(dense, rest):
        for c, v in r.items():
            out[index[c]] = v
    return SmithForm((1,) * units + _normalise(_dense_diagonal(dense)), nrows, ncols)
