"""Coxeter presentations and Todd-Coxeter coset enumeration.

Generators of a Coxeter group are involutions, so a coset table needs one
column per generator and ``c.x = d`` always implies ``d.x = c``.  The
relators ``x^2`` hold by construction and only the braid relators
``(x y)^m`` are scanned.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CosetBudgetExceeded",
    "CoxeterPresentation",
    "CosetTable",
    "coset_enumerate",
    "H4_DIAGRAM",
]


class CosetBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CoxeterPresentation:
    """Coxeter matrix ``m``: ``(r_i r_j)^m[i][j] = 1``, ``m[i][i] = 1``."""

    matrix: tuple

    def __post_init__(self):
        m = self.matrix
        n = len(m)
        for i in range(n):
            if len(m[i]) != n or m[i][i] != 1:
                raise ValueError("Coxeter matrix must be square with 1 on the diagonal")
            for j in range(n):
                if m[i][j] != m[j][i] or (i != j and m[i][j] < 2):
                    raise ValueError("Coxeter matrix must be symmetric with entries >= 2")

    @classmethod
    def from_linear_diagram(cls, labels):
        """Linear diagram ``r0 - r1 - ...`` with the given edge labels."""
        n = len(labels) + 1
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i, label in enumerate(labels):
            m[i][i + 1] = m[i + 1][i] = label
        return cls(tuple(tuple(row) for row in m))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def relators(self, include_squares=True):
        out = []
        n = self.rank
        if include_squares:
            out.extend((i, i) for i in range(n))
        for i in range(n):
            for j in range(i + 1, n):
                out.append((i, j) * self.matrix[i][j])
        return out


#: [5,3,3]: the symmetry group of the 120-cell, of order 14400.
H4_DIAGRAM = CoxeterPresentation.from_linear_diagram((5, 3, 3))


class CosetTable:
    """Complete coset table: ``table[c, x]`` is the coset ``c . r_x``.

    Cosets are numbered in breadth-first order from the subgroup coset 0,
    scanning generators in index order, so coset ``c`` is reached by the
    shortlex-least word :meth:`word`.
    """

    def __init__(self, table, presentation):
        self.table = np.asarray(table, dtype=np.int64)
        self.table.setflags(write=False)
        self.presentation = presentation
        self._words = None

    def __len__(self):
        return self.table.shape[0]

    @property
    def index(self) -> int:
        return self.table.shape[0]

    def act(self, cosets, word):
        """Apply ``word`` (generator indices, left to right) to coset ids."""
        out = np.asarray(cosets, dtype=np.int64)
        for x in word:
            out = self.table[out, x]
        return out

    def word(self, c):
        if self._words is None:
            words = [None] * len(self)
            words[0] = ()
            for d in range(len(self)):
                for x in range(self.table.shape[1]):
                    e = int(self.table[d, x])
                    if words[e] is None:
                        words[e] = words[d] + (x,)
            self._words = words
        return self._words[c]

    def multiply(self, a, b):
        """Product of group elements (meaningful for the trivial subgroup)."""
        return int(self.act([a], self.word(b))[0])

    def verify(self) -> bool:
        """Every relator fixes every coset and each column is an involution."""
        everything = np.arange(len(self))
        for rel in self.presentation.relators():
            if not np.array_equal(self.act(everything, rel), everything):
                return False
        return True

    def orbits(self, generators):
        """Orbit label of each coset under right multiplication by ``generators``."""
        parent = list(range(len(self)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in generators:
            for c, d in enumerate(self.table[:, x].tolist()):
                a, b = find(c), find(d)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(c) for c in range(len(self))]


def coset_enumerate(presentation: CoxeterPresentation, subgroup=(), max_cosets=2_000_000):
    """Enumerate cosets of the subgroup generated by ``subgroup`` words.

    Hasselgrove-Leech-Trotter strategy with coincidence processing.
    Deterministic; raises :class:`CosetBudgetExceeded` once more than
    ``max_cosets`` cosets have been defined.
    """
    ngens = presentation.rank
    relators = presentation.relators(include_squares=False)
    table = [[-1] * ngens]
    parent = [0]

    def rep(k):
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def define(c, x):
        if len(table) >= max_cosets:
            raise CosetBudgetExceeded(f"coset enumeration exceeded {max_cosets} cosets")
        d = len(table)
        table.append([-1] * ngens)
        parent.append(d)
        table[c][x] = d
        table[d][x] = c

    def coincidence(a, b):
        queue = []

        def merge(k, l):
            k, l = rep(k), rep(l)
            if k != l:
                if k > l:
                    k, l = l, k
                parent[l] = k
                queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(ngens):
                f = table[e][x]
                if f < 0:
                    continue
                if table[f][x] == e:
                    table[f][x] = -1
                e1, f1 = rep(e), rep(f)
                if table[e1][x] >= 0:
                    merge(f1, table[e1][x])
                elif table[f1][x] >= 0:
                    merge(e1, table[f1][x])
                else:
                    table[e1][x] = f1
                    table[f1][x] = e1

    def scan_and_fill(c, word):
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j]] >= 0:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            define(f, word[i])

    for w in subgroup:
        scan_and_fill(0, tuple(w))
    c = 0
    while c < len(table):
        if parent[c] == c:
            for rel in relators:
                scan_and_fill(c, rel)
                if parent[c] != c:
                    break
            if parent[c] == c:
                for x in range(ngens):
                    if table[c][x] < 0:
                        define(c, x)
        c += 1

    # renumber live cosets breadth-first from coset 0
    number = {0: 0}
    order = [0]
    queue = deque([0])
    while queue:
        d = queue.popleft()
        for x in range(ngens):
            e = rep(table[d][x])
            if e not in number:
                number[e] = len(order)
                order.append(e)
                queue.append(e)
    out = np.array([[number[rep(table[d][x])] for x in range(ngens)] for d in order])
    result = CosetTable(out, presentation)
    if not result.verify():
        raise AssertionError("coset table does not satisfy the relators")
    return result
