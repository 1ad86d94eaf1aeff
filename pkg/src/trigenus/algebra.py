"""Fundamental group presentation, integral first homology and Betti numbers.

The presentation comes from the dual 2-complex: one generator per facet
gluing outside a spanning tree of the dual graph, one relator per triangle
class, read off by walking once around the triangle's link.
"""
from __future__ import annotations

from dataclasses import dataclass

from .snf import SmithForm, sparse_smith_form
from .triangulation import (
    FACES,
    DisconnectedError,
    Triangulation,
    TriangulationError,
    dual_graph,
    face_labels,
)

__all__ = [
    "NonManifoldError",
    "GroupPresentation",
    "H1",
    "pi1_presentation",
    "abelianised_relators",
    "homology_h1",
    "betti2_from_duality",
    "write_presentation",
    "read_presentation",
]

_TRIANGLE_INDEX = {t: i for i, t in enumerate(FACES[2])}


class NonManifoldError(TriangulationError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``0..n-1``; relator letters are ``+(i+1)`` or ``-(i+1)``."""

    generators: int
    relators: tuple

    def abelianised(self):
        rows = []
        for word in self.relators:
            row = {}
            for letter in word:
                i = abs(letter) - 1
                row[i] = row.get(i, 0) + (1 if letter > 0 else -1)
            rows.append({i: v for i, v in row.items() if v})
        return rows


def pi1_presentation(tri: Triangulation) -> GroupPresentation:
    tri.require_valid(closed=True)
    graph = dual_graph(tri)
    if not graph.connected:
        raise DisconnectedError(graph.components)
    tree = set(graph.tree_edges)
    letter = {}  # exit facet -> signed generator, absent for tree edges
    gen = 0
    for i, (a, b) in enumerate(graph.edges):
        if i in tree:
            continue
        gen += 1
        letter[a] = gen
        letter[b] = -gen

    dest, perms = tri.tables()
    labels, count = face_labels(tri, 2)
    labels = labels.tolist()
    sizes = [0] * count
    start = [None] * count
    for p, row in enumerate(labels):
        for i, c in enumerate(row):
            sizes[c] += 1
            if start[c] is None:
                start[c] = (p, i)

    relators = []
    for c in range(count):
        p0, i0 = start[c]
        tri0 = FACES[2][i0]
        exit0 = min(s for s in range(5) if s not in tri0)
        p, t, x = p0, tri0, exit0
        word = []
        seen = set()
        while True:
            key = (p, t)
            if key in seen:
                raise NonManifoldError(f"non-manifold triangle class {c}")
            seen.add(key)
            if (p, x) in letter:
                word.append(letter[(p, x)])
            q, g = divmod(dest[p][x], 5)
            pi = perms[p][x]
            t = tuple(sorted(pi[s] for s in t))
            x = next(s for s in range(5) if s != g and s not in t)
            p = q
            if (p, t, x) == (p0, tri0, exit0):
                break
            if (p, t) == (p0, tri0):
                raise NonManifoldError(f"non-manifold triangle class {c}")
        if len(seen) != sizes[c]:
            raise NonManifoldError(f"non-manifold triangle class {c}")
        relators.append(tuple(word))
    return GroupPresentation(gen, tuple(relators))


def abelianised_relators(tri: Triangulation):
    pres = pi1_presentation(tri)
    return pres.abelianised(), pres.generators


@dataclass(frozen=True)
class H1:
    beta1: int
    torsion: tuple
    smith: SmithForm = None

    def __iter__(self):
        return iter((self.beta1, self.torsion))


def homology_h1(tri: Triangulation) -> H1:
    """Free rank and torsion of H_1 with integer coefficients."""
    key = "h1"
    if key in tri._cache:
        return tri._cache[key]
    rows, ngen = abelianised_relators(tri)
    snf = sparse_smith_form(rows, ngen)
    result = H1(snf.free_rank, snf.torsion, snf)
    tri._cache[key] = result
    return result


def betti2_from_duality(chi: int, beta1: int) -> int:
    """beta2 of a closed orientable connected 4-manifold from chi = 2 - 2 beta1 + beta2."""
    beta2 = chi - 2 + 2 * beta1
    if beta2 < 0:
        raise ValueError(f"inconsistent invariants: chi={chi}, beta1={beta1} gives beta2={beta2}")
    return beta2


def write_presentation(pres: GroupPresentation) -> str:
    lines = ["pres v1", f"generators {pres.generators}"]
    for word in sorted(pres.relators):
        lines.append(" ".join(["r"] + [str(x) for x in word]))
    return "\n".join(lines) + "\n"


def read_presentation(text: str) -> GroupPresentation:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "pres v1":
        raise ValueError("line 1: expected 'pres v1'")
    head = lines[1].split() if len(lines) > 1 else []
    if len(head) != 2 or head[0] != "generators":
        raise ValueError("line 2: expected 'generators <n>'")
    n = int(head[1])
    relators = []
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split()
        if not parts or parts[0] != "r":
            raise ValueError(f"line {lineno}: expected a relator line")
        word = tuple(int(x) for x in parts[1:])
        if any(x == 0 or abs(x) > n for x in word):
            raise ValueError(f"line {lineno}: letter out of range")
        relators.append(word)
    return GroupPresentation(n, tuple(relators))
