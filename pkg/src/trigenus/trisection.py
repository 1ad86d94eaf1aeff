"""Trisection data of a tricoloured triangulation after the 2-4 pipeline.

Inside a 2-2-1 pentachoron the preimage of the centre of the 2-simplex is
a square whose vertices are the four trichromatic triangles and whose
edges lie in the four trichromatic facets.  The squares glue up to the
central surface.  The handlebody of colour ``k`` retracts onto the graph
spanned by the colour-``k`` vertices.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .colouring import Colouring, ColouringError, _apexes
from .triangulation import FACES, Triangulation, TriangulationError, f_vector, face_labels

__all__ = [
    "TrisectionError",
    "TrisectionIdentityError",
    "SpineGraph",
    "SurfaceCensus",
    "TrisectionReport",
    "spine_graph",
    "central_surface",
    "trisection_report",
]


class TrisectionError(TriangulationError):
    pass


class TrisectionIdentityError(AssertionError):
    """2 + g - g0 - g1 - g2 disagrees with chi: a bug, not bad input."""


def _components(n, u, v):
    if n == 0:
        return 0
    graph = coo_matrix((np.ones(len(u), dtype=np.int8), (u, v)), shape=(n, n))
    return connected_components(graph, directed=False)[0]


@dataclass
class SpineGraph:
    colour: int
    vertices: tuple  # vertex class indices
    edges: tuple  # (u, v) vertex class indices, one per edge class
    components: int

    @property
    def betti1(self) -> int:
        return len(self.edges) - len(self.vertices) + self.components

    @property
    def connected(self) -> bool:
        return self.components == 1

    def summary(self):
        return {
            "colour": self.colour,
            "vertices": len(self.vertices),
            "edges": len(self.edges),
            "components": self.components,
            "betti1": self.betti1,
        }


def spine_graph(tri: Triangulation, colouring: Colouring, k: int) -> SpineGraph:
    """Subgraph of the 1-skeleton spanned by the colour-``k`` vertex classes."""
    tri.require_valid(closed=True)
    cc = colouring.corner_colours(tri)
    vlab, _ = face_labels(tri, 0)
    elab, ecount = face_labels(tri, 1)
    _, first = np.unique(elab.ravel(), return_index=True)
    p, i = first // 10, first % 10
    ends = np.array(FACES[1])[i]
    a = vlab[p, ends[:, 0]]
    b = vlab[p, ends[:, 1]]
    keep = (cc[p, ends[:, 0]] == k) & (cc[p, ends[:, 1]] == k)
    verts = [v for v, c in enumerate(colouring.colours) if c == k]
    index = {v: j for j, v in enumerate(verts)}
    edges = tuple((int(x), int(y)) for x, y in zip(a[keep], b[keep]))
    comp = _components(
        len(verts),
        np.array([index[x] for x, _ in edges], dtype=np.int64),
        np.array([index[y] for _, y in edges], dtype=np.int64),
    )
    return SpineGraph(k, tuple(verts), edges, int(comp))


@dataclass
class SurfaceCensus:
    squares: int
    edges: int
    vertices: int
    components: int
    orientable: bool
    vertex_degrees: tuple = field(repr=False, default=())
    diagnostic: str = ""

    @property
    def chi(self) -> int:
        return self.vertices - self.edges + self.squares

    @property
    def genus(self):
        if self.components != 1 or not self.orientable:
            return None
        return (2 - self.chi) // 2

    def summary(self):
        return {
            "squares": self.squares,
            "edges": self.edges,
            "vertices": self.vertices,
            "chi": self.chi,
            "components": self.components,
            "orientable": self.orientable,
            "genus": self.genus,
        }


def _square_cycles(cc, apex):
    """For each pentachoron, its four trichromatic triangles in cyclic order.

    With doubleton colours c < d on slots c1 < c2 and d1 < d2, the cycle
    is (c1 d1) (c1 d2) (c2 d2) (c2 d1).  Triangles are returned as sorted
    slot triples.
    """
    cycles = []
    for row, e in zip(cc, apex):
        ce = row[e]
        c, d = [x for x in range(3) if x != ce]
        cs = [s for s in range(5) if row[s] == c]
        ds = [s for s in range(5) if row[s] == d]
        corners = [(cs[0], ds[0]), (cs[0], ds[1]), (cs[1], ds[1]), (cs[1], ds[0])]
        cycles.append([tuple(sorted((x, y, e))) for x, y in corners])
    return cycles


def central_surface(tri: Triangulation, colouring: Colouring, require_processed=True):
    """Census of the central surface: squares, edges, vertices, genus."""
    tri.require_valid(closed=True)
    if require_processed and not colouring.processed:
        raise TrisectionError("2-4 pipeline not applied to this triangulation")
    cc = colouring.corner_colours(tri)
    apex = _apexes(cc)
    if (apex < 0).any():
        raise ColouringError("every pentachoron must carry the 2-2-1 pattern")
    n = tri.size
    tlab, _ = face_labels(tri, 2)
    faces2 = np.array(FACES[2])
    tricolour = (
        (cc[:, faces2[:, 0]] != cc[:, faces2[:, 1]])
        & (cc[:, faces2[:, 0]] != cc[:, faces2[:, 2]])
        & (cc[:, faces2[:, 1]] != cc[:, faces2[:, 2]])
    )
    classes, degrees = np.unique(tlab[tricolour], return_counts=True)

    dest, perms = tri.tables()
    apex_l = apex.tolist()
    cycles = _square_cycles(cc.tolist(), apex_l)
    position = [{t: j for j, t in enumerate(cyc)} for cyc in cycles]

    def edge_of(p, f):
        """Ordered pair of cycle positions joined by the square edge in facet f."""
        i, j = [k for k, t in enumerate(cycles[p]) if f not in t]
        return (j, i) if (i, j) == (0, 3) else (i, j)

    facet_count = 0
    us, vs = [], []
    for p in range(n):
        for f in range(5):
            if f != apex_l[p]:
                facet_count += 1
                us.append(p)
                vs.append(dest[p][f] // 5)
    components = _components(n, np.array(us), np.array(vs))

    sign = [0] * n
    orientable = True
    for root in range(n):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue and orientable:
            p = queue.popleft()
            for f in range(5):
                if f == apex_l[p]:
                    continue
                q, g = divmod(dest[p][f], 5)
                pi = perms[p][f]
                i, j = edge_of(p, f)
                ti = tuple(sorted(pi[s] for s in cycles[p][i]))
                tj = tuple(sorted(pi[s] for s in cycles[p][j]))
                a, b = position[q][ti], position[q][tj]
                forward = 1 if (b - a) % 4 == 1 else -1
                want = -forward * sign[p]
                if sign[q] == 0:
                    sign[q] = want
                    queue.append(q)
                elif sign[q] != want:
                    orientable = False
                    break
    diag = []
    if components != 1:
        diag.append(f"surface has {components} components")
    if not orientable:
        diag.append("surface is non-orientable")
    return SurfaceCensus(
        squares=n,
        edges=facet_count // 2,
        vertices=len(classes),
        components=int(components),
        orientable=orientable,
        vertex_degrees=tuple(int(x) for x in degrees),
        diagnostic="; ".join(diag),
    )


@dataclass
class TrisectionReport:
    genus: int
    handlebody_genera: tuple
    surface: SurfaceCensus
    spines: tuple
    chi: int

    @property
    def chi_check(self) -> int:
        return 2 + self.genus - sum(self.handlebody_genera)

    def genus_tuple(self) -> str:
        g0, g1, g2 = self.handlebody_genera
        return f"({self.genus}; {g0}, {g1}, {g2})"

    def to_dict(self):
        return {
            "genus": self.genus,
            "handlebody_genera": list(self.handlebody_genera),
            "surface": self.surface.summary(),
            "spines": [s.summary() for s in self.spines],
            "chi": self.chi,
            "chi_check": self.chi_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def trisection_report(tri: Triangulation, colouring: Colouring) -> TrisectionReport:
    surface = central_surface(tri, colouring)
    if surface.genus is None:
        raise TrisectionError(f"central surface unusable: {surface.diagnostic}")
    spines = tuple(spine_graph(tri, colouring, k) for k in range(3))
    for s in spines:
        if not s.connected:
            raise TrisectionError(
                f"spine graph of colour {s.colour} has {s.components} components"
            )
    chi = f_vector(tri).chi
    report = TrisectionReport(
        genus=surface.genus,
        handlebody_genera=tuple(s.betti1 for s in spines),
        surface=surface,
        spines=spines,
        chi=chi,
    )
    if report.chi_check != chi:
        raise TrisectionIdentityError(
            f"2 + g - g0 - g1 - g2 = {report.chi_check} but chi = {chi}"
        )
    return report
