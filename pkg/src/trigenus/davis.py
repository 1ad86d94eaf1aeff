"""The Davis hyperbolic 4-manifold, triangulated by Coxeter simplices.

The 120-cell is tiled by 14400 copies of the Coxeter simplex with vertices
v0 (a vertex of the 120-cell), v1 (edge midpoint), v2 (pentagon centre),
v3 (dodecahedron centre) and v4 (centre of the 120-cell).  Pentachoron
``g`` is the image of the base simplex under group element ``g``; its slot
``i`` holds a vertex of type ``i`` and its facet opposite slot ``i < 4`` is
shared with pentachoron ``g r_i``.  The facets opposite v4 form the
boundary, and identifying opposite dodecahedra closes it up.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .colouring import DAVIS_TYPE_COLOURS, Colouring, verify_colouring
from .coxeter import H4_DIAGRAM, CosetTable, coset_enumerate
from .triangulation import (
    Triangulation,
    TriangulationError,
    f_vector,
    face_labels,
    orientability,
    validate,
)

__all__ = [
    "IdentificationError",
    "BOUNDARY_CENSUS",
    "QUOTIENT_CENSUS",
    "DAVIS_CHI",
    "build_120cell",
    "boundary_census",
    "quotient_census",
    "central_involution",
    "Candidate",
    "identification_candidates",
    "davis_identify",
    "davis_colouring",
    "DavisConstruction",
    "davis_construction",
]

log = logging.getLogger(__name__)

#: Cells of the boundary of the 120-cell: vertices, edges, pentagons, dodecahedra.
BOUNDARY_CENSUS = (600, 1200, 720, 120)
#: Cells left after identifying opposite dodecahedra.
QUOTIENT_CENSUS = (1, 60, 144, 60)
DAVIS_CHI = 1 - 60 + 144 - 60 + 1

# group generators fixing a type-i vertex of the boundary complex
_STABILISERS = {0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)}


class IdentificationError(TriangulationError):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


def _types_census(tri, types=(0, 1, 2, 3)):
    """Number of vertex classes of each listed type."""
    labels, count = face_labels(tri, 0)
    vt = tri.vertex_types
    out = []
    for t in types:
        out.append(len(np.unique(labels[vt == t])))
    return tuple(out)


def build_120cell(table: CosetTable) -> Triangulation:
    """Bounded triangulation of the 120-cell, one pentachoron per group element."""
    n = len(table)
    tab = table.table
    ids = np.arange(n)
    for x in range(4):
        if not np.array_equal(tab[tab[:, x], x], ids) or (tab[:, x] == ids).any():
            raise TriangulationError(f"generator {x} does not act as a free involution")
    dest = np.full((n, 5), -1, dtype=np.int64)
    dest[:, :4] = 5 * tab[:, :4] + np.arange(4)
    perm = np.tile(np.arange(5, dtype=np.int8), (n, 5, 1))
    types = np.tile(np.arange(5), (n, 1))
    tri = Triangulation.from_arrays(dest, perm, types)
    census = boundary_census(tri)
    orbit_counts = tuple(len(set(table.orbits(_STABILISERS[t]))) for t in range(4))
    if census != orbit_counts:
        raise AssertionError(
            f"boundary census {census} disagrees with stabiliser orbits {orbit_counts}"
        )
    return tri


def boundary_census(tri: Triangulation):
    """(vertices, edges, pentagons, dodecahedra) on the boundary of the 120-cell."""
    return _types_census(tri)


def quotient_census(tri: Triangulation):
    """(vertices, edges, pentagons, dodecahedra) of the cellulation from the 120-cell."""
    return _types_census(tri)


def central_involution(table: CosetTable) -> int:
    """The element (r0 r1 r2 r3)^15, checked to be a central involution."""
    z = int(table.act([0], (0, 1, 2, 3) * 15)[0])
    if z == 0 or table.multiply(z, z) != 0:
        raise IdentificationError("(r0 r1 r2 r3)^15 is not a nontrivial involution")
    for x in range(table.table.shape[1]):
        r = int(table.table[0, x])
        if table.multiply(z, r) != table.multiply(r, z):
            raise IdentificationError(f"(r0 r1 r2 r3)^15 does not commute with r{x}")
    return z


@dataclass
class Candidate:
    word: tuple  # w as a word in r0, r1, r2
    element: int  # the element z w
    passed: bool = False
    reason: str = ""
    census: tuple = None
    chi: int = None
    orientable: bool = None
    triangulation: Triangulation = field(default=None, repr=False)

    @property
    def label(self):
        return " ".join(f"r{x}" for x in self.word) or "1"


def _dodecahedral_involutions(table):
    """Involutions (and 1) of the subgroup generated by r0, r1, r2, shortlex order."""
    orbit = table.orbits((0, 1, 2))
    members = [c for c, o in enumerate(orbit) if o == orbit[0]]
    invols = [w for w in members if table.multiply(w, w) == 0]
    return sorted(invols, key=lambda w: (len(table.word(w)), table.word(w)))


def identification_candidates(tri: Triangulation, table: CosetTable):
    """Test every boundary gluing ``g -> z g w`` for involutions ``w`` of <r0,r1,r2>."""
    z = central_involution(table)
    n = tri.size
    ids = np.arange(n)
    out = []
    for w in _dodecahedral_involutions(table):
        element = table.multiply(z, w)
        cand = Candidate(table.word(w), element)
        out.append(cand)
        partner = table.act(ids, table.word(element))
        if (partner == ids).any():
            cand.reason = "boundary facet glued to itself"
            continue
        dest = tri.dest.copy()
        dest[:, 4] = 5 * partner + 4
        closed = Triangulation.from_arrays(dest, tri.perms, tri.vertex_types)
        report = validate(closed)
        if not report.valid or not report.closed:
            cand.reason = f"invalid gluing: {report}"
            continue
        cand.census = quotient_census(closed)
        if cand.census != QUOTIENT_CENSUS or _types_census(closed, (4,)) != (1,):
            cand.reason = f"quotient census {cand.census} != {QUOTIENT_CENSUS}"
            continue
        cand.orientable = bool(orientability(closed))
        if not cand.orientable:
            cand.reason = "non-orientable"
            continue
        cand.chi = f_vector(closed).chi
        if cand.chi != DAVIS_CHI:
            cand.reason = f"chi = {cand.chi} != {DAVIS_CHI}"
            continue
        cand.passed = True
        cand.reason = "pass"
        cand.triangulation = closed
        log.info("identification candidate w = %s passes", cand.label)
    return out


def davis_identify(tri: Triangulation, table: CosetTable) -> Triangulation:
    """The closed Davis triangulation; fails unless exactly one candidate passes."""
    candidates = identification_candidates(tri, table)
    passing = [c for c in candidates if c.passed]
    if not passing:
        raise IdentificationError("no boundary identification passes the checks", candidates)
    if len(passing) > 1:
        labels = ", ".join(c.label for c in passing)
        raise IdentificationError(f"several identifications pass: {labels}", candidates)
    return passing[0].triangulation


def davis_colouring(tri: Triangulation) -> Colouring:
    """Colour v0, v1 -> 0; v2 -> 1; v3, v4 -> 2."""
    if tri.vertex_types is None:
        raise TriangulationError("vertex types required")
    report = validate(tri)
    if not report.valid:
        raise TriangulationError(f"vertex types not preserved: {report}")
    colouring = Colouring.from_types(tri, DAVIS_TYPE_COLOURS)
    if verify_colouring(tri, colouring):
        raise AssertionError("type colouring violates the 2-2-1 pattern")
    return colouring


@dataclass
class DavisConstruction:
    table: CosetTable
    bounded: Triangulation
    triangulation: Triangulation
    colouring: Colouring
    candidates: list


@lru_cache(maxsize=1)
def davis_construction() -> DavisConstruction:
    """Run the whole construction (cached; the result is read-only)."""
    table = coset_enumerate(H4_DIAGRAM)
    bounded = build_120cell(table)
    candidates = identification_candidates(bounded, table)
    passing = [c for c in candidates if c.passed]
    if len(passing) != 1:
        raise IdentificationError(
            f"{len(passing)} boundary identifications pass the checks", candidates
        )
    closed = passing[0].triangulation
    return DavisConstruction(table, bounded, closed, davis_colouring(closed), candidates)
