"""Small reference triangulations used throughout tests and demos."""
from itertools import combinations

from .triangulation import Triangulation


def boundary_5simplex() -> Triangulation:
    """The boundary of the 5-simplex, a 6-pentachoron triangulation of S^4.

    Pentachoron ``i`` omits vertex ``i`` of {0..5}; its slots hold the
    remaining vertices in increasing order.
    """
    slots = [[v for v in range(6) if v != i] for i in range(6)]
    gluings = []
    for i, j in combinations(range(6), 2):
        f = slots[i].index(j)
        g = slots[j].index(i)
        perm = [slots[j].index(v) if v != j else g for v in slots[i]]
        gluings.append((i, f, j, g, perm))
    return Triangulation(6, gluings)


def boundary_5simplex_vertices():
    """Abstract vertex at each slot of :func:`boundary_5simplex`."""
    return [[v for v in range(6) if v != i] for i in range(6)]


def double_pentachoron() -> Triangulation:
    """Two pentachora glued along all five facets by the identity (S^4)."""
    ident = (0, 1, 2, 3, 4)
    return Triangulation(2, [(0, f, 1, f, ident) for f in range(5)])


def single_pentachoron() -> Triangulation:
    """One pentachoron with every facet unglued (a 4-ball)."""
    return Triangulation(1)
