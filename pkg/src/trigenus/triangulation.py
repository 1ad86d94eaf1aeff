"""Closed (possibly singular) triangulations of 4-manifolds.

A triangulation is a list of pentachora whose facets are glued in pairs.
Facet ``f`` of pentachoron ``p`` is the tetrahedron omitting vertex slot
``f``.  A gluing ``(p, f) -> (q, g, perm)`` identifies slot ``s`` of ``p``
with slot ``perm[s]`` of ``q`` (so ``perm[f] == g``).

Identity is positional: nothing here assumes that distinct slots of a
pentachoron carry distinct vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

__all__ = [
    "FACES",
    "TriangulationError",
    "NotClosedError",
    "InvalidTriangulationError",
    "DisconnectedError",
    "Triangulation",
    "Violation",
    "ValidationReport",
    "FaceClass",
    "FVector",
    "Orientation",
    "DualGraph",
    "validate",
    "face_classes",
    "face_labels",
    "f_vector",
    "orientability",
    "dual_graph",
    "perm_sign",
    "perm_inverse",
]

#: ``FACES[d]`` lists the d-faces of a pentachoron as sorted slot tuples, in
#: lexicographic order.  A corner ``(p, i)`` of dimension d is face
#: ``FACES[d][i]`` of pentachoron ``p``.
FACES = tuple(tuple(combinations(range(5), d + 1)) for d in range(5))

_FACE_INDEX = tuple({face: i for i, face in enumerate(FACES[d])} for d in range(5))

# bitmask of a slot set -> index of that face in FACES[d]
_MASK_TO_INDEX = np.full((5, 32), -1, dtype=np.int64)
for _d in range(5):
    for _i, _face in enumerate(FACES[_d]):
        _MASK_TO_INDEX[_d, sum(1 << s for s in _face)] = _i


class TriangulationError(ValueError):
    pass


class NotClosedError(TriangulationError):
    def __init__(self, message="closed complex required"):
        super().__init__(message)


class InvalidTriangulationError(TriangulationError):
    pass


class DisconnectedError(TriangulationError):
    def __init__(self, components):
        self.components = components
        sizes = ", ".join(str(len(c)) for c in components)
        super().__init__(
            f"dual graph is disconnected: {len(components)} components (sizes {sizes})"
        )


def perm_sign(perm) -> int:
    """Sign of a permutation given as a sequence of images."""
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_inverse(perm) -> tuple:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


class Triangulation:
    """A set of pentachora with a facet-gluing table.

    Parameters
    ----------
    size : int
        Number of pentachora.
    gluings : iterable of ``(p, f, q, g, perm)``
        Facet gluings.  With ``symmetric=True`` (the default) each gluing is
        also recorded in the reverse direction with the inverse permutation,
        so every pair only has to be listed once.  With ``symmetric=False``
        the table is taken literally, which allows building deliberately
        broken tables for :func:`validate`.
    vertex_types : optional ``(size, 5)`` integer array
        A label per vertex slot.

    Instances are treated as immutable; the gluing arrays are read-only.
    """

    def __init__(self, size, gluings=(), vertex_types=None, symmetric=True):
        if size < 1:
            raise TriangulationError("a triangulation needs at least one pentachoron")
        dest = np.full((size, 5), -1, dtype=np.int64)
        perm = np.zeros((size, 5, 5), dtype=np.int8)
        for p, f, q, g, pi in gluings:
            pi = tuple(int(x) for x in pi)
            for a, b in ((p, f), (q, g)):
                if not (0 <= a < size and 0 <= b < 5):
                    raise TriangulationError(f"facet ({a},{b}) out of range")
            if sorted(pi) != [0, 1, 2, 3, 4]:
                raise TriangulationError(f"gluing at ({p},{f}): {pi} is not a permutation")
            dest[p, f] = 5 * q + g
            perm[p, f] = pi
            if symmetric:
                dest[q, g] = 5 * p + f
                perm[q, g] = perm_inverse(pi)
        self._init_arrays(dest, perm, vertex_types)

    @classmethod
    def from_arrays(cls, dest, perm, vertex_types=None):
        """Wrap precomputed gluing arrays (``dest[p,f] = 5*q+g`` or -1)."""
        obj = cls.__new__(cls)
        obj._init_arrays(np.array(dest, dtype=np.int64), np.array(perm, dtype=np.int8), vertex_types)
        return obj

    def _init_arrays(self, dest, perm, vertex_types):
        if dest.ndim != 2 or dest.shape[1] != 5 or perm.shape != dest.shape + (5,):
            raise TriangulationError("malformed gluing arrays")
        self._dest = dest
        self._perm = perm
        self._dest.setflags(write=False)
        self._perm.setflags(write=False)
        if vertex_types is not None:
            vertex_types = np.array(vertex_types, dtype=np.int64)
            if vertex_types.shape != dest.shape:
                raise TriangulationError("vertex_types must have shape (size, 5)")
            vertex_types.setflags(write=False)
        self._types = vertex_types
        self._cache = {}

    # -- basic access -----------------------------------------------------

    @property
    def size(self) -> int:
        return self._dest.shape[0]

    def __len__(self):
        return self.size

    @property
    def dest(self) -> np.ndarray:
        """``(size, 5)`` array with ``5*q + g`` per glued facet, -1 if unglued."""
        return self._dest

    @property
    def perms(self) -> np.ndarray:
        """``(size, 5, 5)`` array of gluing permutations."""
        return self._perm

    @property
    def vertex_types(self):
        return self._types

    def gluing(self, p, f):
        """Return ``(q, g, perm)`` for a glued facet, or ``None``."""
        d = int(self._dest[p, f])
        if d < 0:
            return None
        return d // 5, d % 5, tuple(int(x) for x in self._perm[p, f])

    def gluings(self):
        """Iterate each glued pair once as ``(p, f, q, g, perm)`` with ``(p, f) < (q, g)``."""
        dest = self.tables()[0]
        perms = self.tables()[1]
        for p in range(self.size):
            for f in range(5):
                d = dest[p][f]
                if d >= 0 and (p, f) < (d // 5, d % 5):
                    yield p, f, d // 5, d % 5, perms[p][f]

    def tables(self):
        """Gluing tables as nested Python lists (cached); faster for scalar loops."""
        if "tables" not in self._cache:
            perms = [[tuple(row) for row in block] for block in self._perm.tolist()]
            self._cache["tables"] = (self._dest.tolist(), perms)
        return self._cache["tables"]

    @property
    def is_closed(self) -> bool:
        return bool((self._dest >= 0).all())

    def unglued_facets(self):
        return [(int(p), int(f)) for p, f in zip(*np.nonzero(self._dest < 0))]

    def relabel(self, order):
        """Return the triangulation with pentachoron ``order[i]`` renamed ``i``."""
        order = np.asarray(order, dtype=np.int64)
        new_of_old = np.empty_like(order)
        new_of_old[order] = np.arange(len(order))
        dest = self._dest[order].copy()
        glued = dest >= 0
        dest[glued] = 5 * new_of_old[dest[glued] // 5] + dest[glued] % 5
        types = None if self._types is None else self._types[order]
        return Triangulation.from_arrays(dest, self._perm[order], types)

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        same_types = (self._types is None and other._types is None) or (
            self._types is not None
            and other._types is not None
            and np.array_equal(self._types, other._types)
        )
        if not same_types or not np.array_equal(self._dest, other._dest):
            return False
        glued = self._dest >= 0
        return np.array_equal(self._perm[glued], other._perm[glued])

    def __hash__(self):
        return hash((self.size, self._dest.tobytes()))

    def __repr__(self):
        state = "closed" if self.is_closed else f"{len(self.unglued_facets())} unglued facets"
        return f"<Triangulation: {self.size} pentachora, {state}>"

    def require_valid(self, closed=False):
        report = validate(self)
        if not report.valid:
            raise InvalidTriangulationError(
                "invalid triangulation: " + "; ".join(str(v) for v in report.violations[:5])
            )
        if closed and not report.closed:
            raise NotClosedError()


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    pentachoron: int
    facet: int
    message: str

    def __str__(self):
        return f"{self.message} at ({self.pentachoron},{self.facet})"


@dataclass
class ValidationReport:
    closed: bool
    unglued: list
    violations: list

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.violations:
            return "invalid: " + "; ".join(str(v) for v in self.violations)
        if self.closed:
            return "valid, closed"
        return f"valid, bounded ({len(self.unglued)} unglued facets)"


def validate(tri: Triangulation) -> ValidationReport:
    """Check the gluing table for consistency.

    Diagnostics are returned, never raised.
    """
    if "validation" in tri._cache:
        return tri._cache["validation"]
    unglued = tri.unglued_facets()
    if _quick_valid(tri):
        violations = []
    else:
        violations = _violations(tri)
    report = ValidationReport(closed=not unglued, unglued=unglued, violations=violations)
    tri._cache["validation"] = report
    return report


_SLOTS = np.arange(5)


def _quick_valid(tri):
    """Vectorised check that no violation exists."""
    dest, perm = tri.dest, tri.perms
    p, f = np.nonzero(dest >= 0)
    if len(p) == 0:
        return True
    q, g = dest[p, f] // 5, dest[p, f] % 5
    pi = perm[p, f].astype(np.int64)
    if ((q == p) & (g == f)).any() or (pi[np.arange(len(p)), f] != g).any():
        return False
    if (dest[q, g] != 5 * p + f).any():
        return False
    back = perm[q, g].astype(np.int64)
    if (np.take_along_axis(back, pi, axis=1) != _SLOTS).any():
        return False
    types = tri.vertex_types
    if types is not None:
        mismatch = types[p] != np.take_along_axis(types[q], pi, axis=1)
        mismatch[np.arange(len(p)), f] = False
        if mismatch.any():
            return False
    return True


def _violations(tri):
    dest, perms = tri.tables()
    types = None if tri.vertex_types is None else tri.vertex_types.tolist()
    violations = []
    for p in range(tri.size):
        for f in range(5):
            d = dest[p][f]
            if d < 0:
                continue
            q, g = divmod(d, 5)
            pi = perms[p][f]
            if (q, g) == (p, f):
                violations.append(Violation(p, f, "facet glued to itself"))
                continue
            if pi[f] != g:
                violations.append(Violation(p, f, "permutation does not map omitted slot"))
                continue
            if dest[q][g] != 5 * p + f or perms[q][g] != perm_inverse(pi):
                violations.append(Violation(p, f, "involution broken"))
                continue
            if types is not None and any(
                types[p][s] != types[q][pi[s]] for s in range(5) if s != f
            ):
                violations.append(Violation(p, f, "vertex types not preserved"))
    return violations


# -- face classes -------------------------------------------------------------


@dataclass(frozen=True)
class FaceClass:
    """An identification class of d-faces.

    ``members`` are corners ``(p, face)`` with ``face`` a sorted slot tuple.
    """

    dimension: int
    index: int
    members: tuple

    @property
    def representative(self):
        return self.members[0]

    def __len__(self):
        return len(self.members)


def face_labels(tri: Triangulation, d: int):
    """Class label of every d-corner.

    Returns ``(labels, count)`` where ``labels`` has shape
    ``(size, len(FACES[d]))`` and classes are numbered in order of their
    lexicographically least corner.
    """
    key = ("labels", d)
    if key in tri._cache:
        return tri._cache[key]
    n = tri.size
    k = len(FACES[d])
    dest, perm = tri.dest, tri.perms
    rows, cols = [], []
    if d < 4:
        for f in range(5):
            glued = np.nonzero(dest[:, f] >= 0)[0]
            if len(glued) == 0:
                continue
            q = dest[glued, f] // 5
            pi = perm[glued, f].astype(np.int64)
            for i, face in enumerate(FACES[d]):
                if f in face:
                    continue
                mask = np.zeros(len(glued), dtype=np.int64)
                for s in face:
                    mask |= np.left_shift(1, pi[:, s])
                rows.append(glued * k + i)
                cols.append(q * k + _MASK_TO_INDEX[d][mask])
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n * k, n * k))
    count, comp = connected_components(graph, directed=False)
    # renumber components by least corner; corner ids are visited in order
    first = np.full(count, -1, dtype=np.int64)
    _, first_pos = np.unique(comp, return_index=True)
    order = np.argsort(first_pos, kind="stable")
    first[order] = np.arange(count)
    labels = first[comp].reshape(n, k)
    labels.setflags(write=False)
    tri._cache[key] = (labels, count)
    return labels, count


def face_classes(tri: Triangulation, d: int):
    """Identification classes of d-faces, ordered by representative."""
    tri.require_valid()
    if not 0 <= d <= 3:
        raise ValueError("dimension must be 0..3")
    labels, count = face_labels(tri, d)
    flat = labels.ravel()
    order = np.argsort(flat, kind="stable")
    bounds = np.searchsorted(flat[order], np.arange(count + 1))
    k = len(FACES[d])
    classes = []
    for c in range(count):
        corners = order[bounds[c] : bounds[c + 1]]
        members = tuple((int(x // k), FACES[d][x % k]) for x in corners)
        classes.append(FaceClass(d, c, members))
    return classes


@dataclass(frozen=True)
class FVector:
    f: tuple

    @property
    def chi(self) -> int:
        return sum((-1) ** i * x for i, x in enumerate(self.f))

    def __getitem__(self, i):
        return self.f[i]

    def __iter__(self):
        return iter(self.f)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.f) + ")"


def f_vector(tri: Triangulation) -> FVector:
    tri.require_valid(closed=True)
    counts = tuple(face_labels(tri, d)[1] for d in range(4)) + (tri.size,)
    return FVector(counts)


# -- orientation and dual graph ------------------------------------------------


@dataclass
class DualGraph:
    nodes: int
    edges: list  # ((p, f), (q, g)) with (p, f) < (q, g), sorted
    components: list  # lists of pentachora, ordered by least member
    tree_edges: list  # indices into ``edges``, BFS spanning forest

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def edge_index(self):
        """Map each facet ``(p, f)`` of a glued pair to its edge index."""
        index = {}
        for i, (a, b) in enumerate(self.edges):
            index[a] = i
            index[b] = i
        return index


def dual_graph(tri: Triangulation) -> DualGraph:
    if "dual" in tri._cache:
        return tri._cache["dual"]
    tri.require_valid()
    dest, _ = tri.tables()
    edges = []
    eid = {}
    for p in range(tri.size):
        for f in range(5):
            d = dest[p][f]
            if d >= 0 and (p, f) < divmod(d, 5):
                eid[(p, f)] = eid[divmod(d, 5)] = len(edges)
                edges.append(((p, f), divmod(d, 5)))
    seen = [False] * tri.size
    components = []
    tree = []
    for root in range(tri.size):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for f in range(5):
                d = dest[p][f]
                if d < 0:
                    continue
                q = d // 5
                if not seen[q]:
                    seen[q] = True
                    comp.append(q)
                    tree.append(eid[(p, f)])
                    queue.append(q)
        components.append(sorted(comp))
    graph = DualGraph(tri.size, edges, components, tree)
    tri._cache["dual"] = graph
    return graph


@dataclass
class Orientation:
    orientable: bool
    signs: tuple = None  # +1/-1 per pentachoron when orientable
    witness: list = field(default_factory=list)  # closed loop of pentachora

    def __bool__(self):
        return self.orientable


def orientability(tri: Triangulation) -> Orientation:
    """Orient pentachora consistently, or return an orientation-reversing loop.

    Crossing a gluing with permutation ``perm`` forces the neighbour's sign
    to be ``-sign(perm)`` times the current one.
    """
    if "orientation" in tri._cache:
        return tri._cache["orientation"]
    tri.require_valid(closed=True)
    graph = dual_graph(tri)
    if not graph.connected:
        raise DisconnectedError(graph.components)
    dest, perms = tri.tables()
    sign = [0] * tri.size
    parent = [None] * tri.size  # (previous pentachoron, facet used)
    sign[0] = 1
    queue = deque([0])
    result = None
    while queue and result is None:
        p = queue.popleft()
        for f in range(5):
            q, g = divmod(dest[p][f], 5)
            want = -perm_sign(perms[p][f]) * sign[p]
            if sign[q] == 0:
                sign[q] = want
                parent[q] = (p, f)
                queue.append(q)
            elif sign[q] != want:
                result = Orientation(False, None, _witness(parent, p, f, q))
                break
    if result is None:
        result = Orientation(True, tuple(sign))
    tri._cache["orientation"] = result
    return result


def _witness(parent, p, f, q):
    def ancestors(x):
        chain = [x]
        while parent[x] is not None:
            x = parent[x][0]
            chain.append(x)
        return chain[::-1]

    up_p, up_q = ancestors(p), ancestors(q)
    common = 0
    while common < min(len(up_p), len(up_q)) and up_p[common] == up_q[common]:
        common += 1
    # branch point -> p, across facet f to q, back up to the branch point
    return up_p[common - 1 :] + up_q[common:][::-1] + [up_p[common - 1]]
