"""Tricolourings, double-pentachoron pairing and the 2-4 move pipeline.

A tricolouring assigns 0, 1 or 2 to every vertex class so that each
pentachoron sees one colour once and the other two colours twice.  The
vertex carrying the singleton colour is the *apex*; the facet opposite it
(spanned by the four doubleton vertices) is the *pure facet*.  Pure facets
pair the pentachora into doubles, and a 2-4 move on every double yields a
triangulation whose colour map pulls back the cubulation of the 2-simplex
to a trisection.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .triangulation import (
    NotClosedError,
    Triangulation,
    TriangulationError,
    face_labels,
    perm_inverse,
)

__all__ = [
    "DAVIS_TYPE_COLOURS",
    "ColouringError",
    "PairingError",
    "SearchBudgetExceeded",
    "Colouring",
    "Double",
    "DoublePairing",
    "vertex_representatives",
    "verify_colouring",
    "find_colouring",
    "pair_doubles",
    "move_2_4",
    "run_pipeline",
]

#: Flag-barycentre type -> colour for Coxeter-type triangulations:
#: {v0, v1} -> 0, {v2} -> 1, {v3, v4} -> 2.
DAVIS_TYPE_COLOURS = {0: 0, 1: 0, 2: 1, 3: 2, 4: 2}


class ColouringError(TriangulationError):
    pass


class PairingError(TriangulationError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


def vertex_representatives(tri: Triangulation):
    """Least corner ``(p, slot)`` of each vertex class, in class order."""
    labels, count = face_labels(tri, 0)
    _, first = np.unique(labels.ravel(), return_index=True)
    return tuple((int(x) // 5, int(x) % 5) for x in first[:count])


@dataclass(frozen=True)
class Colouring:
    """Colour of each vertex class of a specific triangulation.

    ``representatives[i]`` is the least corner of vertex class ``i``.
    ``processed`` marks the output of :func:`run_pipeline`.
    """

    representatives: tuple
    colours: tuple
    processed: bool = False

    @classmethod
    def from_corners(cls, tri, corner_colours, processed=False):
        corner_colours = np.asarray(corner_colours)
        labels, count = face_labels(tri, 0)
        colours = np.full(count, -1, dtype=np.int64)
        colours[labels.ravel()] = corner_colours.ravel()
        if not np.array_equal(colours[labels], corner_colours):
            raise ColouringError("corner colours are not constant on vertex classes")
        return cls(vertex_representatives(tri), tuple(int(c) for c in colours), processed)

    @classmethod
    def from_types(cls, tri, mapping=None):
        """Colour by vertex type, e.g. with :data:`DAVIS_TYPE_COLOURS`."""
        if tri.vertex_types is None:
            raise ColouringError("triangulation carries no vertex types")
        mapping = DAVIS_TYPE_COLOURS if mapping is None else mapping
        lookup = np.vectorize(lambda t: mapping[int(t)])
        return cls.from_corners(tri, lookup(tri.vertex_types))

    def corner_colours(self, tri) -> np.ndarray:
        """``(size, 5)`` colour array; checks that the colouring belongs to ``tri``."""
        if vertex_representatives(tri) != self.representatives:
            raise ColouringError("colouring domain differs from the vertex classes")
        labels, _ = face_labels(tri, 0)
        return np.asarray(self.colours, dtype=np.int64)[labels]

    def class_sizes(self):
        """Number of vertex classes of each colour."""
        return tuple(self.colours.count(c) for c in range(3))

    def __len__(self):
        return len(self.colours)


def _apexes(corner_colours):
    """Apex slot per pentachoron, or -1 where the 2-2-1 pattern fails."""
    counts = np.stack([(corner_colours == c).sum(axis=1) for c in range(3)], axis=1)
    good = (np.sort(counts, axis=1) == [1, 2, 2]).all(axis=1)
    singleton = np.argmin(counts, axis=1)
    slot_is_apex = corner_colours == singleton[:, None]
    apex = np.where(good, np.argmax(slot_is_apex, axis=1), -1)
    return apex


def verify_colouring(tri: Triangulation, colouring: Colouring):
    """Pentachora violating the 2-2-1 pattern (empty list when the colouring is good)."""
    tri.require_valid(closed=True)
    cc = colouring.corner_colours(tri)
    if ((cc < 0) | (cc > 2)).any():
        raise ColouringError("colours must be 0, 1 or 2")
    return [int(p) for p in np.nonzero(_apexes(cc) < 0)[0]]


def find_colouring(tri: Triangulation, node_budget=None):
    """Exhaustive search for a tricolouring.

    Classes are assigned in order of decreasing corner count (ties by
    class index), trying colours 0, 1, 2 with forward checking.  Class 0
    is fixed to colour 0.  The first colouring found is lexicographically
    least in that assignment order.  Returns ``None`` when no tricolouring
    exists; raises :class:`SearchBudgetExceeded` after ``node_budget``
    assignments.
    """
    tri.require_valid(closed=True)
    labels, m = face_labels(tri, 0)
    labels = labels.tolist()
    # multiplicity of each class in each pentachoron
    incidence = [dict() for _ in range(m)]
    for p, row in enumerate(labels):
        for v in row:
            incidence[v][p] = incidence[v].get(p, 0) + 1
    members = [list(inc.items()) for inc in incidence]
    order = sorted(range(m), key=lambda v: (-sum(incidence[v].values()), v))
    domain = [0b111] * m
    domain[0] = 0b001
    colour = [-1] * m
    counts = [[0, 0, 0] for _ in labels]

    def assign(v, c):
        """Assign and forward-check; returns (ok, trail)."""
        trail = []
        colour[v] = c
        ok = True
        touched = []
        for p, mult in members[v]:
            counts[p][c] += mult
            touched.append((p, mult))
            if counts[p][c] > 2:
                ok = False
                break
        if ok:
            for p, _ in touched:
                cnt = counts[p]
                for u in set(labels[p]):
                    if colour[u] >= 0:
                        continue
                    mu = incidence[u][p]
                    bad = sum(1 << k for k in range(3) if cnt[k] + mu > 2)
                    if domain[u] & bad:
                        trail.append((u, domain[u]))
                        domain[u] &= ~bad
                        if not domain[u]:
                            ok = False
                            break
                if not ok:
                    break
        return ok, (touched, trail)

    def undo(v, c, record):
        touched, trail = record
        for p, mult in touched:
            counts[p][c] -= mult
        for u, old in reversed(trail):
            domain[u] = old
        colour[v] = -1

    nodes = 0
    # explicit stack of (depth, next colour to try, pending undo record)
    stack = [[0, 0, None]]
    while stack:
        frame = stack[-1]
        depth, c, record = frame
        v = order[depth]
        if record is not None:
            undo(v, c - 1, record)
            frame[2] = None
        while c < 3 and not domain[v] >> c & 1:
            c += 1
        if c == 3:
            stack.pop()
            continue
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(f"colouring search exceeded {node_budget} nodes")
        ok, record = assign(v, c)
        frame[1] = c + 1
        frame[2] = record
        if ok:
            if depth + 1 == m:
                return Colouring(vertex_representatives(tri), tuple(colour))
            stack.append([depth + 1, 0, None])
    return None


# -- pairing -------------------------------------------------------------------


@dataclass(frozen=True)
class Double:
    """Two pentachora sharing their pure facet."""

    first: int
    first_apex: int
    second: int
    second_apex: int
    perm: tuple  # gluing of first's pure facet onto second's
    apex_colour: int


@dataclass(frozen=True)
class DoublePairing:
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def pair_doubles(tri: Triangulation, colouring: Colouring) -> DoublePairing:
    """Match every pentachoron with the one across its pure facet."""
    bad = verify_colouring(tri, colouring)
    if bad:
        raise ColouringError(f"colouring violates the 2-2-1 pattern at {len(bad)} pentachora")
    cc = colouring.corner_colours(tri)
    apex = _apexes(cc).tolist()
    cc = cc.tolist()
    dest, perms = tri.tables()
    pairs = []
    for p in range(tri.size):
        a = apex[p]
        q, g = divmod(dest[p][a], 5)
        if q == p:
            raise PairingError(f"pure facet of {p} glued within the same pentachoron")
        if g != apex[q]:
            raise PairingError(f"pure facet of {p} meets a non-pure facet of {q}")
        if cc[p][a] != cc[q][g]:
            raise PairingError(f"apex colour mismatch at ({p},{q})")
        if p < q:
            pairs.append(Double(p, a, q, g, perms[p][a], cc[p][a]))
    return DoublePairing(tuple(pairs))


# -- the 2-4 move --------------------------------------------------------------


class _Workspace:
    """Mutable copy of a triangulation with per-corner colours and types."""

    def __init__(self, tri, corner_colours):
        dest, perms = tri.tables()
        self.dest = [list(row) for row in dest]
        self.perms = [list(row) for row in perms]
        self.colours = [list(row) for row in np.asarray(corner_colours).tolist()]
        self.types = None if tri.vertex_types is None else tri.vertex_types.tolist()
        self.touched = set()

    def apply(self, double: Double):
        A, a, B, b, pi = (
            double.first,
            double.first_apex,
            double.second,
            double.second_apex,
            double.perm,
        )
        if A in self.touched or B in self.touched:
            raise PairingError(f"pair ({A},{B}) is stale")
        if self.dest[A][a] != 5 * B + b or tuple(self.perms[A][a]) != tuple(pi):
            raise PairingError(f"pair ({A},{B}) is stale")

        tau = [s for s in range(5) if s != a]  # label j <-> A slot tau[j]
        slot_in = {"A": {}, "B": {}}
        for j, s in enumerate(tau):
            slot_in["A"][j] = s
            slot_in["B"][j] = pi[s]
        slot_in["A"]["a"] = a
        slot_in["B"]["b"] = b
        label_of = {
            X: {s: lab for lab, s in slot_in[X].items()} for X in ("A", "B")
        }
        old_id = {"A": A, "B": B}
        role = {A: "A", B: "B"}

        n = len(self.dest)
        ids = [A, B, n, n + 1]
        # labels by slot of P_i: a, b, then the three tau vertices other than j=i
        plabels = [["a", "b"] + [j for j in range(4) if j != i] for i in range(4)]
        pslot = [{lab: s for s, lab in enumerate(labs)} for labs in plabels]

        def source(lab):
            return (A, slot_in["A"][lab]) if lab != "b" else (B, b)

        colours = []
        types = []
        for i in range(4):
            colours.append([self.colours[source(lab)[0]][source(lab)[1]] for lab in plabels[i]])
            if self.types is not None:
                types.append([self.types[source(lab)[0]][source(lab)[1]] for lab in plabels[i]])

        def new_facet(X, s):
            """New facet replacing old facet (X, s)."""
            j = label_of[X][s]
            return (j, 1) if X == "A" else (j, 0)

        new_dest = [[None] * 5 for _ in range(4)]
        new_perm = [[None] * 5 for _ in range(4)]
        external = []
        for i in range(4):
            labs = plabels[i]
            for k in (0, 1):
                X = "B" if k == 0 else "A"
                x = slot_in[X][i]
                d = self.dest[old_id[X]][x]
                q, g = divmod(d, 5)
                sigma = self.perms[old_id[X]][x]
                rho = [0] * 5
                if q in role:
                    Y = role[q]
                    jj, kk = new_facet(Y, g)
                    for s, lab in enumerate(labs):
                        if s != k:
                            rho[s] = pslot[jj][label_of[Y][sigma[slot_in[X][lab]]]]
                    rho[k] = kk
                    new_dest[i][k] = 5 * ids[jj] + kk
                else:
                    for s, lab in enumerate(labs):
                        if s != k:
                            rho[s] = sigma[slot_in[X][lab]]
                    rho[k] = g
                    new_dest[i][k] = d
                    external.append((q, g, 5 * ids[i] + k, perm_inverse(rho)))
                new_perm[i][k] = tuple(rho)
            for j in range(4):
                if j == i:
                    continue
                k = pslot[i][j]
                rho = [0] * 5
                for s, lab in enumerate(labs):
                    rho[s] = pslot[j][i] if lab == j else pslot[j][lab]
                new_dest[i][k] = 5 * ids[j] + pslot[j][i]
                new_perm[i][k] = tuple(rho)

        self.dest.extend([None, None])
        self.perms.extend([None, None])
        self.colours.extend([None, None])
        if self.types is not None:
            self.types.extend([None, None])
        for i in range(4):
            self.dest[ids[i]] = new_dest[i]
            self.perms[ids[i]] = new_perm[i]
            self.colours[ids[i]] = colours[i]
            if self.types is not None:
                self.types[ids[i]] = types[i]
        for q, g, d, rho in external:
            self.dest[q][g] = d
            self.perms[q][g] = rho
        self.touched.update(ids)

    def triangulation(self):
        tri = Triangulation.from_arrays(
            np.array(self.dest, dtype=np.int64),
            np.array(self.perms, dtype=np.int8),
            self.types,
        )
        return tri, np.array(self.colours, dtype=np.int64)


def move_2_4(tri: Triangulation, colouring: Colouring, double: Double):
    """Apply one 2-4 move; returns the new triangulation and colouring.

    The pentachora of the double keep their ids (as the first two new
    pentachora); the other two are appended.
    """
    tri.require_valid(closed=True)
    work = _Workspace(tri, colouring.corner_colours(tri))
    work.apply(double)
    new_tri, cc = work.triangulation()
    return new_tri, Colouring.from_corners(new_tri, cc)


def run_pipeline(tri: Triangulation, colouring: Colouring):
    """Pair all doubles and apply a 2-4 move to each, in pair order."""
    if colouring.processed:
        raise PairingError("input already processed by the 2-4 pipeline")
    pairing = pair_doubles(tri, colouring)
    work = _Workspace(tri, colouring.corner_colours(tri))
    for double in pairing:
        work.apply(double)
    new_tri, cc = work.triangulation()
    out = Colouring.from_corners(new_tri, cc, processed=True)
    if verify_colouring(new_tri, out):
        raise AssertionError("2-4 pipeline produced a pentachoron without the 2-2-1 pattern")
    return new_tri, out
