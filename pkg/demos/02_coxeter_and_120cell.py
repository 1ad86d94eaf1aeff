"""The [5,3,3] Coxeter group and the triangulated 120-cell.

Todd-Coxeter enumeration of the symmetry group of the 120-cell, then one
Coxeter simplex per group element.  The boundary cells are counted as
vertex classes of each barycentre type.
"""
import time

from trigenus import H4_DIAGRAM, build_120cell, coset_enumerate
from trigenus.davis import boundary_census

t0 = time.perf_counter()
table = coset_enumerate(H4_DIAGRAM)
print(f"|Gamma| = {len(table)} ({time.perf_counter() - t0:.2f}s)")

# Stabilisers of a dodecahedron and of a vertex of the 120-cell.
print("index of <r0, r1, r2>:", coset_enumerate(H4_DIAGRAM, subgroup=[(0,), (1,), (2,)]).index)
print("index of <r1, r2, r3>:", coset_enumerate(H4_DIAGRAM, subgroup=[(1,), (2,), (3,)]).index)

# Shortlex normal forms come for free from the breadth-first numbering.
for c in (1, 2, 100, 14399):
    print(f"  element {c:5d} = " + " ".join(f"r{x}" for x in table.word(c)))

cell = build_120cell(table)
v, e, p, d = boundary_census(cell)
print(f"boundary: {v} vertices, {e} edges, {p} pentagons, {d} dodecahedra")
print("unglued facets:", len(cell.unglued_facets()))
