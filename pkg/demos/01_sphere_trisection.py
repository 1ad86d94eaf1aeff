"""Trisecting the 4-sphere, starting from the boundary of the 5-simplex.

The six pentachora of the boundary of the 5-simplex triangulate S^4.  We
find a tricolouring, pair pentachora across their pure facets, apply one
2-4 move per pair and read off the trisection.
"""
from trigenus import (
    boundary_5simplex,
    f_vector,
    find_colouring,
    pair_doubles,
    run_pipeline,
    trisection_report,
    verify_colouring,
)

tri = boundary_5simplex()
print("f-vector of the input:", f_vector(tri), "chi =", f_vector(tri).chi)

# Every pentachoron must see the colours with multiplicities 2, 2, 1.
colouring = find_colouring(tri)
print("vertex colours:", colouring.colours, "violations:", verify_colouring(tri, colouring))

# Each pentachoron meets exactly one other across the facet opposite its
# singleton-colour vertex.
for double in pair_doubles(tri, colouring):
    print(f"  double: pentachora {double.first} and {double.second}, apex colour {double.apex_colour}")

moved, moved_colouring = run_pipeline(tri, colouring)
print("after the moves:", moved.size, "pentachora, f-vector", f_vector(moved))

report = trisection_report(moved, moved_colouring)
print("trisection (g; g0, g1, g2) =", report.genus_tuple())
s = report.surface
print(f"central surface: {s.squares} squares, {s.edges} edges, {s.vertices} vertices, genus {s.genus}")
print("2 + g - g0 - g1 - g2 =", report.chi_check, "= chi(S^4)")
