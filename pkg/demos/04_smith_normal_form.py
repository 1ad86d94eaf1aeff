"""Integer Smith normal form, dense and sparse.

The sparse routine first pivots on unit entries, which clears almost all
of a relation matrix coming from a triangulation, and hands the remainder
to the dense routine.
"""
from collections import Counter

import numpy as np

from trigenus import smith_form, sparse_smith_form

m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
print("invariant factors of", m, "->", smith_form(m).factors)

# Z^3 / <(2,0,0), (0,3,0)> = Z/2 + Z/3 + Z = Z/6 + Z
snf = smith_form([[2, 0, 0], [0, 3, 0]])
print("factors", snf.factors, "free rank", snf.free_rank, "torsion", snf.torsion)

rng = np.random.default_rng(1)
n_rows, n_cols = 300, 305
rows = []
for _ in range(n_rows):
    # three nonzero entries per row, like a boundary map
    cols = rng.choice(n_cols, size=3, replace=False)
    rows.append({int(j): int(rng.choice([-2, -1, 1, 2])) for j in cols})
sparse = sparse_smith_form(rows, n_cols)
dense = np.zeros((n_rows, n_cols), dtype=np.int64)
for i, row in enumerate(rows):
    for j, v in row.items():
        dense[i, j] = v
full = smith_form(dense.tolist())
print(f"sparse {n_rows} x {n_cols}: rank {sparse.rank}, free rank {sparse.free_rank}, "
      f"torsion orders {dict(Counter(sparse.torsion))}")
print("agrees with the dense routine:", (sparse.free_rank, sparse.torsion) == (full.free_rank, full.torsion))
