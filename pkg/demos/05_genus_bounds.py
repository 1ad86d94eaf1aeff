"""Bounds on trisection genus from classical invariants."""
import math

from trigenus import (
    InvariantSet,
    cover_bounds,
    einstein_bound,
    genus_bounds,
    hyperbolic_bounds,
    lower_bounds,
    stable_records,
)

davis = InvariantSet(chi=26, beta1=24, beta2=72, sigma=14400, excluded_s4=True,
                     trisection_genus=7201)
print(genus_bounds(davis).to_text())
print()

print("S^1 x S^3:", lower_bounds(InvariantSet(chi=0, beta1=1, beta2=0, excluded_s4=True)).lower)
for g in (1, 2, 3):
    inv = InvariantSet(chi=4 - 4 * g, beta1=2 * g, beta2=2, excluded_s4=True)
    print(f"S_{g} x S^2:", lower_bounds(inv).lower)

print("degree-2 cover of the Davis manifold:", cover_bounds(davis, 2).sandwich("g(N)"))

hyp = hyperbolic_bounds(chi=26, sigma=14400)
print(f"hyperbolic, chi = 26: Vol = {hyp.extras['volume']:.4f}, lower {hyp.lower}, "
      f"C = {hyp.extras['C']:.6g}")

print("Einstein, sign 16 and norm 7776 pi^2:", einstein_bound(16, 7776 * math.pi**2))
print("stable record from covers of degree 1 and 2:", stable_records([(1, 10), (2, 12)]).value)
