"""The minimal signed-Minkowski generating family in type B.

Any family generating all type-B deformations must contain at least
2^(d-1) full-dimensional polytopes (that many simple factors live at the
bottom flat in grade one).  The special simplices attain the bound: every
type-B deformation decomposes uniquely, with integer coefficients for
lattice polytopes, and the decomposition reconstructs the polytope as an
exact vertex-level Minkowski identity.
"""

import random

from zonalg import polyclass
from zonalg.spectra import (
    b_decompose,
    b_generators,
    random_b_deformation,
    reconstruction_holds,
    _b_system,
)

d = 3
family = b_generators(d)
non_points = family.non_point_members()
print(f"special-simplex generators in R^{d}: {len(non_points)} non-point members "
      f"(3^{d} - {d} - 1 = {3**d - d - 1})")
full = family.full_dimensional()
print(f"full-dimensional members: {len(full)} (= 2^{d-1})")
for m in full:
    print("   ", family.label(m))

pb = polyclass.typeB_permutahedron(d)
coeffs = b_decompose(pb)
print(f"\ndecomposition of the type-B permutahedron in R^{d}:")
for g, c in coeffs.items():
    if c:
        print(f"   {family.label(g):<16} {c}")
_, gens, polys, _, _ = _b_system(d)
print("vertex-level reconstruction:", reconstruction_holds(pb, coeffs, polys))

rng = random.Random(1)
p, used = random_b_deformation(d, rng)
got = b_decompose(p)
print("\na random integral combination is recovered exactly:",
      all(got.get(g, 0) == used.get(g, 0) for g in gens))
