"""A walk through the combinatorics layer: faces, flats, the Tits product.

Faces of the braid arrangement are ordered set partitions; multiplying two
faces refines the first by the second.  The support map forgets the order
and lands in the lattice of flats, where the Möbius function has a closed
product form.
"""

from zonalg import arrangement as arrg
from zonalg.arrangement import type_b, parse_face, parse_flat

a3 = arrg.braid(3)
print("faces of the braid arrangement in R^3, by dimension:")
for f in arrg.faces(a3):
    print(f"  dim {f.dim}:  {f}")

F = parse_face(a3, "13|2")
G = parse_face(a3, "2|13")
print(f"\nTits product: ({F}) * ({G}) = {arrg.tits_product(F, G)}")
print(f"the product started from the other side: ({G}) * ({F}) = {arrg.tits_product(G, F)}")
print("moving a tiny step from inside F toward G lands in FG:",
      arrg.tits_product(F, G) == arrg.tits_product_geometric(F, G))

a8 = arrg.braid(8)
F8 = parse_face(a8, "13|4|2568|7")
print(f"\nsupport of {F8} is the set partition {arrg.support(F8)}")
X = parse_flat(a8, "{13,2568,4,7}")
print("Moebius value mu(bottom, X) for a 4-block partition of [8]:",
      arrg.mobius(arrg.bottom_flat(a8), X), " (= -3! )")

print("\ncharacteristic polynomial of the braid arrangement in R^3:",
      arrg.characteristic_polynomial(a3), " (coefficients of 1, t, t^2, t^3)")

b2 = type_b(2)
print(f"\ntype B in R^2 has {len(arrg.faces(b2))} faces and {len(arrg.flats(b2))} flats:")
for x in arrg.flats(b2):
    print(f"  dim {x.dim}:  {x}")
