"""Every generating-function identity in the package, verified exactly.

Left-hand sides come from brute-force enumeration of (signed) permutations
or Möbius sums over (signed) partitions; right-hand sides from closed-form
truncated series over Q[z].  Equality is coefficient-by-coefficient in
exact rationals.
"""

from zonalg.gfseries import eulerian_A, eulerian_B, eulerian_gf_A, verify_identities

print("Eulerian polynomials (excedance counts):")
for d in range(1, 6):
    print(f"  A_{d}(z) = {eulerian_A(d)}")
for d in range(1, 4):
    print(f"  B_{d}(z) = {eulerian_B(d)}")

A = eulerian_gf_A(6)
print("\nthe classical closed form reproduces them: coefficient of x^4/4! is",
      A.coeff(4, "egf"))

print("\nrunning the full identity suite (order 6 / 4 here for speed):")
for record in verify_identities(order_a=6, order_b=4):
    status = "ok" if record["ok"] else "FAIL"
    print(f"  {record['identity']:<28} order {record['order']}: {status}")
