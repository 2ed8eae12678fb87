"""The compactified apartment: boundary pieces, rays and basic opens.

Shows how interior points degenerate to boundary pieces along rays, how
the filtration thresholds f classify roots at the boundary, and how
membership in the basic opens of the topology is decided by exact
rational feasibility.

Run:  python3 demos/02_boundary_and_topology.py
"""

from padicbuilding import (
    Root,
    apartment_point,
    f_point,
    f_sigma,
    gamma_membership,
    interior_point,
    open_box,
    ray_limit,
    s_project,
)

n = 3
x0 = interior_point([0, 1, 2])
print(f"== a ray from x0 = {x0.exponents} in direction d = (0, 0, 1) ==")
d = [0, 0, 1]
for s in (1, 2, 5, 20):
    y = interior_point([e + s * t for e, t in zip(x0.exponents, d)])
    print(f"  s = {s:>2}: exponents {y.exponents}")
limit = ray_limit(x0, d)
print(f"  limit: piece {limit.piece}, exponents {limit.exponents}")
print("  the third seminorm value q^(-x_3) decays to zero; the limit point")
print("  lives on the boundary piece A_{1,2}.")

print()
print("== projections between pieces ==")
print(f"  s_project(x0, [1,2]) = {s_project(x0, [1, 2])}")
print(f"  s_project(x0, [2])   = {s_project(x0, [2])}   (a one-point piece)")

print()
print("== filtration thresholds at the boundary ==")
b = apartment_point([1, 2], [0, 1])
for (i, j) in [(1, 2), (2, 1), (1, 3), (3, 1)]:
    print(f"  f(a_{i}{j}) at {b.piece} = {f_point(b, Root(i, j))}")
print("  finite inside the piece, +inf from the piece into the kernel")
print("  directions, -inf from outside.")

sigma = [interior_point([0, 0, 0]), b]
print(f"  f_sigma over two points, a_12: {f_sigma(sigma, Root(1, 2))}")

print()
print("== basic opens Gamma(U, I) of the boundary topology ==")
box = open_box([(-1, 1), (-1, 1)])
inside = apartment_point([1, 2], [0, 0])
far = interior_point([0, 0, 50])
wrong_way = interior_point([0, 0, -50])
print(f"  boundary point {inside.piece}/{inside.exponents} in Gamma: "
      f"{gamma_membership(inside, box, [1, 2])}")
print(f"  interior point drifting up in eta_3: "
      f"{gamma_membership(far, box, [1, 2])}")
print(f"  drifting the wrong way: "
      f"{gamma_membership(wrong_way, box, [1, 2])}")
print("  (the drift cone only allows nonnegative multiples of eta_3)")
