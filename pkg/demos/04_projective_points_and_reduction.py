"""Monomial points of projective space and the reduction map.

Builds multiplicative seminorms on the polynomial ring from a basis and
radii, reduces them to building points, sections building points back,
and reduces rational points given by linear functionals, including the
hyperplane-complement dichotomy.

Run:  python3 demos/04_projective_points_and_reduction.py
"""

from fractions import Fraction

from padicbuilding import (
    PrimeContext,
    alpha_evaluate,
    building_point,
    check_multiplicative,
    gauss_point,
    in_omega,
    interior_point,
    j_section,
    l_from_k,
    l_functional,
    l_pi,
    phi_from_apartment,
    polynomial,
    r_reduce_L_point,
    r_reduce_monomial,
    r_reduce_rational,
)

ctx = PrimeContext(p=2, n=2)

print("== the Gauss point: all radii 1 in the standard basis ==")
gp = gauss_point(ctx)
f = polynomial([((2, 0), 2), ((1, 1), 1)], 2)     # 2 v1^2 + v1 v2
g = polynomial([((1, 0), 1), ((0, 0), 4)], 2)     # v1 + 4
print(f"  alpha(2 v1^2 + v1 v2) = {alpha_evaluate(gp, f)}")
print(f"  alpha(v1 + 4)         = {alpha_evaluate(gp, g)}")
print(f"  multiplicative on the pair: {check_multiplicative(gp, f, g)}")

print()
print("== reduction r restricts to degree one; j extends multiplicatively ==")
b = building_point(phi_from_apartment(interior_point([0, Fraction(1, 2)]),
                                      PrimeContext(2, 2, 2)))
print(f"  building point values: {b.seminorm.values}")
jp = j_section(b)
print(f"  j(b) radii:            {jp.radii}")
print(f"  r(j(b)) == b:          {r_reduce_monomial(jp) == b}")

print()
print("== K-rational points reduce to boundary points ==")
br = r_reduce_rational([1, 1], ctx)
print(f"  z = (1, 1): kernel of the reduction = {br.kernel()}")
print("  the whole hyperplane z = 0 is crushed, so the class has rank one.")

print()
print("== points over an Eisenstein extension: pi^2 = 2 ==")
ctxE = PrimeContext(2, 2, 2)
z_in = l_functional([l_from_k(1, ctxE), l_pi(ctxE)], ctxE)
z_out = l_functional([l_from_k(1, ctxE), l_from_k(1, ctxE)], ctxE)
print(f"  z = (1, pi):  in Omega = {in_omega(z_in)}, "
      f"kernel = {r_reduce_L_point(z_in).kernel()}")
print(f"  z = (1, 1):   in Omega = {in_omega(z_out)}, "
      f"kernel = {r_reduce_L_point(z_out).kernel()}")
print("  membership in the hyperplane complement is exactly the")
print("  kernel-free (interior) case of the reduction.")
print()
print("  the (1, pi) point reduces to the apartment point (0, 1/2):")
bi = r_reduce_L_point(z_in)
print(f"  values {bi.seminorm.values}")
