"""Seminorms on K^n and the apartment chart.

Walks through the basic objects: the exact p-adic valuation on Q, values
carried in log scale, diagonal seminorms, and the chart phi that matches
apartment points with canonical seminorm classes.

Run:  python3 demos/01_seminorms_and_the_apartment.py
"""

from fractions import Fraction

from padicbuilding import (
    LogValue,
    PrimeContext,
    abs_k,
    apartment_point,
    class_equals,
    compose_with,
    diagonal_seminorm,
    equals,
    evaluate,
    interior_point,
    kernel_of,
    phi_from_apartment,
    phi_inverse,
    val_k,
)
from padicbuilding.arith import mat
from padicbuilding.seminorm import scale_seminorm

ctx = PrimeContext(p=2, n=2)

print("== exact 2-adic arithmetic on Q ==")
for c in (12, Fraction(1, 3), Fraction(5, 8)):
    print(f"  v_2({c}) = {val_k(c, ctx)},  |{c}| = {abs_k(c, ctx)}")

print()
print("== the chart phi: apartment points are canonical seminorm classes ==")
x = interior_point([0, 1])
gamma = phi_from_apartment(x, ctx)
print(f"  x = {x}")
print(f"  phi(x) has values {gamma.values} on the standard basis")
print(f"  gamma(v_1 + v_2) = {evaluate(gamma, [1, 1])}   (max of 1 and 1/2)")
print(f"  phi_inverse recovers x: {phi_inverse(gamma) == x}")

print()
print("== seminorms with kernel live on the boundary ==")
b = apartment_point([1], [0])
delta = phi_from_apartment(b, ctx)
print(f"  boundary point {b} -> values {delta.values}")
print(f"  its kernel is spanned by {kernel_of(delta)}")

print()
print("== equality is decided exactly, on the two bases ==")
same = compose_with(gamma, mat([[1, 0], [0, 1]]))
print(f"  gamma equals its identity translate: {equals(gamma, same)}")
# the gauge norm agrees with its presentation in the basis (v1, v1+v2)
gauge = phi_from_apartment(interior_point([0, 0]), ctx)
rebased = diagonal_seminorm(mat([[1, 1], [0, 1]]),
                            (LogValue.finite(0), LogValue.finite(0)), ctx)
print(f"  gauge norm = same norm in a skew basis: {equals(gauge, rebased)}")

print()
print("== classes: seminorms modulo scaling ==")
scaled = scale_seminorm(gamma, 3)  # multiply by q^3
print(f"  gamma vs q^3 * gamma:  equals = {equals(gamma, scaled)},"
      f"  class_equals = {class_equals(gamma, scaled)}")
