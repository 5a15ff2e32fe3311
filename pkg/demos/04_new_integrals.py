"""Two integral families that the reduction formulas evaluate in closed form.

First family:  integral_0^1 t^(nu-1)/(1 - z t) dt, equal to z^(-nu) B(nu,0,z).
Second family: integral_0^z tanh^(2*lambda-1) t dt = B(lambda, 0, tanh^2 z)/2,
which generalizes the classical log-cosh / z-minus-tanh antiderivative
ladders from integer and half-integer lambda to any positive rational.
"""

import math
from fractions import Fraction

from scipy.integrate import quad

from betareduce import int_power_over_linear, int_tanh_power

print("integral_0^1 t^(nu-1)/(1-z t) dt, closed form vs direct quadrature:")
for nu, z in [(Fraction(1), 0.5), (Fraction(1, 2), 0.25), (Fraction(5, 4), 0.3)]:
    closed = int_power_over_linear(nu, z).real
    nuf = float(nu)
    direct, _ = quad(lambda t: t ** (nuf - 1) / (1 - z * t), 0, 1, epsabs=1e-13)
    print(f"  nu = {str(nu):>4}, z = {z}:  closed = {closed:.16f}  quad = {direct:.16f}")

print()
print("integral_0^z tanh^(2*lambda-1) t dt:")
print("  lambda = 1 reproduces log(cosh(z)):")
for z in (0.2, 0.8, 2.0):
    print(f"    z = {z}:  {int_tanh_power(Fraction(1), z):.16f}  vs  {math.log(math.cosh(z)):.16f}")

print()
print("  lambda = 5/4 has an elementary form with three inverse functions:")
for z in (0.2, 0.8, 2.0):
    u = math.sqrt(math.tanh(z))
    elementary = math.atanh(u) - 2 * u + math.atan(u)
    print(f"    z = {z}:  {int_tanh_power(Fraction(5, 4), z):.16f}  vs  {elementary:.16f}")

print()
print("  any positive rational lambda works; quadrature agrees:")
for lam in (Fraction(7, 3), Fraction(9, 8), Fraction(1, 4)):
    e = 2 * float(lam) - 1
    closed = int_tanh_power(lam, 1.5)
    direct, _ = quad(lambda t: math.tanh(t) ** e, 0, 1.5, epsabs=1e-13)
    print(f"    lambda = {str(lam):>4}:  closed = {closed:.16f}  quad = {direct:.16f}")
