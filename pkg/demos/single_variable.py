"""
Calculus on the integers without limits
=======================================

The derivative Df(x) = f(x+1) - f(x) and the sum Sf(x) = f(0) + ... + f(x-1)
are exact inverses of each other, and a small change of basis makes all the
familiar rules of calculus hold verbatim.
"""

from discalc import numcore as nc
from discalc.numcore import Sequence

# The fundamental theorem: D after S gives the function back
f = Sequence(0, (3, 1, 4, 1, 5, 9, 2, 6))
print("f          ", f.values)
print("D S f      ", nc.diff(nc.sum_prefix(f)).values)

# Falling powers replace monomials: D[x]^n = n [x]^{n-1}
print("\n[x]^3 at x = 0..6   ", [nc.falling_power(x, 3) for x in range(7)])
print("D[x]^3 = 3[x]^2     ", [nc.falling_power(x + 1, 3) - nc.falling_power(x, 3)
                               for x in range(6)])

# The deformed exponential exp(a.x) = (1+a)^x solves Df = a f
print("\nexp(1.x) = 2^x      ", [nc.exp_exact(1, x) for x in range(8)])

# sin and cos are the imaginary and real parts of (1+i)^x; they stay integers
print("\nx, cos(x), sin(x), tan(x) for x = 0..7:")
for x in range(8):
    print(f"  {x}  {nc.cos_exact(1, x):4d}  {nc.sin_exact(1, x):4d}  {nc.tan_discrete(x)}")

# The derivative rules hold exactly: D sin = cos, D cos = -sin (with a = 1)
print("\nD sin at 9 =", nc.sin_exact(1, 10) - nc.sin_exact(1, 9),
      " cos at 9 =", nc.cos_exact(1, 9))

# With a general step h the exponential becomes (1+ah)^{x/h}; as h shrinks it
# approaches the classical e^{ax} -- compound interest in the limit
for h in (1.0, 0.1, 0.01, 0.001):
    print(f"exp_h(1, h={h}) at x=1: {nc.exp_h(1, h, 1):.6f}")

# The harmonic oscillator f'' = -a^2 f has exact integer solutions
c_cos, c_sin = nc.solve_harmonic(3, 2, 5)
print("\noscillator with f(0)=2, f(1)=5, a=3:",
      [nc.harmonic_eval(3, c_cos, c_sin, x) for x in range(8)])
