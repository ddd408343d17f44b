"""Independent values for the C++ tests, computed with sympy.

Run: python3 tests/oracles/derive.py
The printed numbers are copied into tests/unit/test_oracles.cpp.
"""
import itertools
from fractions import Fraction

import sympy as sp

x1, x2, x3, x4 = sp.symbols("x1 x2 x3 x4")


def local_intersection(f, g, shears=(sp.Rational(3, 7), sp.Rational(-5, 11), sp.Rational(2, 13))):
    # ord_{x1=0} Res_{x2}(f, g) after a shear; extra points on the line only add, so take the min.
    best = None
    for c in shears:
        fs = sp.expand(f.subs(x1, x1 + c * x2))
        gs = sp.expand(g.subs(x1, x1 + c * x2))
        r = sp.Poly(sp.resultant(fs, gs, x2), x1)
        if r.is_zero:
            return "INFINITE"
        order = min(m[0] for m in r.monoms())
        best = order if best is None else min(best, order)
    return best


forms = {
    "cusp": (x1 - x2**3, x1 * x2**2),
    "closed": (2 * x1 + x2**2, 2 * x1 * x2),
    "airy": (x1 + x2**2 - x1**2 * x2, x1**3),
    "r1": (x1**2 + x2**3, x1 * x2 + x2**4),
    "r2": (x2 + x1**2, x1 - x2**2 + x1 * x2),
    "r3": (x1**3 - x2**5, x1 * x2**2 + x2**7),
    "r4": (x1 * x2, x1**2 + x2**3),
    "r5": (x1 + x2**2 + 3 * x1 * x2, x1**2 * x2 - 2 * x2**4),
}
print("milnor (resultant oracle):")
for name, (a, b) in forms.items():
    print(f"  {name}: {local_intersection(a, b)}")

# ω∧dω for x2 dx1 + x3 dx2 + x1 dx3.
A = [x2, x3, x1]
X = [x1, x2, x3]
dw = {(i, j): sp.diff(A[j], X[i]) - sp.diff(A[i], X[j]) for i, j in itertools.combinations(range(3), 2)}
wdw = A[0] * dw[(1, 2)] - A[1] * dw[(0, 2)] + A[2] * dw[(0, 1)]
print("omega^domega coefficient:", sp.expand(wdw))

F = x3 * x4**2 - x1 * x2 * x4 + x1**3 / 3
G = x2 * x4 - x1**2 / 2
num = [sp.expand(2 * G * sp.diff(F, v) - 3 * F * sp.diff(G, v)) for v in (x1, x2, x3, x4)]
print("gcd of 2GdF-3FdG coefficients:", sp.factor(sp.gcd_list(num)))
print("dx1 coefficient / x4:", sp.expand(sp.cancel(num[0] / x4)))

# Membership by the generating formula (l-2)/(k-1), k >= 2, l >= 0, with bounds.
gen = {Fraction(l - 2, k - 1) for k in range(2, 60) for l in range(0, 120)}
for r in ["-2", "-1/4", "-5", "3/7", "-3/5", "-3/7", "0"]:
    print(f"  chi generated {r}: {Fraction(r) in gen}")
