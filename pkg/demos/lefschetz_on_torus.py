"""Hard Lefschetz on a flat torus, and where the sl2-triple comes from.

The Kaehler form omega = dx^0 ^ dx^n + ... acts on constant forms on R^{2n}.
Its powers map degree n - k isomorphically onto degree n + k, and the
operators rho_L, rho_Lambda, rho_h coming from su_C(1,1) are exactly
omega ^, its adjoint, and the degree grading.
"""
from math import comb

from superlefschetz.holonomy import ComplexStructure, hard_lefschetz_torus, lefschetz_generators

for n in (1, 2, 3):
    rho, rows = lefschetz_generators(n)
    print(f"n={n}: omega = {ComplexStructure.standard(n).omega}")
    for name, ok in rows:
        print(f"  {name:<28} {ok}")
    for k in range(n + 1):
        size = comb(2 * n, n - k)
        print(f"  L^{k}: Lambda^{n - k} -> Lambda^{n + k}  ({size}x{size})  iso={hard_lefschetz_torus(n, k)}")
