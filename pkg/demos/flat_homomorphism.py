"""The super-bracket table on a flat K-model, bracket by bracket.

Each generator x of su_K(1,1)_sup becomes a differential operator on forms
(rho_x, D_u or the Laplacian) and every super-commutator of two such
operators is compared exactly with the operator of the bracket.
"""
import sys

from superlefschetz.theorems import homomorphism_table_check, odd_anticommutator_check

K = sys.argv[1] if len(sys.argv) > 1 else "C"
n = int(sys.argv[2]) if len(sys.argv) > 2 else 1

print(f"odd-odd anticommutators for K={K}, n={n}")
for name, ok, *rest in odd_anticommutator_check(K, n):
    print(f"  {name:<16} {ok}")

rows = homomorphism_table_check(K, n)
bad = [r[0] for r in rows if not r[1]]
print(f"full table: {len(rows)} brackets, {len(bad)} mismatches")
