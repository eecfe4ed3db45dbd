"""Octonions: the super relations checked on principal symbols.

For K = O the odd operators D_u on R^8 are compared through their principal
symbols. The last row shows that the symbol identity breaks once the odd
part is widened to the whole Hom(V*, W): the graded subspace matters.
"""
from superlefschetz.lie import octonion_graded_closure, octonion_span_check
from superlefschetz.theorems import octonion_symbol_checks

print("span of iota images:", octonion_span_check())
print("graded closure:", octonion_graded_closure())
for row in octonion_symbol_checks(seed=0):
    print(f"  {row[0]:<36} {row[1]}" + (f"  witness={row[2]}" if len(row) > 2 and not row[1] else ""))
