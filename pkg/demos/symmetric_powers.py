# Symmetric and alternating powers of a graded space
#
# Cohomology enters as a graded endomorphism.  The Lefschetz polynomial of the
# identity on Betti numbers (1, 0, 1) is 1 + u^2: the projective line.

# %%
from polyatrace import (betti_to_identity_map, hodge_to_map, lefschetz, sym_generating_function,
                        alt_generating_function, alt_generating_function_det, invariant_lefschetz_formula,
                        named_group, cheah_hodge_series)
from polyatrace.graded import hodge_numbers

P1 = betti_to_identity_map([1, 0, 1])
print(lefschetz(P1))

# %%
# Symmetric powers of P^1 are projective spaces, and the generating function
# is a ratio of determinants.

gf = sym_generating_function(P1, 5)
print("numerator  ", gf.numerator)
print("denominator", gf.denominator)
for n in range(6):
    print(n, gf.expansion[n])

# %%
# Any subgroup of S_n works, not only the full symmetric group.

for kind in ("symmetric", "alternating", "cyclic"):
    print(kind, invariant_lefschetz_formula(named_group(kind, 3), P1))

# %%
# The A_n series, computed two ways.

E = betti_to_identity_map([1, 2, 1])
print(alt_generating_function(E, 4))
print(alt_generating_function(E, 4) == alt_generating_function_det(E, 4))

# %%
# Hodge numbers of the second symmetric power of an elliptic curve.

elliptic = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
sym2 = cheah_hodge_series(elliptic, 2)[2]
print(sym2)
print(hodge_numbers(sym2))
