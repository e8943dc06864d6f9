# Point counts over finite fields
#
# The same cycle index, evaluated at point counts over F_{q^r}, counts points
# of X^n / G over F_q.

# %%
from polyatrace import (named_group, quotient_point_count, zeta_from_counts, alt_zeta_from_counts,
                        brute_force_affine_counts, parse_poly, discriminant_census)
from polyatrace.enumeration import series_integers

q = 3
line = [q ** r for r in range(1, 5)]
print(quotient_point_count(named_group("symmetric", 4), line))

# %%
# Counts of P^1 give the zeta series 1, 1+q, 1+q+q^2, ...

P1 = [q ** r + 1 for r in range(1, 6)]
print(series_integers(zeta_from_counts(P1, 5)))
print(series_integers(alt_zeta_from_counts(P1, 5)))

# %%
# Counts can also come from equations.  A conic over F_3:

circle = brute_force_affine_counts([parse_poly("x^2 + y^2 - 1")], 3, 2)
print(circle.counts)
print(quotient_point_count(named_group("symmetric", 2), circle))

# %%
# A^n / A_n double covers A^n / S_n, branched along the discriminant.
# Counting fibers: zero, square and nonsquare discriminant.

for n, q in [(2, 5), (3, 7)]:
    print(n, q, discriminant_census(n, q))
