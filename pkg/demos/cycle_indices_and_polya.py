# Cycle indices and Polya counting
#
# A permutation group acting on n slots has a cycle index: the average over the
# group of x_1^{m_1} x_2^{m_2} ..., where m_r counts the r-cycles.

# %%
from polyatrace import (cycle_index, cycle_index_series_symmetric, alternating_cycle_index, named_group,
                        polya_count, polya_weight_poly, orbit_census)

S3 = named_group("symmetric", 3)
print(S3, len(S3))
print(cycle_index(S3))

# %%
# Rotations of a square. Substituting x_r = 2 counts 2-colorings of the
# corners up to rotation.

C4 = named_group("cyclic", 4)
print(cycle_index(C4))
print(polya_count(C4, 2))

# %%
# The weighted version tracks how many corners get each color.

print(polya_weight_poly(C4, 2))
print(sorted(orbit_census(C4, 2).items()))

# %%
# The symmetric cycle indices all come out of one exponential.

series = cycle_index_series_symmetric(4)
for n in range(5):
    print(n, series[n])

# %%
# Alternating groups: the even part of Z_{S_n}, doubled.

print(alternating_cycle_index(4))
