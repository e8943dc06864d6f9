# Checking the cycle-index formula against the tensor power itself
#
# The oracle builds V^{(x)n} explicitly, lets permutations act with Koszul
# signs, and takes traces.  Nothing in it knows about cycle indices.

# %%
from polyatrace import betti_to_identity_map, named_group, oracle_trace, conjugacy_trace_formula, Permutation
from polyatrace.checks import run_equivalence

P1 = betti_to_identity_map([1, 0, 1])
swap = Permutation.parse("(1 2)")
print(oracle_trace(swap, P1, 2))
print(conjugacy_trace_formula(swap, P1))

# %%
# At u = 1 this is the Lefschetz number of the swap on P^1 x P^1.  Its fixed
# locus is the diagonal, so the answer is 2, not chi(P^1)^2 = 4.

print(oracle_trace(swap, P1, 2).evaluate({"u": 1}))

# %%
# A batch of random groups and random graded maps.

results = run_equivalence(seed=7, max_n=3, max_dims=(1, 1, 1))
print(sum(r.ok for r in results), "/", len(results))
