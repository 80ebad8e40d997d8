"""Generalised Stirling numbers computed four ways, and what happens at p = 0 and p = 1."""

# %%
from boson_ordering.stirling import (
    bell_number,
    p_zero_row_sum,
    stirling2,
    stirling_knm,
    stirling_omega_row,
    stirling_p_docagne,
    stirling_p_rec,
)
from boson_ordering.weights import predefined_sequence, specialize

# %%
N = 6
for n in range(1, N + 1):
    print(n, "  ".join(str(stirling_p_rec(n, k)) for k in range(1, n + 1)))

# %% [markdown]
# The recurrence, the alternating binomial sum, the p specialisation of the
# contraction sum and the rise-refined counts all give the same table.

# %%
pseq = predefined_sequence("p")
agree = True
for n in range(1, N + 1):
    row = stirling_omega_row(n)
    for k in range(1, n + 1):
        routes = {stirling_p_rec(n, k), stirling_p_docagne(n, k), specialize(row[k], pseq)}
        agree &= len(routes) == 1
print("routes agree up to n =", N, ":", agree)

# %%
print("S(6,3; m) for m = 0..3:", [stirling_knm(6, 3, m) for m in range(4)])
print("S_p(6,3) =", stirling_p_rec(6, 3))

# %%
# p = 1 recovers S(n, k); at p = 0 each row sums to a shifted Bell number.
print([stirling_p_rec(7, k)(1) for k in range(1, 8)])
print([stirling2(7, k) for k in range(1, 8)])
print([p_zero_row_sum(n) for n in range(2, 10)])
print([bell_number(n - 1) for n in range(2, 10)])
