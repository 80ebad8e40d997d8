"""Reading S_p(n, k) off a truncated bivariate exponential generating function."""

# %%
from boson_ordering.egf import egf_Spk, egf_Sxy, extract_egf_coefficient
from boson_ordering.stirling import stirling_p_rec

ORDER = 7
s = egf_Sxy(ORDER)

# %%
for n in range(1, ORDER + 1):
    c = extract_egf_coefficient(s, n)
    cells = [str(c.y_part(k)) for k in range(1, n + 1)]
    print(n, " | ".join(cells))

# %%
# The single-column series gives the same numbers one k at a time.
k = 3
col = egf_Spk(k, ORDER)
print([str(extract_egf_coefficient(col, n).y_part(0)) for n in range(k, ORDER + 1)])
print([str(stirling_p_rec(n, k)) for n in range(k, ORDER + 1)])

# %%
# At p = 1 the coefficients fall back to ordinary Stirling numbers.
print([str(extract_egf_coefficient(s, 6).at(p=1).y_part(k)) for k in range(1, 7)])
