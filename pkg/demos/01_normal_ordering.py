"""Normal ordering of a few words, from contractions up to the three models."""

# %%
from boson_ordering import (
    count_contractions,
    enumerate_contractions,
    normal_order_omega,
    normal_order_p,
    normal_order_standard,
    parse_word,
)
from boson_ordering.contractions import contraction_word, pretty_contraction_word

# %% [markdown]
# Words are typed with `a` for the annihilator and `d` for the creator a†.
# Powers and parenthesised groups keep long words short.

# %%
w = parse_word("aadd")
print(w.pretty(), "has", count_contractions(w), "contractions")
for c in enumerate_contractions(w):
    cw = contraction_word(w, c)
    print(f"  {str(c) or '(null)':10s} {pretty_contraction_word(cw)}")

# %% [markdown]
# Each contraction deletes its pairs and leaves a residual (a†)^v a^u.
# Counting them with weight 1 gives the ordinary normal ordering.

# %%
print(normal_order_standard(parse_word("adaadaa")))

# %%
# Adjacent pairs weigh p, every other pair weighs 1.
for text in ("ad", "(da)^2", "(da)^3"):
    print(f"N_p({text}) =", normal_order_p(parse_word(text)))

# %%
# The omega model keeps every pair distance and crossing as a symbol.
nf = normal_order_omega(parse_word("(da)^4"))
for key in nf.sorted_keys():
    print(key, nf[key])
