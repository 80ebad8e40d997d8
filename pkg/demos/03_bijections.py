"""Contractions of (a†a)^n, pointer vectors and set partitions side by side."""

# %%
from collections import Counter

from boson_ordering import number_operator_word
from boson_ordering.bijections import (
    format_partition,
    format_vector,
    lemma1_forward,
    lemma2_forward,
    rises,
)
from boson_ordering.contractions import enumerate_contractions, p_degree, r_degree
from boson_ordering.stirling import stirling_knm

n = 4
word = number_operator_word(n)
print(word.pretty())

# %%
print(f"{'contraction':14s} {'vector':8s} partition")
for c in enumerate_contractions(word):
    vec = lemma2_forward(c, n)
    part = lemma1_forward(vec)
    print(f"{str(c) or '(null)':14s} {format_vector(vec):8s} {format_partition(part)}")

# %% [markdown]
# The edge count fixes the number of blocks and the adjacent pairs become
# rises.  So the pair (blocks, rises) has the same distribution as S(n, k; m).

# %%
joint = Counter()
for c in enumerate_contractions(word):
    part = lemma1_forward(lemma2_forward(c, n))
    assert len(part) == n - r_degree(c) and rises(part) == p_degree(c)
    joint[len(part), rises(part)] += 1
for (k, m), count in sorted(joint.items()):
    print(f"k={k} m={m}: {count} (table says {stirling_knm(n, k, m)})")
