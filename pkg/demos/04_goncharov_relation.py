"""The 22-term relation for the single-valued trilogarithm.

Run with ``python3 demos/04_goncharov_relation.py``.
"""

# %%
from fractions import Fraction

import numpy as np

from kummerweb.identities import check_goncharov, r3, specialization_is_exact, specialization_terms
from kummerweb.polylog import l3_sv

# %% [markdown]
# With exact arguments the formal sum has exact points.

# %%
fs = r3(2, 3, 5)
for c, t in fs:
    print(f"{int(c):+d} {{{t}}}")
print(f"{int(fs.unit):+d} {{1}}")
print("terms:", len(fs), "  L3 of the sum:", fs.evaluate())

# %% [markdown]
# Random complex triples.

# %%
rng = np.random.default_rng(7)
res = []
for _ in range(100):
    a, b, c = rng.uniform(0.2, 5, 3) * np.exp(1j * rng.uniform(-np.pi, np.pi, 3))
    res.append(check_goncharov(a, b, c).value)
print(f"max residual over 100 triples: {max(res):.2e}")

# %% [markdown]
# Setting the first argument to 1 and folding t -> 1/t (L3 is invariant under
# it) recovers Kummer's nine arguments with their coefficients.

# %%
x, y = Fraction(2, 7), Fraction(3, 5)
folded = specialization_terms(x, y).folded()
for t, c in sorted(folded.items(), key=lambda kv: -abs(kv[1])):
    print(f"{int(c):+d} {{{t}}}")
print("matches sum c_i {U_i} - 2{1}:", specialization_is_exact(x, y))
print("L3 check:", sum(float(c) * l3_sv(t, extended=True) for t, c in folded.items()))
