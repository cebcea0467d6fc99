"""The 36 abelian relations and what they say about sub-webs.

Run with ``python3 demos/02_abelian_relations.py``.
"""

# %%
import numpy as np

from kummerweb.relations import (
    gamma_basis, relation, relation_matrix, residual, singular_values, subweb_rank,
)
from kummerweb.web import SubwebSelector

# %% [markdown]
# Each relation is a 9-tuple of atom combinations.  Here is F21, the
# five-term relation of the function d.

# %%
f21 = relation("F21")
for k, comp in enumerate(f21.components, start=1):
    if comp:
        print(f"strand {k}: {comp}")

# %% [markdown]
# Residuals near the base point.

# %%
rng = np.random.default_rng(1)
pts = [(rng.uniform(0.25, 0.4), rng.uniform(0.45, 0.6)) for _ in range(20)]
worst = max(abs(residual(r, p)) for r in gamma_basis() for p in pts)
print(f"largest residual over 36 relations and 20 points: {worst:.2e}")

# %% [markdown]
# Writing every relation in the 16-atom basis gives a 36 x 144 matrix.  Its
# singular values have a wide gap above zero, so the family is independent.

# %%
s = singular_values(relation_matrix())
print(f"largest singular value {s[0]:.3f}, smallest {s[-1]:.3f}")

# %% [markdown]
# Ranks of sub-webs: solutions supported on the strands, minus the constants.

# %%
table = [
    SubwebSelector(range(1, 10)),
    SubwebSelector.complement({6, 9}),
    SubwebSelector.complement({6, 7, 9}),
    SubwebSelector.complement({2, 4, 8}),
    SubwebSelector.complement({3, 6, 9}),
    SubwebSelector(range(1, 6)),
    SubwebSelector([1, 2, 3]),
]
for sel in table:
    n = len(sel)
    print(f"{sel.label():<14} {n} strands  rank {subweb_rank(sel):>2}   bound {(n - 1) * (n - 2) // 2}")
