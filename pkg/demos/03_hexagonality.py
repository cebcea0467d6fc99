"""Blaschke curvature of the 84 three-strand sub-webs.

Run with ``python3 demos/03_hexagonality.py``.
"""

# %%
from itertools import combinations

from kummerweb.web import SubwebSelector, blaschke_curvature, is_hexagonal

# %% [markdown]
# Curvature is computed exactly, so "zero" means the zero rational function.

# %%
print("K(1,3,7) =", blaschke_curvature(1, 3, 7).render())
print("K(1,2,4) =", blaschke_curvature(1, 2, 4).render())

# %%
nonzero = [t for t in combinations(range(1, 10), 3) if not blaschke_curvature(*t).is_zero]
print(f"{len(nonzero)} of 84 triples are not hexagonal")
missing = {3, 6, 9}
print("each of them uses strand 3, 6 or 9:", all(set(t) & missing for t in nonzero))

# %% [markdown]
# Dropping strands 3, 6 and 9 removes every non-hexagonal triple.

# %%
cert = is_hexagonal(SubwebSelector.complement({3, 6, 9}))
print(cert.selector.label(), "hexagonal:", cert.hexagonal, f"({len(cert.triples)} triples)")

# %% [markdown]
# The five strands 1..5 carry curvature zero on all ten triples as well.

# %%
bol = is_hexagonal(SubwebSelector(range(1, 6)))
print("{1..5} hexagonal:", bol.hexagonal, "nonzero triples:", bol.nonzero_triples())
