"""Kummer's trilogarithm equation, checked numerically.

Run with ``python3 demos/01_kummer_equation.py``.
"""

# %%
from fractions import Fraction

import numpy as np

from kummerweb.identities import check_kummer, e3, kummer_lhs
from kummerweb.web import INTERIOR_TEXT, KUMMER_COEFFS, strand_values

# %% [markdown]
# The nine arguments and their coefficients.  At (1/3, 1/2) every strand
# value is rational, and strands 7 and 8 are negative.

# %%
p = (Fraction(1, 3), Fraction(1, 2))
for k, (text, c, v) in enumerate(zip(INTERIOR_TEXT, KUMMER_COEFFS, strand_values(p)), start=1):
    print(f"U{k} = {text:<22} coeff {c:+d}   U{k}(1/3, 1/2) = {v}")

# %%
lhs = kummer_lhs(1 / 3, 1 / 2)
rhs = e3(1 / 3, 1 / 2)
print(f"sum c_i Li3(U_i) = {lhs:.16f}")
print(f"right member     = {rhs:.16f}")
print(f"difference       = {abs(lhs - rhs):.2e}")

# %% [markdown]
# Over the whole triangle 0 < x < y < 1 the residual stays at rounding level.

# %%
grid = np.linspace(0.05, 0.95, 15)
res = np.full((15, 15), np.nan)
for i, x in enumerate(grid):
    for j, y in enumerate(grid):
        if x < y:
            res[i, j] = check_kummer(x, y).value
print(f"worst residual on the 15 x 15 grid: {np.nanmax(res):.2e}")
print(f"median residual:                    {np.nanmedian(res):.2e}")
