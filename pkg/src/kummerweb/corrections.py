"""Repairs applied to transcribed formulas, with the evidence for each.

The nine-strand family F1..F28, the right member of Kummer's equation and
the nine-term dilogarithm identity all verify as transcribed and carry no
entry here.
"""

from __future__ import annotations

CORRECTIONS = (
    {
        "id": "R3-bracket-7",
        "target": "r3, seventh bracket of the cyclic sum",
        "transcribed": "-{(a[i+2]*a[i+1] - a[i+1] + 1) / ((a[i+2]*a[i] - a[i] + 1) * a[i+1] * a[i+2])}",
        "used": "-{(a[i+2]*a[i+1] - a[i+2] + 1) / ((a[i+2]*a[i] - a[i] + 1) * a[i+1] * a[i+2])}",
        "evidence": "only reading whose symbol sum of (1-f)^f(x)f vanishes; L3 residual drops from O(1) to 1e-15",
    },
    {
        "id": "R3-bracket-8",
        "target": "r3, eighth bracket of the cyclic sum",
        "transcribed": "+{(a[i+2]*a[i+1] - a[i+1] + 1) * a[i] / (a[i+2]*a[i] - a[i] + 1)}",
        "used": "+{-(a[i+2]*a[i+1] - a[i+2] + 1) * a[i] / (a[i+2]*a[i] - a[i] + 1)}",
        "evidence": "same symbol computation; the sign and the a[i+2] both follow from the kernel search",
    },
)

CORRECTION_IDS = tuple(c["id"] for c in CORRECTIONS)


def correction(cid):
    for c in CORRECTIONS:
        if c["id"] == cid:
            return c
    raise KeyError(cid)
