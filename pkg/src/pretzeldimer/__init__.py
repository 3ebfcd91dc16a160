"""Exact Jones and Khovanov-type invariants of pretzel links.

The pipeline: build the standard pretzel diagram P(n1, ..., nk), read off
its checkerboard (Tait) graph and the balanced overlaid graph, enumerate
spanning trees / perfect matchings, assemble the activity matrix, and
evaluate its determinant or permanent over a Laurent ring.  Independent
skein-theoretic oracles cross-check every step.
"""

from .evaluate import bracket, jones, jones_in_A, khovanov_poincare
from .laurent import Laurent, Laurent2

__version__ = "0.1.0"

__all__ = [
    "Laurent",
    "Laurent2",
    "bracket",
    "jones",
    "jones_in_A",
    "khovanov_poincare",
]
