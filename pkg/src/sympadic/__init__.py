"""Exact p-adic double-coset machinery for symplectic similitude groups.

The package enumerates and partitions parahoric double cosets of GSp(2), GSp(4)
and GSp(6) over Q_p in exact arithmetic, computes the associated convolution
actions on Schwartz functions on Q_p^2, and drives a batch of verification
suites over all of it at small residue characteristic.
"""

from .kernel import BACKEND
from .scalars import LocalField

__all__ = ["BACKEND", "LocalField"]
__version__ = "0.1.0"
