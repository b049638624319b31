"""Exact matroid representations over skew partial fields via chain groups."""

from .chaingroup import ChainGroupRep, matroid_of, verify_strong
from .matrixlab import RMatrix, invert, pivot
from .matroid import Matroid
from .rings import PartialField, Ring, RingElement

__all__ = [
    "ChainGroupRep", "Matroid", "PartialField", "RMatrix", "Ring", "RingElement", "invert",
    "matroid_of", "pivot", "verify_strong",
]
