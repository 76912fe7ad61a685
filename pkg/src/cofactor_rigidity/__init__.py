"""Exact rational toolkit for the generic cofactor rigidity matroid of plane
frameworks: cofactor matrices, motion spaces, matroid queries, determinant
identities, and projective transfer of motions.
"""

from .graphs import Graph
from .frameworks import Framework, PinTriple, cofactor_matrix, dof, is_motion
from .linalg import Q, QMatrix
from .matroid import GenericMatroid, matroid_for

__all__ = [
    "Graph",
    "Framework",
    "PinTriple",
    "cofactor_matrix",
    "dof",
    "is_motion",
    "Q",
    "QMatrix",
    "GenericMatroid",
    "matroid_for",
]

__version__ = "0.1.0"
