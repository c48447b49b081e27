"""
gpkit Data Models Module

Words, graphs, presentations and the records every computation returns.
Models are frozen dataclasses where they act as dictionary keys, with
to_dict for the JSON output of the command line.
"""

from .errors import GraphProductError
from .graph import SimplicialGraph, JoinDecomposition
from .word import IDENTITY, Syllable, Word
from .presentation import Presentation, VertexGroupMeta, VertexGroupSpec
from .coset import Coset, Hyperplane
from .verdict import Verdict3, VerdictStatus

__all__ = [
    'GraphProductError',
    'SimplicialGraph',
    'JoinDecomposition',
    'IDENTITY',
    'Syllable',
    'Word',
    'Presentation',
    'VertexGroupMeta',
    'VertexGroupSpec',
    'Coset',
    'Hyperplane',
    'Verdict3',
    'VerdictStatus',
]
