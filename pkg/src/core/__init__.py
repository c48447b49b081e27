"""
gpkit Core Module

The algorithms: normal forms, parabolic cosets, the quasi-median geometry
and everything built on it, down to the verdicts about Aut(Γ𝒢).
"""

from .word_engine import WordEngine
from .parabolics import ParabolicAlgebra
from .qm_geometry import QuasiMedianGeometry
from .crossing import CrossingGraphs
from .cone_off import ConeOff
from .trees_embedding import TreeEmbedding
from .aut_structure import AutStructure

__all__ = [
    'WordEngine',
    'ParabolicAlgebra',
    'QuasiMedianGeometry',
    'CrossingGraphs',
    'ConeOff',
    'TreeEmbedding',
    'AutStructure',
]
