"""Immutable domain types."""

from walksig.models.graph import Graph, GraphFamily
from walksig.models.matrices import ArcSpace, BinaryMatrix, RationalMatrix
from walksig.models.partition import Partition
from walksig.models.spectrum import ComplexSpectrum

__all__ = [
    "Graph",
    "GraphFamily",
    "ArcSpace",
    "BinaryMatrix",
    "RationalMatrix",
    "Partition",
    "ComplexSpectrum",
]
