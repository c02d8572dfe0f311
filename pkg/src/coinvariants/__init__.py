"""Exact computations for the S_n x S_n coinvariant space in two sets of variables."""
from .combinatorics import Partition, Permutation
from .diagrams import Diagram, StrictDiagram, compact_of_permutation, compactify, phi, phi_inverse
from .polynomials import MultiPoly, monomial_diagonal_symmetric, straighten
from .qtseries import QtMatrix, QtSeries, to_matrix
from .symfunc import SchurTable, frobenius_bigraded, frobenius_single, hilbert_series_check

__all__ = [
    "Diagram",
    "MultiPoly",
    "Partition",
    "Permutation",
    "QtMatrix",
    "QtSeries",
    "SchurTable",
    "StrictDiagram",
    "compact_of_permutation",
    "compactify",
    "frobenius_bigraded",
    "frobenius_single",
    "hilbert_series_check",
    "monomial_diagonal_symmetric",
    "phi",
    "phi_inverse",
    "straighten",
    "to_matrix",
]
