"""Rigidity eigenvalues and algebraic connectivity of graphs in normed spaces.

The main entry points are re-exported here; the submodules hold the rest.
"""
from .errors import NormConnError
from .frameworks import (
    Framework,
    SearchBudget,
    estimate_alg_connectivity,
    make_framework,
    rigidity_eigenvalue,
    rigidity_matrix,
    rigidity_report,
)
from .graphs import Graph, algebraic_connectivity, laplacian
from .linf import Decomposition, LinfResult, exact_linf_connectivity, monochrome_decompose
from .norms import INF, NormedSpace, gamma, k_dimension

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Decomposition",
    "Framework",
    "Graph",
    "LinfResult",
    "NormConnError",
    "NormedSpace",
    "SearchBudget",
    "algebraic_connectivity",
    "estimate_alg_connectivity",
    "exact_linf_connectivity",
    "gamma",
    "k_dimension",
    "laplacian",
    "make_framework",
    "monochrome_decompose",
    "rigidity_eigenvalue",
    "rigidity_matrix",
    "rigidity_report",
]
