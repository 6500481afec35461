"""Eccentricity matrices of graphs: spectra, exact polynomials and theorem checks."""

from eccspec.graph import Graph, GraphFormatError, generate, join, parse_edge_list, parse_graph6
from eccspec.linalg import IntPolynomial, Spectrum, char_poly_exact, sym_eigenvalues, sym_eigh
from eccspec.matrices import SymIntMatrix, ecc_laplacian, ecc_signless_laplacian, ecc_stats, eccentricity_matrix
from eccspec.metrics import DisconnectedGraphError, distance_profile, vertex_classes
from eccspec.structure import ecc_bipartition, is_ecc_bipartite, is_irreducible
from eccspec.verify import Analysis, Verdict, run_checks, run_sweep

__version__ = "0.1.0"

__all__ = [
    "Analysis",
    "DisconnectedGraphError",
    "Graph",
    "GraphFormatError",
    "IntPolynomial",
    "Spectrum",
    "SymIntMatrix",
    "Verdict",
    "char_poly_exact",
    "distance_profile",
    "ecc_bipartition",
    "ecc_laplacian",
    "ecc_signless_laplacian",
    "ecc_stats",
    "eccentricity_matrix",
    "generate",
    "is_ecc_bipartite",
    "is_irreducible",
    "join",
    "parse_edge_list",
    "parse_graph6",
    "run_checks",
    "run_sweep",
    "sym_eigenvalues",
    "sym_eigh",
    "vertex_classes",
]
