"""Spectral analysis of hypergraphs through their weighted clique-expansion matrices.

Every edge ``e`` contributes weight ``1/(|e|-1)`` to each vertex pair it
contains. From that adjacency the package builds Laplacians and the random
walk, computes spectra with a Jacobi eigensolver, and audits spectral
inequalities against exact combinatorial oracles (Cheeger constants, weak
vertex connectivity, strong colourings, distances and curvature).
"""

from ._version import __version__
from .bounds import BOUND_IDS, audit_all, evaluate
from .curvature import (
    best_K,
    cd_check,
    curvature_spectral_audit,
    d_star,
    gamma_forms,
    ollivier_kappa,
    scalar_curvature,
    wasserstein,
)
from .errors import HypergraphError
from .families import (
    audit_suite,
    bowtie,
    cartesian_product,
    complete_bipartite_uniform,
    complete_uniform,
    cube_hypergraph,
    disjoint_union,
    empty_uniform,
    fano_plane,
    join,
    random_uniform,
    uniform_chain,
    uniform_complement,
)
from .hgio import format_hg, parse_hg, read_hg, write_hg
from .hypergraph import Hypergraph, make_hypergraph
from .operators import adjacency, laplacian, normalized_laplacian, transition_kernel
from .oracles import cheeger, strong_chromatic_number, weak_vertex_connectivity
from .spectra import Spectrum, adjacency_spectrum, laplacian_spectrum, normalized_spectrum, sym_eigen
from .verdict import BoundReport

__all__ = [
    "__version__", "BOUND_IDS", "BoundReport", "Hypergraph", "HypergraphError", "Spectrum",
    "adjacency", "adjacency_spectrum", "audit_all", "audit_suite", "best_K", "bowtie",
    "cartesian_product", "cd_check", "cheeger", "complete_bipartite_uniform", "complete_uniform",
    "cube_hypergraph", "curvature_spectral_audit", "d_star", "disjoint_union", "empty_uniform",
    "evaluate", "fano_plane", "format_hg", "gamma_forms", "join", "laplacian", "laplacian_spectrum",
    "make_hypergraph", "normalized_laplacian", "normalized_spectrum", "ollivier_kappa", "parse_hg",
    "random_uniform", "read_hg", "scalar_curvature", "strong_chromatic_number", "sym_eigen",
    "transition_kernel", "uniform_chain", "uniform_complement", "wasserstein",
    "weak_vertex_connectivity", "write_hg",
]
