"""Normalized-Laplacian spectra and Cheeger cuts of uniform hypergraphs."""

from .cheeger import (
    CheegerReport,
    Cut,
    CutProfile,
    SpectralCuts,
    VertexCutReport,
    cheeger_exact,
    cut_profile,
    sign_cut,
    spectral_cut,
    sweep_cut,
    verify_inequalities,
    vertex_cheeger_exact,
    vertex_cut,
    vertex_cut_value,
)
from .errors import HypercutError
from .hypergraph import (
    Bipartition,
    ClassicalView,
    DualMapping,
    OrientedHypergraph,
    build,
    check_degree_assumption,
    classical,
    connected_components,
    disjoint_union,
    dual,
    example_hypergraph,
    is_bipartite,
    is_regular,
    is_uniform,
    positivize,
)
from .io import format_hypergraph, parse_hypergraph, read_hypergraph, write_hypergraph
from .spectral import (
    Spectrum,
    adjacency_matrix,
    jacobi_eigh,
    normalized_laplacian,
    rayleigh_quotient,
    second_largest_eigenpair,
    spectrum,
    verify_variational_bound,
)

__version__ = "0.1.0"
