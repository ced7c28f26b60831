"""Exact verification toolkit for Laplacian eigenvalue distribution versus graph diameter."""

from .graph import (
    INFINITE,
    Graph,
    GraphError,
    PathInGraph,
    canonical_form,
    complement,
    component_count,
    degree_sequence,
    diameter,
    find_diametral_paths,
    gamma,
    is_isomorphic,
    join,
    new_graph,
    vertex_connectivity,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .spectra import (
    Comparison,
    IntervalQuery,
    Spectrum,
    char_poly,
    count_interval_exact,
    eigenvalue_rank_test,
    laplacian,
    spectrum_float,
)
from .theorems import CheckReport, TheoremId, check, check_conjecture, scan

__version__ = "0.1.0"
