"""Certified construction of vertex-critical graphs robust to edge deletion."""

from ._core import (
    CapExceeded,
    Graph,
    Hypergraph,
    HypothesisNotMet,
    ParseError,
    __version__,
    all_deletions_matchable,
    brute_force_sparsity,
    check_certificate,
    check_sparsity,
    complement,
    components,
    construct,
    derive_params,
    edge_bound_check,
    exact_chromatic,
    exact_independence,
    find_perfect_matching,
    find_small_cut,
    min_subset_edges,
    pm_threshold_sweep,
    run_suite,
    sample_hypergraph,
    shamir_p,
    two_section,
    verify_construction,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
