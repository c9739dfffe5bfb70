"""Exhaustive and exact searches used to check the center-size results."""

from .enumeration import (
    EnumerationSummary,
    edge_pairs,
    empirical_omega,
    enumerate_labeled,
    graph_to_mask,
    mask_to_graph,
    select_masks,
)
from .isomorphism import are_isomorphic, find_isomorphism
from .lemmas import (
    LemmaCheck,
    LemmaScanReport,
    check_lemma2,
    check_lemma3,
    find_geodesic_cycle,
    has_geodesic_cycle,
    longest_induced_path_order,
    scan_lemma2,
    scan_lemma3,
)
from .reduction import ReductionReport, cycle_excess, is_bridge, reduce_to_bridges
from .uniqueness import UniquenessReport, corpus_scan, unique_in_corpus, unique_up_to_iso
