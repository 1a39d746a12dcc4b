"""Shelling module - shellings, EL-labelings, atom orderings, NBC bases."""

from src.shelling.shellings import (
    FOUND, NONE, INDETERMINATE, ShellingReport, ShellingSearchResult, is_shelling, find_shelling,
)
from src.shelling.labelings import (
    Label, LabelConvention, EdgeLabeling, ELReport, is_increasing, is_decreasing, descent_set,
    verify_el_labeling, require_el, decreasing_chains, betti_from_el, lexicographic_chain_order,
    rank_selected, descent_count,
)
from src.shelling.atom_orderings import (
    RAOCertificate, RAOSearchResult, verify_recursive_atom_ordering,
    search_recursive_atom_ordering, all_root_orders,
)
from src.shelling.nbc import join_all, is_semimodular, is_atomic, is_geometric_lattice, nbc_bases

__all__ = [
    'FOUND', 'NONE', 'INDETERMINATE', 'ShellingReport', 'ShellingSearchResult', 'is_shelling', 'find_shelling',
    'Label', 'LabelConvention', 'EdgeLabeling', 'ELReport', 'is_increasing', 'is_decreasing', 'descent_set',
    'verify_el_labeling', 'require_el', 'decreasing_chains', 'betti_from_el', 'lexicographic_chain_order',
    'rank_selected', 'descent_count',
    'RAOCertificate', 'RAOSearchResult', 'verify_recursive_atom_ordering',
    'search_recursive_atom_ordering', 'all_root_orders',
    'join_all', 'is_semimodular', 'is_atomic', 'is_geometric_lattice', 'nbc_bases',
]
