"""Poset module - finite posets, derived posets, Mobius function."""

from src.poset.core import Chain, Poset, from_covers, from_order, iter_bits, bits_to_ids
from src.poset.mobius import mobius, mobius_row, mobius_invariant, mobius_hat
from src.poset.derive import (
    DERIVE_KINDS, derive, dual, proper_part, bounded_extension,
    open_interval, closed_interval, upper_set, lower_set,
)
from src.poset.combinators import (
    direct_product, ordinal_join, disjoint_union, antichain, chain_poset,
    is_order_isomorphism, random_poset,
)
from src.poset.structure import (
    StructureReport, structure_queries, atoms, coatoms, is_lattice,
    is_meet_semilattice, rank_function, rank_sizes, maximal_chains, iter_maximal_chains,
)
from src.poset.io import poset_to_dict, poset_from_dict, read_poset, write_poset

__all__ = [
    'Chain', 'Poset', 'from_covers', 'from_order', 'iter_bits', 'bits_to_ids',
    'mobius', 'mobius_row', 'mobius_invariant', 'mobius_hat',
    'DERIVE_KINDS', 'derive', 'dual', 'proper_part', 'bounded_extension',
    'open_interval', 'closed_interval', 'upper_set', 'lower_set',
    'direct_product', 'ordinal_join', 'disjoint_union', 'antichain', 'chain_poset',
    'is_order_isomorphism', 'random_poset',
    'StructureReport', 'structure_queries', 'atoms', 'coatoms', 'is_lattice',
    'is_meet_semilattice', 'rank_function', 'rank_sizes', 'maximal_chains', 'iter_maximal_chains',
    'poset_to_dict', 'poset_from_dict', 'read_poset', 'write_poset',
]
