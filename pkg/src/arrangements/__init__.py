"""Arrangements module - exact rational subspace arrangements and their intersection lattices."""

from src.arrangements.subspaces import (
    ARRANGEMENT_KINDS, AffineSubspace, Arrangement, canonical_rows, builtin_arrangement,
    arrangement_from_dict, read_arrangement, write_arrangement,
)
from src.arrangements.lattice import intersection_semilattice, braid_partition, braid_partition_map
from src.arrangements.invariants import (
    RegionCount, characteristic_polynomial, zaslavsky, orlik_solomon_betti, goresky_macpherson_betti,
)

__all__ = [
    'ARRANGEMENT_KINDS', 'AffineSubspace', 'Arrangement', 'canonical_rows', 'builtin_arrangement',
    'arrangement_from_dict', 'read_arrangement', 'write_arrangement',
    'intersection_semilattice', 'braid_partition', 'braid_partition_map',
    'RegionCount', 'characteristic_polynomial', 'zaslavsky', 'orlik_solomon_betti', 'goresky_macpherson_betti',
]
