"""Identities module - both sides of topological and Mobius identities, checked exactly."""

from src.identities.results import IdentityCheck, compare, jsonable
from src.identities.maps import PosetMap, GroupElementAction
from src.identities.euler import philip_hall_check, euler_poincare_check, mobius_betti_check
from src.identities.duality import KUNNETH_KINDS, alexander_duality_check, kunneth_checks
from src.identities.fibers import (
    quillen_fiber_check, general_fiber_betti_check, inflation_betti_check,
    closure_check, crosscut_complex, crosscut_check,
)
from src.identities.whitney import whitney_betti
from src.identities.lefschetz import fixed_point_lefschetz

__all__ = [
    'IdentityCheck', 'compare', 'jsonable',
    'PosetMap', 'GroupElementAction',
    'philip_hall_check', 'euler_poincare_check', 'mobius_betti_check',
    'KUNNETH_KINDS', 'alexander_duality_check', 'kunneth_checks',
    'quillen_fiber_check', 'general_fiber_betti_check', 'inflation_betti_check',
    'closure_check', 'crosscut_complex', 'crosscut_check',
    'whitney_betti',
    'fixed_point_lefschetz',
]
