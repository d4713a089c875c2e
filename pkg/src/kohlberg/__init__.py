"""Exact computation and verification of the (pre-)nucleolus of TU games."""

from .balance import (BALANCED, UNBALANCED, WEAKLY_BALANCED, WEAKLY_BALANCED_ONLY, BalanceVerdict,
                      check_balanced, check_weakly_balanced, nucleolus_property, property_I,
                      property_II)
from .game import (TUGame, distinct_excess_levels, excess, is_imputation, is_preimputation,
                   level_collection, lex_compare, theta)
from .modified import verify_prenucleolus_modified
from .nguyen import verify_nucleolus_nguyen
from .oracle import improving_direction, nucleolus, prenucleolus
from .verify import IS_SOLUTION, NOT_SOLUTION, verify_nucleolus, verify_prenucleolus

__version__ = "0.1.0"

__all__ = [
    "TUGame", "excess", "theta", "lex_compare", "is_preimputation", "is_imputation",
    "level_collection", "distinct_excess_levels",
    "BalanceVerdict", "BALANCED", "WEAKLY_BALANCED_ONLY", "WEAKLY_BALANCED", "UNBALANCED",
    "check_balanced", "check_weakly_balanced", "property_I", "property_II", "nucleolus_property",
    "verify_prenucleolus", "verify_nucleolus", "IS_SOLUTION", "NOT_SOLUTION",
    "verify_prenucleolus_modified", "verify_nucleolus_nguyen",
    "prenucleolus", "nucleolus", "improving_direction",
]
