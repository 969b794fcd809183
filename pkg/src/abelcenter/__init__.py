"""Exact center and composition checks for polynomial Abel equations."""

from .abelmodel import AbelEquation, CompositionWitness, from_composition, paper_counterexample, paper_curves
from .compcond import composition_condition, decompose_as, moment
from .darboux import DarbouxCandidate, cofactor, endpoint_profile, lie_derivative, verify_first_integral
from .itint import IndexTuple, all_index_tuples_up_to, iterated_integral
from .polycore import BiPoly, UniPoly
from .returnmap import center_check, return_map_coefficient, universal_center_check

__all__ = [
    "AbelEquation",
    "BiPoly",
    "CompositionWitness",
    "DarbouxCandidate",
    "IndexTuple",
    "UniPoly",
    "all_index_tuples_up_to",
    "center_check",
    "cofactor",
    "composition_condition",
    "decompose_as",
    "endpoint_profile",
    "from_composition",
    "iterated_integral",
    "lie_derivative",
    "moment",
    "paper_counterexample",
    "paper_curves",
    "return_map_coefficient",
    "universal_center_check",
    "verify_first_integral",
]
