"""Systems of parameters, dd-sequences, multiplicities and I_{F,M}"""
from .fit import MultilinearFit, grid_frame, grid_text, multilinear_fit
from .multiplicity import (
    MultiplicityTable,
    I_F_M,
    grid_points,
    ifm_grid,
    is_standard_witness,
    length_grid,
    multiplicity,
    multiplicity_table,
    submodule_quotient_length,
)
from .search import find_good_sop, position_steps
from .sequences import (
    check_intersection_equality,
    d_sequence_failure,
    dd_sequence_failure,
    is_d_sequence,
    is_dd_sequence,
)
from .system import ParameterSystem, good_sop_violations, is_good_sop, is_sop, ones, quotient_length

__all__ = [
    "ParameterSystem",
    "ones",
    "quotient_length",
    "is_sop",
    "is_good_sop",
    "good_sop_violations",
    "is_d_sequence",
    "d_sequence_failure",
    "is_dd_sequence",
    "dd_sequence_failure",
    "check_intersection_equality",
    "multiplicity",
    "submodule_quotient_length",
    "MultiplicityTable",
    "multiplicity_table",
    "I_F_M",
    "is_standard_witness",
    "grid_points",
    "length_grid",
    "ifm_grid",
    "MultilinearFit",
    "multilinear_fit",
    "grid_frame",
    "grid_text",
    "find_good_sop",
    "position_steps",
]
