"""Exact fields, polynomial rings, Groebner bases and ideal operations"""
from .errors import SgcmError
from .fields import FieldSpec
from .groebner import GroebnerBasis, groebner_basis, is_groebner_basis, is_reduced, normal_form
from .ideals import (
    Ideal,
    colon_by_element,
    ideal_colon,
    ideal_contains,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect_all,
    saturation,
    saturation_at_irrelevant,
)
from .monomials import (
    INFINITE,
    contains_power_of_irrelevant,
    degree_component_basis,
    hilbert_function,
    hilbert_function_values,
    is_finite,
    krull_dimension,
    linear_forms,
    vector_space_length,
)
from .parallel import parallel_map
from .rings import NEG_INF, PolyRing, is_homogeneous, total_degree

__all__ = [
    "SgcmError",
    "FieldSpec",
    "PolyRing",
    "NEG_INF",
    "is_homogeneous",
    "total_degree",
    "GroebnerBasis",
    "groebner_basis",
    "is_groebner_basis",
    "is_reduced",
    "normal_form",
    "Ideal",
    "ideal_sum",
    "ideal_product",
    "ideal_intersection",
    "intersect_all",
    "ideal_colon",
    "colon_by_element",
    "saturation",
    "saturation_at_irrelevant",
    "ideal_equal",
    "ideal_contains",
    "ideal_power",
    "INFINITE",
    "is_finite",
    "krull_dimension",
    "vector_space_length",
    "hilbert_function",
    "hilbert_function_values",
    "contains_power_of_irrelevant",
    "degree_component_basis",
    "linear_forms",
    "parallel_map",
]
