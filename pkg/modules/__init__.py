"""Quotient modules, split submodules, filtrations and lengths"""
from .decomposition import monomial_irreducible_decomposition
from .filtration import (
    Filtration,
    check_dimension_condition,
    component_pieces,
    dimension_filtration,
    embeds_in_dimension_filtration,
    filtration_from_ideals,
    require_dimension_condition,
    trivial_filtration,
)
from .lengths import (
    component_subquotient_length,
    h0_ideals,
    h0_length,
    module_length,
    subquotient_length,
    submodule_dimension,
    submodule_length,
)
from .quotient import QuotientModule, Submodule, cyclic_presentation, quotient_by_submodule

__all__ = [
    "QuotientModule",
    "Submodule",
    "cyclic_presentation",
    "quotient_by_submodule",
    "Filtration",
    "filtration_from_ideals",
    "trivial_filtration",
    "check_dimension_condition",
    "require_dimension_condition",
    "component_pieces",
    "dimension_filtration",
    "embeds_in_dimension_filtration",
    "monomial_irreducible_decomposition",
    "submodule_dimension",
    "subquotient_length",
    "component_subquotient_length",
    "submodule_length",
    "module_length",
    "h0_ideals",
    "h0_length",
]
