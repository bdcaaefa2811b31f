"""
Tests for quotient modules, filtrations, lengths and monomial decompositions
"""
import pytest

from exactalg.errors import ContainmentError, DecompositionRequiredError, DimensionConditionError
from exactalg.ideals import Ideal, intersect_all
from modules.decomposition import monomial_irreducible_decomposition
from modules.filtration import (
    Filtration,
    dimension_filtration,
    embeds_in_dimension_filtration,
    filtration_from_ideals,
    require_dimension_condition,
    trivial_filtration,
)
from modules.lengths import h0_length, module_length, subquotient_length, submodule_dimension
from modules.quotient import QuotientModule, cyclic_presentation, quotient_by_submodule


class TestDecomposition:
    def test_squarefree(self, R3):
        pieces = monomial_irreducible_decomposition(Ideal.parse(R3, ["x*y", "x*z"]))
        assert set(pieces) == {Ideal.parse(R3, ["x"]), Ideal.parse(R3, ["y", "z"])}

    def test_embedded_component(self, R2):
        I = Ideal.parse(R2, ["x^2", "x*y"])
        pieces = monomial_irreducible_decomposition(I)
        assert set(pieces) == {Ideal.parse(R2, ["x"]), Ideal.parse(R2, ["x^2", "y"])}
        assert intersect_all(pieces, R2) == I

    def test_unit_ideal_has_no_pieces(self, R2):
        assert monomial_irreducible_decomposition(Ideal.unit(R2)) == []


class TestQuotientModule:
    def test_dimension_is_max_over_components(self, R3):
        M = QuotientModule(R3, [Ideal.parse(R3, ["x", "y"]), Ideal.parse(R3, ["x"])])
        assert M.dimension == 2
        assert not M.is_zero
        assert M.is_squarefree

    def test_submodule_containment_checked(self, node, R2):
        with pytest.raises(ContainmentError):
            node.submodule([Ideal.parse(R2, ["x^2"])])

    def test_quotient_presentation(self, embedded_point, R2):
        N = embedded_point.submodule([Ideal.parse(R2, ["x"])])
        Q = quotient_by_submodule(embedded_point, N)
        assert Q.components == (Ideal.parse(R2, ["x"]),)

    def test_cyclic_presentation(self, embedded_point, R2):
        N = embedded_point.submodule([Ideal.parse(R2, ["x"])])
        annihilators = cyclic_presentation(embedded_point.zero(), N)
        assert annihilators == [Ideal.parse(R2, ["x", "y"])]


class TestLengths:
    def test_h0_of_embedded_point(self, embedded_point):
        assert h0_length(embedded_point) == 1

    def test_h0_of_cohen_macaulay(self, node):
        assert h0_length(node) == 0

    def test_finite_module_length(self, R2):
        M = QuotientModule(R2, [Ideal.parse(R2, ["x^2", "y^2"]), Ideal.parse(R2, ["x", "y"])])
        assert module_length(M) == 5

    def test_infinite_subquotient(self, node, R2):
        N = node.submodule([Ideal.parse(R2, ["x"])])
        assert subquotient_length(node, node.zero(), N) == float("inf")

    def test_submodule_dimension(self, embedded_point, R2):
        N = embedded_point.submodule([Ideal.parse(R2, ["x"])])
        assert submodule_dimension(embedded_point, N) == 0
        assert submodule_dimension(embedded_point, embedded_point.zero()) == -1


class TestFiltrations:
    def test_dimension_filtration_of_embedded_point(self, embedded_point, R2):
        D = dimension_filtration(embedded_point)
        assert D.dims == (0, 1)
        assert D.steps[0].ideals == (Ideal.parse(R2, ["x"]),)

    def test_dimension_filtration_of_mixed_components(self, R3):
        M = QuotientModule(R3, [Ideal.parse(R3, ["x*y", "x*z"])])
        D = dimension_filtration(M)
        assert D.dims == (-1, 1, 2)
        assert D.steps[1].ideals == (Ideal.parse(R3, ["x"]),)

    def test_finite_length_module(self, R2):
        M = QuotientModule(R2, [Ideal.parse(R2, ["x", "y^2"])])
        D = dimension_filtration(M)
        assert D.t == 0

    def test_non_monomial_needs_decomposition(self, R2):
        M = QuotientModule(R2, [Ideal.parse(R2, ["x^2 - y^2"])])
        with pytest.raises(DecompositionRequiredError):
            dimension_filtration(M)

    def test_supplied_decomposition(self, R2):
        pieces = [Ideal.parse(R2, ["x + y"]), Ideal.parse(R2, ["x - y"])]
        M = QuotientModule(R2, [intersect_all(pieces, R2)])
        D = dimension_filtration(M, [pieces])
        assert D.dims == (-1, 1)

    def test_trivial_filtration(self, node):
        F = trivial_filtration(node)
        assert F.dims == (-1, 1)
        assert F.t == 1

    def test_dimension_condition(self, embedded_point, R2):
        sat = Ideal.parse(R2, ["x"])
        F = filtration_from_ideals(embedded_point, [[sat], [sat], [Ideal.unit(R2)]])
        with pytest.raises(DimensionConditionError):
            require_dimension_condition(F)

    def test_last_step_must_be_whole(self, embedded_point, R2):
        with pytest.raises(ContainmentError):
            Filtration(embedded_point, (embedded_point.zero(),))

    def test_embeds_in_dimension_filtration(self, embedded_point):
        F = trivial_filtration(embedded_point)
        D = dimension_filtration(embedded_point)
        rows = embeds_in_dimension_filtration(F, D)
        assert rows[0]["target"] is None
        assert rows[1] == {"step": 1, "target": 1, "contained": True, "same_dimension": True}
