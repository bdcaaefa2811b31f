"""
Tests for systems of parameters, dd-sequences, multiplicities and I_{F,M}
"""
import pytest

from exactalg.errors import NotSystemOfParametersError, SearchExhaustedError
from exactalg.ideals import Ideal
from modules.filtration import dimension_filtration, filtration_from_ideals, trivial_filtration
from modules.quotient import QuotientModule
from parameters.fit import grid_frame, grid_text, multilinear_fit
from parameters.multiplicity import (
    I_F_M,
    ifm_grid,
    is_standard_witness,
    length_grid,
    multiplicity,
    multiplicity_table,
)
from parameters.search import UNCONSTRAINED, find_good_sop, position_steps
from parameters.sequences import (
    check_intersection_equality,
    d_sequence_failure,
    dd_sequence_failure,
    is_dd_sequence,
)
from parameters.system import (
    ParameterSystem,
    good_sop_violations,
    is_good_sop,
    is_sop,
    quotient_length,
)


class TestParameterSystem:
    def test_quotient_lengths(self, embedded_point, y_param):
        assert [quotient_length(embedded_point, y_param, (n,)) for n in range(1, 5)] == [2, 3, 4, 5]

    def test_is_sop(self, embedded_point, y_param, R2):
        assert is_sop(embedded_point, y_param)
        assert not is_sop(embedded_point, ParameterSystem.parse(R2, ["x"]))
        assert not is_sop(embedded_point, ParameterSystem.parse(R2, ["x", "y"]))

    def test_constant_rejected(self, R2):
        with pytest.raises(NotSystemOfParametersError):
            ParameterSystem.parse(R2, ["1"])

    def test_powers(self, R2):
        x = ParameterSystem.parse(R2, ["x", "y"])
        assert [R2.format(f) for f in x.powers((2, 3))] == ["x^2", "y^3"]
        with pytest.raises(ValueError):
            x.powers((0, 1))

    def test_good_sop(self, R3):
        # plane x = 0 together with the line y = z = 0
        M = QuotientModule(R3, [Ideal.parse(R3, ["x*y", "x*z"])])
        D = dimension_filtration(M)
        good = ParameterSystem.parse(R3, ["x + y", "z"])
        bad = ParameterSystem.parse(R3, ["y", "x + z"])
        assert is_sop(M, good) and is_sop(M, bad)
        assert is_good_sop(M, D, good)
        assert good_sop_violations(M, D, bad) == [{"step": 1, "component": 0}]


class TestSequences:
    def test_regular_sequence_is_d_sequence(self, R2):
        M = QuotientModule(R2, [Ideal.zero(R2)])
        assert d_sequence_failure(M, [R2.parse("x"), R2.parse("y")]) is None

    def test_dd_sequence(self, embedded_point, y_param):
        assert is_dd_sequence(embedded_point, y_param, bound=3)

    def test_d_sequence_failure_located(self, R2):
        # on R/(x^2 y): 0 : x^2 = (y) but 0 : x = (xy)
        M = QuotientModule(R2, [Ideal.parse(R2, ["x^2*y"])])
        assert d_sequence_failure(M, [R2.parse("x")]) == (0, 1, 1)
        failure = dd_sequence_failure(M, ParameterSystem.parse(R2, ["x", "y"]), bound=1)
        assert failure is not None
        assert failure["n"] == [1, 1]

    def test_intersection_equality_rows(self, embedded_point, y_param):
        D = dimension_filtration(embedded_point)
        rows = check_intersection_equality(embedded_point, D, y_param)
        assert rows == [{"step": 0, "component": 0, "equal": True}]


class TestMultiplicity:
    def test_node(self, node, R2):
        x = ParameterSystem.parse(R2, ["x + y"])
        assert multiplicity(node, node.whole(), x) == 2

    def test_zero_dimensional_step(self, embedded_point, R2):
        N = embedded_point.submodule([Ideal.parse(R2, ["x"])])
        assert multiplicity(embedded_point, N, ParameterSystem(R2, ())) == 1

    def test_table_and_correction(self, embedded_point, y_param):
        D = dimension_filtration(embedded_point)
        table = multiplicity_table(embedded_point, D, y_param)
        assert table.entries == {0: 1, 1: 1}
        assert table.correction((3,)) == 4
        assert table.as_rows()[1] == {"step": 1, "dim": 1, "multiplicity": 1}

    def test_ifm_on_dimension_filtration(self, embedded_point, y_param):
        D = dimension_filtration(embedded_point)
        assert set(ifm_grid(embedded_point, D, y_param, 4).values()) == {0}
        assert is_standard_witness(embedded_point, D, y_param) == (True, 0, 0)

    def test_ifm_on_trivial_filtration(self, embedded_point, y_param):
        F = trivial_filtration(embedded_point)
        assert I_F_M(embedded_point, F, y_param, (5,)) == 1

    def test_buchsbaum_invariant(self, two_planes, R4):
        x = ParameterSystem.parse(R4, ["x + z", "y + w"])
        F = trivial_filtration(two_planes)
        assert quotient_length(two_planes, x) == 3
        assert is_standard_witness(two_planes, F, x) == (True, 1, 1)


class TestFit:
    def test_exact_multilinear_fit(self, two_planes, R4):
        x = ParameterSystem.parse(R4, ["x + z", "y + w"])
        grid = length_grid(two_planes, x, 2)
        fit = multilinear_fit(grid)
        assert fit.exact
        assert fit.integer_coefficients() == [1, 0, 2]

    def test_non_multilinear_values(self):
        values = {(1,): 1, (2,): 2, (3,): 5}
        fit = multilinear_fit(values)
        assert not fit.exact
        assert (3,) in fit.residuals

    def test_missing_fit_points(self):
        with pytest.raises(ValueError):
            multilinear_fit({(1, 1): 3})

    def test_grid_rendering(self):
        values = {(1, 1): 3, (1, 2): 5}
        frame = grid_frame(values, "length")
        assert list(frame.columns) == ["n1", "n2", "length"]
        assert "length" in grid_text(values, "length")


class TestSearch:
    def test_position_steps(self, embedded_point):
        D = dimension_filtration(embedded_point)
        assert position_steps(D, 1) == [0]

    def test_positions_below_first_dimension(self, R3):
        # M_0 = R/(x,y) ⊕ 0 inside R/(x,y) ⊕ R/(x), dims (1, 2)
        line, plane = Ideal.parse(R3, ["x", "y"]), Ideal.parse(R3, ["x"])
        M = QuotientModule(R3, [line, plane])
        unit = Ideal.unit(R3)
        F = filtration_from_ideals(M, [[unit, plane], [unit, unit]])
        assert F.dims == (1, 2)
        assert position_steps(F, 2) == [UNCONSTRAINED, 0]
        x = find_good_sop(M, F, seed=1)
        assert is_sop(M, x)
        assert is_good_sop(M, F, x)

    def test_found_system_is_good(self, embedded_point):
        D = dimension_filtration(embedded_point)
        x = find_good_sop(embedded_point, D, seed=3)
        assert is_sop(embedded_point, x)
        assert is_good_sop(embedded_point, D, x)

    def test_deterministic_in_seed(self, two_planes):
        F = trivial_filtration(two_planes)
        first = find_good_sop(two_planes, F, seed=11)
        second = find_good_sop(two_planes, F, seed=11)
        assert first == second

    def test_exhausted_search_reports_progress(self, embedded_point):
        D = dimension_filtration(embedded_point)
        with pytest.raises(SearchExhaustedError) as info:
            find_good_sop(embedded_point, D, seed=5, max_tries=0)
        assert info.value.progress["tries"] == 0
        assert info.value.progress["seed"] == 5
