"""
Tests for Hilbert-Samuel values, coefficients and the I_n identities
"""
from fractions import Fraction

import pytest

from exactalg.errors import NotSystemOfParametersError
from hilbsam import (
    I_n,
    I_n_cohomological,
    I_n_invariance,
    compare_gcm_closed_form,
    gcm_hs_closed_form,
    hs_coefficients,
    hs_function,
    hs_values,
    verify_hs_identities,
)
from modules.filtration import dimension_filtration, trivial_filtration
from parameters.system import ParameterSystem


@pytest.fixture(scope="module")
def planes_sop(R4):
    return ParameterSystem.parse(R4, ["x + z", "y + w"])


class TestHilbertSamuelFunction:
    def test_values_on_embedded_point(self, embedded_point, y_param):
        assert hs_values(embedded_point, y_param, 3) == {0: 2, 1: 3, 2: 4, 3: 5}

    def test_values_on_two_planes(self, two_planes, planes_sop):
        assert [hs_function(two_planes, planes_sop, n) for n in range(3)] == [3, 8, 15]

    def test_negative_n(self, embedded_point, y_param):
        with pytest.raises(ValueError):
            hs_function(embedded_point, y_param, -1)

    def test_non_parameter_ideal(self, embedded_point, R2):
        with pytest.raises(NotSystemOfParametersError):
            hs_coefficients(embedded_point, ParameterSystem.parse(R2, ["x"]))


class TestCoefficients:
    def test_embedded_point(self, embedded_point, y_param):
        record = hs_coefficients(embedded_point, y_param)
        assert record.coefficients == [Fraction(1), Fraction(1)]
        assert record.fit_exact
        assert record.dd_certified
        assert record.as_dict()["coefficients"] == [1, 1]

    def test_two_planes(self, two_planes, planes_sop):
        record = hs_coefficients(two_planes, planes_sop, dd_bound=None)
        assert record.coefficients == [2, 1, 0]
        assert record.fit_exact
        assert record.dd_certified is None
        assert record.predicted(4) == hs_function(two_planes, planes_sop, 4)


class TestIdentities:
    def test_embedded_point_identities(self, embedded_point, y_param):
        D = dimension_filtration(embedded_point)
        verification = verify_hs_identities(embedded_point, D, y_param)
        assert verification.all_passed
        assert [c.passed for c in verification.checks] == [True, True]

    def test_two_planes_identities(self, two_planes, planes_sop):
        F = trivial_filtration(two_planes)
        record = hs_coefficients(two_planes, planes_sop, dd_bound=None)
        verification = verify_hs_identities(two_planes, F, planes_sop, record)
        assert verification.all_passed
        assert [c.rhs for c in verification.checks] == [0, 2, 1]


class TestInvariantSequence:
    def test_I_n_is_constant_on_embedded_point(self, embedded_point, y_param):
        D = dimension_filtration(embedded_point)
        assert [I_n(embedded_point, D, y_param, n) for n in range(4)] == [1, 1, 1, 1]
        assert I_n_cohomological(embedded_point, D, 2) == 1

    def test_I_n_grows_on_two_planes(self, two_planes, planes_sop):
        D = dimension_filtration(two_planes)
        assert [I_n(two_planes, D, planes_sop, n) for n in range(3)] == [1, 2, 3]
        assert [I_n_cohomological(two_planes, D, n) for n in range(3)] == [1, 2, 3]

    def test_invariance_across_filtrations(self, embedded_point, y_param, R2):
        D = dimension_filtration(embedded_point)
        F = trivial_filtration(embedded_point)
        other = ParameterSystem.parse(R2, ["x + y"])
        report = I_n_invariance(embedded_point, F, y_param, D, other, upto=3, D=D)
        assert report.all_equal
        assert report.rows[0] == {"n": 0, "first": 1, "second": 1, "closed_form": 1, "equal": True}

    def test_gcm_closed_form(self, embedded_point, y_param, two_planes, planes_sop):
        assert [gcm_hs_closed_form(embedded_point, y_param, n) for n in range(3)] == [2, 3, 4]
        rows = compare_gcm_closed_form(two_planes, planes_sop, upto=2)
        assert all(row["equal"] for row in rows)
