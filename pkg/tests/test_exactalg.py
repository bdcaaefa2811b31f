"""
Tests for exact polynomial arithmetic, Groebner bases and ideal operations
"""
import numpy as np
import pytest

from exactalg.errors import ColonByZeroError, PolynomialParseError, RingMismatchError
from exactalg.fields import FieldSpec
from exactalg.groebner import groebner_basis, is_groebner_basis, is_reduced
from exactalg.ideals import (
    Ideal,
    colon_by_element,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    intersect_all,
    saturation_at_irrelevant,
)
from exactalg.monomials import (
    INFINITE,
    contains_power_of_irrelevant,
    hilbert_function_values,
    krull_dimension,
    linear_forms,
    vector_space_length,
)
from exactalg.parallel import parallel_map
from exactalg.rings import PolyRing, is_homogeneous, total_degree

MEMBERSHIP_PAIRS = 500


def _random_poly(rng, ring, max_degree=2, terms=3):
    f = ring.zero
    for _ in range(terms):
        exps = [int(e) for e in rng.integers(0, max_degree + 1, size=ring.ngens)]
        coeff = int(rng.integers(-3, 4))
        if coeff:
            f = f + ring.monomial(exps, coeff)
    return f


class TestRings:
    def test_parse_and_format(self, R3):
        f = R3.parse("x^2*y - 3*z + y*x^2")
        assert R3.format(f) == "2*x^2*y - 3*z"

    def test_parse_error_reports_column(self, R3):
        with pytest.raises(PolynomialParseError) as info:
            R3.parse("x + q")
        assert info.value.column == 5

    def test_parse_rejects_bad_character(self, R3):
        with pytest.raises(PolynomialParseError):
            R3.parse("x $ y")

    def test_homogeneity_and_degree(self, R3):
        assert is_homogeneous(R3.parse("x*y + z^2"))
        assert not is_homogeneous(R3.parse("x*y + z"))
        assert total_degree(R3.parse("x^3 + y")) == 3

    def test_prime_field_arithmetic(self):
        ring = PolyRing(["x"], FieldSpec.prime(7))
        f = ring.parse("7*x + 1")
        assert ring.format(f) == "1"

    def test_field_validation(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(8)

    def test_duplicate_variables_rejected(self):
        with pytest.raises(ValueError):
            PolyRing(["x", "x"])

    def test_foreign_polynomial_rejected(self, R2, R3):
        with pytest.raises(RingMismatchError):
            Ideal(R3, [R2.parse("x")])


class TestGroebner:
    def test_reduced_basis_of_twisted_cubic(self):
        ring = PolyRing(["x", "y", "z", "w"])
        I = Ideal.parse(ring, ["x*z - y^2", "y*w - z^2", "x*w - y*z"])
        G = I.groebner()
        assert is_groebner_basis(G)
        assert is_reduced(G)
        assert len(G) == 3

    def test_unit_ideal(self, R2):
        G = groebner_basis([R2.parse("x"), R2.parse("x + 1")], R2)
        assert G.is_unit

    @pytest.mark.slow
    def test_membership_matches_normal_form(self, R3):
        rng = np.random.default_rng(2024)
        pairs = 0
        while pairs < MEMBERSHIP_PAIRS:
            gens = [_random_poly(rng, R3, 1, 3) for _ in range(2)]
            gens = [g for g in gens if g]
            if not gens:
                continue
            I = Ideal(R3, gens)
            for _ in range(5):
                # constructed members
                member = sum((_random_poly(rng, R3, 1, 2) * g for g in gens), R3.zero)
                assert I.contains(member)
                assert not I.normal_form(member)
                # arbitrary elements differ from their normal form by a member
                f = _random_poly(rng, R3)
                r = I.normal_form(f)
                assert I.contains(f - r)
                assert I.contains(f) == (not r)
                pairs += 1
        assert pairs == MEMBERSHIP_PAIRS


class TestIdealOperations:
    def test_monomial_intersection(self, R2):
        I = ideal_intersection(Ideal.parse(R2, ["x"]), Ideal.parse(R2, ["y"]))
        assert I == Ideal.parse(R2, ["x*y"])

    def test_elimination_intersection(self, R2):
        I = ideal_intersection(Ideal.parse(R2, ["x + y"]), Ideal.parse(R2, ["x - y"]))
        assert I == Ideal.parse(R2, ["x^2 - y^2"])

    def test_intersect_all_empty_is_unit(self, R2):
        assert intersect_all([], R2).is_unit

    def test_colon(self, R2):
        assert ideal_colon(Ideal.parse(R2, ["x*y"]), Ideal.parse(R2, ["x"])) == Ideal.parse(R2, ["y"])
        assert colon_by_element(Ideal.parse(R2, ["x^2", "x*y"]), R2.parse("y")) == Ideal.parse(R2, ["x"])

    def test_colon_by_zero(self, R2):
        with pytest.raises(ColonByZeroError):
            ideal_colon(Ideal.parse(R2, ["x"]), Ideal.zero(R2))

    def test_saturation_removes_embedded_point(self, R2):
        assert saturation_at_irrelevant(Ideal.parse(R2, ["x^2", "x*y"])) == Ideal.parse(R2, ["x"])

    def test_ideal_power(self, R2):
        P = ideal_power(R2, [R2.parse("x"), R2.parse("y")], 2)
        assert P == Ideal.parse(R2, ["x^2", "x*y", "y^2"])
        assert ideal_power(R2, [R2.parse("x")], 0).is_unit


class TestMonomialComputations:
    def test_krull_dimension(self, R3):
        assert krull_dimension(Ideal.parse(R3, ["x", "y"])) == 1
        assert krull_dimension(Ideal.parse(R3, ["x*y"])) == 2
        assert krull_dimension(Ideal.parse(R3, ["x^2", "y", "z"])) == 0
        assert krull_dimension(Ideal.unit(R3)) == -1

    def test_infinite_length(self, R3):
        assert vector_space_length(Ideal.parse(R3, ["x", "y"])) == INFINITE

    def test_pure_power_lengths(self, R3):
        rng = np.random.default_rng(7)
        for _ in range(50):
            a, b, c = (int(v) for v in rng.integers(1, 5, size=3))
            I = Ideal.parse(R3, [f"x^{a}", f"y^{b}", f"z^{c}"])
            assert vector_space_length(I) == a * b * c

    def test_hilbert_function(self, R2):
        assert hilbert_function_values(Ideal.parse(R2, ["x*y"]), 3) == [1, 2, 2, 2]

    def test_power_of_irrelevant(self, R2):
        assert contains_power_of_irrelevant(Ideal.parse(R2, ["x^2", "y^3"])) == (True, 4)
        assert contains_power_of_irrelevant(Ideal.parse(R2, ["x"])) == (False, None)

    def test_linear_forms(self, R3):
        forms = linear_forms(Ideal.parse(R3, ["x", "y*z"]))
        assert [R3.format(f) for f in forms] == ["x"]


class TestParallelMap:
    def test_results_keyed_by_input(self):
        result = parallel_map(lambda n: n * n, [3, 1, 2, 3], threads=4)
        assert list(result) == [3, 1, 2]
        assert result == {3: 9, 1: 1, 2: 4}
