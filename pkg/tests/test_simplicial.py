"""
Tests for simplicial complexes, reduced homology and Hochster's formula
"""
import pytest

from exactalg.errors import NotSquarefreeError
from exactalg.ideals import Ideal
from exactalg.monomials import INFINITE
from simplicial.complexes import SimplicialComplex, link, stanley_reisner_complex
from simplicial.hochster import (
    is_gcm_cohomological,
    local_cohomology_length,
    module_gcm_invariant,
    module_local_cohomology_lengths,
)
from simplicial.homology import euler_characteristic, reduced_betti, reduced_homology_ranks

CATALOGUE = [
    ("point", ["a"], [["a"]], [0, 0]),
    ("two points", ["a", "b"], [["a"], ["b"]], [0, 1]),
    ("hollow triangle", ["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]], [0, 0, 1]),
    ("filled triangle", ["a", "b", "c"], [["a", "b", "c"]], [0, 0, 0, 0]),
    (
        "two disjoint triangles",
        ["a", "b", "c", "d", "e", "f"],
        [["a", "b", "c"], ["d", "e", "f"]],
        [0, 1, 0, 0],
    ),
    ("empty complex", [], [[]], [1]),
]


class TestHomology:
    @pytest.mark.parametrize("label,vertices,facets,ranks", CATALOGUE, ids=[c[0] for c in CATALOGUE])
    def test_catalogued_complexes(self, label, vertices, facets, ranks):
        delta = SimplicialComplex.from_facets(vertices, facets)
        assert reduced_homology_ranks(delta) == ranks

    @pytest.mark.parametrize("label,vertices,facets,ranks", CATALOGUE, ids=[c[0] for c in CATALOGUE])
    def test_euler_characteristic(self, label, vertices, facets, ranks):
        delta = SimplicialComplex.from_facets(vertices, facets)
        assert euler_characteristic(delta) == sum((-1) ** (k + 1) * r for k, r in enumerate(ranks))

    def test_void_complex(self):
        assert reduced_homology_ranks(SimplicialComplex.void(["a"])) == [0]

    def test_betti_outside_range(self):
        delta = SimplicialComplex.simplex(["a", "b"])
        assert reduced_betti(delta, 5) == 0
        assert reduced_betti(delta, -2) == 0

    def test_link(self):
        hollow = SimplicialComplex.from_facets(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])
        lk = link(hollow, ["a"])
        assert sorted(map(sorted, lk.facets)) == [["b"], ["c"]]
        with pytest.raises(ValueError):
            link(hollow, ["a", "b", "c"])

    def test_facets_are_maximal(self):
        delta = SimplicialComplex.from_facets(["a", "b"], [["a"], ["a", "b"]])
        assert delta.format_facets() == [["a", "b"]]
        assert delta.f_vector() == [1, 2, 1]


class TestStanleyReisner:
    def test_complex_of_hypersurface(self, R3):
        delta = stanley_reisner_complex(Ideal.parse(R3, ["x*y"]))
        assert sorted(map(sorted, delta.facets)) == [["x", "z"], ["y", "z"]]

    def test_unit_ideal_gives_void(self, R2):
        assert stanley_reisner_complex(Ideal.unit(R2)).is_void

    def test_non_squarefree_rejected(self, R2):
        with pytest.raises(NotSquarefreeError):
            stanley_reisner_complex(Ideal.parse(R2, ["x^2"]))


class TestHochster:
    def test_cohen_macaulay(self, R3):
        I = Ideal.parse(R3, ["x*y"])
        assert [local_cohomology_length(I, j) for j in range(2)] == [0, 0]
        assert is_gcm_cohomological(I) == (True, 0)

    def test_two_planes_meeting_in_a_point(self, two_planes):
        I = two_planes.components[0]
        assert local_cohomology_length(I, 1) == 1
        assert is_gcm_cohomological(I) == (True, 1)
        assert module_gcm_invariant(two_planes) == 1

    def test_plane_and_line_not_gcm(self, R3):
        I = Ideal.parse(R3, ["x*y", "x*z"])
        assert local_cohomology_length(I, 1) == INFINITE
        assert is_gcm_cohomological(I) == (False, None)

    def test_module_lengths_include_h0(self, embedded_point):
        assert module_local_cohomology_lengths(embedded_point, 1) == [1]

    def test_non_squarefree_higher_degree(self, R2):
        with pytest.raises(NotSquarefreeError):
            local_cohomology_length(Ideal.parse(R2, ["x^2"]), 1)
