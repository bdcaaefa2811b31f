"""
Seeded property checks over a random monomial corpus
"""
from typing import Dict, Optional

import pytest

from cli.corpus import generate_monomial_corpus
from exactalg.errors import MultiplicityNotStabilizedError, NotSystemOfParametersError, SearchExhaustedError
from hilbsam import I_n
from modules.filtration import dimension_filtration, trivial_filtration
from parameters.fit import multilinear_fit
from parameters.multiplicity import ifm_grid, length_grid, multiplicity
from parameters.search import find_good_sop
from parameters.sequences import check_intersection_equality, is_dd_sequence
from parameters.system import is_good_sop
from seqcm import SearchOptions, Witness, invariant_witness, is_seq_gcm

pytestmark = pytest.mark.slow

CORPUS_SIZE = 200
CORPUS_SEED = 2024
OPTIONS = SearchOptions(budget=2)
SKIPPED = (SearchExhaustedError, MultiplicityNotStabilizedError, NotSystemOfParametersError)


@pytest.fixture(scope="module")
def corpus():
    entries = generate_monomial_corpus(CORPUS_SIZE, seed=CORPUS_SEED)
    return [(e.name, e.session.module()) for e in entries]


@pytest.fixture(scope="module")
def positive_dimensional(corpus):
    return [(name, M) for name, M in corpus if M.dimension >= 1]


@pytest.fixture(scope="module")
def witnesses(positive_dimensional) -> Dict[str, Optional[Witness]]:
    found = {}
    for name, M in positive_dimensional:
        try:
            found[name] = invariant_witness(M, dimension_filtration(M), OPTIONS)
        except SKIPPED:
            found[name] = None
    return found


def _is_monotone(grid) -> bool:
    for n, value in grid.items():
        for i in range(len(n)):
            bigger = n[:i] + (n[i] + 1,) + n[i + 1:]
            if bigger in grid and grid[bigger] < value:
                return False
    return True


class TestCorpusProperties:
    def test_ifm_non_negative_and_monotone(self, positive_dimensional):
        checked = 0
        for name, M in positive_dimensional:
            D = dimension_filtration(M)
            try:
                x = find_good_sop(M, D, seed=1)
                grid = ifm_grid(M, D, x, 3)
            except SKIPPED:
                continue
            assert min(grid.values()) >= 0, name
            assert _is_monotone(grid), name
            checked += 1
        assert checked > 0

    def test_low_dimension_is_seq_gcm(self, corpus):
        for name, M in corpus:
            if M.dimension <= 2:
                assert is_seq_gcm(M, options=OPTIONS).is_seq_gcm is True, name

    def test_routes_agree_on_squarefree(self, corpus):
        for name, M in corpus:
            if M.is_squarefree and M.dimension >= 1:
                assert is_seq_gcm(M, options=OPTIONS).agreement is not False, name

    def test_witnesses_fit_multilinear_form(self, positive_dimensional, witnesses):
        checked = 0
        for name, M in positive_dimensional:
            witness = witnesses[name]
            if witness is None:
                continue
            x = witness.sop
            fit = multilinear_fit(length_grid(M, x, 2))
            assert fit.exact, name
            assert fit.integer_coefficients()[-1] == multiplicity(M, M.whole(), x), name
            checked += 1
        assert checked > 0

    def test_dd_sequences_are_good(self, positive_dimensional, witnesses):
        checked = 0
        for name, M in positive_dimensional:
            # any sop works for 0 ⊂ M, so these draws ignore D
            candidates = [] if witnesses[name] is None else [witnesses[name].sop]
            try:
                candidates.append(find_good_sop(M, trivial_filtration(M), seed=7))
            except SKIPPED:
                pass
            for x in candidates:
                if is_dd_sequence(M, x, 3):
                    assert is_good_sop(M, dimension_filtration(M), x), name
                    checked += 1
        assert checked > 0

    def test_intersection_equality_for_dd_witnesses(self, positive_dimensional, witnesses):
        for name, M in positive_dimensional:
            witness = witnesses[name]
            if witness is None or not is_dd_sequence(M, witness.sop, 2):
                continue
            rows = check_intersection_equality(M, dimension_filtration(M), witness.sop)
            assert all(row["equal"] for row in rows), name

    def test_I_n_independent_of_witness(self, positive_dimensional, witnesses):
        for name, M in positive_dimensional[:60]:
            first = witnesses[name]
            if first is None:
                continue
            D = dimension_filtration(M)
            try:
                second = invariant_witness(M, D, SearchOptions(seed=100, budget=2))
            except SKIPPED:
                continue
            if not (is_dd_sequence(M, first.sop, 2) and is_dd_sequence(M, second.sop, 2)):
                continue
            values = [I_n(M, D, first.sop, n, first.table) for n in range(3)]
            assert values == [I_n(M, D, second.sop, n, second.table) for n in range(3)], name
