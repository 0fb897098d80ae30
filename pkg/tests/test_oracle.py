import pytest
from hypothesis import given, settings

from conftest import bipartitions
from dnbranch.core import (
    EMPTY_BIPARTITION,
    INF,
    classify_regime,
    regime_a_params,
    remove_node,
    removable_nodes,
)
from dnbranch.crystal import build_lattice
from dnbranch.errors import NotSemisimpleError
from dnbranch.oracle import (
    all_paths,
    bipartition_dimension,
    count_standard_bitableaux,
    enumerate_bipartitions,
    enumerate_partitions,
    verify_h_path_independence,
    verify_level1_calibration,
    verify_regime_a_decoupling,
    verify_semisimple_branching,
    verify_uniqueness_and_distinctness,
)


def test_enumerate_partitions():
    assert list(enumerate_partitions(0)) == [()]
    assert set(enumerate_partitions(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert len(list(enumerate_partitions(8))) == 22
    assert len(list(enumerate_bipartitions(4))) == 20


def test_all_paths_examples():
    params = classify_regime(4, 4)
    lattice = build_lattice(4, params)
    paths, truncated = all_paths(EMPTY_BIPARTITION, params, lattice)
    assert paths == [()] and not truncated
    paths, truncated = all_paths(((1,), (1,)), params, lattice)
    assert sorted(paths) == [(0, 2), (2, 0)] and not truncated


def test_all_paths_unique_in_decoupled_regime():
    params = regime_a_params(2)
    lattice = build_lattice(2, params)
    paths, truncated = all_paths(((1, 1), ()), params, lattice)
    assert len(paths) == 1 and not truncated
    assert paths[0] == ((1, 0), (1, 1))


def test_all_paths_cap_marks_truncation():
    params = classify_regime(5, 4)
    lattice = build_lattice(5, params)
    paths, truncated = all_paths(((1,), (2, 2)), params, lattice, cap=1)
    assert len(paths) == 1 and truncated


def test_bipartition_dimension_examples():
    assert bipartition_dimension(((2,), ())) == 1
    assert bipartition_dimension(((1,), (1,))) == 2
    assert bipartition_dimension(((2, 1), (1, 1))) == 20
    assert bipartition_dimension(((2, 1), (2, 1))) == 80
    assert bipartition_dimension(EMPTY_BIPARTITION) == 1


def test_dimension_against_explicit_enumeration():
    for n in range(7):
        for bp in enumerate_bipartitions(n):
            assert bipartition_dimension(bp) == count_standard_bitableaux(bp)


def test_dimension_satisfies_the_removal_recurrence():
    for n in range(1, 8):
        for bp in enumerate_bipartitions(n):
            total = sum(
                bipartition_dimension(remove_node(bp, node))
                for node in removable_nodes(bp)
            )
            assert bipartition_dimension(bp) == total


def test_path_independence_suites():
    for e, n in ((4, 6), (6, 5)):
        report = verify_h_path_independence(n, classify_regime(n, e))
        assert report.passed and report.cases > 0 and not report.failures


def test_path_independence_vacuous_in_regime_a():
    report = verify_h_path_independence(4, classify_regime(4, INF))
    assert report.passed


def test_path_independence_inconclusive_when_capped():
    report = verify_h_path_independence(5, classify_regime(5, 4), cap=1)
    assert report.truncated
    assert report.status == "inconclusive"
    assert not report.passed


def test_semisimple_branching_suite():
    report = verify_semisimple_branching(7, classify_regime(7, INF))
    assert report.passed
    report = verify_semisimple_branching(5, classify_regime(5, 16))
    assert report.passed
    with pytest.raises(NotSemisimpleError):
        verify_semisimple_branching(5, classify_regime(5, 4))


def test_semisimple_branching_small_case():
    report = verify_semisimple_branching(2, classify_regime(2, INF))
    assert report.passed and report.cases == 4


def test_uniqueness_and_distinctness_suites():
    for e, n in ((4, 8), (INF, 7), (2, 4)):
        report = verify_uniqueness_and_distinctness(n, classify_regime(n, e))
        assert report.passed, report.failures[:3]


def test_regime_a_decoupling_suites():
    for l in (2, 3):
        report = verify_regime_a_decoupling(8, l)
        assert report.passed, report.failures[:3]
    report = verify_regime_a_decoupling(6, INF)
    assert report.passed
    # with an infinite modulus every level is the full set of bipartitions
    lattice = build_lattice(6, regime_a_params(INF))
    for m in range(7):
        assert set(lattice.levels[m]) == set(enumerate_bipartitions(m))


def test_level1_calibration_suite():
    for e in (2, 3, 4):
        report = verify_level1_calibration(10, e)
        assert report.passed


@given(bipartitions(max_size=8))
@settings(max_examples=40)
def test_dimension_positive_and_split_halves_are_integral(bp):
    dim = bipartition_dimension(bp)
    assert dim >= 1
    if bp[0] == bp[1] and bp[0]:
        assert dim % 2 == 0
