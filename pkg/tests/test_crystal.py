import pytest
from hypothesis import given, settings

from conftest import partitions
from dnbranch.core import (
    EMPTY_BIPARTITION,
    INF,
    Node,
    classify_regime,
    is_l_restricted,
    regime_a_params,
    remove_node,
)
from dnbranch.crystal import (
    ADDABLE,
    REMOVABLE,
    build_lattice,
    canonical_path,
    e_tilde,
    f_tilde,
    good_addable,
    good_nodes,
    good_removable,
    i_signature,
    partition_crystal_levels,
    partition_good_addable,
    partition_good_removable,
    partition_i_signature,
    replay_path,
    shift_path,
)
from dnbranch.errors import NotKleshchevError, ResourceLimitError
from dnbranch.oracle import enumerate_bipartitions, enumerate_partitions


def test_partition_signature_examples():
    sig = partition_i_signature((1,), 1, 2)
    assert sig.entries == ((Node(1, 1, 2), ADDABLE), (Node(1, 2, 1), ADDABLE))
    assert sig.reduced == sig.entries
    assert (sig.phi, sig.eps) == (2, 0)

    sig = partition_i_signature((1, 1), 1, 2)
    assert sig.entries == ((Node(1, 1, 2), ADDABLE), (Node(1, 2, 1), REMOVABLE))
    assert sig.reduced == sig.entries
    assert (sig.phi, sig.eps) == (1, 1)


def test_signature_of_empty_bipartition():
    params = classify_regime(5, 4)
    for i in range(4):
        sig = i_signature(EMPTY_BIPARTITION, i, params)
        expected = {0: [Node(1, 1, 1)], 2: [Node(2, 1, 1)]}.get(i, [])
        assert [node for node, _ in sig.entries] == expected
        assert all(mark == ADDABLE for _, mark in sig.entries)


def test_signature_cancellation():
    # removable in component 1 directly before an addable in component 2
    params = classify_regime(4, 4)
    sig = i_signature(((1,), (1, 1)), 0, params)
    assert [(n, m) for n, m in sig.entries] == [
        (Node(1, 1, 1), REMOVABLE),
        (Node(2, 3, 1), ADDABLE),
    ]
    assert sig.reduced == ()
    assert (sig.eps, sig.phi) == (0, 0)


def test_signature_requires_component_in_regime_a():
    params = classify_regime(3, INF)
    with pytest.raises(ValueError):
        i_signature(((1,), ()), 0, params)
    sig = i_signature(((1,), ()), 0, params, component=1)
    assert sig.eps == 1


def test_good_nodes_partition_level():
    assert partition_good_addable((1,), 1, 2) == Node(1, 2, 1)
    assert partition_good_removable((1, 1), 1, 2) == Node(1, 2, 1)
    assert partition_good_removable((), 0, 2) is None


def test_good_nodes_examples():
    params = classify_regime(5, INF)
    assert good_removable(EMPTY_BIPARTITION, (1, 0), params) is None
    # with an infinite modulus every removable cell is good
    for bp in [((2, 1), (1, 1)), ((3, 1), (2,)), ((2, 2), (1, 1, 1))]:
        nodes = {node for node, _ in good_nodes(bp, params)}
        from dnbranch.core import removable_nodes

        assert nodes == set(removable_nodes(bp))
    assert len(good_nodes(((2, 1), (1, 1)), params)) == 3


def test_good_nodes_example_regime_b():
    params = classify_regime(5, 4)
    nodes = good_nodes(((1,), (2, 2)), params)
    assert nodes == [(Node(2, 2, 2), 2)]


def test_crystal_operators_are_mutually_inverse_exhaustively(lattice_e4_n6):
    params, lattice = lattice_e4_n6
    for level in lattice.levels:
        for bp in level:
            for i in range(4):
                up = f_tilde(bp, i, params)
                if up is not None:
                    assert e_tilde(up, i, params) == bp
                down = e_tilde(bp, i, params)
                if down is not None:
                    assert f_tilde(down, i, params) == bp


def test_eps_phi_bookkeeping(lattice_e4_n6):
    params, lattice = lattice_e4_n6
    for level in lattice.levels[:-1]:
        for bp in level:
            for i in range(4):
                before = i_signature(bp, i, params)
                up = f_tilde(bp, i, params)
                if up is None:
                    assert before.phi == 0
                    continue
                after = i_signature(up, i, params)
                assert after.eps == before.eps + 1
                assert after.phi == before.phi - 1


def test_build_lattice_levels_regime_a():
    params = classify_regime(2, INF)
    lattice = build_lattice(2, params)
    assert len(lattice.levels[2]) == 5

    params2 = regime_a_params(2)
    lattice2 = build_lattice(2, params2)
    assert set(lattice2.levels[2]) == {((1, 1), ()), ((1,), (1,)), ((), (1, 1))}


def test_build_lattice_example_vertices_regime_b():
    params = classify_regime(5, 4)
    lattice = build_lattice(5, params)
    assert ((1,), (2, 2)) in lattice
    assert ((2,), (1, 1, 1)) in lattice
    assert lattice.level_of(((1,), (2, 2))) == 5


def test_build_lattice_is_deterministic():
    params = classify_regime(5, 4)
    first = build_lattice(5, params)
    second = build_lattice(5, params)
    assert first == second
    assert first.levels == second.levels and first.edges == second.edges


def test_build_lattice_vertex_budget():
    params = classify_regime(6, INF)
    with pytest.raises(ResourceLimitError):
        build_lattice(6, params, max_vertices=10)


def test_canonical_path_examples():
    params = classify_regime(5, 4)
    lattice = build_lattice(5, params)
    assert canonical_path(EMPTY_BIPARTITION, params, lattice) == ()
    assert canonical_path(((1,), ()), params, lattice) == (0,)
    assert canonical_path(((), (1,)), params, lattice) == (2,)
    assert canonical_path(((1,), (2, 2)), params, lattice) == (2, 0, 3, 1, 2)


def test_canonical_path_rejects_non_members():
    params = classify_regime(3, 2)
    lattice = build_lattice(3, params)
    with pytest.raises(NotKleshchevError):
        canonical_path(((1, 1), ()), params, lattice)
    with pytest.raises(ValueError):
        canonical_path(((4, 4), (4,)), params, lattice)


def test_replay_inverts_canonical_path(lattice_e4_n6):
    params, lattice = lattice_e4_n6
    for level in lattice.levels:
        for bp in level:
            assert replay_path(canonical_path(bp, params, lattice), params) == bp


def test_replay_path_edge_cases():
    params = classify_regime(5, 4)
    assert replay_path((), params) == EMPTY_BIPARTITION
    # brute force: the second landing spot of residue 0 has no addable cell
    sig = i_signature(((1,), ()), 0, params)
    assert sig.phi == 0
    assert replay_path((0, 0), params) is None


def test_shift_symmetry_on_canonical_paths(lattice_e4_n6):
    params, lattice = lattice_e4_n6
    for level in lattice.levels:
        for bp in level:
            shifted = shift_path(canonical_path(bp, params, lattice), params)
            assert replay_path(shifted, params) is not None


def test_shift_path_rejected_in_regime_a():
    params = classify_regime(4, INF)
    with pytest.raises(ValueError):
        shift_path((0, 1), params)


def test_peel_success_equals_membership():
    # greedy good peeling succeeds exactly on lattice vertices
    params = classify_regime(5, 4)
    lattice = build_lattice(5, params)
    for m in range(6):
        for bp in enumerate_bipartitions(m):
            current = bp
            while current != EMPTY_BIPARTITION:
                good = good_nodes(current, params)
                if not good:
                    break
                current = remove_node(current, good[0][0])
            assert (current == EMPTY_BIPARTITION) == (bp in lattice)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_level1_calibration(e):
    levels = partition_crystal_levels(10, e)
    for m in range(11):
        expected = {p for p in enumerate_partitions(m) if is_l_restricted(p, e)}
        assert set(levels[m]) == expected


def test_regime_a_good_nodes_decouple():
    params = regime_a_params(2)
    lattice = build_lattice(6, params)
    for level in lattice.levels:
        for bp in level:
            for node, (component, res) in good_nodes(bp, params):
                assert node.component == component
                single = partition_good_removable(bp[component - 1], res, 2)
                assert single is not None
                assert (single.row, single.col) == (node.row, node.col)


@given(partitions(max_size=9))
@settings(max_examples=60)
def test_reduced_signature_shape(parts):
    for e in (2, 3):
        for i in range(e):
            sig = partition_i_signature(parts, i, e)
            marks = [mark for _, mark in sig.reduced]
            assert marks == sorted(marks)  # "A" sorts before "R"
            assert sig.eps == marks.count(REMOVABLE)
            assert sig.phi == marks.count(ADDABLE)


def test_good_picks_leftmost_removable_rightmost_addable():
    # residue-0 word of (2,2,1) at l=2 is A(1,3) R(2,2) R(3,1)
    sig = partition_i_signature((2, 2, 1), 0, 2)
    assert [(n.row, n.col, m) for n, m in sig.entries] == [
        (1, 3, ADDABLE),
        (2, 2, REMOVABLE),
        (3, 1, REMOVABLE),
    ]
    assert partition_good_removable((2, 2, 1), 0, 2) == Node(1, 2, 2)
    assert partition_good_addable((2, 2, 1), 0, 2) == Node(1, 1, 3)
    # the residue-1 word is A(3,2) A(4,1); the rightmost addable wins
    assert partition_good_addable((2, 2, 1), 1, 2) == Node(1, 4, 1)
