"""Crystal combinatorics of Kleshchev bipartitions and type-D socle branching.

The package computes, purely combinatorially: the good lattice of Kleshchev
bipartitions at a given quantum characteristic, the good-node crystal
operators and residue paths, the involution on simple-module labels, the
irreducible labels of the type-D algebras, and the multiplicity-free socle
decompositions of restricted simple modules, together with brute-force
verification oracles for all of it.
"""

from .core import (
    Bipartition,
    CrystalParams,
    Dominance,
    EMPTY_BIPARTITION,
    INF,
    Node,
    Partition,
    REGIME_A,
    REGIME_B,
    addable_nodes,
    add_node,
    bipartition_size,
    classify_regime,
    dominance,
    format_bipartition,
    format_node,
    hat,
    is_l_restricted,
    is_semisimple_b,
    is_semisimple_d,
    parse_bipartition,
    regime_a_params,
    remove_node,
    removable_nodes,
    residue,
)
from .crystal import (
    Lattice,
    Signature,
    build_lattice,
    canonical_path,
    e_tilde,
    f_tilde,
    good_addable,
    good_nodes,
    good_removable,
    i_signature,
    partition_crystal_levels,
    replay_path,
    shift_path,
)
from .dmod import (
    IrreducibleLabel,
    SPLIT,
    SocleDecomposition,
    UNSPLIT,
    almost_symmetric,
    branching_graph,
    equivalence_classes,
    format_label,
    involution,
    residue_counts,
    socle_restriction,
    unsplit_class,
)
from .oracle import (
    VerificationReport,
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
from . import errors, io

__version__ = "0.1.0"
