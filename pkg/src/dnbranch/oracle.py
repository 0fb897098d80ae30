"""Brute-force verifiers and exact dimension counts.

Every suite here checks the crystal and branching engines against
straight-from-definition recomputations (restricted-partition filters, a
deliberately naive signature scan, exhaustive path enumeration, exact
integer dimension bookkeeping).  The verifiers never share code paths with
the machinery they validate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb, factorial

from .core import (
    Bipartition,
    CrystalParams,
    EMPTY_BIPARTITION,
    INF,
    Partition,
    REGIME_A,
    REGIME_B,
    bipartition_size,
    format_bipartition,
    format_node,
    hat,
    is_l_restricted,
    is_semisimple_d,
    regime_a_params,
    remove_node,
    removable_nodes,
)
from .crystal import (
    Lattice,
    build_lattice,
    good_nodes,
    partition_crystal_levels,
    replay_path,
    shift_path,
)
from .dmod import (
    SPLIT,
    equivalence_classes,
    format_label,
    involution,
    socle_restriction,
)
from .errors import NotSemisimpleError

DEFAULT_PATH_CAP = 100_000


@dataclass
class VerificationReport:
    """Outcome of one verification suite.

    ``failures`` holds ``(input, expected, got)`` text triples; a truncated
    run (path cap hit) is inconclusive rather than passing.
    """

    suite: str
    e: int | float
    regime: str
    l: int | float
    n: int
    cases: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    truncated: bool = False

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.truncated:
            return "inconclusive"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _new_report(suite: str, params: CrystalParams, n: int) -> VerificationReport:
    return VerificationReport(suite, params.e, params.regime, params.l, n)


# ---------------------------------------------------------------------------
# enumeration helpers


def enumerate_partitions(n: int, max_part: int | None = None):
    """All partitions of ``n`` with parts bounded by ``max_part``."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def enumerate_bipartitions(n: int):
    for k in range(n + 1):
        for left in enumerate_partitions(k):
            for right in enumerate_partitions(n - k):
                yield (left, right)


def restricted_bipartitions(n: int, l: int | float) -> set[Bipartition]:
    return {
        bp
        for bp in enumerate_bipartitions(n)
        if is_l_restricted(bp[0], l) and is_l_restricted(bp[1], l)
    }


# ---------------------------------------------------------------------------
# dimensions


def standard_tableaux_count(parts: Partition) -> int:
    """Number of standard fillings of one partition, by the hook formula."""
    if not parts:
        return 1
    conjugate = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conjugate[j] += 1
    numerator = factorial(sum(parts))
    for i, p in enumerate(parts):
        for j in range(p):
            numerator //= p - j + conjugate[j] - i - 1
    return numerator


def bipartition_dimension(bp: Bipartition) -> int:
    """Number of standard fillings of a bipartition, in exact integers."""
    n = bipartition_size(bp)
    return (
        comb(n, sum(bp[0]))
        * standard_tableaux_count(bp[0])
        * standard_tableaux_count(bp[1])
    )


def count_standard_bitableaux(bp: Bipartition) -> int:
    """Explicit enumeration of standard fillings, one removal chain at a time.

    Exponential on purpose; used only to cross-check the closed formula on
    small diagrams.
    """
    if bipartition_size(bp) == 0:
        return 1
    return sum(
        count_standard_bitableaux(remove_node(bp, node))
        for node in removable_nodes(bp)
    )


def _label_dimension(label) -> int:
    dim = bipartition_dimension(label.rep)
    if label.kind == SPLIT:
        assert dim % 2 == 0, f"{format_label(label)} has odd dimension {dim}"
        return dim // 2
    return dim


# ---------------------------------------------------------------------------
# path enumeration


def all_paths(
    bp: Bipartition, params: CrystalParams, lattice: Lattice, cap: int = DEFAULT_PATH_CAP
):
    """Every addition path from the empty bipartition to ``bp``.

    Walks the lattice's parent edges depth first; returns
    ``(paths, truncated)`` where ``truncated`` reports that the cap cut the
    enumeration short.
    """
    paths: list[tuple] = []
    truncated = False

    def walk(vertex, suffix):
        nonlocal truncated
        if len(paths) >= cap:
            truncated = True
            return
        if vertex == EMPTY_BIPARTITION:
            paths.append(tuple(reversed(suffix)))
            return
        for parent, step in lattice.parents(vertex):
            suffix.append(step)
            walk(parent, suffix)
            suffix.pop()

    walk(bp, [])
    return paths, truncated


# ---------------------------------------------------------------------------
# suites


def verify_h_path_independence(
    n: int, params: CrystalParams, cap: int = DEFAULT_PATH_CAP
) -> VerificationReport:
    """Shifted replay of every path ends at the same involution image.

    Also checks that the involution squares to the identity on every level.
    Regime A has no path shift, so only the involution check runs there.
    """
    report = _new_report("path-independence", params, n)
    start = time.perf_counter()
    lattice = build_lattice(n, params)
    for m in range(n + 1):
        for bp in lattice.levels[m]:
            image = involution(bp, params, lattice)
            back = involution(image, params, lattice)
            report.cases += 1
            if back != bp:
                report.failures.append(
                    (format_bipartition(bp), format_bipartition(bp), format_bipartition(back))
                )
            if params.regime != REGIME_B:
                continue
            paths, truncated = all_paths(bp, params, lattice, cap)
            report.truncated = report.truncated or truncated
            for path in paths:
                report.cases += 1
                endpoint = replay_path(shift_path(path, params), params)
                if endpoint != image:
                    report.failures.append(
                        (
                            f"{format_bipartition(bp)} path {list(path)}",
                            format_bipartition(image),
                            "replay failed" if endpoint is None else format_bipartition(endpoint),
                        )
                    )
    report.elapsed = time.perf_counter() - start
    return report


def verify_semisimple_branching(n: int, params: CrystalParams) -> VerificationReport:
    """In the semisimple range the socle is the whole restriction, so the
    summand dimensions must add up to the dimension of the restricted module."""
    if not is_semisimple_d(n, params.e):
        raise NotSemisimpleError(
            f"rank {n} at characteristic {params.e} is not semisimple"
        )
    report = _new_report("semisimple-branching", params, n)
    start = time.perf_counter()
    lattice = build_lattice(n, params)
    for m in range(2, n + 1):
        for label in equivalence_classes(lattice.levels[m], params, lattice):
            decomposition = socle_restriction(label, params, lattice)
            total = sum(_label_dimension(s) for s in decomposition.summands)
            expected = _label_dimension(label)
            report.cases += 1
            if total != expected:
                report.failures.append(
                    (format_label(label), str(expected), str(total))
                )
    report.elapsed = time.perf_counter() - start
    return report


def _removal_fixed(bp, node, params, lattice) -> bool:
    child = remove_node(bp, node)
    return child == involution(child, params, lattice)


def verify_uniqueness_and_distinctness(n: int, params: CrystalParams) -> VerificationReport:
    """Special-node uniqueness and pairwise distinctness of removals.

    For every lattice vertex: at most one good cell has an involution-fixed
    removal; an almost symmetric vertex is never itself fixed, and its other
    removals are pairwise inequivalent (checked against all removable cells
    in regime A, against good cells in regime B); a non-almost-symmetric,
    non-fixed vertex has pairwise inequivalent good removals.
    """
    report = _new_report("uniqueness-distinctness", params, n)
    start = time.perf_counter()
    lattice = build_lattice(n, params)

    def image(child):
        # removals below a merely-removable cell can leave the lattice, where
        # only the regime-A component swap still makes sense
        if params.regime == REGIME_A:
            return hat(child)
        return involution(child, params, lattice)

    for m in range(1, n + 1):
        for bp in lattice.levels[m]:
            good = [node for node, _ in good_nodes(bp, params)]
            special = [node for node in good if _removal_fixed(bp, node, params, lattice)]
            report.cases += 1
            if len(special) > 1:
                report.failures.append(
                    (format_bipartition(bp), "at most one special node", str(len(special)))
                )
                continue
            if len(special) == 1:
                node_a = special[0]
                if bp == involution(bp, params, lattice):
                    report.failures.append(
                        (format_bipartition(bp), "almost symmetric implies not fixed", "fixed")
                    )
                pool = removable_nodes(bp) if params.regime == REGIME_A else good
                for b in pool:
                    for c in pool:
                        if c == node_a:
                            continue
                        report.cases += 1
                        if remove_node(bp, b) == image(remove_node(bp, c)):
                            report.failures.append(
                                (
                                    format_bipartition(bp),
                                    f"removal at {format_node(b)} differs from partner of {format_node(c)}",
                                    "equal",
                                )
                            )
            elif bp != involution(bp, params, lattice):
                for b in good:
                    for c in good:
                        report.cases += 1
                        if remove_node(bp, b) == image(remove_node(bp, c)):
                            report.failures.append(
                                (
                                    format_bipartition(bp),
                                    f"removal at {format_node(b)} differs from partner of {format_node(c)}",
                                    "equal",
                                )
                            )
    report.elapsed = time.perf_counter() - start
    return report


def _reference_partition_good_removables(parts: Partition, l: int | float):
    """Good removable cells of one partition, recomputed from scratch.

    Deliberately separate from the crystal engine: collects marked cells row
    by row, buckets them by residue, and cancels pairs by rescanning the
    whole word instead of using a stack.  Returns ``(residue, (row, col))``
    pairs sorted by residue.
    """
    marked = []
    rows = len(parts)
    for row in range(1, rows + 1):
        below = parts[row] if row < rows else 0
        if parts[row - 1] > below:
            marked.append((row, parts[row - 1], "R"))
    for row in range(1, rows + 2):
        if row == 1:
            col = parts[0] + 1 if rows else 1
        elif row <= rows:
            if parts[row - 1] >= parts[row - 2]:
                continue
            col = parts[row - 1] + 1
        else:
            if rows == 0:
                continue
            col = 1
        marked.append((row, col, "A"))
    marked.sort()
    words: dict = {}
    for row, col, mark in marked:
        res = col - row if l == INF else (col - row) % l
        words.setdefault(res, []).append((row, col, mark))
    out = []
    for res in sorted(words):
        word = list(words[res])
        changed = True
        while changed:
            changed = False
            for k in range(len(word) - 1):
                if word[k][2] == "R" and word[k + 1][2] == "A":
                    del word[k : k + 2]
                    changed = True
                    break
        for row, col, mark in word:
            if mark == "R":
                out.append((res, (row, col)))
                break
    return out


def verify_regime_a_decoupling(n: int, l: int | float) -> VerificationReport:
    """Componentwise engine against restricted pairs and a naive signature scan.

    Level ``m`` of the regime-A lattice must be exactly the pairs of
    ``l``-restricted partitions of total size ``m``, and the engine's good
    cells must match the union of the per-component recomputation.
    """
    params = regime_a_params(l)
    report = _new_report("regime-a-decoupling", params, n)
    start = time.perf_counter()
    lattice = build_lattice(n, params)
    for m in range(n + 1):
        got = set(lattice.levels[m])
        expected = restricted_bipartitions(m, l)
        report.cases += 1
        if got != expected:
            report.failures.append(
                (
                    f"level {m}",
                    f"{len(expected)} restricted pairs",
                    f"{len(got)} vertices, differing by "
                    f"{sorted(map(format_bipartition, got ^ expected))}",
                )
            )
            continue
        for bp in lattice.levels[m]:
            engine = {
                (node.component, step[1], node.row, node.col)
                for node, step in good_nodes(bp, params)
            }
            reference = {
                (component, res, row, col)
                for component in (1, 2)
                for res, (row, col) in _reference_partition_good_removables(
                    bp[component - 1], l
                )
            }
            report.cases += 1
            if engine != reference:
                report.failures.append(
                    (format_bipartition(bp), str(sorted(reference)), str(sorted(engine)))
                )
    report.elapsed = time.perf_counter() - start
    return report


def verify_level1_calibration(n: int, e: int | float) -> VerificationReport:
    """Single-partition crystal levels against the restricted-partition filter."""
    params = regime_a_params(e)
    report = _new_report("level1-calibration", params, n)
    start = time.perf_counter()
    levels = partition_crystal_levels(n, e)
    for m in range(n + 1):
        got = set(levels[m])
        expected = {p for p in enumerate_partitions(m) if is_l_restricted(p, e)}
        report.cases += 1
        if got != expected:
            report.failures.append(
                (f"level {m}", str(sorted(expected)), str(sorted(got)))
            )
    report.elapsed = time.perf_counter() - start
    return report
