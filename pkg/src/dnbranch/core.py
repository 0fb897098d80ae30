"""Partitions, bipartitions, diagram geometry, residues and crystal parameters.

Conventions shared by the whole package:

* a partition is a tuple of weakly decreasing positive integers; ``()`` is
  the empty partition;
* a bipartition is a pair ``(comp1, comp2)`` of partitions whose text form
  writes parts comma separated, components joined by ``|`` and an empty
  component as ``-`` (``"2,1|1,1"``, ``"-|2,2"``, ``"-|-"``);
* a node is a cell address ``(component, row, col)``, everything 1-based;
* the quantum characteristic ``e`` is an integer >= 2 or ``INF``;
* the canonical total order on bipartitions is plain tuple comparison, i.e.
  lexicographic on ``(comp1, comp2)`` with shorter prefixes first.

All values are immutable and all functions are pure, so everything here is
safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .errors import InvalidEError, NotRemovableError, ParseError, SizeMismatchError

INF = math.inf

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]

EMPTY_BIPARTITION: Bipartition = ((), ())

REGIME_A = "A"
REGIME_B = "B"


class Node(NamedTuple):
    """Cell address inside a bipartition diagram."""

    component: int
    row: int
    col: int


class Dominance(Enum):
    EQUAL = "EQUAL"
    GREATER_EQ = "GREATER_EQ"
    LESS_EQ = "LESS_EQ"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class CrystalParams:
    """Crystal parameters derived from the quantum characteristic ``e``.

    Regime ``"B"``: ``e`` is finite and even, ``l = e // 2``, and the two
    components carry residue offsets ``(0, l)`` so the whole bipartition
    lives over the single alphabet ``Z/eZ``.

    Regime ``"A"``: ``l = e`` (possibly ``INF``); residues are computed per
    component as ``col - row`` reduced mod ``l``, with no cross-component
    offset, and crystal operators act on each component independently.
    """

    e: int | float
    regime: str
    l: int | float
    multicharge: tuple[int, int] = (0, 0)


def _check_e(e: int | float) -> None:
    if e == INF:
        return
    if not isinstance(e, int) or isinstance(e, bool) or e < 2:
        raise InvalidEError(
            f"quantum characteristic must be an integer >= 2 or INF, got {e!r}"
        )


def classify_regime(n: int, e: int | float) -> CrystalParams:
    """Derive the crystal parameters governing bipartitions of ``n``.

    ``e`` infinite or odd always gives regime A with ``l = e``.  An even
    ``e`` gives regime B with ``l = e // 2`` once ``e // 2 < n``; for
    ``e // 2 >= n`` no factor ``1 + q**i`` with ``i <= n - 1`` can vanish,
    so the parameters stay in regime A.
    """
    _check_e(e)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if e != INF and e % 2 == 0 and e // 2 < n:
        half = e // 2
        return CrystalParams(e=e, regime=REGIME_B, l=half, multicharge=(0, half))
    return CrystalParams(e=e, regime=REGIME_A, l=e)


def regime_a_params(l: int | float) -> CrystalParams:
    """Componentwise crystal parameters with a directly prescribed ``l``.

    Calibration and cross-check suites pick ``l`` freely instead of deriving
    it from a quantum characteristic via :func:`classify_regime`.
    """
    _check_e(l)
    return CrystalParams(e=l, regime=REGIME_A, l=l)


def residue(node: Node, params: CrystalParams) -> int:
    """Residue of a cell.

    Regime B: ``(col - row + offset) % e`` with component offsets ``(0, l)``.
    Regime A: ``col - row`` reduced mod ``l`` inside the cell's own
    component, or the bare integer content when ``l`` is infinite.
    """
    content = node.col - node.row
    if params.regime == REGIME_B:
        return (content + params.multicharge[node.component - 1]) % params.e
    if params.l == INF:
        return content
    return content % params.l


# ---------------------------------------------------------------------------
# partitions


def is_l_restricted(parts: Partition, l: int | float) -> bool:
    """True when every consecutive difference (last part included) is < ``l``."""
    if l == INF:
        return True
    return all(
        parts[i] - (parts[i + 1] if i + 1 < len(parts) else 0) < l
        for i in range(len(parts))
    )


def _partition_removables(parts: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(1, len(parts) + 1):
        below = parts[r] if r < len(parts) else 0
        if parts[r - 1] > below:
            out.append((r, parts[r - 1]))
    return out


def _partition_addables(parts: Partition) -> list[tuple[int, int]]:
    if not parts:
        return [(1, 1)]
    out = [(1, parts[0] + 1)]
    for r in range(2, len(parts) + 1):
        if parts[r - 1] < parts[r - 2]:
            out.append((r, parts[r - 1] + 1))
    out.append((len(parts) + 1, 1))
    return out


# ---------------------------------------------------------------------------
# bipartitions


def bipartition_size(bp: Bipartition) -> int:
    return sum(bp[0]) + sum(bp[1])


def hat(bp: Bipartition) -> Bipartition:
    """Swap the two components; an involution on bipartitions."""
    return (bp[1], bp[0])


def nodes_of(bp: Bipartition) -> Iterator[Node]:
    """All cells of the diagram, component 1 first, rows top to bottom."""
    for component in (1, 2):
        parts = bp[component - 1]
        for row, length in enumerate(parts, start=1):
            for col in range(1, length + 1):
                yield Node(component, row, col)


def removable_nodes(bp: Bipartition) -> list[Node]:
    """Cells whose removal leaves a diagram, ordered by (component, row)."""
    return [
        Node(component, row, col)
        for component in (1, 2)
        for row, col in _partition_removables(bp[component - 1])
    ]


def addable_nodes(bp: Bipartition) -> list[Node]:
    """Concave corner positions where a cell fits, ordered by (component, row)."""
    return [
        Node(component, row, col)
        for component in (1, 2)
        for row, col in _partition_addables(bp[component - 1])
    ]


def remove_node(bp: Bipartition, node: Node) -> Bipartition:
    """Diagram with ``node`` removed; raises ``NotRemovableError`` otherwise."""
    parts = bp[node.component - 1]
    r = node.row
    ok = (
        1 <= r <= len(parts)
        and parts[r - 1] == node.col
        and (r == len(parts) or parts[r] < node.col)
    )
    if not ok:
        raise NotRemovableError(
            f"{node} is not a removable node of {format_bipartition(bp)}"
        )
    new = parts[: r - 1] + ((node.col - 1,) if node.col > 1 else ()) + parts[r:]
    return (new, bp[1]) if node.component == 1 else (bp[0], new)


def add_node(bp: Bipartition, node: Node) -> Bipartition:
    """Diagram with a cell added at ``node``; the position must be addable."""
    parts = bp[node.component - 1]
    r = node.row
    if r == len(parts) + 1 and node.col == 1:
        new = parts + (1,)
    elif (
        1 <= r <= len(parts)
        and node.col == parts[r - 1] + 1
        and (r == 1 or parts[r - 2] >= node.col)
    ):
        new = parts[: r - 1] + (node.col,) + parts[r:]
    else:
        raise ValueError(f"{node} is not an addable position of {format_bipartition(bp)}")
    return (new, bp[1]) if node.component == 1 else (bp[0], new)


# ---------------------------------------------------------------------------
# dominance order


def _prefix_dominates(lam: Bipartition, mu: Bipartition) -> bool:
    acc_l = acc_m = 0
    for k in range(max(len(lam[0]), len(mu[0]))):
        acc_l += lam[0][k] if k < len(lam[0]) else 0
        acc_m += mu[0][k] if k < len(mu[0]) else 0
        if acc_l < acc_m:
            return False
    acc_l, acc_m = sum(lam[0]), sum(mu[0])
    for k in range(max(len(lam[1]), len(mu[1]))):
        acc_l += lam[1][k] if k < len(lam[1]) else 0
        acc_m += mu[1][k] if k < len(mu[1]) else 0
        if acc_l < acc_m:
            return False
    return True


def dominance(lam: Bipartition, mu: Bipartition) -> Dominance:
    """Compare two bipartitions of equal size in the dominance order.

    ``lam`` dominates ``mu`` when every prefix sum of ``comp1`` and every
    ``|comp1|``-shifted prefix sum of ``comp2`` is at least as large.
    """
    if bipartition_size(lam) != bipartition_size(mu):
        raise SizeMismatchError(
            f"sizes differ: {bipartition_size(lam)} vs {bipartition_size(mu)}"
        )
    ge = _prefix_dominates(lam, mu)
    le = _prefix_dominates(mu, lam)
    if ge and le:
        return Dominance.EQUAL
    if ge:
        return Dominance.GREATER_EQ
    if le:
        return Dominance.LESS_EQ
    return Dominance.INCOMPARABLE


# ---------------------------------------------------------------------------
# semisimplicity criteria

# With char K != 2 assumed globally, a factor 1 + q**i vanishes exactly when
# e is even and i is congruent to e/2 mod e, and 1 + q + ... + q**(i-1)
# vanishes exactly when e is finite and divides i.


def _no_vanishing_factor(n: int, e: int | float) -> bool:
    if e == INF:
        return True
    if e <= n:
        return False
    if e % 2 == 0 and e // 2 <= n - 1:
        return False
    return True


def is_semisimple_b(n: int, e: int | float) -> bool:
    """Semisimplicity of the rank-``n`` type-B algebra at characteristic ``e``."""
    _check_e(e)
    return _no_vanishing_factor(n, e)


def is_semisimple_d(n: int, e: int | float) -> bool:
    """Semisimplicity of the rank-``n`` type-D algebra at characteristic ``e``.

    Away from characteristic 2 the criterion coincides with the type-B one.
    """
    _check_e(e)
    return _no_vanishing_factor(n, e)


# ---------------------------------------------------------------------------
# text form


def format_partition(parts: Partition) -> str:
    return ",".join(str(p) for p in parts) if parts else "-"


def format_bipartition(bp: Bipartition) -> str:
    return f"{format_partition(bp[0])}|{format_partition(bp[1])}"


def format_node(node: Node) -> str:
    return f"({node.component},{node.row},{node.col})"


def _parse_parts(text: str, offset: int) -> Partition:
    if text == "-":
        return ()
    if not text:
        raise ParseError("empty component (write '-' for an empty partition)", offset)
    parts = []
    col = offset
    for token in text.split(","):
        if not token.strip() or not token.strip().lstrip("+").isdigit():
            raise ParseError(f"expected a positive integer part, got {token!r}", col)
        value = int(token)
        if value < 1:
            raise ParseError(f"parts must be >= 1, got {value}", col)
        if parts and value > parts[-1]:
            raise ParseError("parts must be weakly decreasing", col)
        parts.append(value)
        col += len(token) + 1
    return tuple(parts)


def parse_bipartition(text: str) -> Bipartition:
    """Parse the ``"2,1|1,1"`` text form; errors carry a column position."""
    if text.count("|") != 1:
        raise ParseError("expected exactly one '|' between components", 1)
    left, right = text.split("|")
    return (_parse_parts(left, 1), _parse_parts(right, len(left) + 2))
