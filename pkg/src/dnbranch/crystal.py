"""Good-node signature rule, crystal operators, lattice generation and paths.

The signature rule, spelled out once and enforced by the calibration suites:

* list the addable and removable cells of a fixed residue in reading order,
  component 1 before component 2, rows top to bottom;
* repeatedly delete a removable entry immediately followed by an addable
  one; the survivors always look like ``A...A R...R``;
* the good removable cell is the leftmost surviving ``R``, the good addable
  cell the rightmost surviving ``A``.

In regime B the whole bipartition carries one signature per residue in
``Z/eZ``.  In regime A the rule is applied to each component separately, so
crystal operators are indexed by a *step* ``(component, residue)`` instead
of a bare residue.  Lattice edge labels and path entries use the same step
encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Bipartition,
    CrystalParams,
    EMPTY_BIPARTITION,
    Node,
    Partition,
    REGIME_A,
    REGIME_B,
    add_node,
    addable_nodes,
    bipartition_size,
    format_bipartition,
    regime_a_params,
    remove_node,
    removable_nodes,
    residue,
)
from .errors import NotKleshchevError, ResourceLimitError

ADDABLE = "A"
REMOVABLE = "R"

# residue (regime B) or (component, residue) (regime A)
Step = int | tuple[int, int]
Path = tuple[Step, ...]

DEFAULT_VERTEX_BUDGET = 5_000_000


@dataclass(frozen=True)
class Signature:
    """Residue word of marked cells, before and after cancellation.

    ``reduced`` never has a removable entry directly before an addable one;
    ``eps`` counts surviving removable cells, ``phi`` surviving addable ones.
    """

    residue: int
    entries: tuple[tuple[Node, str], ...]
    reduced: tuple[tuple[Node, str], ...]
    eps: int
    phi: int


def _reduce(entries: tuple[tuple[Node, str], ...]) -> tuple[tuple[Node, str], ...]:
    stack: list[tuple[Node, str]] = []
    for entry in entries:
        if entry[1] == ADDABLE and stack and stack[-1][1] == REMOVABLE:
            stack.pop()
        else:
            stack.append(entry)
    for k in range(len(stack) - 1):
        assert not (stack[k][1] == REMOVABLE and stack[k + 1][1] == ADDABLE), (
            "reduced signature is not of the shape A...A R...R"
        )
    return tuple(stack)


def i_signature(
    bp: Bipartition, i: int, params: CrystalParams, component: int | None = None
) -> Signature:
    """Signature of residue ``i``.

    Regime B reads the whole bipartition; regime A requires ``component``
    because the rule there never mixes the two components.
    """
    if params.regime == REGIME_A:
        if component not in (1, 2):
            raise ValueError("regime A signatures are computed per component")
        components = (component,)
    else:
        components = (1, 2) if component is None else (component,)
    marked = [(node, REMOVABLE) for node in removable_nodes(bp)] + [
        (node, ADDABLE) for node in addable_nodes(bp)
    ]
    entries = tuple(
        sorted(
            (
                (node, mark)
                for node, mark in marked
                if node.component in components and residue(node, params) == i
            ),
            key=lambda entry: (entry[0].component, entry[0].row, entry[0].col),
        )
    )
    reduced = _reduce(entries)
    eps = sum(1 for _, mark in reduced if mark == REMOVABLE)
    return Signature(i, entries, reduced, eps=eps, phi=len(reduced) - eps)


def _signature_for_step(bp: Bipartition, step, params: CrystalParams) -> Signature:
    if params.regime == REGIME_B:
        if not isinstance(step, int):
            raise ValueError(f"regime B steps are residues, got {step!r}")
        return i_signature(bp, step, params)
    component, i = step
    return i_signature(bp, i, params, component=component)


def good_removable(bp: Bipartition, step, params: CrystalParams) -> Node | None:
    """Leftmost surviving removable cell of the step's signature, if any."""
    for node, mark in _signature_for_step(bp, step, params).reduced:
        if mark == REMOVABLE:
            return node
    return None


def good_addable(bp: Bipartition, step, params: CrystalParams) -> Node | None:
    """Rightmost surviving addable cell of the step's signature, if any."""
    best = None
    for node, mark in _signature_for_step(bp, step, params).reduced:
        if mark == ADDABLE:
            best = node
    return best


def e_tilde(bp: Bipartition, step, params: CrystalParams) -> Bipartition | None:
    """Remove the good removable cell of ``step``; ``None`` when absent."""
    node = good_removable(bp, step, params)
    return None if node is None else remove_node(bp, node)


def f_tilde(bp: Bipartition, step, params: CrystalParams) -> Bipartition | None:
    """Add the good addable cell of ``step``; ``None`` when absent."""
    node = good_addable(bp, step, params)
    return None if node is None else add_node(bp, node)


def _removal_steps(bp: Bipartition, params: CrystalParams) -> list:
    if params.regime == REGIME_B:
        return sorted({residue(node, params) for node in removable_nodes(bp)})
    return sorted({(node.component, residue(node, params)) for node in removable_nodes(bp)})


def _addition_steps(bp: Bipartition, params: CrystalParams) -> list:
    if params.regime == REGIME_B:
        return sorted({residue(node, params) for node in addable_nodes(bp)})
    return sorted({(node.component, residue(node, params)) for node in addable_nodes(bp)})


def good_nodes(bp: Bipartition, params: CrystalParams) -> list[tuple[Node, Step]]:
    """All good removable cells with their steps, in ascending step order.

    At most one cell per residue class (regime B) or per
    (component, residue) pair (regime A).
    """
    out = []
    for step in _removal_steps(bp, params):
        node = good_removable(bp, step, params)
        if node is not None:
            out.append((node, step))
    return out


# ---------------------------------------------------------------------------
# lattice


def _step_sort_key(step):
    return step if isinstance(step, tuple) else (step,)


class Lattice:
    """Levels 0..n of the good lattice with labeled covering edges.

    ``levels[m]`` is the tuple of reachable bipartitions of ``m`` in the
    canonical total order; ``edges[m]`` holds the triples
    ``(parent, step, child)`` from level ``m - 1`` to level ``m`` sorted by
    ``(parent, step)``.  Construction order is deterministic, so two builds
    at equal parameters compare equal.
    """

    def __init__(self, params: CrystalParams, levels, edges):
        self.params = params
        self.levels = tuple(tuple(level) for level in levels)
        self.edges = tuple(tuple(level_edges) for level_edges in edges)
        self._level_of = {
            bp: m for m, level in enumerate(self.levels) for bp in level
        }
        parents: dict = {bp: [] for level in self.levels for bp in level}
        children: dict = {bp: [] for level in self.levels for bp in level}
        for level_edges in self.edges:
            for parent, step, child in level_edges:
                parents[child].append((parent, step))
                children[parent].append((step, child))
        self._parents = {bp: tuple(v) for bp, v in parents.items()}
        self._children = {bp: tuple(v) for bp, v in children.items()}
        self._involution_cache: dict = {}

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    def __contains__(self, bp: Bipartition) -> bool:
        return bp in self._level_of

    def level_of(self, bp: Bipartition) -> int | None:
        return self._level_of.get(bp)

    def parents(self, bp: Bipartition):
        return self._parents[bp]

    def children(self, bp: Bipartition):
        return self._children[bp]

    def vertex_count(self) -> int:
        return len(self._level_of)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.params == other.params
            and self.levels == other.levels
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return (
            f"Lattice(e={self.params.e}, regime={self.params.regime}, "
            f"n={self.n}, vertices={self.vertex_count()})"
        )


def build_lattice(
    n: int, params: CrystalParams, max_vertices: int = DEFAULT_VERTEX_BUDGET
) -> Lattice:
    """Breadth-first good additions from the empty bipartition up to level ``n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    levels = [(EMPTY_BIPARTITION,)]
    edges: list[tuple] = [()]
    total = 1
    for _ in range(n):
        seen = set()
        level_edges = []
        for parent in levels[-1]:
            for step in _addition_steps(parent, params):
                child = f_tilde(parent, step, params)
                if child is None:
                    continue
                level_edges.append((parent, step, child))
                seen.add(child)
        total += len(seen)
        if total > max_vertices:
            raise ResourceLimitError(
                f"lattice exceeds the vertex budget of {max_vertices}"
            )
        levels.append(tuple(sorted(seen)))
        level_edges.sort(key=lambda edge: (edge[0], _step_sort_key(edge[1]), edge[2]))
        edges.append(tuple(level_edges))
    return Lattice(params, levels, edges)


def require_member(bp: Bipartition, lattice: Lattice) -> None:
    """Raise ``NotKleshchevError`` unless ``bp`` is a lattice vertex."""
    m = bipartition_size(bp)
    if m > lattice.n:
        raise ValueError(
            f"lattice only covers sizes up to {lattice.n}, got size {m}"
        )
    if lattice.level_of(bp) != m:
        raise NotKleshchevError(
            f"{format_bipartition(bp)} is not a Kleshchev bipartition at these parameters"
        )


def canonical_path(bp: Bipartition, params: CrystalParams, lattice: Lattice):
    """Addition-order step sequence of the canonical peel of ``bp``.

    Peels by the smallest step with a good removable cell at every stage;
    the returned sequence replays from the empty bipartition back to ``bp``.
    """
    require_member(bp, lattice)
    steps = []
    current = bp
    while current != EMPTY_BIPARTITION:
        good = good_nodes(current, params)
        if not good:
            # membership was checked, so stranding means the engine is wrong
            raise NotKleshchevError(
                f"peel stranded at {format_bipartition(current)}"
            )
        node, step = good[0]
        steps.append(step)
        current = remove_node(current, node)
    steps.reverse()
    return tuple(steps)


def replay_path(path, params: CrystalParams) -> Bipartition | None:
    """Fold the step sequence from the empty bipartition; ``None`` if it breaks."""
    current = EMPTY_BIPARTITION
    for step in path:
        current = f_tilde(current, step, params)
        if current is None:
            return None
    return current


def shift_path(path, params: CrystalParams):
    """Shift every residue of a regime-B path by ``l`` inside ``Z/eZ``."""
    if params.regime != REGIME_B:
        raise ValueError("path shifting is only defined in regime B")
    return tuple((step + params.l) % params.e for step in path)


# ---------------------------------------------------------------------------
# single-partition mode (calibration)


def partition_i_signature(parts: Partition, i: int, l: int | float) -> Signature:
    """Signature of a bare partition: residues ``col - row`` mod ``l``, offset 0."""
    return i_signature((parts, ()), i, regime_a_params(l), component=1)


def partition_good_removable(parts: Partition, i: int, l: int | float) -> Node | None:
    return good_removable((parts, ()), (1, i), regime_a_params(l))


def partition_good_addable(parts: Partition, i: int, l: int | float) -> Node | None:
    return good_addable((parts, ()), (1, i), regime_a_params(l))


def partition_e_tilde(parts: Partition, i: int, l: int | float) -> Partition | None:
    out = e_tilde((parts, ()), (1, i), regime_a_params(l))
    return None if out is None else out[0]


def partition_f_tilde(parts: Partition, i: int, l: int | float) -> Partition | None:
    out = f_tilde((parts, ()), (1, i), regime_a_params(l))
    return None if out is None else out[0]


def partition_crystal_levels(n: int, l: int | float) -> list[tuple[Partition, ...]]:
    """Levels of the single-partition crystal generated by good additions."""
    params = regime_a_params(l)
    levels: list[tuple[Partition, ...]] = [((),)]
    for _ in range(n):
        seen = set()
        for parts in levels[-1]:
            for step in _addition_steps((parts, ()), params):
                if step[0] != 1:
                    continue
                child = partition_f_tilde(parts, step[1], l)
                if child is not None:
                    seen.add(child)
        levels.append(tuple(sorted(seen)))
    return levels
