"""Command line front end.

Commands: lattice | labels | branch | involution | dims | verify.
Exit codes: 0 success or suite pass, 1 runtime or suite failure, 2 usage
error, 3 domain error (input bipartition not Kleshchev at the given
parameters).  The derived regime is echoed in every text header so it is
always visible which side of the parameter split applies.
"""

from __future__ import annotations

import argparse
import sys

from . import io as dio
from .core import (
    CrystalParams,
    INF,
    REGIME_B,
    bipartition_size,
    classify_regime,
    format_bipartition,
    format_node,
    parse_bipartition,
)
from .crystal import Lattice, build_lattice, require_member
from .dmod import (
    SPLIT,
    IrreducibleLabel,
    almost_symmetric,
    branching_graph,
    equivalence_classes,
    format_label,
    involution,
    residue_counts,
    socle_restriction,
    unsplit_class,
)
from .errors import (
    InvalidEError,
    NotKleshchevError,
    NotSemisimpleError,
    ParseError,
    ResourceLimitError,
)
from .oracle import (
    bipartition_dimension,
    verify_h_path_independence,
    verify_level1_calibration,
    verify_regime_a_decoupling,
    verify_semisimple_branching,
    verify_uniqueness_and_distinctness,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _e_value(text: str):
    if text == "inf":
        return INF
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}")


def _header(params: CrystalParams, n: int) -> str:
    e_text = "inf" if params.e == INF else str(int(params.e))
    l_text = "inf" if params.l == INF else str(int(params.l))
    return f"# e={e_text} regime={params.regime} l={l_text} n={n}"


def _get_lattice(params: CrystalParams, n: int, use_cache: bool) -> Lattice:
    if use_cache:
        cached = dio.cache_load(params, n)
        if cached is not None:
            return cached
    lattice = build_lattice(n, params)
    if use_cache:
        try:
            dio.cache_store(lattice)
        except OSError as exc:
            print(f"warning: could not write lattice cache: {exc}", file=sys.stderr)
    return lattice


def _parse_bipartition_arg(text: str, n: int):
    bp = parse_bipartition(text)
    if bipartition_size(bp) != n:
        raise ParseError(
            f"bipartition {text!r} has size {bipartition_size(bp)}, expected n={n}"
        )
    return bp


# ---------------------------------------------------------------------------
# commands


def cmd_lattice(args) -> int:
    params = classify_regime(args.n, args.e)
    lattice = _get_lattice(params, args.n, not args.no_cache)
    if args.format == "dot":
        print(dio.emit_dot(lattice), end="")
    elif args.format == "json":
        print(dio.serialize_json(dio.lattice_document(lattice)), end="")
    else:
        print(_header(params, args.n))
        for m, level in enumerate(lattice.levels):
            print(f"level {m}: " + " ".join(format_bipartition(bp) for bp in level))
        for level_edges in lattice.edges:
            for parent, step, child in level_edges:
                label = dio.step_label(step)
                print(
                    f"edge: {format_bipartition(parent)} --{label}--> "
                    f"{format_bipartition(child)}"
                )
    return EXIT_OK


def cmd_labels(args) -> int:
    params = classify_regime(args.n, args.e)
    lattice = _get_lattice(params, args.n, not args.no_cache)
    labels = equivalence_classes(lattice.levels[args.n], params, lattice)
    if args.format == "json":
        print(dio.serialize_json(dio.labels_document(params, args.n, labels)), end="")
    else:
        print(_header(params, args.n))
        for label in labels:
            print(format_label(label))
    return EXIT_OK


def cmd_branch(args) -> int:
    params = classify_regime(args.n, args.e)
    lattice = _get_lattice(params, args.n, not args.no_cache)
    if args.bipartition is None:
        entries = branching_graph(args.n, params, lattice)
    else:
        bp = _parse_bipartition_arg(args.bipartition, args.n)
        require_member(bp, lattice)
        fixed = involution(bp, params, lattice) == bp
        if args.sign is not None and not fixed:
            print(
                f"error: {args.bipartition!r} is not an involution fixed point, "
                "so --sign does not apply",
                file=sys.stderr,
            )
            return EXIT_USAGE
        if fixed:
            sign = args.sign if args.sign is not None else "+"
            label = IrreducibleLabel(SPLIT, bp, sign)
        else:
            label = unsplit_class(bp, params, lattice)
        entries = [socle_restriction(label, params, lattice)]
    if args.format == "json":
        doc = dio.branching_document(params, args.n, entries)
        print(dio.serialize_json(doc), end="")
    elif args.format == "dot":
        print(dio.emit_dot(entries), end="")
    else:
        print(_header(params, args.n))
        for entry in entries:
            print(f"source: {format_label(entry.source)}")
            for summand in entry.summands:
                print(f"  {format_label(summand)}")
    return EXIT_OK


def cmd_involution(args) -> int:
    params = classify_regime(args.n, args.e)
    lattice = _get_lattice(params, args.n, not args.no_cache)
    bp = _parse_bipartition_arg(args.bipartition, args.n)
    image = involution(bp, params, lattice)
    special = almost_symmetric(bp, params, lattice)
    counts = residue_counts(bp, params)
    print(_header(params, args.n))
    print(f"bipartition: {format_bipartition(bp)}")
    print(f"h: {format_bipartition(image)}")
    print(f"fixed: {'yes' if image == bp else 'no'}")
    print(
        "almost-symmetric: "
        + (f"yes, special node {format_node(special)}" if special else "no")
    )
    print("residues: " + " ".join(f"{k}:{v}" for k, v in counts.items()))
    if params.regime == REGIME_B:
        l = int(params.l)
        e = int(params.e)
        balanced = all(counts[k] == counts[(k + l) % e] for k in counts)
        print(f"balanced: {'yes' if balanced else 'no'}")
    return EXIT_OK


def cmd_dims(args) -> int:
    bp = parse_bipartition(args.bipartition)
    print(bipartition_dimension(bp))
    return EXIT_OK


_SUITES = {
    "path-independence": lambda args: verify_h_path_independence(
        args.n, classify_regime(args.n, args.e)
    ),
    "semisimple-branching": lambda args: verify_semisimple_branching(
        args.n, classify_regime(args.n, args.e)
    ),
    "uniqueness-distinctness": lambda args: verify_uniqueness_and_distinctness(
        args.n, classify_regime(args.n, args.e)
    ),
    # these two read --e as the engine parameter l, chosen freely
    "regime-a-decoupling": lambda args: verify_regime_a_decoupling(args.n, args.e),
    "level1-calibration": lambda args: verify_level1_calibration(args.n, args.e),
}


def cmd_verify(args) -> int:
    report = _SUITES[args.suite](args)
    if args.format == "json":
        print(dio.serialize_json(dio.report_document(report)), end="")
    else:
        e_text = "inf" if report.e == INF else str(int(report.e))
        l_text = "inf" if report.l == INF else str(int(report.l))
        print(f"suite: {report.suite}")
        print(f"# e={e_text} regime={report.regime} l={l_text} n={report.n}")
        print(f"cases: {report.cases}")
        print(f"failures: {len(report.failures)}")
        for item, expected, got in report.failures[:50]:
            print(f"  {item}: expected {expected}, got {got}")
        print(f"status: {report.status}")
        print(f"elapsed: {report.elapsed:.2f}s")
    return EXIT_OK if report.passed else EXIT_FAILURE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnbranch",
        description=(
            "Kleshchev bipartitions, good-node crystal operators, the label "
            "involution and socle branching for type-D Hecke algebras."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--e", type=_e_value, required=True, help="quantum characteristic, an integer >= 2 or 'inf'")
        p.add_argument("--n", type=int, required=True, help="total size")
        if formats:
            p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--no-cache", action="store_true", help="skip the lattice cache")

    p = sub.add_parser("lattice", help="print the good lattice up to level n")
    common(p, formats=("text", "json", "dot"))
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("labels", help="print the simple-module labels at level n")
    common(p)
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("branch", help="print socle decompositions of restrictions")
    common(p, formats=("text", "json", "dot"))
    p.add_argument("--bipartition", help="restrict a single label instead of the whole level")
    p.add_argument("--sign", choices=["+", "-"], help="sign for an involution-fixed bipartition")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("involution", help="involution image, fixedness and symmetry data")
    common(p, formats=())
    p.add_argument("--bipartition", required=True)
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("dims", help="number of standard fillings of a bipartition")
    p.add_argument("--bipartition", required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", help="run a brute-force verification suite")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidEError, NotSemisimpleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotKleshchevError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
