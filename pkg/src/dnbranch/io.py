"""Canonical JSON serialization, DOT export and the lattice cache.

Documents share the top-level shape
``{"schema": "dnbranch/1", "e": ..., "regime": ..., "l": ..., "kind": ...,
"data": ...}`` with ``kind`` one of ``lattice``, ``labels``, ``branching``
or ``report``.  Bipartitions are stored in the core text form, an infinite
``e``/``l`` as the string ``"inf"``, and regime-A steps as
``[component, residue]`` pairs.  Serialization is canonical: keys sorted,
no insignificant whitespace, one trailing newline, so semantically equal
documents are byte identical.
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

from .core import (
    CrystalParams,
    INF,
    REGIME_A,
    REGIME_B,
    format_bipartition,
    parse_bipartition,
)
from .crystal import Lattice
from .dmod import IrreducibleLabel, SPLIT, SocleDecomposition, UNSPLIT, format_label
from .errors import ParseError, SchemaMismatchError
from .oracle import VerificationReport

SCHEMA = "dnbranch/1"

KIND_LATTICE = "lattice"
KIND_LABELS = "labels"
KIND_BRANCHING = "branching"
KIND_REPORT = "report"


@dataclass
class Document:
    """A typed payload together with the crystal parameters it was made at."""

    params: CrystalParams
    kind: str
    data: object


# ---------------------------------------------------------------------------
# encoding helpers


def _extended_to_json(value):
    return "inf" if value == INF else int(value)


def _extended_from_json(value):
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise SchemaMismatchError(f"expected an integer or 'inf', got {value!r}")


def _step_to_json(step):
    return list(step) if isinstance(step, tuple) else step

def _step_from_json(value):
    if isinstance(value, list):
        if len(value) != 2 or not all(isinstance(v, int) for v in value):
            raise SchemaMismatchError(f"malformed step {value!r}")
        return (value[0], value[1])
    if isinstance(value, int):
        return value
    raise SchemaMismatchError(f"malformed step {value!r}")


def _label_to_json(label: IrreducibleLabel):
    out = {"kind": label.kind, "rep": format_bipartition(label.rep)}
    if label.kind == SPLIT:
        out["sign"] = label.sign
    return out


def _label_from_json(value) -> IrreducibleLabel:
    if not isinstance(value, dict) or "kind" not in value or "rep" not in value:
        raise SchemaMismatchError(f"malformed label {value!r}")
    kind = value["kind"]
    rep = parse_bipartition(value["rep"])
    if kind == UNSPLIT:
        return IrreducibleLabel(UNSPLIT, rep)
    if kind == SPLIT:
        if value.get("sign") not in ("+", "-"):
            raise SchemaMismatchError(f"split label needs a sign: {value!r}")
        return IrreducibleLabel(SPLIT, rep, value["sign"])
    raise SchemaMismatchError(f"unknown label kind {kind!r}")


def _params_from_header(obj) -> CrystalParams:
    e = _extended_from_json(obj["e"])
    l = _extended_from_json(obj["l"])
    regime = obj["regime"]
    if regime == REGIME_B:
        return CrystalParams(e=e, regime=REGIME_B, l=l, multicharge=(0, int(l)))
    if regime == REGIME_A:
        return CrystalParams(e=e, regime=REGIME_A, l=l)
    raise SchemaMismatchError(f"unknown regime {regime!r}")


# ---------------------------------------------------------------------------
# payload encoders


def _lattice_data(lattice: Lattice):
    return {
        "n": lattice.n,
        "levels": [
            [format_bipartition(bp) for bp in level] for level in lattice.levels
        ],
        "edges": [
            [
                [format_bipartition(parent), _step_to_json(step), format_bipartition(child)]
                for parent, step, child in level_edges
            ]
            for level_edges in lattice.edges
        ],
    }


def _lattice_from_data(params: CrystalParams, data) -> Lattice:
    try:
        levels = [
            tuple(parse_bipartition(text) for text in level) for level in data["levels"]
        ]
        edges = [
            tuple(
                (parse_bipartition(p), _step_from_json(s), parse_bipartition(c))
                for p, s, c in level_edges
            )
            for level_edges in data["edges"]
        ]
        n = data["n"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaMismatchError(f"malformed lattice payload: {exc}") from exc
    if len(levels) != n + 1 or len(edges) != n + 1:
        raise SchemaMismatchError("lattice payload has inconsistent level count")
    return Lattice(params, levels, edges)


def _labels_data(payload):
    return {"n": payload["n"], "labels": [_label_to_json(lbl) for lbl in payload["labels"]]}


def _labels_from_data(data):
    try:
        return {
            "n": int(data["n"]),
            "labels": [_label_from_json(v) for v in data["labels"]],
        }
    except (KeyError, TypeError) as exc:
        raise SchemaMismatchError(f"malformed labels payload: {exc}") from exc


def _branching_data(payload):
    return {
        "n": payload["n"],
        "entries": [
            {
                "source": _label_to_json(entry.source),
                "summands": [_label_to_json(s) for s in entry.summands],
            }
            for entry in payload["entries"]
        ],
    }


def _branching_from_data(data):
    try:
        entries = [
            SocleDecomposition(
                _label_from_json(entry["source"]),
                tuple(_label_from_json(s) for s in entry["summands"]),
            )
            for entry in data["entries"]
        ]
        return {"n": int(data["n"]), "entries": entries}
    except (KeyError, TypeError) as exc:
        raise SchemaMismatchError(f"malformed branching payload: {exc}") from exc


def _report_data(report: VerificationReport):
    return {
        "suite": report.suite,
        "n": report.n,
        "cases": report.cases,
        "failures": [list(f) for f in report.failures],
        "elapsed": report.elapsed,
        "truncated": report.truncated,
        "status": report.status,
    }


def _report_from_data(params: CrystalParams, data) -> VerificationReport:
    try:
        return VerificationReport(
            suite=data["suite"],
            e=params.e,
            regime=params.regime,
            l=params.l,
            n=int(data["n"]),
            cases=int(data["cases"]),
            failures=[tuple(f) for f in data["failures"]],
            elapsed=float(data["elapsed"]),
            truncated=bool(data["truncated"]),
        )
    except (KeyError, TypeError) as exc:
        raise SchemaMismatchError(f"malformed report payload: {exc}") from exc


# ---------------------------------------------------------------------------
# documents


def lattice_document(lattice: Lattice) -> Document:
    return Document(lattice.params, KIND_LATTICE, lattice)

def labels_document(params: CrystalParams, n: int, labels) -> Document:
    return Document(params, KIND_LABELS, {"n": n, "labels": list(labels)})

def branching_document(params: CrystalParams, n: int, entries) -> Document:
    return Document(params, KIND_BRANCHING, {"n": n, "entries": list(entries)})

def report_document(report: VerificationReport) -> Document:
    params = CrystalParams(
        e=report.e,
        regime=report.regime,
        l=report.l,
        multicharge=(0, int(report.l)) if report.regime == REGIME_B else (0, 0),
    )
    return Document(params, KIND_REPORT, report)


def serialize_json(doc: Document) -> str:
    """Canonical text of a document: sorted keys, compact, newline terminated."""
    if doc.kind == KIND_LATTICE:
        data = _lattice_data(doc.data)
    elif doc.kind == KIND_LABELS:
        data = _labels_data(doc.data)
    elif doc.kind == KIND_BRANCHING:
        data = _branching_data(doc.data)
    elif doc.kind == KIND_REPORT:
        data = _report_data(doc.data)
    else:
        raise ValueError(f"unknown document kind {doc.kind!r}")
    obj = {
        "schema": SCHEMA,
        "e": _extended_to_json(doc.params.e),
        "regime": doc.params.regime,
        "l": _extended_to_json(doc.params.l),
        "kind": doc.kind,
        "data": data,
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_json(text: str) -> Document:
    """Parse a canonical document, rejecting unknown schemas and shapes."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.colno) from exc
    if not isinstance(obj, dict) or obj.get("schema") != SCHEMA:
        raise SchemaMismatchError(
            f"expected schema {SCHEMA!r}, got {obj.get('schema')!r}"
            if isinstance(obj, dict)
            else "top level is not an object"
        )
    for key in ("e", "regime", "l", "kind", "data"):
        if key not in obj:
            raise SchemaMismatchError(f"missing key {key!r}")
    params = _params_from_header(obj)
    kind = obj["kind"]
    data = obj["data"]
    if kind == KIND_LATTICE:
        return Document(params, kind, _lattice_from_data(params, data))
    if kind == KIND_LABELS:
        return Document(params, kind, _labels_from_data(data))
    if kind == KIND_BRANCHING:
        return Document(params, kind, _branching_from_data(data))
    if kind == KIND_REPORT:
        return Document(params, kind, _report_from_data(params, data))
    raise SchemaMismatchError(f"unknown document kind {kind!r}")


# ---------------------------------------------------------------------------
# DOT export


def step_label(step) -> str:
    return f"{step[0]}:{step[1]}" if isinstance(step, tuple) else str(step)


def emit_dot(obj) -> str:
    """Render a lattice or a branching graph in the DOT language."""
    lines = []
    if isinstance(obj, Lattice):
        lines.append("digraph good_lattice {")
        lines.append("  rankdir=BT;")
        for level in obj.levels:
            for bp in level:
                lines.append(f'  "{format_bipartition(bp)}";')
        for level_edges in obj.edges:
            for parent, step, child in level_edges:
                lines.append(
                    f'  "{format_bipartition(parent)}" -> '
                    f'"{format_bipartition(child)}" [label="{step_label(step)}"];'
                )
        lines.append("}")
    else:
        entries = list(obj)
        lines.append("digraph branching {")
        lines.append("  rankdir=BT;")
        names = []
        for entry in entries:
            names.append(format_label(entry.source))
            names.extend(format_label(s) for s in entry.summands)
        for name in sorted(set(names)):
            lines.append(f'  "{name}";')
        for entry in entries:
            for summand in entry.summands:
                lines.append(
                    f'  "{format_label(summand)}" -> "{format_label(entry.source)}";'
                )
        lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# lattice cache


def default_cache_dir() -> Path:
    env = os.environ.get("DNBRANCH_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "dnbranch"


def _cache_path(cache_dir: Path, params: CrystalParams) -> Path:
    e_text = "inf" if params.e == INF else str(int(params.e))
    return cache_dir / f"lattice-e{e_text}-{params.regime}.json"


def cache_store(lattice: Lattice, cache_dir: Path | None = None) -> Path:
    """Atomically persist a lattice, keyed by (e, regime)."""
    cache_dir = cache_dir or default_cache_dir()
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _cache_path(cache_dir, lattice.params)
    text = serialize_json(lattice_document(lattice))
    fd, tmp_name = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def cache_load(
    params: CrystalParams, n: int, cache_dir: Path | None = None
) -> Lattice | None:
    """Load a cached lattice covering at least ``n`` levels.

    A missing or too-shallow cache is a miss (``None``); a corrupted file is
    reported with a warning and treated as a miss; genuine I/O failures
    propagate.
    """
    cache_dir = cache_dir or default_cache_dir()
    path = _cache_path(cache_dir, params)
    if not path.exists():
        return None
    text = path.read_text()
    try:
        doc = parse_json(text)
    except (ParseError, SchemaMismatchError) as exc:
        warnings.warn(f"ignoring corrupted lattice cache {path}: {exc}")
        return None
    if doc.kind != KIND_LATTICE or doc.params != params:
        warnings.warn(f"ignoring mismatched lattice cache {path}")
        return None
    lattice = doc.data
    if lattice.n < n:
        return None
    if lattice.n == n:
        return lattice
    return Lattice(params, lattice.levels[: n + 1], lattice.edges[: n + 1])
