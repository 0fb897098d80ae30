import pytest

from dnbranch import io as dio
from dnbranch.core import INF, classify_regime, regime_a_params
from dnbranch.crystal import build_lattice
from dnbranch.dmod import branching_graph, equivalence_classes, unsplit_class
from dnbranch.errors import ParseError, SchemaMismatchError
from dnbranch.oracle import verify_level1_calibration


@pytest.fixture(scope="module")
def b4_n5():
    params = classify_regime(5, 4)
    return params, build_lattice(5, params)


def test_lattice_round_trip_is_byte_identical(b4_n5):
    params, lattice = b4_n5
    text = dio.serialize_json(dio.lattice_document(lattice))
    doc = dio.parse_json(text)
    assert doc.kind == dio.KIND_LATTICE
    assert doc.params == params
    assert doc.data == lattice
    assert dio.serialize_json(doc) == text


def test_labels_round_trip(b4_n5):
    params, lattice = b4_n5
    labels = equivalence_classes(lattice.levels[5], params, lattice)
    doc = dio.labels_document(params, 5, labels)
    text = dio.serialize_json(doc)
    parsed = dio.parse_json(text)
    assert parsed == doc
    assert dio.serialize_json(parsed) == text


def test_branching_round_trip_infinite_modulus():
    params = classify_regime(5, INF)
    lattice = build_lattice(5, params)
    entries = [
        e
        for e in branching_graph(5, params, lattice)
        if e.source == unsplit_class(((2, 1), (1, 1)), params, lattice)
    ]
    doc = dio.branching_document(params, 5, entries)
    text = dio.serialize_json(doc)
    assert dio.parse_json(text) == doc
    assert dio.serialize_json(dio.parse_json(text)) == text
    assert '"inf"' in text


def test_report_round_trip():
    report = verify_level1_calibration(4, 3)
    doc = dio.report_document(report)
    text = dio.serialize_json(doc)
    parsed = dio.parse_json(text)
    assert parsed.data == report
    assert dio.serialize_json(parsed) == text


def test_parse_rejections():
    with pytest.raises(SchemaMismatchError):
        dio.parse_json("{}")
    with pytest.raises(SchemaMismatchError):
        dio.parse_json('{"schema":"dnbranch/0","e":4,"regime":"B","l":2,"kind":"labels","data":{}}')
    with pytest.raises(ParseError) as err:
        dio.parse_json("{not json")
    assert err.value.position is not None
    with pytest.raises(SchemaMismatchError):
        dio.parse_json('{"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"mystery","data":{}}')
    with pytest.raises(SchemaMismatchError):
        dio.parse_json('{"schema":"dnbranch/1","e":4,"regime":"B","l":2,"kind":"labels"}')


def test_dot_single_vertex_lattice():
    params = classify_regime(0, 4)
    lattice = build_lattice(0, params)
    dot = dio.emit_dot(lattice)
    assert '"-|-";' in dot
    assert "->" not in dot


def test_dot_counts_match_brute_force():
    # six vertices and six covering edges at l=2, n=2 (the middle vertex
    # has two parents)
    lattice = build_lattice(2, regime_a_params(2))
    dot = dio.emit_dot(lattice)
    vertex_lines = [line for line in dot.splitlines() if line.endswith('";')]
    edge_lines = [line for line in dot.splitlines() if "->" in line]
    assert len(vertex_lines) == 6
    assert len(edge_lines) == 6
    parents = lattice.parents(((1,), (1,)))
    assert len(parents) == 2


def test_dot_edge_labels_regime_b():
    params = classify_regime(2, 4)
    lattice = build_lattice(2, params)
    dot = dio.emit_dot(lattice)
    for line in dot.splitlines():
        if "->" in line:
            assert 'label="' in line


def test_dot_branching(b4_n5):
    params, lattice = b4_n5
    entries = branching_graph(5, params, lattice)
    dot = dio.emit_dot(entries)
    assert dot.startswith("digraph branching")
    assert "label=" not in dot
    # the almost symmetric vertex at level 5 contributes a split pair
    assert '"D+(1|2,1)"' in dot and '"D-(1|2,1)"' in dot


def test_cache_round_trip(tmp_path, b4_n5):
    params, lattice = b4_n5
    path = dio.cache_store(lattice, tmp_path)
    assert path.exists()
    loaded = dio.cache_load(params, 5, tmp_path)
    assert loaded == lattice


def test_cache_miss_on_empty_dir(tmp_path):
    params = classify_regime(5, 4)
    assert dio.cache_load(params, 5, tmp_path) is None


def test_cache_prefix_serves_smaller_n(tmp_path, b4_n5):
    params, lattice = b4_n5
    dio.cache_store(lattice, tmp_path)
    small = dio.cache_load(params, 3, tmp_path)
    assert small is not None and small.n == 3
    assert small == build_lattice(3, params)
    # too-shallow caches are misses
    assert dio.cache_load(params, 7, tmp_path) is None


def test_cache_ignores_corruption_with_warning(tmp_path, b4_n5):
    params, lattice = b4_n5
    path = dio.cache_store(lattice, tmp_path)
    path.write_text("{broken")
    with pytest.warns(UserWarning):
        assert dio.cache_load(params, 5, tmp_path) is None
    path.write_text('{"schema":"other"}')
    with pytest.warns(UserWarning):
        assert dio.cache_load(params, 5, tmp_path) is None


def test_cache_respects_environment_variable(tmp_path, monkeypatch, b4_n5):
    params, lattice = b4_n5
    monkeypatch.setenv("DNBRANCH_CACHE", str(tmp_path))
    dio.cache_store(lattice)
    assert dio.cache_load(params, 5) == lattice
