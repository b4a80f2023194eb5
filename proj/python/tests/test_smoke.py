"""End-to-end smoke tests for the python bindings."""

import json
import os

import pytest

import cocseg

DATA = os.environ.get("COCSEG_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data"))


def tourism_context():
    objects = ["apartment", "car", "motor-bike", "excursion", "trip", "hotel"]
    attributes = ["bookable", "rentable", "driveable", "rideable", "joinable"]
    incidence = [
        [1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0],
        [1, 1, 1, 1, 0],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 0, 0],
    ]
    return cocseg.FormalContext(objects, attributes, [[bool(x) for x in row] for row in incidence])


def test_concept_enumeration():
    ctx = tourism_context()
    concepts = cocseg.enumerate_concepts(ctx)
    assert len(concepts) == 6
    extents = {tuple(c.extent) for c in concepts}
    assert tuple() in extents
    assert tuple(range(6)) in extents
    assert cocseg.derive_attrs(ctx, [0]) == [0, 1]
    assert cocseg.derive_objs(ctx, [0, 4]) == [3, 4]
    assert cocseg.is_concept(ctx, list(range(6)), [0])


def test_lattice_and_taxonomy():
    lattice = cocseg.build_lattice(tourism_context())
    assert len(lattice.covers) == 6
    taxonomy = cocseg.extract_taxonomy(lattice)
    assert taxonomy.root == "bookable"
    assert ("rideable", "motor-bike") in taxonomy.edges
    assert cocseg.direct_descendants(taxonomy, "bookable") == ["hotel", "joinable", "rentable"]
    paths = cocseg.root_to_leaf_paths(taxonomy)
    assert ["bookable", "rentable", "driveable", "rideable", "motor-bike"] in paths


def test_clarify_and_reduce():
    ctx = tourism_context()
    clarified, merges = cocseg.clarify(ctx)
    assert len(clarified.objects) == 5
    assert merges["objects"][0][0] == "excursion+trip"
    reducible, witness = cocseg.is_reducible_attribute(clarified, clarified.attribute_index("bookable"))
    assert reducible and witness == []
    reduced = cocseg.reduce(clarified)
    assert "bookable" not in reduced.attributes
    assert len(cocseg.enumerate_concepts(reduced)) == 6


def test_cxt_round_trip(tmp_path):
    path = str(tmp_path / "tourism.cxt")
    cocseg.write_cxt(tourism_context(), path)
    back = cocseg.read_cxt(path)
    assert back.objects == tourism_context().objects
    assert back.incidence == tourism_context().incidence


def test_pair_extraction_and_context():
    corpus = cocseg.parse_corpus_text(
        "the\tthe\tDET\n"
        "state\tstate\tNOUN\n"
        "can\tcan\tOTHER\n"
        "prosecute\tprosecute\tVERB\n"
        "the\tthe\tDET\n"
        "perpetrator\tperpetrator\tNOUN\n"
    )
    pairs = cocseg.extract_pairs(corpus)
    assert pairs == [("prosecute", "perpetrator", 1)]

    doubled = pairs * 2
    verbs, nouns, kept = cocseg.filter_frequent(doubled, 2)
    ctx = cocseg.build_context(kept, nouns, verbs)
    assert ctx.objects == ["perpetrator"]
    assert ctx.attributes == ["prosecute"]
    assert ctx.incidence == [[True]]


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        cocseg.parse_corpus_text("bad line\n")
    with pytest.raises(ValueError):
        cocseg.kmeans([[0.0, 0.0]], 1)


def test_segmentation_report():
    corpus = cocseg.parse_corpus(os.path.join(DATA, "fixture_corpus.tsv"))
    taxonomy = cocseg.read_taxonomy(os.path.join(DATA, "fixture_taxonomy.json"))
    config = cocseg.PipelineConfig()
    config.k = 2
    report = json.loads(cocseg.segment_report_json(corpus, taxonomy, config))
    assert report["k"] == 2
    assert report["excluded"] == [5]
    assert len(report["clusters"]) == 2
    members = sorted(m for c in report["clusters"] for m in c["members"])
    assert members == [1, 2, 3, 4, 6, 7, 8]
    for cluster in report["clusters"]:
        assert cluster["segments"][-1][1] == corpus.sentence_count


def test_kmeans_binding():
    result = cocseg.kmeans([[5, 1], [4, 1], [1, 5], [1, 4]], 2)
    clusters = {tuple(c) for c in result["clusters"]}
    assert clusters == {(1, 2), (3, 4)}
    assert cocseg.cluster_to_segmentation([1], 10) == [(1, 10)]


def test_pipeline_binding(tmp_path):
    config = cocseg.PipelineConfig()
    config.out_dir = str(tmp_path / "out")
    written = cocseg.run_pipeline(os.path.join(DATA, "law30.tsv"), config)
    names = {os.path.basename(p) for p in written}
    assert {"pairs.tsv", "context.cxt", "lattice.json", "taxonomy.json", "segmentation.json"} <= names
    for path in written:
        assert os.path.exists(path)
