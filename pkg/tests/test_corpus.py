import json

import pytest

from coprobber.generators import generate
from coprobber.graph6 import write_graph6
from coprobber.isomorphism import is_isomorphic
from coprobber.embedding import (
    SchemeError,
    euler_genus,
    face_count,
    is_orientable_scheme,
    scheme_from_faces,
    trace_faces,
)
from coprobber.covering import double_cover
from coprobber.corpus import (
    CorpusError,
    antipodal_quotient,
    build_schemes,
    corpus_names,
    entry_from_json,
    entry_to_json,
    load_corpus,
    load_entry,
    rebuild_corpus,
    run_corpus,
    verify_theorem,
)


def test_shipped_names():
    names = corpus_names()
    assert "projective_petersen" in names
    assert "projective_k6" in names
    assert "torus_k5" in names
    assert sum(1 for n in names if n.startswith("planar_")) == 6


def test_load_revalidates_every_entry():
    for entry in load_corpus():
        assert not entry.scheme.graph.n == 0
        assert euler_genus(entry.scheme) == entry.euler_genus
        assert is_orientable_scheme(entry.scheme) == entry.orientable


def test_shipped_data_matches_reconstruction():
    built = build_schemes()
    for entry in load_corpus():
        assert built[entry.name] == entry.scheme


def test_projective_petersen_entry():
    entry = load_entry("projective_petersen")
    assert is_isomorphic(entry.graph, generate("petersen"))
    assert entry.euler_genus == 1 and not entry.orientable
    assert sorted(trace_faces(entry.scheme).lengths) == [5] * 6
    cover, _ = double_cover(entry.scheme)
    assert is_isomorphic(cover.graph, generate("dodecahedron"))


def test_projective_k6_entry():
    entry = load_entry("projective_k6")
    assert is_isomorphic(entry.graph, generate("complete", (6,)))
    assert sorted(trace_faces(entry.scheme).lengths) == [3] * 10
    cover, _ = double_cover(entry.scheme)
    assert is_isomorphic(cover.graph, generate("icosahedron"))


def test_torus_k5_entry():
    entry = load_entry("torus_k5")
    assert is_isomorphic(entry.graph, generate("complete", (5,)))
    assert entry.euler_genus == 2 and entry.orientable


def test_entry_json_rejects_tampering():
    data = entry_to_json(load_entry("planar_k4"))
    data["euler_genus"] = 1
    with pytest.raises(CorpusError):
        entry_from_json(data)


def test_missing_entry():
    with pytest.raises(CorpusError):
        load_entry("nosuch")


def test_antipodal_quotient_requires_involution():
    cube = build_schemes()["planar_cube"]
    with pytest.raises(SchemeError):
        antipodal_quotient(cube, list(range(8)))  # identity fixes everything


def test_antipodal_quotient_of_cube_is_k4():
    # opposite corners of the prism-labeled cube: cross rings, shift by 2
    cube = build_schemes()["planar_cube"]
    sigma = [6, 7, 4, 5, 2, 3, 0, 1]
    q = antipodal_quotient(cube, sigma)
    assert is_isomorphic(q.graph, generate("complete", (4,)))
    assert euler_genus(q) == 1
    assert not is_orientable_scheme(q)


def test_rebuild_roundtrip(tmp_path):
    written = rebuild_corpus(tmp_path)
    assert len(written) == len(corpus_names())
    reloaded = load_corpus(tmp_path)
    assert [e.name for e in reloaded] == corpus_names()


def test_verify_theorem_shipped_passes():
    report = verify_theorem(workers=1)
    assert report.ok
    assert report.failures == 0
    assert report.instances == len(corpus_names()) + 1  # plus the C6/C3 record
    names = [r["name"] for r in report.records]
    assert "weak_cover_c6_c3" in names


def test_verify_theorem_deterministic_across_workers():
    a = verify_theorem(workers=1).to_json()
    b = verify_theorem(workers=3).to_json()
    assert a == b


def test_verify_theorem_record_content():
    report = verify_theorem(workers=2)
    by_name = {r["name"]: r for r in report.records}
    pp = by_name["projective_petersen"]
    assert pp["base_cop_number"] == 3
    assert pp["cover_cop_number"] == 3
    assert pp["cover_euler_genus"] == 0
    k6 = by_name["projective_k6"]
    assert k6["base_cop_number"] == 1
    checks = {c["check"]: c["ok"] for c in pp["checks"]}
    assert checks["transfer_captures"]
    assert checks["transfer_rank_bound"]
    assert checks["cover_genus"]


def test_run_corpus_isolation_and_determinism(tmp_path):
    rebuild_corpus(tmp_path)
    (tmp_path / "extra.g6").write_text(write_graph6(generate("cycle", (4,))) + "\n")
    (tmp_path / "broken.json").write_text("{not json")
    out1 = run_corpus("copnum", tmp_path, workers=1)
    out4 = run_corpus("copnum", tmp_path, workers=4)
    assert out1 == out4
    assert out1["summary"]["errors"] == 1
    good = [r for r in out1["records"] if "error" not in r]
    by_id = {r["id"]: r["cop_number"] for r in good}
    assert by_id["projective_petersen"] == 3
    assert by_id["planar_dodecahedron"] == 3
    assert by_id["extra.g6:0"] == 2


def test_run_corpus_empty_dir(tmp_path):
    out = run_corpus("copnum", tmp_path)
    assert out["records"] == []
    assert out["summary"] == {"files": 0, "records": 0, "errors": 0}


def test_run_corpus_faces(tmp_path):
    rebuild_corpus(tmp_path)
    out = run_corpus("faces", tmp_path, workers=2)
    rec = {r["id"]: r for r in out["records"]}
    assert rec["projective_k6"]["faces"] == 10
    assert rec["planar_icosahedron"]["euler_genus"] == 0
