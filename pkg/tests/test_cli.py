import json

import pytest

from coprobber.cli import main
from coprobber.generators import generate
from coprobber.graph6 import write_graph6
from coprobber.corpus import rebuild_corpus


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_and_copnum(capsys):
    code, out, _ = run(capsys, "gen", "petersen")
    assert code == 0
    literal = out.strip()
    code, out, _ = run(capsys, "copnum", literal)
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "copnum", "petersen", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["cop_number"] == 3 and data["copwin"]


def test_graph_argument_from_file(tmp_path, capsys):
    p = tmp_path / "g.g6"
    p.write_text(write_graph6(generate("cycle", (5,))) + "\n")
    code, out, _ = run(capsys, "copnum", str(p))
    assert code == 0 and out.strip() == "2"


def test_solve_strategy_play_roundtrip(tmp_path, capsys):
    strat = tmp_path / "strat.json"
    code, out, _ = run(
        capsys, "solve", "cycle:5", "-k", "2", "--strategy-out", str(strat)
    )
    assert code == 0
    assert json.loads(out)["copwin"]
    code, out, _ = run(capsys, "play", "cycle:5", "--strategy", str(strat))
    assert code == 0
    transcript = json.loads(out)
    assert transcript["outcome"] == "capture"


def test_dismantle_json(capsys):
    code, out, _ = run(capsys, "dismantle", "path:5")
    assert code == 0
    data = json.loads(out)
    assert data["dismantlable"] and len(data["order"]) == 5


def test_bounds_table_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--table", "--max-genus", "7")
    assert code == 0
    assert out == (
        "genus,nowakowski_schroder,here\n"
        "1,3,3\n2,5,4\n3,7,5\n4,9,7\n5,11,9\n6,13,10\n7,15,12\n"
    )


def test_bounds_single_value(capsys):
    code, out, _ = run(capsys, "bounds", "--genus", "3", "--surface", "orientable")
    assert code == 0
    assert json.loads(out)["bound"] == 7


def test_faces_and_genus(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "dump", "projective_petersen")
    assert code == 0
    emb = tmp_path / "pp.json"
    emb.write_text(out)
    code, out, _ = run(capsys, "faces", str(emb))
    assert code == 0
    data = json.loads(out)
    assert data["faces"] == 6 and data["euler_genus"] == 1
    code, out, _ = run(capsys, "genus", "complete:4", "--mode", "orientable")
    assert code == 0
    assert json.loads(out)["euler_genus"] == 0


def test_doublecover_weakcover_transfer(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "dump", "projective_k6")
    emb = tmp_path / "k6.json"
    emb.write_text(out)
    code, out, _ = run(capsys, "doublecover", str(emb))
    assert code == 0
    dc = json.loads(out)
    assert dc["connected"] and dc["euler_characteristic"] == 2
    map_path = tmp_path / "map.json"
    map_path.write_text(json.dumps(dc["map"]))

    cover_g6 = tmp_path / "cover.g6"
    cover_g6.write_text(dc["map"]["source_graph6"] + "\n")
    strat = tmp_path / "strat.json"
    code, out, _ = run(
        capsys, "solve", str(cover_g6), "-k", "2", "--strategy-out", str(strat),
        "-o", str(tmp_path / "solve.json"),
    )
    assert code == 0
    code, out, _ = run(
        capsys, "transfer", "--cover", str(map_path), "--strategy", str(strat),
        "--verify", "--simulate",
    )
    assert code == 0
    data = json.loads(out)
    assert data["verified"]
    assert data["transcript"]["outcome"] == "capture"


def test_weakcover_exit_codes(capsys):
    code, out, _ = run(
        capsys, "weakcover", "--source", "cycle:6", "--target", "cycle:3",
        "--p", "0,1,2,0,1,2",
    )
    assert code == 0
    assert json.loads(out)["kind"] == "TwoSheeted"
    code, _, _ = run(
        capsys, "weakcover", "--source", "cycle:6", "--target", "cycle:3",
        "--p", "0,1,2,0,1,1",
    )
    assert code == 1


def test_verify_deterministic_across_workers(capsys):
    code1, out1, _ = run(capsys, "verify", "--workers", "1")
    code3, out3, _ = run(capsys, "verify", "--workers", "3")
    assert code1 == code3 == 0
    assert out1 == out3
    report = json.loads(out1)
    assert report["summary"]["failures"] == 0


def test_corpus_run_parallel_identical(tmp_path, capsys):
    rebuild_corpus(tmp_path)
    code1, out1, _ = run(
        capsys, "corpus", "run", "--command", "copnum",
        "--directory", str(tmp_path), "--workers", "1",
    )
    code2, out2, _ = run(
        capsys, "corpus", "run", "--command", "copnum",
        "--directory", str(tmp_path), "--workers", "4",
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_input_errors_exit_two(capsys):
    code, _, err = run(capsys, "copnum", "nosuchfamily:4")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "faces", "/nonexistent/file.json")
    assert code == 2
    code, _, err = run(capsys, "solve", "path:3", "-k", "0")
    assert code == 2
    code, _, err = run(capsys, "corpus", "dump", "nosuch")
    assert code == 2


def test_crosscap_cli(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "dump", "planar_c3")
    emb = tmp_path / "c3.json"
    emb.write_text(out)
    code, out, _ = run(capsys, "crosscap", str(emb))
    assert code == 0
    data = json.loads(out)
    assert data["euler_genus"] == 1 and data["orientable"] is False
