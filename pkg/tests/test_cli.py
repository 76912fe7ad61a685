"""CLI behavior: exit codes, report shape, deterministic JSON output."""

import json

import pytest
from click.testing import CliRunner

from cofactor_rigidity.cli import main


K4_GRAPH_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"

K4_MINUS_EDGE_FRAMEWORK = {
    "n": 4,
    "edges": [[0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
    "coords": [["0", "0"], ["1", "0"], ["0", "1"], ["-1", "-1"]],
}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(K4_GRAPH_TEXT)
    return str(p)


@pytest.fixture
def framework_file(tmp_path):
    p = tmp_path / "fw.json"
    p.write_text(json.dumps(K4_MINUS_EDGE_FRAMEWORK))
    return str(p)


def test_rank_text_output(runner, graph_file):
    out = runner.invoke(main, ["rank", graph_file])
    assert out.exit_code == 0
    assert "rank 6" in out.output
    assert "rigid true" in out.output


def test_rank_json_report(runner, graph_file):
    out = runner.invoke(main, ["rank", graph_file, "--json"])
    assert out.exit_code == 0
    report = json.loads(out.output)
    assert set(report) == {"command", "inputs", "results", "certificates", "pass"}
    assert report["results"]["rank"] == 6 and report["pass"]
    assert report["certificates"]["n"] == 4


def test_rank_json_deterministic(runner, graph_file):
    a = runner.invoke(main, ["rank", graph_file, "--json"]).output
    b = runner.invoke(main, ["rank", graph_file, "--json"]).output
    assert a == b


def test_rank_accepts_json_graph(runner, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}))
    out = runner.invoke(main, ["rank", str(p)])
    assert out.exit_code == 0
    assert "rank 3" in out.output


def test_rank_missing_file_exit_2(runner):
    out = runner.invoke(main, ["rank", "/no/such/file"])
    assert out.exit_code == 2


def test_rank_bad_graph_exit_2(runner, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("not a graph\n")
    out = runner.invoke(main, ["rank", str(p)])
    assert out.exit_code == 2


def test_closure_command(runner, tmp_path):
    k5 = {"n": 5, "edges": [[u, v] for u in range(5) for v in range(u + 1, 5)]}
    p = tmp_path / "k5.json"
    p.write_text(json.dumps(k5))
    out = runner.invoke(
        main, ["closure", str(p), "0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4"]
    )
    assert out.exit_code == 0
    assert "rank 9" in out.output
    assert "0 1" in out.output  # the removed edge is in the closure


def test_closure_bad_edge_list_exit_2(runner, graph_file):
    out = runner.invoke(main, ["closure", graph_file, "0-x"])
    assert out.exit_code == 2


def test_motions_command(runner, framework_file):
    out = runner.invoke(main, ["motions", framework_file, "--pins", "0,2,3"])
    assert out.exit_code == 0
    assert "dof 1" in out.output
    assert "motion 0:" in out.output


def test_motions_bad_pins_exit_2(runner, framework_file):
    out = runner.invoke(main, ["motions", framework_file, "--pins", "0,1"])
    assert out.exit_code == 2
    # colliding y-coordinates are a domain error, still exit 2
    out = runner.invoke(main, ["motions", framework_file, "--pins", "0,1,2"])
    assert out.exit_code == 2


def test_verify_pass(runner):
    out = runner.invoke(main, ["verify", "vandermonde", "--trials", "5"])
    assert out.exit_code == 0
    assert "vandermonde: pass" in out.output


def test_verify_unknown_suite_exit_2(runner):
    out = runner.invoke(main, ["verify", "not-a-suite"])
    assert out.exit_code == 2


def test_verify_json_report(runner):
    out = runner.invoke(main, ["verify", "vandermonde", "--trials", "3", "--json"])
    assert out.exit_code == 0
    report = json.loads(out.output)
    assert report["pass"] and report["results"][0]["suite"] == "vandermonde"


def test_projective_map4(runner):
    out = runner.invoke(
        main, ["projective", "map4", "--", "2,1", "-1,0", "0,3", "4,4"]
    )
    assert out.exit_code == 0
    assert len(out.output.strip().splitlines()) == 3


def test_projective_map4_collinear_exit_2(runner):
    out = runner.invoke(
        main, ["projective", "map4", "0,0", "1,0", "2,0", "1,1"]
    )
    assert out.exit_code == 2


def test_projective_apply_and_convert(runner, tmp_path, framework_file):
    matrix = [["2", "1", "0"], ["0", "1", "1"], ["1", "0", "3"]]
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps(matrix))

    out = runner.invoke(
        main, ["projective", "apply", str(mfile), framework_file, "--json"]
    )
    assert out.exit_code == 0
    dst = json.loads(out.output)["results"]["framework"]
    dfile = tmp_path / "dst.json"
    dfile.write_text(json.dumps(dst))

    mo = runner.invoke(main, ["motions", framework_file, "--pins", "0,2,3", "--json"])
    basis = json.loads(mo.output)["results"]["basis"]
    qfile = tmp_path / "q.json"
    qfile.write_text(json.dumps(basis[0]))

    out = runner.invoke(
        main,
        ["projective", "convert", str(mfile), framework_file, str(dfile), str(qfile), "--json"],
    )
    assert out.exit_code == 0
    report = json.loads(out.output)
    assert report["pass"] and report["results"]["is_motion_of_dst"]


def test_projective_convert_wrong_map_exit_2(runner, tmp_path, framework_file):
    matrix = [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "1"]]
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps(matrix))
    qfile = tmp_path / "q.json"
    qfile.write_text(json.dumps([["0", "0", "0"]] * 4))
    out = runner.invoke(
        main,
        [
            "projective",
            "convert",
            str(mfile),
            framework_file,
            framework_file,
            str(qfile),
        ],
    )
    assert out.exit_code == 2


def test_help_runs(runner):
    for args in ([], ["--help"], ["projective", "--help"]):
        out = runner.invoke(main, args + (["--help"] if not args else []))
        assert out.exit_code == 0
