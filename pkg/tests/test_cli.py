import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

import cactus_evc.verify
from cactus_evc.cli import main
from cactus_evc.generators import bare_cycle, fig1_family, path_graph
from cactus_evc.graph import Graph, write_edge_list

DOCS = pathlib.Path(__file__).resolve().parent.parent / "docs"


@pytest.fixture
def schema():
    return json.loads((DOCS / "report_schema.json").read_text())


def graph_file(tmp_path, g, name="g.txt"):
    path = tmp_path / name
    write_edge_list(g, path)
    return str(path)


def test_compute_fig1(tmp_path, capsys):
    assert main(["compute", graph_file(tmp_path, fig1_family(3))]) == 0
    assert "evc: 5" in capsys.readouterr().out


def test_compute_p3_leaf(tmp_path, capsys):
    assert main(["compute", graph_file(tmp_path, path_graph(3)), "--at", "0"]) == 0
    out = capsys.readouterr().out
    assert "evc: 2" in out and "evc_v: 3" in out and "type: 1" in out


def test_compute_json_matches_schema(tmp_path, capsys, schema):
    assert main(["compute", graph_file(tmp_path, path_graph(3)), "--at", "0", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, schema)
    assert (report["evc"], report["evc_v"], report["vtype"]) == (2, 3, 1)


def test_example_report_matches_schema(schema):
    jsonschema.validate(json.loads((DOCS / "example_report.json").read_text()), schema)


def test_compute_unsupported(tmp_path, capsys):
    # wheel W4: hub joined to every vertex of a 4-cycle, not chordal
    wheel = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)))
    assert main(["compute", graph_file(tmp_path, wheel)]) == 2
    assert "block" in capsys.readouterr().err


def test_compute_disconnected(tmp_path):
    assert main(["compute", graph_file(tmp_path, Graph(4, ((0, 1), (2, 3))))]) == 2


def test_compute_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n0 1\n")
    assert main(["compute", str(path)]) == 1
    assert "line 3" in capsys.readouterr().err


def test_compute_bad_query(tmp_path):
    assert main(["compute", graph_file(tmp_path, path_graph(3)), "--at", "7"]) == 1


def test_oracle_examples(tmp_path, capsys):
    assert main(["oracle", graph_file(tmp_path, bare_cycle(5))]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["oracle", graph_file(tmp_path, bare_cycle(4)), "--require", "0"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_oracle_cap(tmp_path):
    assert main(["oracle", graph_file(tmp_path, path_graph(11))]) == 3
    assert main(["oracle", graph_file(tmp_path, path_graph(6)), "--cap", "5"]) == 3


def test_crosscheck_cacti(capsys, tmp_path):
    assert main(["crosscheck", "--kind", "cactus", "--n", "8", "--count", "200", "--out", str(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "200/200 pass"


def test_crosscheck_chordal(capsys, tmp_path):
    assert main(["crosscheck", "--kind", "chordal", "--n", "8", "--count", "100", "--out", str(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "100/100 pass"


def test_crosscheck_saves_and_replays(monkeypatch, tmp_path, capsys):
    real = cactus_evc.verify.compute_evc

    def broken(g, **kw):
        r = real(g, **kw)
        if g.edge_count >= 3:
            r.evc += 1
        return r

    monkeypatch.setattr(cactus_evc.verify, "compute_evc", broken)
    assert main(["crosscheck", "--count", "50", "--seed", "3", "--out", str(tmp_path)]) == 4
    out = capsys.readouterr().out
    assert "mismatch: evc" in out
    saved = list(tmp_path.glob("counterexample-cactus-*.txt"))
    assert len(saved) == 1
    text = saved[0].read_text()
    assert text.startswith("# genspec: ")

    assert main(["crosscheck", "--replay", str(saved[0])]) == 4
    replay = capsys.readouterr().out
    first = next(line for line in out.splitlines() if line.startswith("mismatch:"))
    assert first in replay and "reproduced" in replay

    monkeypatch.setattr(cactus_evc.verify, "compute_evc", real)
    assert main(["crosscheck", "--replay", str(saved[0])]) == 0
    assert "no mismatch" in capsys.readouterr().out


def test_bench_table(capsys):
    assert main(["bench", "--sizes", "100,1000"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["n", "edges", "blocks", "evc", "seconds", "ratio"]
    assert len(lines) == 3


def test_bench_deterministic_and_fast(capsys):
    main(["bench", "--sizes", "1000", "--json"])
    first = json.loads(capsys.readouterr().out)
    main(["bench", "--sizes", "1000", "--json"])
    second = json.loads(capsys.readouterr().out)
    assert first[0]["evc"] == second[0]["evc"]
    assert first[0]["seconds"] < 1.0


def test_bench_rejects_descending():
    assert main(["bench", "--sizes", "1000,100"]) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "cactus_evc", "compute", graph_file(tmp_path, bare_cycle(6))],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "evc: 3" in proc.stdout
