import json

import pytest

from pwords import cli
from pwords.graycode import parse_gray, verify
from pwords.graphs import build


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    capsys.readouterr()
    return exc.value.code


@pytest.mark.parametrize("d, n, count", [(1, 6, 11), (3, 6, 140), (2, 5, 24), (1, 37, 21637)])
def test_enumerate_count_only(capsys, d, n, count):
    code, out, _ = run(capsys, "enumerate", "--d", str(d), "--n", str(n), "--count-only")
    assert code == 0 and out == f"{count}\n"


def test_enumerate_n1_is_one_empty_line(capsys):
    code, out, _ = run(capsys, "enumerate", "--d", "1", "--n", "1")
    assert code == 0 and out == "\n"


def test_enumerate_words_file(capsys, tmp_path):
    path = tmp_path / "w.txt"
    assert run(capsys, "enumerate", "--n", "4", "--out", str(path))[0] == 0
    assert path.read_text() == "000\n100\n101\n110\n111\n"


def test_graph_report_d1_n8(capsys):
    code, out, _ = run(capsys, "graph", "--d", "1", "--n", "8", "--report")
    rep = json.loads(out)
    assert code == 0
    assert rep["vertex_count"] == 22 and rep["diameter"] == 7 and rep["bipartite"] is True


def test_graph_report_d2_n6(capsys):
    code, out, _ = run(capsys, "graph", "--d", "2", "--n", "6", "--report")
    assert code == 0 and json.loads(out)["biconnected"] is False


def test_graph_dot_two_vertices(capsys):
    code, out, _ = run(capsys, "graph", "--d", "1", "--n", "2", "--format", "dot")
    assert code == 0
    assert out == 'graph "Pi(1,2)" {\n  "0";\n  "1";\n  "0" -- "1";\n}\n'


def test_graph_csv_and_exclude_zero(capsys):
    code, out, _ = run(capsys, "graph", "--n", "5", "--format", "csv", "--exclude-zero")
    assert code == 0
    g = build(1, 5, include_zero=False)
    assert len(out.splitlines()) == g.edge_count
    assert "0000" not in out


def test_graph_rejects_words_format(capsys):
    assert run_usage(capsys, "graph", "--n", "5", "--format", "words") == 2


def test_gray_k2(capsys, tmp_path):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gray", "--d", "1", "--n", "8", "--k", "2", "--out", str(path))
    assert code == 0
    gc = parse_gray(path.read_text())
    assert len(gc) == 21 and gc.cyclic and gc.k == 2
    assert verify(gc, build(1, 8, include_zero=False))


def test_gray_k3(capsys):
    code, out, _ = run(capsys, "gray", "--d", "2", "--n", "5", "--k", "3")
    gc = parse_gray(out)
    assert code == 0 and len(gc) == 24 and verify(gc, build(2, 5))


def test_gray_k2_small_n_is_usage_error(capsys):
    assert run_usage(capsys, "gray", "--d", "1", "--n", "3", "--k", "2") == 2


def test_fit_degrees_n37(capsys):
    code, out, _ = run(capsys, "fit", "--d", "1", "--n", "37", "--source", "degrees")
    assert code == 0
    csv, report = out.split("[", 1)
    rows = dict(line.split(",") for line in csv.strip().splitlines()[1:])
    assert rows["1"] == "1"
    fits = json.loads("[" + report)
    assert {f["family"] for f in fits} == {"lognormal", "normal"}


def test_fit_parts_n37_to_files(capsys, tmp_path):
    path = tmp_path / "parts.csv"
    code, _, _ = run(capsys, "fit", "--n", "37", "--source", "parts", "--out", str(path))
    assert code == 0
    rows = path.read_text().strip().splitlines()
    assert rows[0] == "value,count"
    assert sum(int(r.split(",")[1]) for r in rows[1:]) == 21637
    assert json.loads(path.with_suffix(".json").read_text())[0]["sample_size"] == 21637


def test_fit_parts_n2_two_samples(capsys):
    code, out, _ = run(capsys, "fit", "--n", "2", "--source", "parts")
    assert code == 0
    assert out.startswith("value,count\n1,1\n2,1\n")


@pytest.mark.parametrize("argv", [
    ("fit", "--n", "1", "--source", "parts"),
    ("fit", "--n", "2", "--source", "degrees"),
])
def test_fit_degenerate_exit_4(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 4
    assert out.startswith("value,count")
    assert "degenerate" in err


def test_fit_parts_needs_d1(capsys):
    assert run_usage(capsys, "fit", "--d", "2", "--n", "5", "--source", "parts") == 2


@pytest.mark.parametrize("argv", [
    ("check", "--suite", "tables"),
    ("check", "--suite", "graphs", "--max-n", "12"),
    ("check", "--suite", "graphs", "--max-n", "1"),
])
def test_check_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    summary = json.loads(out)
    assert code == 0 and summary["passed"] and summary["failed"] == 0


def test_check_graphs_max_n1_has_no_instances(capsys):
    _, out, _ = run(capsys, "check", "--suite", "graphs", "--max-n", "1")
    assert json.loads(out)["checks"] == 0


@pytest.mark.parametrize("argv", [
    ("enumerate", "--d", "0", "--n", "3"),
    ("enumerate", "--d", "10", "--n", "3"),
    ("enumerate", "--n", "0"),
    ("enumerate", "--budget-ms", "0"),
    ("bogus",),
    ("gray", "--k", "4", "--n", "5"),
    ("fit", "--source", "edges"),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run_usage(capsys, *argv) == 2


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "enumerate", "--d", "3", "--n", "16", "--count-only",
                       "--budget-ms", "1")
    assert code == 3 and "budget" in err


def test_cache_warm_equals_cold(capsys, tmp_path):
    cache = tmp_path / "cache"
    argv = ("enumerate", "--d", "2", "--n", "9", "--cache-dir", str(cache))
    _, cold, _ = run(capsys, *argv)
    assert (cache / "pwords_d2_n9.txt").read_text() == cold
    _, warm, _ = run(capsys, *argv)
    assert warm == cold
    _, nocache, _ = run(capsys, "enumerate", "--d", "2", "--n", "9")
    assert nocache == cold


def test_cache_corrupt_file_is_regenerated(capsys, tmp_path):
    (tmp_path / "pwords_d1_n7.txt").write_text("000000\n111111\n")
    _, out, _ = run(capsys, "enumerate", "--n", "7", "--count-only", "--cache-dir", str(tmp_path))
    assert out == "15\n"
    (tmp_path / "pwords_d1_n7.txt").write_text("garbage\n")
    _, out, _ = run(capsys, "enumerate", "--n", "7", "--count-only", "--cache-dir", str(tmp_path))
    assert out == "15\n"


@pytest.mark.parametrize("argv", [
    ("gray", "--d", "1", "--n", "9", "--k", "2", "--seed", "5"),
    ("graph", "--d", "2", "--n", "7", "--report"),
    ("fit", "--d", "1", "--n", "20"),
])
def test_outputs_are_deterministic(capsys, argv):
    assert run(capsys, *argv) == run(capsys, *argv)


def test_threads_do_not_change_output(capsys):
    base = ("graph", "--d", "1", "--n", "18", "--report")
    assert run(capsys, *base, "--threads", "1") == run(capsys, *base, "--threads", "4")
