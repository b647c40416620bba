import csv
import io
import json

import pytest

from spreadcover.cli import run
from spreadcover.monomials import build_graph


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_table_shape():
    code, text = call("table", "--n", "4", "--d-min", "5", "--d-max", "15", "--columns", "GGR,HW,greedy")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["d", "GGR", "HW", "4.1"]
    assert [r[0] for r in rows[1:]] == [str(d) for d in range(5, 16)]
    assert rows[1][:3] == ["5", "30", "19"]
    assert all(int(x) >= 0 for r in rows[1:] for x in r)


def test_table_csv_round_trips_integers():
    code, text = call("table", "--n", "5", "--d-min", "6", "--d-max", "7", "--columns", "GGR")
    assert code == 0
    parsed = [[int(x) for x in r] for r in list(csv.reader(io.StringIO(text)))[1:]]
    assert parsed == [[6, 110], [7, 162]]


def test_table_inapplicable_cell():
    code, text = call("table", "--n", "4", "--d-min", "4", "--d-max", "5", "--columns", "HW")
    assert code == 0
    assert text.splitlines()[1:] == ["4,—", "5,19"]


def test_table_text_and_json():
    code, text = call("table", "--n", "4", "--d-min", "5", "--d-max", "6", "--columns", "GGR,HW", "--format", "text")
    assert code == 0 and "GGR" in text.splitlines()[0]
    code, text = call("table", "--n", "4", "--d-min", "5", "--d-max", "6", "--columns", "GGR,HW,alpha4", "--format", "json")
    data = json.loads(text)
    assert data["rows"][0] == {"d": 5, "GGR": 30, "HW": 19, "alpha4": 14}


def test_table_exact_columns():
    code, text = call("table", "--n", "3", "--d-min", "2", "--d-max", "4", "--columns", "exact_alpha,exact_rho")
    assert code == 0
    assert text.splitlines() == ["d,alpha_exact,rho_exact", "2,3,3", "3,4,4", "4,6,6"]


def test_table_bad_column_is_domain_error():
    code, _ = call("table", "--n", "4", "--d-min", "5", "--d-max", "6", "--columns", "magic")
    assert code == 1


def test_bounds_n2():
    code, text = call("bounds", "--n", "2", "--d", "4", "--format", "json")
    assert code == 0
    entries = json.loads(text)["entries"]
    assert {"quantity": "alpha", "kind": "exact", "value": 3, "method": "alpha2-formula"}.items() <= entries[3].items()
    code, text = call("bounds", "--n", "2", "--d", "4")
    assert "alpha exact        3" in text


def test_bounds_csv():
    code, text = call("bounds", "--n", "4", "--d", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {"GGR", "HW", "alpha4-formula"} <= {r["method"] for r in rows}


def test_exact_rho():
    code, text = call("exact", "rho", "--n", "3", "--d", "3")
    assert code == 0
    data = json.loads(text)
    assert data["value"] == 4 and data["proven_optimal"] is True and len(data["witness"]) == 4


def test_exact_alpha():
    code, text = call("exact", "alpha", "--n", "4", "--d", "2", "--time", "10")
    assert json.loads(text)["value"] == 4


def test_cover_round_trip(tmp_path):
    path = tmp_path / "cover.json"
    code, summary = call("cover", "greedy", "--n", "4", "--d", "6", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert set(doc) == {"n", "d", "cliques"}
    assert all(sum(b) == 5 and len(b) == 4 for b in doc["cliques"])
    code, text = call("cover", "verify", "--file", str(path))
    report = json.loads(text)
    assert code == 0 and report["valid"] and report["minimal"]
    assert report["size"] == json.loads(summary)["size"] == len(doc["cliques"])


def test_cover_verify_invalid(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "d": 3, "cliques": [[2, 0, 0], [0, 2, 0], [0, 0, 2]]}))
    code, text = call("cover", "verify", "--file", str(path))
    assert code == 1
    assert json.loads(text)["missing"] == [[1, 1, 1]]


def test_cover_verify_missing_file(tmp_path):
    assert call("cover", "verify", "--file", str(tmp_path / "nope.json"))[0] == 1


def test_orbits():
    code, text = call("orbits", "--n", "3", "--d", "3")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[1].split() == ["[3]", "3", "independent"]
    assert lines[2].split() == ["[2,", "1]", "6", "neither"]


def test_seq():
    code, text = call("seq", "verify", "--max-d", "40")
    assert code == 0 and all(line.startswith("PASS") for line in text.splitlines())
    for method in ("enumerate", "burnside", "gf"):
        assert call("seq", "a053307", "--d", "5", "--method", method) == (0, "14\n")


def test_export_ideal():
    code, text = call("export-ideal", "--n", "3", "--d", "3")
    gens = [l for l in text.splitlines() if not l.startswith("--")]
    legend = [l for l in text.splitlines() if l.startswith("-- z")]
    assert code == 0 and len(legend) == 10
    assert len(gens) == build_graph(3, 3).num_edges() == 18
    assert call("export-ideal", "--n", "4", "--d", "1")[1].count("*") == 6
    assert [l for l in call("export-ideal", "--n", "1", "--d", "5")[1].splitlines() if not l.startswith("--")] == []


def test_usage_errors():
    assert call("frobnicate")[0] == 2
    assert call("bounds", "--n", "2")[0] == 2
    assert call("exact", "gamma", "--n", "2", "--d", "2")[0] == 2
    assert call()[0] == 2


def test_domain_error_exit_code():
    assert call("exact", "rho", "--n", "3", "--d", "0")[0] == 1
    assert call("export-ideal", "--n", "0", "--d", "2")[0] == 1


def test_byte_identical_reruns():
    args = ("table", "--n", "4", "--d-min", "5", "--d-max", "8", "--columns", "GGR,HW,greedy,alpha4")
    assert call(*args) == call(*args)
    assert call("cover", "greedy", "--n", "5", "--d", "6") == call("cover", "greedy", "--n", "5", "--d", "6")


def test_progress_goes_to_stderr(capsys):
    code, text = call("table", "--n", "4", "--d-min", "5", "--d-max", "5", "--columns", "greedy")
    assert "greedy cover" not in text
    assert "greedy cover" in capsys.readouterr().err
