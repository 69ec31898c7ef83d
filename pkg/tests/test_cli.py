import json

from supergraphs.cli import run


def test_catalog(capsys):
    assert run(["catalog"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) >= 40
    assert all("order" in json.loads(l) for l in lines)
    assert run(["catalog", "--max-order", "8", "--filter", "Q"]) == 0
    names = [json.loads(l)["name"] for l in capsys.readouterr().out.splitlines()]
    assert names == ["Q8"]


def test_build_dot(capsys):
    assert run(["build", "--group", "S3", "--kind", "power", "--rel", "conj", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("[label=") == 6 and out.count(" -- ") == 9


def test_build_json_to_file(tmp_path):
    path = tmp_path / "g.json"
    assert run(["build", "--group", "D4", "--kind", "commuting", "--rel", "eq", "--output", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["graph"] == "Com" and len(data["vertices"]) == 8


def test_analyze(capsys):
    assert run(["analyze", "--group", "Q8", "--class-profile"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["class_profile"]["dedekind"] and "graphs" not in out
    assert run(["analyze", "--group", "Q8"]) == 0
    assert len(json.loads(capsys.readouterr().out)["graphs"]) == 9
    assert run(["analyze", "--group", "S4", "--kind", "power", "--rel", "order"]) == 0
    (g,) = json.loads(capsys.readouterr().out)["graphs"]
    assert g["clique_number"] == 16


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["build", "--group", "S3", "--kind", "bogus", "--rel", "eq"]) == 2
    assert run(["build", "--group", "NotAGroup", "--kind", "power", "--rel", "eq"]) == 2
    assert run(["analyze", "--group", "S3", "--kind", "power"]) == 2
    assert run(["verify", "--max-order", "0"]) == 2
    assert run(["build", "--group", "S4", "--kind", "power", "--rel", "eq", "--graph-cap", "10"]) == 2


def test_bad_table_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"table": [[0, 1], [1, 1]]}))
    assert run(["analyze", "--group", str(path), "--class-profile"]) == 2
    assert "inverse" in capsys.readouterr().err
    path.write_text("{not json")
    assert run(["analyze", "--group", str(path)]) == 2
    assert run(["analyze", "--group", str(tmp_path / "missing.json")]) == 2


def test_good_table_file(tmp_path, capsys):
    n = 5
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    path = tmp_path / "c5.json"
    path.write_text(json.dumps({"name": "Z5", "table": table}))
    assert run(["build", "--group", str(path), "--kind", "power", "--rel", "eq"]) == 0
    assert json.loads(capsys.readouterr().out)["group"] == "Z5"


def test_verify_small(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert run(["verify", "--max-order", "12", "--theorem", "completeness", "--output", str(out)]) == 0
    rows = [json.loads(l) for l in out.read_text().splitlines()]
    assert rows and all(r["verdict"] == "pass" for r in rows)
    assert "runtime" not in rows[0]
    assert "failures: 0" in capsys.readouterr().err
    assert run(["verify", "--max-order", "8", "--theorem", "s3-separation", "--timings", "--quiet",
                "--output", str(out)]) == 0
    assert "runtime" in json.loads(out.read_text().splitlines()[0])


def test_search(capsys):
    assert run(["search", "--problem", "eight-distinct", "--max-order", "12"]) == 0
    assert json.loads(capsys.readouterr().out)["found"] == "C2xS3"
    assert run(["search", "--problem", "eight-distinct", "--max-order", "11"]) == 0
    assert json.loads(capsys.readouterr().out)["found"] is None
    assert run(["search", "--problem", "oscom-dominant", "--max-order", "6"]) == 0
    assert len(capsys.readouterr().out.splitlines()) >= 6


def test_export(tmp_path):
    assert run(["export", "--group", "Q8", "--dir", str(tmp_path), "--format", "dot"]) == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 9 and "Q8_OSCom.dot" in files
