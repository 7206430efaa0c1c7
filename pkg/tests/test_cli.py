import json

import pytest

from cylkit import cli, io
from cylkit.category import free_category
from cylkit.standard import boundary_inclusion


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen(capsys, tmp_path, name, *params):
    path = str(tmp_path / f"{name}.json")
    code, _, _ = run(capsys, "gen", *params, "-o", path)
    assert code == 0
    return path


def test_gen_prints_object(capsys):
    code, out, _ = run(capsys, "gen", "horn", "3", "1")
    assert code == 0
    d = json.loads(out)
    assert d["format"] == io.SSET_FORMAT
    assert sum(len(g) for g in d["generators"]) == 4 + 6 + 3


def test_gen_and_validate(capsys, tmp_path):
    path = gen(capsys, tmp_path, "h", "horn", "2", "1")
    code, out, _ = run(capsys, "validate", path, "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["valid"] and d["generators"] == 5
    assert d["config"]["max_dim_source"] == "default"


def test_validate_invalid_and_malformed(capsys, tmp_path):
    d = io.sset_to_json(io.sset_from_json(json.loads(run(capsys, "gen", "simplex", "1")[1])))
    g = next(iter(d["faces"]))
    d["faces"][g] = []
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and "valid: False" in out
    junk = tmp_path / "junk.json"
    junk.write_text("{\n  oops")
    code, _, err = run(capsys, "validate", str(junk))
    assert code == cli.EX_USAGE and "junk.json:2:" in err
    code, _, _ = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == cli.EX_USAGE


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["classify", "--kind", "inner"])
    assert e.value.code == cli.EX_USAGE
    with pytest.raises(SystemExit) as e:
        cli.main(["suite", "--format", "yaml"])
    assert e.value.code == cli.EX_USAGE
    code, _, _ = run(capsys, "gen", "tetrahedron", "3")
    assert code == cli.EX_USAGE
    code, _, _ = run(capsys, "gen", "horn", "2", "5")
    assert code == cli.EX_USAGE


def test_env_max_dim(capsys, tmp_path, monkeypatch):
    path = gen(capsys, tmp_path, "h", "horn", "2", "1")
    monkeypatch.setenv("CYLKIT_MAX_DIM", "3")
    _, out, _ = run(capsys, "validate", path, "--format", "json")
    assert json.loads(out)["config"]["max_dim"] == 3
    assert json.loads(out)["config"]["max_dim_source"] == "env"
    _, out, _ = run(capsys, "validate", path, "--format", "json", "--max-dim", "2")
    assert json.loads(out)["config"]["max_dim_source"] == "flag"
    monkeypatch.setenv("CYLKIT_MAX_DIM", "zero")
    code, _, _ = run(capsys, "validate", path)
    assert code == cli.EX_USAGE


def test_classify_nerve_and_horn(capsys, tmp_path):
    C = free_category(["a", "b", "c"], [("f", "a", "b"), ("g", "b", "c")], name="C")
    cp = tmp_path / "c.json"
    io.save(str(cp), io.category_to_json(C))
    n = gen(capsys, tmp_path, "n", "nerve", str(cp))
    p = gen(capsys, tmp_path, "p", "to-point", n)
    code, out, _ = run(capsys, "classify", "--map", p, "--kind", "inner", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"]["status"] == "YES_CERTIFIED"
    h = gen(capsys, tmp_path, "hp", "to-point", gen(capsys, tmp_path, "h", "horn", "2", "1"))
    code, out, _ = run(capsys, "classify", "--map", h, "--kind", "inner", "--format", "json")
    assert code == 1 and json.loads(out)["verdict"]["status"] == "NO"


def test_certify_and_factor(capsys, tmp_path):
    s = gen(capsys, tmp_path, "s", "spine-inclusion", "3")
    code, out, _ = run(capsys, "certify-anodyne", s, "--format", "json")
    assert code == 0 and json.loads(out)["verdict"]["status"] == "YES_CERTIFIED"
    b = tmp_path / "b.json"
    io.save(str(b), io.map_to_json(boundary_inclusion(1)))
    code, out, _ = run(capsys, "certify-anodyne", str(b))
    assert code == 1
    right = str(tmp_path / "right.json")
    s2 = gen(capsys, tmp_path, "s2", "spine-inclusion", "2")
    code, out, _ = run(capsys, "factor", s2, "-o", right)
    assert code == 0
    assert io.load(right)[0] == io.MAP_FORMAT


def test_map_check(capsys, tmp_path):
    s = gen(capsys, tmp_path, "s", "horn-inclusion", "2", "1")
    code, out, _ = run(capsys, "map-check", s, "--format", "json")
    assert code == 0


def test_cyl_make_and_tfae(capsys, tmp_path):
    D = gen(capsys, tmp_path, "d", "simplex", "2")
    X = str(tmp_path / "x.json")
    code, _, _ = run(capsys, "cyl", "make", D, "--zero", "0", "-o", X)
    assert code == 0
    fmt, cyl = io.load(X)
    assert fmt == io.CYLINDER_FORMAT and cyl.A.counts() == (1,)
    code, out, _ = run(capsys, "cyl", "tfae", X, "--format", "json")
    d = json.loads(out)
    assert code == 0 and not d["contradiction"]


def test_reports_are_deterministic(capsys, tmp_path):
    s = gen(capsys, tmp_path, "s", "spine-inclusion", "3")
    outs = {run(capsys, "certify-anodyne", s, "--format", "json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_suite_only(capsys):
    code, out, _ = run(capsys, "suite", "--only", "1,ez")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3 and "2/2" in lines[-1]
    code, out, _ = run(capsys, "suite", "--only", "1", "--format", "json")
    d = json.loads(out)
    a = run(capsys, "suite", "--only", "1", "--format", "json")[1]
    assert out == a and d["criteria"][0]["passed"]
