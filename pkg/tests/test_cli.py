from __future__ import annotations

import pytest

from lexshell import cli
from lexshell.constructions import pentagon
from lexshell.poset import write_poset

from conftest import boolean_lattice


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def verdict(out):
    return out.splitlines()[0].partition(": ")[2]


@pytest.fixture
def files(tmp_path):
    pent = tmp_path / "pent.poset"
    write_poset(pentagon(), pent)
    b3 = tmp_path / "b3.poset"
    write_poset(boolean_lattice(3), b3)
    tri = tmp_path / "tri.cplx"
    tri.write_text("1 2\n1 3\n2 3\n")
    split = tmp_path / "split.cplx"
    split.write_text("1 2\n3 4\n")
    return {"pent": pent, "b3": b3, "tri": tri, "split": split, "dir": tmp_path}


def test_validate_and_basic_queries(capsys, files):
    code, out, _ = run(capsys, "validate", files["pent"])
    assert code == 0 and verdict(out) == "holds"
    code, out, _ = run(capsys, "graded", files["pent"])
    assert code == 1 and verdict(out) == "fails"
    code, out, _ = run(capsys, "graded", files["b3"])
    assert code == 0 and "rank: 3" in out
    code, out, _ = run(capsys, "chains", files["pent"])
    assert code == 0 and "bot a m top" in out


def test_error_exit(capsys, files):
    bad = files["dir"] / "bad.poset"
    bad.write_text("cover a b\ncover b a\n")
    code, out, err = run(capsys, "validate", bad)
    assert code == 2 and verdict(out) == "error" and err.startswith("lexshell:")
    code, out, _ = run(capsys, "validate", files["dir"] / "nope.poset")
    assert code == 2


def test_resource_limit(capsys, files, monkeypatch):
    code, out, _ = run(capsys, "el-find", files["b3"], "--limit", "2")
    assert code == 3 and verdict(out) == "resource-limit"
    monkeypatch.setenv("LEXSHELL_LIMIT", "2")
    code, out, _ = run(capsys, "el-find", files["b3"])
    assert code == 3 and "limit: 2" in out


def test_shelling_roundtrip(capsys, files):
    out_file = files["dir"] / "tri.order"
    code, out, _ = run(capsys, "shelling-find", files["tri"], "-o", out_file)
    assert code == 0
    code, _, _ = run(capsys, "shelling-check", files["tri"], out_file)
    assert code == 0
    code, out, _ = run(capsys, "shelling-find", files["split"])
    assert code == 1 and verdict(out) == "not-found"
    code, _, _ = run(capsys, "forced-last", files["tri"], "1", "2")
    assert code == 1


def test_strip_bounds(capsys, files):
    order = files["dir"] / "pent.order"
    code, _, _ = run(capsys, "shelling-find", files["pent"], "--strip-bounds", "-o", order)
    assert code == 0 and order.read_text() == "a m\nb\n"
    code, _, _ = run(capsys, "shelling-check", files["pent"], order, "--strip-bounds")
    assert code == 0


def test_labeling_roundtrip(capsys, files):
    lab = files["dir"] / "b3.lab"
    code, _, _ = run(capsys, "el-find", files["b3"], "-o", lab)
    assert code == 0
    for cmd in ("el-check", "lexorder-check"):
        code, _, _ = run(capsys, cmd, files["b3"], lab)
        assert code == 0
    code, _, _ = run(capsys, "el-find", files["pent"], "--alphabet", "1")
    assert code == 1


def test_rao_roundtrip(capsys, files):
    cert = files["dir"] / "pent.rao"
    code, _, _ = run(capsys, "rao-find", files["pent"], "-o", cert)
    assert code == 0
    code, _, _ = run(capsys, "rao-check", files["pent"], cert)
    assert code == 0
    cert.write_text("bot: b a\n  a: m\n    m:\n  b:\n")
    code, out, _ = run(capsys, "rao-check", files["pent"], cert)
    assert code == 1 and verdict(out) == "fails"
    fam = files["dir"] / "b3.fam"
    code, _, _ = run(capsys, "rindep-rao", files["b3"], "-o", fam)
    assert code == 0
    code, _, _ = run(capsys, "rao-check", files["b3"], fam, "--family")
    assert code == 0


def test_obstruct_pentagon(capsys, files):
    code, out, _ = run(capsys, "obstruct", files["pent"], "top", "--context", "a", "--context", "b")
    assert code == 1


def test_graded_pipeline(capsys, tmp_path):
    poset = tmp_path / "P.poset"
    cert = tmp_path / "P.rao"
    assert run(capsys, "hachimori-validate")[0] == 0
    assert run(capsys, "build-graded", "-o", poset)[0] == 0
    assert run(capsys, "graded-rao", "-o", cert)[0] == 0
    code, _, _ = run(capsys, "rao-check", poset, cert)
    assert code == 0
    code, out, _ = run(capsys, "obstruct", poset, "134", "--context-below", "bot_a", "--context-below", "bot_d")
    assert code == 0
    assert "forced 1: 14_a 14_b 34_a 34_b" in out and "forced 2: 14_c 14_d 34_c 34_d" in out


def test_deterministic_reports(capsys, files):
    first = run(capsys, "rao-find", files["b3"])
    second = run(capsys, "rao-find", files["b3"])
    assert first == second
    assert "wall time" not in first[1]
    code, out, _ = run(capsys, "rao-find", files["b3"], "--no-deterministic")
    assert code == 0 and "wall time" in out
