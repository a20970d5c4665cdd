from __future__ import annotations

import json

import pytest

from sharpbound.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_digraph_table(tmp_path, capsys):
    doc = tmp_path / "g.json"
    doc.write_text('{"n": 2, "arcs": [[0, 1]]}')
    code, out, _ = run(capsys, "invariants", str(doc))
    assert code == 0
    assert out.strip() == "v=2 c=1 s=2 cc_max=2 cc_min=2 scc_max=1 scc_min=1"


def test_invariants_tree_and_partition(tmp_path, capsys):
    tree = tmp_path / "t.json"
    tree.write_text('{"father": [0, 0, 2, 0, 3, 3]}')
    code, out, _ = run(capsys, "invariants", str(tree))
    assert code == 0
    assert out.strip() == "n=7 leaves=4 d_min=1 d_max=3"

    part = tmp_path / "p.json"
    part.write_text('{"values": [1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 4]}')
    code, out, _ = run(capsys, "invariants", str(part), "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record == {
        "schema_version": "1",
        "kind": "partition",
        "n_p": 11,
        "nval": 4,
        "m_min": 1,
        "m_max": 6,
        "m_diff": 5,
    }


def test_invariants_plain_text_digraph(tmp_path, capsys):
    doc = tmp_path / "g.txt"
    doc.write_text("n=3\n0 1\n2 2\n")
    code, out, _ = run(capsys, "invariants", str(doc))
    assert code == 0
    assert "v=3 c=2" in out


def test_invariants_parse_error_exits_2(tmp_path, capsys):
    doc = tmp_path / "bad.json"
    doc.write_text('{"n": 2,\n "arcs": [[0, 1]')
    code, _, err = run(capsys, "invariants", str(doc))
    assert code == 2
    assert "line 2" in err


def test_invariants_out_of_class_exits_2(tmp_path, capsys):
    doc = tmp_path / "g.json"
    doc.write_text('{"n": 2, "arcs": [[0, 0]]}')
    code, _, err = run(capsys, "invariants", str(doc))
    assert code == 2
    assert "not in digraph class" in err


def test_bound_conj1(capsys):
    code, out, _ = run(capsys, "bound", "1", "--v", "9", "--ccmax", "3", "--sccmin", "2")
    assert code == 0
    assert out.strip() == "bound=4 case=+1-2-3"


def test_bound_conj4_and_conj5(capsys):
    code, out, _ = run(capsys, "bound", "4", "--v", "3", "--c", "2", "--ccmin", "1", "--sccmax", "1")
    assert code == 0
    assert out.strip() == "bound=2 case=-1-2"

    code, out, _ = run(capsys, "bound", "5", "--n", "1", "--dmin", "0", "--dmax", "0")
    assert code == 0
    assert out.strip() == "bound=[1, 1]"


def test_bound_json_format(capsys):
    code, out, _ = run(capsys, "bound", "3", "--v", "2", "--s", "2", "--sccmin", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["bound"] == 1
    assert payload["case"]["label"] == "-1-2"


def test_bound_precondition_violation_exits_2(capsys):
    code, _, err = run(capsys, "bound", "1", "--v", "3", "--ccmax", "4", "--sccmin", "1")
    assert code == 2
    assert "inconsistent characteristics" in err


def test_bound_missing_parameter_exits_2(capsys):
    code, _, err = run(capsys, "bound", "1", "--v", "3")
    assert code == 2
    assert "requires --ccmax" in err


def test_verify_validity_json(capsys):
    code, out, _ = run(capsys, "verify", "--conj", "1", "--max-n", "3", "--mode", "validity",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == []
    assert report["passed"] is True
    assert report["sizes_swept"] == [1, 2, 3]


def test_verify_cases_and_tree_partition(capsys):
    code, out, _ = run(capsys, "verify", "--conj", "1", "--mode", "cases", "--max-n", "3")
    assert code == 0
    assert "verdict: pass" in out

    code, out, _ = run(capsys, "verify", "--mode", "tree-partition", "--max-n", "5")
    assert code == 0
    assert "verdict: pass" in out


def test_verify_requires_conjecture(capsys):
    code, _, err = run(capsys, "verify", "--mode", "validity")
    assert code == 2
    assert "--conj is required" in err


def test_verify_cap_and_force_cap(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--conj", "partition-upper", "--max-n", "25")
    assert code == 2
    assert "exceeds cap" in err

    out_file = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--conj", "partition-upper", "--max-n", "25",
                     "--force-cap", "--format", "json", "--out", str(out_file))
    assert code == 0
    assert json.loads(out_file.read_text())["passed"] is True


def test_verify_env_cap_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SHARPBOUND_MAX_ENUM", "14")
    code, out, _ = run(capsys, "verify", "--conj", "partition-lower", "--max-n", "14",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_output_identical_across_jobs(tmp_path, capsys):
    paths = []
    for jobs in ("1", "2"):
        path = tmp_path / f"report-{jobs}.json"
        code, _, _ = run(capsys, "verify", "--conj", "3", "--max-n", "3", "--mode", "sharpness",
                         "--format", "json", "--jobs", jobs, "--out", str(path))
        assert code == 0
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]


def test_witnesses(capsys):
    code, out, _ = run(capsys, "witnesses", "--conj", "1")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 7
    assert all("check=ok" in line for line in lines)

    code, out, _ = run(capsys, "witnesses", "--conj", "3")
    assert code == 0
    assert len([line for line in out.splitlines() if line.strip()]) == 2

    code, out, _ = run(capsys, "witnesses", "--conj", "4")
    assert code == 0
    assert len([line for line in out.splitlines() if line.strip()]) == 3


def test_dot_export(tmp_path, capsys):
    doc = tmp_path / "g.json"
    doc.write_text('{"n": 2, "arcs": [[0, 1]]}')
    code, out, _ = run(capsys, "dot", str(doc))
    assert code == 0
    assert "0 -> 1;" in out


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["bound", "conj9"])
    assert exc.value.code == 2
