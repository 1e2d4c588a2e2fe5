import json

import pytest

import rsqg.cli as cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rep_natural_json(capsys):
    code, out, err = run_cli(capsys, "rep", "natural", "-n", "2")
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["n"] == 2 and data["dim"] == 2
    assert data["generators"]["w1"]["entries"] == [[1, 1, "2"], [2, 2, "3"]]


def test_rep_natural_symbolic(capsys):
    code, out, _ = run_cli(capsys, "rep", "natural", "-n", "2", "--symbolic")
    assert code == 0
    data = json.loads(out)
    assert data["generators"]["w1"]["entries"] == [[1, 1, "r"], [2, 2, "s"]]


def test_genericity_violation_exits_2(capsys):
    code, out, err = run_cli(capsys, "rep", "natural", "-n", "2",
                             "--r", "2", "--s", "2")
    assert code == 2
    assert out == ""
    assert "r = s violates genericity" in err


def test_invalid_rank_exits_2(capsys):
    code, _, err = run_cli(capsys, "rep", "natural", "-n", "1")
    assert code == 2
    assert "at least 2" in err


def test_bad_rational_exits_2(capsys):
    code, _, err = run_cli(capsys, "rep", "natural", "-n", "2", "--r", "x")
    assert code == 2
    assert err != ""


def test_rep_tensor_and_check(capsys):
    code, out, _ = run_cli(capsys, "rep", "tensor", "-n", "2", "-k", "2")
    assert code == 0
    assert json.loads(out)["dim"] == 4
    code, out, _ = run_cli(capsys, "rep", "check", "-n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert all(row["ok"] for row in data["checks"])


def test_rmatrix_constant_and_spectral(capsys):
    code, out, _ = run_cli(capsys, "rmatrix", "-n", "2")
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == 4
    assert [1, 1, "1"] in data["entries"]
    code, out, _ = run_cli(capsys, "rmatrix", "-n", "2", "--spectral")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"n", "A", "B"}
    code, out, _ = run_cli(capsys, "rmatrix", "-n", "2", "-z", "2/3",
                           "--r", "3", "--s", "5")
    assert code == 0
    data = json.loads(out)
    assert data["rows"] == 4


def test_rmatrix_z_evaluation_consistent(capsys):
    # R(0) must equal the constant R
    _, const_out, _ = run_cli(capsys, "rmatrix", "-n", "3")
    _, z0_out, _ = run_cli(capsys, "rmatrix", "-n", "3", "-z", "0")
    assert const_out == z0_out


def test_verify_commands_pass(capsys):
    for what, extra in (("ybe", []), ("braid", []), ("minpoly", []),
                        ("morphism", ["-k", "2"]), ("hopf", []),
                        ("jimbo", []), ("prop41", [])):
        code, out, _ = run_cli(capsys, "verify", what, "-n", "2", *extra)
        assert code == 0, what
        data = json.loads(out)
        assert data["ok"] is True
        assert data["check"] == what


def test_verify_minpoly_example(capsys):
    code, out, _ = run_cli(capsys, "verify", "minpoly", "-n", "3",
                           "--mode", "sampled", "--r", "2", "--s", "3")
    assert code == 0
    assert json.loads(out)["mode"] == "sampled"


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_ybe_spectral", lambda n, field: False)
    code, out, _ = run_cli(capsys, "verify", "ybe", "-n", "2")
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_verify_report_failure_exits_1(capsys, monkeypatch):
    import rsqg.uqrs as uqrs_mod

    class FakeReport:
        ok = False

        def to_json(self, field):
            return [{"relation": "antipode:e", "indices": [1], "ok": False}]

    monkeypatch.setattr(cli, "hopf_antipode_check", lambda rep: FakeReport())
    code, out, _ = run_cli(capsys, "verify", "hopf", "-n", "2")
    assert code == 1
    data = json.loads(out)
    assert data["ok"] is False and data["checks"][0]["ok"] is False


def test_wedge_build_and_verify(capsys):
    code, out, _ = run_cli(capsys, "wedge", "-n", "3", "-k", "2")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3
    assert data["labels"] == [[1, 2], [1, 3], [2, 3]]
    code, out, _ = run_cli(capsys, "wedge", "verify", "-n", "3", "-k", "2")
    assert code == 0
    data = json.loads(out)
    assert data["check"] == "fundamental" and data["ok"] is True


def test_wedge_verify_out_of_range_exits_2(capsys):
    code, _, err = run_cli(capsys, "wedge", "verify", "-n", "2", "-k", "3")
    assert code == 2
    assert "1 <= k <= n" in err


def test_weights_output(capsys):
    code, out, _ = run_cli(capsys, "weights", "-n", "2", "-k", "2")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 4
    assert data["weights"] == [{"weight": [2, 0], "dim": 1},
                               {"weight": [1, 1], "dim": 2},
                               {"weight": [0, 2], "dim": 1}]


def test_output_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        _, out, _ = run_cli(capsys, "wedge", "-n", "3", "-k", "2")
        runs.append(out)
    assert runs[0] == runs[1]
    for _ in range(2):
        _, out, _ = run_cli(capsys, "rmatrix", "-n", "3", "--spectral",
                            "--symbolic")
        runs.append(out)
    assert runs[2] == runs[3]


def test_output_to_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "rmatrix", "-n", "2", "-o", str(path))
    assert code == 0
    assert out == ""
    data = json.loads(path.read_text())
    assert data["rows"] == 4
    assert path.read_text().endswith("}\n")


def test_no_trailing_whitespace(capsys):
    _, out, _ = run_cli(capsys, "verify", "braid", "-n", "2")
    for line in out.splitlines():
        assert line == line.rstrip()
    assert out.endswith("\n") and not out.endswith("\n\n")
