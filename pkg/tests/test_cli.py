import json

from click.testing import CliRunner

from sela.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_tsa_human_output():
    res = run("tsa", "--algebra", "matrix:2", "--ell", "2")
    assert res.exit_code == 0
    assert "dim: 10" in res.output
    assert "center_dim: 2" in res.output


def test_seligman_certified_exit_zero():
    res = run("--json", "seligman", "--algebra", "truncpoly:2",
              "--n", "2", "--lambda", "2")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["claims"][0]["data"]["dim"] == 3


def test_seligman_quaternion_case():
    res = run("--json", "seligman", "--algebra", "quaternion:1,-1",
              "--n", "4", "--lambda", "1,1,0")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["claims"][0]["data"]["dim"] == 4
    assert report["claims"][0]["data"]["iso"] is True


def test_weyl_stable_exit_two():
    res = run("weyl", "--algebra", "field", "--n", "2", "--lambda", "2",
              "--depth", "4")
    assert res.exit_code == 2


def test_bad_lambda_is_usage_error():
    res = run("seligman", "--algebra", "truncpoly:2", "--n", "2",
              "--lambda", "x")
    assert res.exit_code != 0


def test_negative_lambda_rejected():
    res = run("seligman", "--algebra", "truncpoly:2", "--n", "2",
              "--lambda", "-1")
    assert res.exit_code != 0


def test_bad_algebra_exit_one():
    res = run("tsa", "--algebra", "nope:1", "--ell", "1")
    assert res.exit_code == 1


def test_output_file(tmp_path):
    out = tmp_path / "report.json"
    res = run("--output", str(out), "tsa", "--algebra", "truncpoly:2",
              "--ell", "3")
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    assert report["claims"][0]["data"]["dim"] == 4


def test_json_flag_emits_report_schema():
    res = run("--json", "symcheck", "--algebra", "matrix:2", "--map",
              "trace", "--ell", "2", "--order", "3")
    report = json.loads(res.output)
    assert set(report) == {"command", "config", "claims", "timing"}
    assert report["claims"][0]["data"]["holds"] is True
