import json

import pytest
from click.testing import CliRunner

import wcqsym
from wcqsym.verify import SUITES
from wcqsym_cli.cli import cli
from wcqsym_cli.output import OutputRecord

runner = CliRunner()


@pytest.mark.parametrize(
    ["args", "expected"],
    [
        ("renorm 0", "-t - 1/2"),
        ("renorm 0,0", "1/2*t^2 + t + 3/8"),
        ("renorm 0,0,0", "-1/6*t^3 - 3/4*t^2 - 23/24*t - 5/16"),
        ("renorm 2,1", "M[2,1]"),
        ("renorm 1,0", "-(t+3/2)*M[1] - M[0,1]"),
        ("renorm 0,1,0", "-(t+5/2)*M[0,1] - 2*M[0,0,1]"),
        ("renorm 1,0,0", "(1/2*t^2+2*t+15/8)*M[1] + (t+5/2)*M[0,1] + M[0,0,1]"),
        ("renorm 1,0 --delta 3", "-(t+3/2)*M[1] - M[0,1]"),
        ("product 1 0", "M[1,0] + M[0,1] + M[1]"),
        ("product 0 0", "2*M[0,0] + M[0]"),
        ("coproduct 1,0", "M[] (x) M[1,0] + M[1] (x) M[0] + M[1,0] (x) M[]"),
        ("antipode 1,0", "M[0,1] + M[1]"),
        ("antipode 2", "-M[2]"),
        ("antipode 0,0,1", "-M[1,0,0] - 2*M[1,0] - M[1]"),
        ("phi 0 1 --window=-1:1", "z^-1: -1; z^0: -t-1/2; z^1: -1/2*t^2-1/2*t-1/12"),
        ("phi 0 2 --window=-1:0", "z^-1: -1/2; z^0: -t-1/2"),
        ("phi 2 1 --window=-1:0", "z^0: M[2]"),
        ("directional 1,0 2,1", "-(t+3/2)*M[1] - M[0,1]"),
        ("directional 0,1 1,3", "M[0,1]"),
        ("stirling 1 1", "M[0,1] + M[1]"),
        ("stirling 1 2", "2*M[0,0,1] + 3*M[0,1] + M[1]"),
        ("renorm 1 --expand 2", "M[1]\n(1)*x_1 + (1)*x_2"),
        ("renorm 0 --expand 1", "-t - 1/2\n(-1/2 - t)"),
        ("renorm 0,0 --expand 1", "1/2*t^2 + t + 3/8\n(3/8 + t + 1/2*t^2)"),
    ],
)
def test_commands(args, expected):
    res = runner.invoke(cli, args.split())
    assert res.exit_code == 0
    assert res.output == expected + "\n"


def test_empty_composition():
    res = runner.invoke(cli, ["renorm", ""])
    assert res.exit_code == 0
    assert res.output == "1\n"


@pytest.mark.parametrize(
    "args",
    [
        "renorm a,b",
        "renorm 1,-1",
        "renorm 0 --delta 0",
        "phi 0,0 1",
        "phi 0 0",
        "phi 0 1 --window=1:0",
        "phi 0 1 --window=a:b",
        "phi 0 1 --window=3",
        "directional 1 1,1",
        "stirling 1,0 0,0",
        "stirling 1 0,0",
        "verify nonexistent",
        "verify bounds --max-size 0",
    ],
)
def test_usage_errors(args):
    res = runner.invoke(cli, args.split())
    assert res.exit_code == 2


def test_window_too_small():
    res = runner.invoke(cli, "phi 0,0 1,1 --window=-1:1".split())
    assert res.exit_code == 1
    assert "Regularization failed" in res.output


def test_check_delta():
    res = runner.invoke(cli, "renorm 1,0 --check-delta".split())
    assert res.exit_code == 0
    assert "-(t+3/2)*M[1] - M[0,1]" in res.output


def test_delta_envvar():
    res = runner.invoke(cli, "renorm 0,0 --json".split(), env={"WCQSYM_DELTA": "3"})
    assert res.exit_code == 0
    assert json.loads(res.output)["meta"]["delta"] == 3


def test_json():
    res = runner.invoke(cli, "renorm 0,0 --json".split())
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc == {
        "basis": "M-lwc-tpoly",
        "meta": {"alpha": [0, 0], "command": "renorm", "delta": 1},
        "terms": [{"coeff": ["3/8", "1", "1/2"], "index": []}],
    }


def test_json_series():
    res = runner.invoke(cli, "phi 0 2 --window=-1:0 --json".split())
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["basis"] == "series"
    assert doc["meta"]["window"] == [-1, 0]
    assert doc["terms"] == [
        {"coeff": ["-1/2"], "index": [-1, []]},
        {"coeff": ["-1/2", "-1"], "index": [0, []]},
    ]


@pytest.mark.parametrize(
    "args",
    [
        "renorm 1,0,0",
        "renorm 0,0",
        "product 1 0,1",
        "coproduct 0,1,0",
        "antipode 0,2,1",
        "phi 1,0 2,1",
        "stirling 1,2 1,1",
        "directional 0,1,0 1,2,1",
    ],
)
def test_json_round_trip(args):
    text = runner.invoke(cli, args.split())
    res = runner.invoke(cli, args.split() + ["--json"])
    assert text.exit_code == 0 and res.exit_code == 0

    record = OutputRecord.from_json(res.output)
    assert record.to_json() + "\n" == res.output
    assert record.render() + "\n" == text.output


def test_verify():
    res = runner.invoke(cli, "verify bounds --max-size 1".split())
    assert res.exit_code == 0
    assert "bounds" in res.output
    assert "PASS" in res.output


def test_verify_failure(monkeypatch):
    monkeypatch.setitem(SUITES, "bounds", lambda max_size: [("always", lambda: "boom")])
    res = runner.invoke(cli, "verify bounds".split())
    assert res.exit_code == 1
    assert "FAIL" in res.output
    assert "Counterexample" in res.output
    assert "boom" in res.output


@pytest.mark.slow
def test_verify_all():
    res = runner.invoke(cli, "verify all -k 2 -m".split())
    assert res.exit_code == 0
    assert "FAIL" not in res.output


def test_version():
    res = runner.invoke(cli, ["--version"])
    assert res.exit_code == 0
    assert wcqsym.__version__ in res.output
