"""Command line interface: documents in, JSON/SVG out, exit codes."""

import json

import pytest
from click.testing import CliRunner

from manhattan_voronoi.cli import main
from manhattan_voronoi.scalars import Q, to_scalar


@pytest.fixture
def runner():
    return CliRunner()


def doc(width="1", height="1", white=None, black=None):
    out = {"rect": {"width": width, "height": height}, "white": white or [["1/2", "1/2"]]}
    if black is not None:
        out["black"] = black
    return out


class TestDiagram:
    def test_json_output_conserves_area(self, runner):
        body = doc(white=[["1/4", "1/2"], ["3/4", "1/2"]])
        res = runner.invoke(main, ["diagram"], input=json.dumps(body))
        assert res.exit_code == 0
        out = json.loads(res.output)
        total = sum(to_scalar(c["area"]) for c in out["cells"])
        assert total + to_scalar(out["neutral_area"]) == Q(1)

    def test_svg_file(self, runner, tmp_path):
        target = tmp_path / "dia.svg"
        res = runner.invoke(
            main, ["diagram", "--svg", str(target)], input=json.dumps(doc())
        )
        assert res.exit_code == 0
        text = target.read_text()
        assert text.startswith("<?xml")
        assert "<svg" in text

    def test_award_horizontal_tie(self, runner):
        body = doc(white=[["1/4", "1/4"], ["3/4", "3/4"]])
        res = runner.invoke(main, ["diagram", "--tie", "award-horizontal"], input=json.dumps(body))
        out = json.loads(res.output)
        assert to_scalar(out["neutral_area"]) == 0

    def test_malformed_json_exits_3(self, runner):
        res = runner.invoke(main, ["diagram"], input="{not json")
        assert res.exit_code == 3
        assert json.loads(res.stderr)["code"] == "bad-json"

    def test_point_outside_exits_4(self, runner):
        body = doc(white=[["2", "2"]])
        res = runner.invoke(main, ["diagram"], input=json.dumps(body))
        assert res.exit_code == 4
        assert json.loads(res.stderr)["code"] == "point-outside"

    def test_duplicate_point_exits_4(self, runner):
        body = doc(white=[["1/2", "1/2"], ["1/2", "1/2"]])
        res = runner.invoke(main, ["diagram"], input=json.dumps(body))
        assert res.exit_code == 4
        assert json.loads(res.stderr)["code"] == "duplicate-point"


class TestBalance:
    def test_balanced_grid_exits_0(self, runner):
        body = doc(width="2", white=[["1/2", "1/2"], ["3/2", "1/2"]])
        res = runner.invoke(main, ["balance"], input=json.dumps(body))
        assert res.exit_code == 0
        assert json.loads(res.output)["balanced"] is True

    def test_unbalanced_exits_1(self, runner):
        body = doc(width="2", white=[["1/2", "1/2"], ["5/4", "1/2"]])
        res = runner.invoke(main, ["balance"], input=json.dumps(body))
        assert res.exit_code == 1
        assert json.loads(res.output)["balanced"] is False


class TestAtomic:
    def test_r3_width(self, runner):
        res = runner.invoke(main, ["atomic", "R3"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert to_scalar(out["rect"]["width"]) == Q(36, 49)
        assert len(out["white"]) == 3

    def test_r2_with_rho(self, runner):
        res = runner.invoke(main, ["atomic", "R2", "--rho", "5/4"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert to_scalar(out["rect"]["width"]) == Q(5, 4)

    def test_grid(self, runner):
        res = runner.invoke(main, ["atomic", "grid", "--rows", "2", "--cols", "2"])
        assert res.exit_code == 0
        assert len(json.loads(res.output)["white"]) == 4

    def test_unknown_block_exits_5(self, runner):
        res = runner.invoke(main, ["atomic", "R9"])
        assert res.exit_code == 5
        assert json.loads(res.stderr)["code"] == "bad-block"


class TestConcatAndEncode:
    def test_concat_r3_r5(self, runner):
        res = runner.invoke(main, ["concat", "R3", "R5"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert to_scalar(out["rect"]["width"]) == Q(96, 49)
        assert len(out["white"]) == 8

    def test_concat_r2_spec(self, runner):
        res = runner.invoke(main, ["concat", "R2:9/8", "R2:9/8"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert to_scalar(out["rect"]["width"]) == Q(9, 4)

    def test_encode(self, runner):
        res = runner.invoke(main, ["encode", "01"])
        assert res.exit_code == 0
        out = json.loads(res.output)
        # per bit: a mirrored pair of width 72/49, plus 60/49 for a one-bit
        assert to_scalar(out["rect"]["width"]) == Q(72 + 72 + 60, 49)

    def test_encode_rejects_other_symbols(self, runner):
        res = runner.invoke(main, ["encode", "012"])
        assert res.exit_code == 5


class TestGame:
    def test_score(self, runner):
        body = doc(white=[["1/2", "1/2"]], black=[["1/4", "1/2"]])
        res = runner.invoke(main, ["game", "score"], input=json.dumps(body))
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["winner"] == "white"
        assert to_scalar(out["white"]) == Q(5, 8)

    def test_score_needs_black(self, runner):
        res = runner.invoke(main, ["game", "score"], input=json.dumps(doc()))
        assert res.exit_code == 4
        assert json.loads(res.stderr)["code"] == "missing-black"

    def test_respond_centered_point(self, runner):
        res = runner.invoke(
            main, ["game", "respond", "--resolution", "8"], input=json.dumps(doc())
        )
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert len(out["black"]) == 1
        assert out["score"]["winner"] in ("white", "tie", "black")

    def test_respond_unbalanced_white_wins_black(self, runner):
        body = doc(white=[["1/4", "1/2"]])
        res = runner.invoke(
            main, ["game", "respond", "--resolution", "8"], input=json.dumps(body)
        )
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["score"]["winner"] == "black"

    def test_verdict(self, runner):
        res = runner.invoke(main, ["game", "verdict", "--n", "2", "--rho", "3/2"])
        assert json.loads(res.output)["winner"] == "black"
        res = runner.invoke(main, ["game", "verdict", "--n", "2", "--rho", "2"])
        assert json.loads(res.output)["winner"] == "white"

    def test_verdict_bad_parameter_exits_5(self, runner):
        res = runner.invoke(main, ["game", "verdict", "--n", "0", "--rho", "1"])
        assert res.exit_code == 5
