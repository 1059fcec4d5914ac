"""Tests for the command-line interface."""

# pylint: disable=redefined-outer-name

import io
import json

import pytest

from satblock.cli import (
    EXIT_CONSTRUCTION_ERROR,
    EXIT_INPUT_ERROR,
    EXIT_NOT_BLOCKER,
    EXIT_SATURATED,
    EXIT_UNSATURATED,
    parse_range,
    run,
)
from satblock.const import CAPACITY_ENV


@pytest.fixture
def stdin(monkeypatch):
    """Feed text to the CLI through standard input."""

    def feed(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    return feed


def _json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


class TestCheck:
    """The check command."""

    def test_near_minimum(self, stdin, capsys, b65):
        """B(6,5) is saturated and classified as a bouquet."""
        stdin(json.dumps({"n": 6, "edges": b65.pairs()}))
        assert run(["check", "--stable"]) == EXIT_SATURATED
        (row,) = _json_lines(capsys.readouterr().out)
        assert row["is_saturated"] is True
        assert row["classification"] == "bouquet"
        assert row["stability_distance"] == 3
        assert "elapsed_ms" not in row

    def test_minimum_shape(self, stdin, capsys, pentagon_net):
        """Minimum blockers report their recognized shape."""
        stdin(json.dumps({"n": 5, "edges": pentagon_net.pairs()}))
        assert run(["check"]) == EXIT_SATURATED
        (row,) = _json_lines(capsys.readouterr().out)
        assert row["min_shape"] == "rotation=0 m=2 beams=[]"

    def test_file_input(self, tmp_path, capsys, pentagon_net):
        """Documents can be read from a path."""
        path = tmp_path / "blocker.json"
        path.write_text(json.dumps({"n": 5, "edges": pentagon_net.pairs()}), encoding="utf-8")
        assert run(["check", str(path), "--format", "csv"]) == EXIT_SATURATED
        assert capsys.readouterr().out.startswith("n,t,")

    def test_not_blocker(self, stdin, capsys):
        """A single diagonal misses triangulations."""
        stdin('{"n": 6, "edges": [[0, 2]]}')
        assert run(["check"]) == EXIT_NOT_BLOCKER
        (row,) = _json_lines(capsys.readouterr().out)
        assert row["is_blocker"] is False

    def test_unsaturated(self, stdin, b65):
        """Adding a free diagonal keeps blocking but breaks saturation."""
        stdin(json.dumps({"n": 6, "edges": b65.pairs() + [(0, 2)]}))
        assert run(["check"]) == EXIT_UNSATURATED

    @pytest.mark.parametrize(
        "text",
        ['{"n": 5, "edges": [[0, 1]]}', '{"n": 5, "edges": [[0, 9]]}', "not json"],
    )
    def test_input_errors(self, stdin, capsys, text):
        """Bad documents exit with the input-error status."""
        stdin(text)
        assert run(["check"]) == EXIT_INPUT_ERROR
        assert "Error" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """An unreadable path is an input error."""
        assert run(["check", str(tmp_path / "missing.json")]) == EXIT_INPUT_ERROR

    def test_usage_error(self):
        """Unknown options exit with the input-error status."""
        with pytest.raises(SystemExit) as info:
            run(["check", "--bogus"])
        assert info.value.code == EXIT_INPUT_ERROR


class TestConstruct:
    """The construct command."""

    def test_spectrum(self, capsys):
        """Spectrum documents name the band that built them."""
        assert run(["construct", "--spectrum", "10", "8"]) == EXIT_SATURATED
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 10
        assert len(doc["edges"]) == 8
        assert doc["metadata"]["construction"] == "quadrilateral-band"

    def test_unreachable(self, capsys):
        """Sizes outside the spectrum are construction errors."""
        assert run(["construct", "--spectrum", "10", "1000"]) == EXIT_CONSTRUCTION_ERROR
        assert "outside" in capsys.readouterr().err

    def test_min_blocker(self, capsys, pentagon_net):
        """The pentagon net comes back as a document."""
        assert run(["construct", "--min", "5", "--m", "2"]) == EXIT_SATURATED
        doc = json.loads(capsys.readouterr().out)
        assert [tuple(edge) for edge in doc["edges"]] == pentagon_net.pairs()
        assert doc["metadata"] == {"construction": "min-blocker", "parameters": "n=5 m=2"}

    def test_missing_parameter(self):
        """Families with required parameters refuse to guess."""
        assert run(["construct", "--seagull", "7", "--m", "4"]) == EXIT_CONSTRUCTION_ERROR

    def test_output_checks(self, tmp_path, capsys):
        """A constructed document passes check."""
        path = tmp_path / "seagull.json"
        args = ["construct", "--seagull", "7", "--ell", "3", "--m", "4", "--out", str(path)]
        assert run(args) == EXIT_SATURATED
        assert run(["check", str(path)]) == EXIT_SATURATED
        (row,) = _json_lines(capsys.readouterr().out)
        assert row["classification"] == "seagull"
        assert row["source"] == "seagull"


class TestSweep:
    """The sweep command."""

    def test_exhaustive(self, capsys):
        """The hexagon sweep lists every blocker and a summary."""
        assert run(["sweep", "--exhaustive", "6", "--stable"]) == EXIT_SATURATED
        lines = _json_lines(capsys.readouterr().out)
        summary = lines[-1]["summary"]
        assert summary["failed"] == 0
        assert summary["spectrum"] == [4, 5]
        assert summary["orbits"] == {"4": 3, "5": 1}
        assert summary["group"] == "rotation"
        assert summary["passed"] == len(lines) - 1
        assert {row["t"] for row in lines[:-1]} == {4, 5}

    def test_stable_is_deterministic(self, capsys):
        """Stable sweeps repeat byte for byte."""
        run(["sweep", "--exhaustive", "5", "--stable"])
        first = capsys.readouterr().out
        run(["sweep", "--exhaustive", "5", "--stable"])
        assert capsys.readouterr().out == first

    def test_capacity_guard(self, monkeypatch):
        """The exhaustive sweep honours the capacity override."""
        monkeypatch.setenv(CAPACITY_ENV, "exhaustive=5")
        assert run(["sweep", "--exhaustive", "6"]) == EXIT_CONSTRUCTION_ERROR

    def test_spectrum(self, capsys):
        """Every size from n - 2 to the reachable maximum is built."""
        assert run(["sweep", "--spectrum", "10..10", "--stable"]) == EXIT_SATURATED
        lines = _json_lines(capsys.readouterr().out)
        assert [row["t"] for row in lines[:-1]] == list(range(8, 15))
        assert lines[-1]["summary"] == {"passed": 7, "failed": 0}

    def test_coefficients_csv(self, tmp_path, capsys):
        """Coefficient tables are written as CSV with the summary on stderr."""
        path = tmp_path / "coefficients.csv"
        args = ["sweep", "--coefficients", "0..4", "--format", "csv", "--out", str(path)]
        assert run(args) == EXIT_SATURATED
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "i,a,b,c,matches_closed_form"
        assert len(lines) == 6
        assert '"passed": 5' in capsys.readouterr().err

    def test_trend(self, capsys):
        """The reachable maximum stays above n^2/4."""
        assert run(["sweep", "--trend", "40..60:20"]) == EXIT_SATURATED
        lines = _json_lines(capsys.readouterr().out)
        assert [row["n"] for row in lines[:-1]] == [40, 60]
        assert all(row["quarter_floor"] for row in lines[:-1])


class TestRender:
    """The render command."""

    def test_render(self, stdin, capsys, b65):
        """SVG goes to stdout."""
        stdin(json.dumps({"n": 6, "edges": b65.pairs()}))
        assert run(["render", "--special"]) == EXIT_SATURATED
        out = capsys.readouterr().out
        assert out.startswith("<svg")
        assert 'class="special"' in out

    def test_witness_on_blocker(self, stdin, capsys, b65):
        """A blocker has no witness, which is only a warning."""
        stdin(json.dumps({"n": 6, "edges": b65.pairs()}))
        assert run(["render", "--witness"]) == EXIT_SATURATED
        captured = capsys.readouterr()
        assert 'class="witness"' not in captured.out
        assert "no witness" in captured.err


class TestParseRange:
    """Range arguments."""

    def test_forms(self):
        """Single values, spans and steps."""
        assert parse_range("7") == range(7, 8)
        assert parse_range("3..5") == range(3, 6)
        assert parse_range("10..30:10") == range(10, 31, 10)

    @pytest.mark.parametrize("text", ["a..b", "5..3", "1..4:0"])
    def test_invalid(self, text):
        """Malformed ranges are rejected."""
        with pytest.raises(Exception, match="invalid range"):
            parse_range(text)
