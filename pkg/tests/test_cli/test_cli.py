"""
End-to-end tests for the command-line front end.
"""
import json

import pytest

from src.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, run


@pytest.fixture
def fixture(fixtures_dir):
    def path(name: str) -> str:
        return str(fixtures_dir / f"{name}.scn")

    return path


class TestCheck:

    def test_formula_true(self, fixture, capsys):
        """Should print true and exit 0."""
        assert run(["check", fixture("wet_floor"), "B[mary] wetFloor"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "true"

    def test_formula_false(self, fixture, capsys):
        """Should print false and exit 1."""
        assert run(["check", fixture("wet_floor"), "B[bob] wetFloor"]) == EXIT_NEGATIVE
        assert capsys.readouterr().out.strip() == "false"

    def test_bundled_queries(self, fixture, capsys):
        """Should run the scenario's own queries when no formula is given."""
        assert run(["--format", "records", "check", fixture("wet_floor")]) == EXIT_OK
        records = json.loads(capsys.readouterr().out)
        assert len(records) == 11
        assert all(r["ok"] for r in records)

    def test_table_output(self, fixture, capsys):
        """Should render a text table by default."""
        assert run(["check", fixture("wet_floor_nested")]) == EXIT_OK
        out = capsys.readouterr().out
        assert "formula" in out
        assert "false" not in out

    def test_propositional_formula(self, fixture, capsys):
        """Should refuse a formula that is not an agent formula."""
        assert run(["check", fixture("wet_floor"), "rain"]) == EXIT_ERROR
        assert "error:" in capsys.readouterr().err


class TestExplain:

    @pytest.mark.parametrize("explainee", ["bob", "tom"])
    def test_matches_golden(self, fixture, golden, capsys, explainee):
        """Should emit the golden ranked table as records."""
        code = run([
            "--format", "records", "explain", fixture("wet_floor"),
            "--explainer", "mary", "--explainee", explainee, "--explanandum", "wetFloor",
        ])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out) == golden(f"explain_mary_{explainee}_wet_floor.json")

    def test_top(self, fixture, capsys):
        """Should truncate to the requested number of results."""
        run([
            "--format", "records", "explain", fixture("wet_floor"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor", "--top", "1",
        ])
        assert [r["candidate"] for r in json.loads(capsys.readouterr().out)] == ["rain"]

    def test_bad_order(self, fixture, capsys):
        """Should exit 2 for an unknown ranking criterion."""
        code = run([
            "explain", fixture("wet_floor"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor", "--order", "brevity",
        ])
        assert code == EXIT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_undeclared_abducible(self, fixture, capsys):
        """Should exit 2 with a named error for an abducible outside the vocabulary."""
        code = run([
            "explain", fixture("wet_floor"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor", "--abducibles", "snow",
        ])
        assert code == EXIT_ERROR
        assert "error: UnknownSymbol" in capsys.readouterr().err

    def test_law_entailed_belief_literal(self, write_scenario, capsys):
        """Should rank a modal pool even when a belief literal cannot be contracted."""
        path = write_scenario({
            "agents": ["mary", "bob"],
            "vocabulary": ["rain", "holeInRoof", "wetFloor"],
            "laws": ["holeInRoof", "rain & holeInRoof -> wetFloor"],
            "depth": 2,
            "beliefs": {"mary": [["rain", "wetFloor"]], "bob": [["~rain", "~wetFloor"]]},
            "nested": {"mary.bob": [["~rain", "~wetFloor"]]},
        })
        code = run([
            "--format", "records", "explain", str(path),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor", "--modal-depth", "1",
        ])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)[0]["candidate"] == "rain"


class TestDiscrepancies:

    def test_from_perspective(self, fixture, capsys):
        """Should list wetFloor as a discrepancy Mary sees with Bob."""
        code = run([
            "--format", "records", "discrepancies", fixture("wet_floor"),
            "--between", "mary,bob", "--perspective", "mary",
        ])
        assert code == EXIT_OK
        found = [r["discrepancy"] for r in json.loads(capsys.readouterr().out)]
        assert "wetFloor" in found

    def test_none_found(self, fixture, capsys):
        """Should exit 1 when there is nothing to list."""
        assert run(["discrepancies", fixture("wet_floor"), "--between", "bob,bob"]) == EXIT_NEGATIVE

    def test_bad_pair(self, fixture, capsys):
        """Should exit 2 unless exactly two agents are given."""
        assert run(["discrepancies", fixture("wet_floor"), "--between", "mary"]) == EXIT_ERROR
        assert "error:" in capsys.readouterr().err


class TestAdequacy:

    def test_adequate(self, fixture, capsys):
        """Should report Mary's faithful model of Bob as adequate."""
        code = run([
            "adequacy", fixture("wet_floor"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor",
        ])
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "adequate"

    def test_inadequate(self, fixture, capsys):
        """Should report the forgotten hole with rain as missed."""
        code = run([
            "--format", "records", "adequacy", fixture("wet_floor_inadequate_1"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor",
        ])
        assert code == EXIT_NEGATIVE
        record = json.loads(capsys.readouterr().out)
        assert record == {"adequate": False, "witnesses": ["rain"], "spurious": [], "missed": ["rain"]}

    def test_inadequate_table(self, fixture, capsys):
        """Should print the verdict before the witnesses."""
        run([
            "adequacy", fixture("wet_floor_inadequate_1"),
            "--explainer", "mary", "--explainee", "bob", "--explanandum", "wetFloor",
        ])
        out = capsys.readouterr().out
        assert out.startswith("inadequate")
        assert "missed" in out


class TestPostulates:

    def test_dalal(self, capsys):
        """Should pass the core postulates for Dalal revision."""
        assert run(["--format", "records", "postulates", "--operator", "dalal"]) == EXIT_OK
        records = json.loads(capsys.readouterr().out)
        assert all(r["passed"] for r in records if r["core"])

    def test_empty_vocabulary(self, capsys):
        """Should exit 2 without symbols."""
        assert run(["postulates", "--vocab", " , "]) == EXIT_ERROR


class TestErrors:

    def test_missing_file(self, tmp_path, capsys):
        """Should exit 2 with a named error for a missing scenario."""
        assert run(["check", str(tmp_path / "absent.scn")]) == EXIT_ERROR
        err = capsys.readouterr().err
        assert "error: ScenarioParseError" in err
        assert err.count("ScenarioParseError") == 1

    def test_unknown_command(self, capsys):
        """Should exit 2 for an unknown subcommand."""
        assert run(["summon"]) == EXIT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_help(self, capsys):
        """Should exit 0 for --help."""
        assert run(["--help"]) == EXIT_OK
        assert "verify-theorems" in capsys.readouterr().out
