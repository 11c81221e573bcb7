"""
Tests for the theorem verification harnesses at small bounds.
"""
import pytest

from src.oracle.theorems import (
    TheoremReport,
    bundled_scenarios,
    reports_frame,
    verify_all,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    verify_theorem5,
)


class TestTheoremReport:

    def test_passed(self):
        """Should pass until a violation is recorded."""
        report = TheoremReport("theorem1", instances_checked=3)
        assert report.passed
        report.violate("α=p")
        assert not report.passed
        assert report.to_record()["first"] == "α=p"

    def test_frame(self):
        """Should tabulate one row per theorem."""
        frame = reports_frame([TheoremReport("theorem1"), TheoremReport("theorem2")])
        assert list(frame.columns) == ["theorem", "checked", "violations", "extras", "excluded", "first"]
        assert list(frame["theorem"]) == ["theorem1", "theorem2"]


class TestHarnesses:

    def test_abduction_subsumed(self):
        """Should find every abductive explanation and some extras."""
        report = verify_theorem1(vocab_size=2, max_literals=2)
        assert report.passed, report.violations[:3]
        assert report.instances_checked == 15 * 9 * 9
        assert report.extras >= 1

    def test_equivalent_agents(self):
        """Should find equivalent agents agreeing on explanations."""
        report = verify_theorem2()
        assert report.passed, report.violations[:3]
        assert report.instances_checked > 0
        assert report.premise_excluded > 0

    def test_correct_nested_beliefs(self):
        """Should find projected agents holding correct beliefs about each other."""
        report = verify_theorem3()
        assert report.passed, report.violations[:3]
        assert report.instances_checked > 0

    def test_possibility(self, wet_floor):
        """Should find every explanation making β possible."""
        report = verify_theorem4([wet_floor], max_literals=1)
        assert report.passed, report.violations[:3]
        assert report.instances_checked == 3 * 7 * 7

    def test_adequate_optimal_sets(self, wet_floor, scenario):
        """Should find equal optimal sets wherever the model is adequate."""
        report = verify_theorem5([wet_floor, scenario("wet_floor_inadequate_1")])
        assert report.passed, report.violations[:3]
        assert report.instances_checked > 0
        assert report.premise_excluded >= 1

    def test_vocabulary_bound(self):
        """Should refuse vocabularies outside the supported range."""
        with pytest.raises(ValueError):
            verify_theorem1(vocab_size=6)


class TestBundled:

    def test_bundled_scenarios(self, fixtures_dir):
        """Should load every bundled scenario."""
        assert len(bundled_scenarios(fixtures_dir)) == 7

    @pytest.mark.slow
    def test_default_bounds(self, fixtures_dir):
        """Should pass every harness at the configured bounds."""
        reports = verify_all(bundled_scenarios(fixtures_dir))
        assert [r.theorem for r in reports] == ["theorem1", "theorem2", "theorem3", "theorem4", "theorem5"]
        assert all(r.passed for r in reports), reports_frame(reports).to_dict("records")
