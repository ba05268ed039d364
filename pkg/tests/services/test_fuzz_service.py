"""
Tests for the seeded fuzz harnesses.
"""
import pytest

from app.schemas.tqft.reports import FuzzFailure, FuzzReport
from app.services.fuzz_service import fuzz_service


@pytest.mark.unit
class TestCerfFuzz:
    """Test cases for cerf_fuzz"""

    def test_small_run_passes(self, qxy):
        report = fuzz_service.cerf_fuzz(qxy, seed=0, count=10, max_width=3, max_layers=4)
        assert report.passed, report.render()
        assert report.cases == 10
        assert report.moves > 0
        assert report.render().startswith("PASS cerf-fuzz: 10 words")

    def test_deterministic(self, n2):
        first = fuzz_service.cerf_fuzz(n2, seed=5, count=5, max_width=3, max_layers=4)
        second = fuzz_service.cerf_fuzz(n2, seed=5, count=5, max_width=3, max_layers=4)
        assert first.moves == second.moves
        assert first.render() == second.render()


@pytest.mark.unit
class TestOracleFuzz:
    """Test cases for oracle_fuzz"""

    def test_small_run_passes(self, sum13):
        report = fuzz_service.oracle_fuzz(sum13, seed=3, count=20, max_width=3, max_layers=5)
        assert report.passed, report.render()
        assert report.render() == "PASS oracle-fuzz: 20 words, 0 failures"


@pytest.mark.unit
class TestFuzzReport:
    """Test cases for FuzzReport rendering"""

    def test_failure_line(self):
        report = FuzzReport(title="cerf-fuzz", cases=3, moves=7, with_moves=True)
        report.failures.append(FuzzFailure(case=2, word="mul", move="unit_left@0:0", reason="operator changed"))
        lines = report.render().splitlines()
        assert lines[0] == "FAIL cerf-fuzz: 3 words, 7 move instances, 1 failures"
        assert lines[1] == "first failure: case 2 move unit_left@0:0: operator changed: mul"
