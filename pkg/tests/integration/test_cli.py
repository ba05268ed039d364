"""
Integration tests for the command line: every command end to end through run_cli.
"""
import io
import json
from pathlib import Path

import pytest

from main import run_cli


@pytest.fixture
def cli(examples_dir):
    """Run the CLI and return (exit code, stdout, stderr); ``{name}`` expands to a shipped file"""

    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        args = [a.format(**{p.stem: str(p) for p in examples_dir.glob("*.alg")}) for a in argv]
        code = run_cli(args, stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return run


def _write(tmp_path: Path, document) -> str:
    path = tmp_path / "custom.alg"
    path.write_text(document if isinstance(document, str) else json.dumps(document), encoding="utf-8")
    return str(path)


@pytest.mark.integration
class TestAlgebraCommands:
    """Test cases for check, decompose and classify"""

    @pytest.mark.parametrize("name", ["s2", "n2", "qx4", "qxy", "sum13"])
    def test_check_shipped(self, cli, name):
        code, out, _ = cli("check", "--algebra", "{" + name + "}")
        assert code == 0
        assert out.splitlines()[-1] == "all 7 checks passed"

    def test_check_degenerate_mu(self, cli, tmp_path):
        document = {
            "field": "Q",
            "dim": 2,
            "basis": ["e", "n"],
            "unit": ["1", "0"],
            "mult": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
            "mu": ["1", "0"],
        }
        code, out, err = cli("check", "--algebra", _write(tmp_path, document))
        assert code == 1
        assert out == ""
        assert err.strip() == "error: pairing mu(ab) is degenerate; kernel witness (0, 1)"

    def test_check_non_commutative(self, cli, tmp_path):
        document = {
            "field": "Q",
            "dim": 2,
            "basis": ["e", "n"],
            "unit": ["1", "0"],
            "mult": [[["1", "0"], ["0", "1"]], [["0", "0"], ["0", "0"]]],
            "mu": ["0", "1"],
        }
        code, _, err = cli("check", "--algebra", _write(tmp_path, document))
        assert code == 1
        assert "not commutative" in err

    def test_decompose_sum13(self, cli):
        code, out, _ = cli("decompose", "--algebra", "{sum13}")
        assert code == 0
        document = json.loads(out)
        assert [entry["lambda"] for entry in document] == ["1", "3"]
        assert [entry["idempotent"] for entry in document] == [["1/2", "1/2"], ["1/2", "-1/2"]]

    def test_classify_nilpotent(self, cli):
        code, out, _ = cli("classify", "--algebra", "{qx4}")
        assert code == 0
        (entry,) = json.loads(out)
        assert entry["classification"] == "nilpotent"
        assert entry["nilpotency_index"] == 4
        assert entry["socle"] == ["0", "0", "0", "1"]

    def test_classify_decomposable(self, cli):
        code, out, err = cli("classify", "--algebra", "{sum13}")
        assert code == 1
        assert out == ""
        assert "2 primitive idempotents" in err


@pytest.mark.integration
class TestEvaluationCommands:
    """Test cases for eval, invariant, sumcheck and counterexample"""

    def test_eval(self, cli):
        code, out, _ = cli("eval", "--algebra", "{n2}", "--word", "comul ; mul")
        assert code == 0
        assert out.splitlines() == ["operator 1 -> 1 (2x2)", "[0, 0]", "[2, 0]"]

    def test_eval_normal_form_prints_the_same(self, cli):
        word = "id , cup ; swap ; comul , id ; id , id , cap"
        _, direct, _ = cli("eval", "--algebra", "{qxy}", "--word", word)
        code, normal, _ = cli("eval", "--algebra", "{qxy}", "--word", word, "--normal")
        assert code == 0
        assert normal == direct

    def test_eval_syntax_error(self, cli):
        code, out, err = cli("eval", "--algebra", "{s2}", "--word", "mul ; ; cap")
        assert code == 2
        assert out == ""
        assert err.strip() == "error: syntax error at line 1, column 7: unexpected ';'"

    def test_eval_width_mismatch(self, cli):
        code, _, err = cli("eval", "--algebra", "{s2}", "--word", "mul ; mul")
        assert code == 2
        assert "width mismatch at layer 2" in err

    def test_eval_size_cap(self, cli):
        code, _, err = cli("eval", "--algebra", "{qx4}", "--word", "comul ; comul , id", "--size-cap", "100")
        assert code == 1
        assert "above the cap of 100" in err

    def test_invariant(self, cli):
        code, out, _ = cli("invariant", "--algebra", "{n2}", "--max-genus", "3")
        assert code == 0
        assert out.strip() == "g=0: 0, g=1: 2, g=2: 0, g=3: 0"

    def test_invariant_default_genus(self, cli):
        _, out, _ = cli("invariant", "--algebra", "{s2}")
        assert out.strip().endswith("g=6: 32")

    def test_sumcheck(self, cli):
        code, out, _ = cli("sumcheck", "--left", "{s2}", "--right", "{n2}")
        assert code == 0
        assert out.count("FAIL") == 0
        assert out.count("all 9 checks passed") == 6

    def test_sumcheck_custom_word(self, cli):
        code, out, _ = cli("sumcheck", "--left", "{s2}", "--right", "{n2}", "--word", "mul ; comul")
        assert code == 0
        assert out.splitlines()[0] == "direct sum: mul ; comul"

    def test_sumcheck_disconnected(self, cli):
        code, _, err = cli("sumcheck", "--left", "{s2}", "--right", "{n2}", "--word", "id , id")
        assert code == 1
        assert "needs a connected word" in err

    def test_counterexample(self, cli):
        code, out, _ = cli("counterexample")
        assert code == 0
        assert "(0,4,0,0,0,0,0)" in out
        assert "4 ≠ 3" in out


@pytest.mark.integration
class TestFuzzCommands:
    """Test cases for cerf-fuzz and oracle-fuzz"""

    def test_cerf_fuzz(self, cli):
        code, out, _ = cli("cerf-fuzz", "--algebra", "{n2}", "--count", "5", "--max-width", "3")
        assert code == 0
        assert out.startswith("PASS cerf-fuzz: 5 words")

    def test_oracle_fuzz(self, cli):
        code, out, _ = cli("oracle-fuzz", "--algebra", "{sum13}", "--count", "10", "--seed", "40")
        assert code == 0
        assert out.strip() == "PASS oracle-fuzz: 10 words, 0 failures"


@pytest.mark.integration
class TestUsageErrors:
    """Test cases for usage and input errors"""

    def test_no_command(self, cli):
        code, _, _ = cli()
        assert code == 2

    def test_help(self, cli, capsys):
        code, _, _ = cli("--help")
        assert code == 0
        assert "counterexample" in capsys.readouterr().out

    def test_missing_required_flag(self, cli):
        code, _, _ = cli("eval", "--algebra", "{s2}")
        assert code == 2

    def test_missing_file(self, cli, tmp_path):
        code, _, err = cli("check", "--algebra", str(tmp_path / "absent.alg"))
        assert code == 2
        assert "algebra file not found" in err

    def test_malformed_json(self, cli, tmp_path):
        code, _, err = cli("check", "--algebra", _write(tmp_path, "{"))
        assert code == 2
        assert "not valid JSON" in err

    def test_unknown_field(self, cli, tmp_path):
        document = {"field": "R", "dim": 1, "basis": ["1"], "unit": ["1"], "mult": [[["1"]]], "mu": ["1"]}
        code, _, err = cli("check", "--algebra", _write(tmp_path, document))
        assert code == 2
        assert "unknown field 'R'" in err

    def test_bad_scalar(self, cli, tmp_path):
        document = {"field": "Q", "dim": 1, "basis": ["1"], "unit": ["1"], "mult": [[["1"]]], "mu": ["0.5"]}
        code, _, err = cli("check", "--algebra", _write(tmp_path, document))
        assert code == 2
        assert "'0.5' is not a scalar of Q" in err

    def test_missing_mu(self, cli, tmp_path):
        document = {"field": "Q", "dim": 1, "basis": ["1"], "unit": ["1"], "mult": [[["1"]]]}
        code, _, err = cli("decompose", "--algebra", _write(tmp_path, document))
        assert code == 2
        assert "has no mu functional" in err

    @pytest.mark.parametrize("key, value", [("mult", 5), ("unit", 1), ("mu", "1"), ("mult", [5])])
    def test_non_list_entries(self, cli, tmp_path, key, value):
        document = {"field": "Q", "dim": 1, "basis": ["1"], "unit": ["1"], "mult": [[["1"]]], "mu": ["1"]}
        document[key] = value
        code, out, err = cli("check", "--algebra", _write(tmp_path, document))
        assert code == 2
        assert out == ""
        assert "must be a list" in err

    def test_file_that_is_not_utf8(self, cli, tmp_path):
        path = tmp_path / "latin.alg"
        path.write_bytes(b'{"field": "Q\xff"}')
        code, out, err = cli("check", "--algebra", str(path))
        assert code == 2
        assert out == ""
        assert "cannot be read as UTF-8" in err


@pytest.mark.integration
class TestRunBehaviour:
    """Test cases for output stability and log levels"""

    @pytest.mark.parametrize(
        "argv",
        [
            ("decompose", "--algebra", "{sum13}"),
            ("classify", "--algebra", "{qxy}"),
            ("invariant", "--algebra", "{qx4}"),
            ("eval", "--algebra", "{qxy}", "--word", "comul ; id , comul ; mul , id"),
            ("cerf-fuzz", "--algebra", "{n2}", "--count", "3"),
        ],
    )
    def test_output_is_byte_identical_across_runs(self, cli, argv):
        first = cli(*argv)
        second = cli(*argv)
        assert first[0] == 0
        assert first[1].encode("utf-8") == second[1].encode("utf-8")

    def test_log_level_flag(self, cli, capsys):
        code, _, _ = cli("--log-level", "info", "invariant", "--algebra", "{s2}")
        assert code == 0
        assert "invariant" in capsys.readouterr().err
        cli("invariant", "--algebra", "{s2}")
        assert "invariant" not in capsys.readouterr().err

    def test_unknown_log_level(self, cli):
        code, _, _ = cli("--log-level", "loud", "invariant", "--algebra", "{s2}")
        assert code == 2
