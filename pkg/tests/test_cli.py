"""Tests for the command-line interface."""

from pathlib import Path

import pytest
from click.testing import CliRunner

from neuralcanon.cli.commands import EXIT_DIVERGENCE, EXIT_DOMAIN, EXIT_PARSE, cli
from neuralcanon.cli.formatter import CanonReport, CheckReport, OracleReport

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv("NEURALCANON_ORACLE_MAX_N", raising=False)
    return CliRunner()


def lines(text: str) -> list[str]:
    return text.strip().splitlines()


def test_canon_fast(runner):
    """Test the canonical form as an ideal file."""
    result = runner.invoke(cli, ["canon", "--fast", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == 0
    assert lines(result.stdout) == ["n = 3", "x1*y2", "x3*y1", "x3*y2"]


def test_canon_reads_stdin(runner):
    """Test '-' as the input file."""
    result = runner.invoke(cli, ["canon", "--full", "-"], input="x1\nx3*y1\n")
    assert result.exit_code == 0
    assert lines(result.stdout) == ["n = 3", "x1", "x3"]


def test_canon_json(runner):
    """Test the JSON report and that it re-serializes unchanged."""
    result = runner.invoke(cli, ["canon", "--json", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == 0
    report = CanonReport.model_validate_json(result.stdout)
    assert report.result == ["x1*y2", "x3*y1", "x3*y2"]
    assert report.added == ["x3*y2"]
    assert not report.canonical
    assert CanonReport.model_validate_json(report.model_dump_json()) == report


def test_canon_almost(runner):
    """Test the almost canonical form keeps multiples."""
    result = runner.invoke(cli, ["canon", "--almost", "-g", "x1*x3", "-g", "x2*y1*x3", "-g", "y2*x3"])
    assert result.exit_code == 0
    assert "x3" in lines(result.stdout)
    assert "x1*x3" in lines(result.stdout)


def test_canon_rejects_both_flags(runner):
    """Test --fast with --full."""
    result = runner.invoke(cli, ["canon", "--fast", "--full", "-g", "x1"])
    assert result.exit_code != 0


def test_parse_error_exit_code(runner):
    """Test that malformed input exits 2."""
    result = runner.invoke(cli, ["canon", "-g", "x1*q2"])
    assert result.exit_code == EXIT_PARSE
    assert "parse error" in result.stderr


def test_domain_error_exit_code(runner):
    """Test that the unit ideal exits 3."""
    result = runner.invoke(cli, ["canon", "-g", "1"])
    assert result.exit_code == EXIT_DOMAIN
    assert "unit ideal" in result.stderr


@pytest.mark.parametrize("gens,status,head", [
    (["x1*x2", "x3*x4*y1", "x2*x3"], 0, "canonical"),
    (["x1*y2", "x3*y1"], 1, "not canonical: x1*y2 and x3*y1 share only index 1"),
    (["x1*x2", "x1"], 2, "hypotheses not met: x1 divides x1*x2"),
])
def test_check_exit_codes(runner, gens, status, head):
    """Test the canonicity verdict and its exit status."""
    args = ["check"]
    for g in gens:
        args += ["-g", g]
    result = runner.invoke(cli, args)
    assert result.exit_code == status
    assert result.stdout.startswith(head)


def test_check_json(runner):
    """Test the witness in the JSON report is 1-based."""
    result = runner.invoke(cli, ["check", "--json", "-g", "x2", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == 1
    report = CheckReport.model_validate_json(result.stdout)
    assert (report.witness.first, report.witness.second, report.witness.index) == (1, 2, 2)
    assert report.shortcut_indices == [1, 2]


def test_decompose(runner):
    """Test listing the minimal primes."""
    result = runner.invoke(cli, ["decompose", "-g", "x1", "-g", "x2*y1"])
    assert result.exit_code == 0
    assert len(lines(result.stdout)) == 2
    transversal = runner.invoke(cli, ["decompose", "--strategy", "transversal", "-g", "x1", "-g", "x2*y1"])
    assert transversal.stdout == result.stdout


def test_polarize_and_depolarize(runner):
    """Test converting between the two notations."""
    polarized = runner.invoke(cli, ["polarize", "-g", "x2*(1-x1)"])
    assert polarized.exit_code == 0
    assert lines(polarized.stdout) == ["n = 2", "x2*y1"]

    depolarized = runner.invoke(cli, ["depolarize", "-g", "x2*y1"])
    assert depolarized.exit_code == 0
    assert lines(depolarized.stdout) == ["n = 2", "x2*(1-x1)"]


def test_code(runner):
    """Test listing codewords."""
    result = runner.invoke(cli, ["code", "-g", "x1", "-g", "x2*y1"])
    assert result.exit_code == 0
    assert lines(result.stdout) == ["00"]


def test_oracle_from_ideal_and_code(runner):
    """Test the oracle on an ideal and on a code file."""
    from_ideal = runner.invoke(cli, ["oracle", "-g", "x1*y2", "-g", "x3*y1"])
    assert from_ideal.exit_code == 0
    assert lines(from_ideal.stdout) == ["n = 3", "x1*y2", "x3*y1", "x3*y2"]

    from_code = runner.invoke(cli, ["oracle", "--code", "--json", "-"], input="00\n11\n")
    assert from_code.exit_code == 0
    report = OracleReport.model_validate_json(from_code.stdout)
    assert report.code == ["00", "11"]
    assert report.result == ["x1*y2", "x2*y1"]


def test_oracle_cap_from_environment(runner, monkeypatch):
    """Test that the oracle honors NEURALCANON_ORACLE_MAX_N."""
    monkeypatch.setenv("NEURALCANON_ORACLE_MAX_N", "2")
    result = runner.invoke(cli, ["oracle", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == EXIT_DOMAIN
    monkeypatch.setenv("NEURALCANON_ORACLE_MAX_N", "40")
    assert runner.invoke(cli, ["oracle", "-g", "x1"]).exit_code == EXIT_DOMAIN


def test_code_cap_from_environment(runner, monkeypatch):
    """Test that listing codewords honors the configured oracle cap."""
    monkeypatch.setenv("NEURALCANON_ORACLE_MAX_N", "2")
    result = runner.invoke(cli, ["code", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == EXIT_DOMAIN
    assert runner.invoke(cli, ["code", "-g", "x1", "-g", "x2*y1"]).exit_code == 0


def test_oracle_code_width_must_match(runner):
    """Test --n against the width of a code file."""
    mismatched = runner.invoke(cli, ["oracle", "--code", "--n", "3", "-"], input="00\n11\n")
    assert mismatched.exit_code == EXIT_DOMAIN
    assert "does not match the code width 2" in mismatched.stderr

    matched = runner.invoke(cli, ["oracle", "--code", "--n", "2", "-"], input="00\n11\n")
    assert matched.exit_code == 0
    assert lines(matched.stdout) == ["n = 2", "x1*y2", "x2*y1"]


def test_family_chain(runner):
    """Test the chain closed form with the engine cross-check."""
    result = runner.invoke(cli, ["family", "chain", "3", "x4", "x5", "x6", "--check"])
    assert result.exit_code == 0
    assert len(lines(result.stdout)) == 7


def test_family_cycle_and_spread(runner):
    """Test the cycle and spread closed forms."""
    cycle = runner.invoke(cli, ["family", "cycle", "3", "--check"])
    assert cycle.exit_code == 0
    assert len(lines(cycle.stdout)) == 7

    spread = runner.invoke(cli, ["family", "spread", "3", "1", "x4", "--blocks", "1,2;3", "--check", "--show-ideal"])
    assert spread.exit_code == 0
    assert lines(spread.stdout) == [
        "# ideal (x1*x2*x3, y1*y2, x4*y3)", "n = 4", "y1*y2", "x4*y3", "x1*x2*x3", "x1*x2*x4",
    ]


def test_family_domain_error(runner):
    """Test an overlapping g."""
    result = runner.invoke(cli, ["family", "chain", "3", "x1", "x4", "x5"])
    assert result.exit_code == EXIT_DOMAIN


def test_generic(runner):
    """Test the generic form, substitution and repeated placeholders."""
    plain = runner.invoke(cli, ["generic", "-g", "x1*z1", "-g", "y1*z2"])
    assert plain.exit_code == 0
    assert lines(plain.stdout) == ["n = 1", "z1*z2", "y1*z2", "x1*z1"]

    sub = runner.invoke(cli, ["generic", "-g", "x1*z1", "-g", "y1*z2", "--sub", "z1=x2*x4", "--sub", "z2=x3*x4"])
    assert sub.exit_code == 0
    assert lines(sub.stdout) == ["n = 4", "x1*x2*x4", "x2*x3*x4", "x3*x4*y1"]

    grouped = runner.invoke(cli, ["generic", "-g", "x1*z1", "-g", "y1*z2", "--group", "z1=x2", "--group", "z2=x3"])
    assert grouped.exit_code == 0
    assert lines(grouped.stdout) == ["n = 3", "x1*x2", "x2*x3", "x3*y1"]


def test_generic_invalid_substitution(runner):
    """Test that a clashing image exits 3."""
    result = runner.invoke(cli, ["generic", "-g", "x1*z1", "-g", "y1*z2", "--sub", "z1=y1", "--sub", "z2=x2"])
    assert result.exit_code == EXIT_DOMAIN
    assert "z1" in result.stderr


def test_bench(runner):
    """Test a small benchmark run."""
    result = runner.invoke(cli, ["bench", "--n", "4", "--gens", "3", "--count", "10"])
    assert result.exit_code == 0
    assert "Disagreements: 0" in result.stdout


def test_strategy_both(runner):
    """Test running both strategies."""
    result = runner.invoke(cli, ["canon", "--strategy", "both", "--json", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == 0
    assert CanonReport.model_validate_json(result.stdout).strategy == "both"


@pytest.mark.parametrize("case", sorted(p.stem for p in GOLDEN.glob("*.ideal")))
def test_golden(runner, case):
    """Test canonical forms of the stored examples under both strategies."""
    result = runner.invoke(cli, ["canon", "--strategy", "both", str(GOLDEN / f"{case}.ideal")])
    assert result.exit_code == 0, result.stderr
    assert result.stdout == (GOLDEN / f"{case}.expected").read_text()


def test_strategy_divergence_exit_code(runner, monkeypatch):
    """Test that disagreeing strategies exit 4 with a diff on stderr."""
    from neuralcanon.engine import canonical as engine

    def wrong_fast(a):
        return engine.CanonicalResult(
            canonical=a.with_gens(a.gens[:1]),
            was_already_canonical=False,
            indices_processed=frozenset(),
            strategy="fast",
        )

    monkeypatch.setattr(engine, "canonical_fast", wrong_fast)
    result = runner.invoke(cli, ["canon", "--strategy", "both", "-g", "x1*y2", "-g", "x3*y1"])
    assert result.exit_code == EXIT_DIVERGENCE
    assert "x3*y2  (full only)" in result.stderr
