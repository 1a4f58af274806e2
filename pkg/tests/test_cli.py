import json
import subprocess
import sys

import pytest

from curvegluing.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSemigroupCommand:
    def test_minimalizes(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "2", "3", "4")
        assert code == 0
        assert "generators: [2, 3]" in out
        assert "frobenius: 1" in out

    def test_comma_separated(self, capsys):
        code, out, _ = run_cli(capsys, "semigroup", "5,12")
        assert code == 0
        assert "frobenius: 43" in out

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "semigroup", "4", "6")
        assert code == 1
        assert "GcdNotOne" in err

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["semigroup"])
        assert exc.value.code == 2


class TestIdealCommand:
    def test_curve_ideal(self, capsys):
        code, out, _ = run_cli(capsys, "ideal", "6", "7", "15")
        assert code == 0
        assert "complete_intersection: True" in out

    def test_raw_global_basis(self, capsys):
        code, out, _ = run_cli(capsys, "ideal", "--raw",
                               "t^2 - x1; t^3 - x2", "--vars", "t,x1,x2")
        assert code == 0
        assert "t" in out

    def test_raw_local_standard_basis(self, capsys):
        code, out, _ = run_cli(
            capsys, "ideal", "--raw", "x1^5 - x3^2; x1*x3 - x2^3",
            "--local", "--order", "x2,x3,x1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["order"] == "negdegrevlex"
        assert set(payload["leading_monomials"]) == \
            {"x3^2", "x1*x3", "x2^3*x3", "x2^6"}


class TestTangentConeCommand:
    def test_example_3_2_component(self, capsys):
        code, out, _ = run_cli(capsys, "tangent-cone", "6", "7", "15")
        assert code == 0
        assert "cohen_macaulay: False" in out
        assert "x1*x3" in out

    def test_order_override(self, capsys):
        code, out, _ = run_cli(capsys, "tangent-cone", "6", "7", "15",
                               "--order", "x2,x3,x1", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["priority"] == ["x2", "x3", "x1"]
        assert payload["cohen_macaulay"] is False

    def test_bad_order_rejected(self, capsys):
        code, _, err = run_cli(capsys, "tangent-cone", "6", "7", "15",
                               "--order", "x1,x2,x3")
        assert code == 1
        assert "InvalidPriority" in err


class TestHilbertCommand:
    def test_prefix_and_closed_form(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert", "6", "7", "15",
                               "--limit", "6", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["hilbert_function"] == [1, 3, 4, 5, 5, 6, 6]
        assert payload["multiplicity"] == 6
        assert "(1 - t)" in payload["closed_form"]


class TestGlueVerifyCommands:
    def test_documented_glue_line(self, capsys):
        code, out, _ = run_cli(capsys, "glue", "--s1", "5,12", "--s2", "7,8",
                               "--p", "17", "--q", "21")
        assert code == 0
        assert "nice: False" in out
        assert "glued_generators: [105, 252, 119, 136]" in out

    def test_documented_verify_line(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--s1", "5,12", "--s2", "7,8",
                               "--p", "17", "--q", "21", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["nice"] is False
        assert payload["glued_cm"] is False
        assert payload["glued_hf_nondecreasing"] is True

    def test_verify_nice_family_member(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--s1", "2,3", "--s2", "4,5",
                               "--p", "7", "--q", "8", "--json")
        payload = json.loads(out)
        assert payload["theorem1_confirmed"] is True
        assert payload["factorization_ok"] is True

    def test_gluing_error_names_clause(self, capsys):
        code, _, err = run_cli(capsys, "glue", "--s1", "2,3", "--s2", "4,5",
                               "--p", "6", "--q", "8")
        assert code == 1
        assert "GcdViolation" in err


class TestJsonContract:
    def test_round_trip_stable(self, capsys):
        code, out, _ = run_cli(capsys, "tangent-cone", "2", "3", "--json")
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert json.dumps(payload, indent=2, sort_keys=True) == out.strip()

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "--s1", "2,3", "--s2", "4,5",
                              "--p", "7", "--q", "8", "--json")
        _, second, _ = run_cli(capsys, "verify", "--s1", "2,3", "--s2", "4,5",
                               "--p", "7", "--q", "8", "--json")
        assert first == second


class TestScanCommand:
    def test_scan_config_and_output(self, capsys, tmp_path):
        out_path = tmp_path / "records.jsonl"
        cfg = {"s1": [6, 7, 15], "s2": [1], "parameter": "q",
               "p": "6*q + 7", "q": "q", "range": [2, 9],
               "output": str(out_path)}
        cfg_path = tmp_path / "family.json"
        cfg_path.write_text(json.dumps(cfg))
        code, out, _ = run_cli(capsys, "scan", "--config", str(cfg_path),
                               "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["instances"] == 8
        assert payload["skipped"] == 1
        assert payload["all_theorems_hold"] is True
        lines = out_path.read_text().splitlines()
        assert len(lines) == 8
        assert json.loads(lines[0])["q"] == 2

    def test_repository_config_runs(self, capsys):
        from pathlib import Path

        cfg = Path(__file__).resolve().parent.parent / "configs" / "family_q.json"
        code, out, _ = run_cli(capsys, "scan", "--config", str(cfg), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] == 25

    def test_repository_config_r_family(self, capsys):
        from pathlib import Path

        cfg = Path(__file__).resolve().parent.parent / "configs" / "family_r.json"
        code, out, _ = run_cli(capsys, "scan", "--config", str(cfg),
                               "--jobs", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] == 25
        assert payload["skipped"] == 0
        assert payload["all_theorems_hold"] is True


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "curvegluing", "semigroup", "2", "3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "frobenius: 1" in proc.stdout


README_LINES = [
    "semigroup 2 3 4",
    "ideal 6 7 15",
    'ideal --raw x1^5 - x3^2; x1*x3 - x2^3 --local --order x2,x3,x1',
    "tangent-cone 6 7 15",
    "hilbert 6 7 15 --limit 6",
    "glue --s1 5,12 --s2 7,8 --p 17 --q 21",
    "verify --s1 5,12 --s2 7,8 --p 17 --q 21",
    "verify --s1 2,3 --s2 4,5 --p 7 --q 8",
    "scan --config configs/family_q.json",
    "scan --config configs/family_r.json --jobs 2",
]


@pytest.mark.parametrize("line", README_LINES)
def test_every_documented_command_line_runs(line, capsys, monkeypatch):
    # the same invocations the README documents, run from the repo root
    from pathlib import Path

    monkeypatch.chdir(Path(__file__).resolve().parent.parent)
    argv = _split_documented(line)
    assert main(argv) == 0
    assert capsys.readouterr().out.strip()


def _split_documented(line):
    # --raw takes one quoted argument in the shell; reassemble it here
    if "--raw" in line:
        head, rest = line.split("--raw ", 1)
        raw, tail = rest.split(" --local", 1)
        return [*head.split(), "--raw", raw.strip(), "--local", *tail.split()]
    return line.split()
