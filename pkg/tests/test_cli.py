import json
import subprocess
import sys

import pytest

from colorpart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1^11^2,1^21^1",
                           "-n", "6", "-k", "2")
        assert code == 0
        assert "count=2430" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1^12^2,1^22^1", "-n", "5",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 134
        assert payload["sense"] == "pattern"

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1^12^1", "-n", "3",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("pattern_set,")
        assert lines[1].endswith("3,14,,")

    def test_eq_sense(self, capsys):
        code, out, _ = run(capsys, "count", "-p", "1^12^1", "--sense", "eq",
                           "-n", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        # EQ avoidance is weaker than pattern avoidance
        assert payload["count"] >= 14

    def test_naive_flag_matches(self, capsys):
        fast = json.loads(run(capsys, "count", "-p", "1^11^1,1^21^1", "-n", "5",
                              "--format", "json")[1])
        slow = json.loads(run(capsys, "count", "-p", "1^11^1,1^21^1", "-n", "5",
                              "--naive", "--format", "json")[1])
        assert fast["count"] == slow["count"] == 142


class TestSequence:
    def test_formula_side_by_side(self, capsys):
        code, out, _ = run(capsys, "sequence", "-p", "1^11^2,1^21^1",
                           "--nmax", "6", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["counts"] == [2, 6, 22, 94, 454, 2430]
        assert payload["formula"]["agrees"] is True
        assert payload["formula"]["values"] == payload["counts"]

    def test_no_formula_registered(self, capsys):
        code, out, _ = run(capsys, "sequence", "-p", "1^11^2", "--nmax", "3")
        assert code == 0
        assert "no registered formula" in out

    def test_min_n_respected(self, capsys):
        # pair class 6 formula starts at n = 2; n = 1 row has no formula value
        code, out, _ = run(capsys, "sequence", "-p", "1^11^2,1^22^1",
                           "--nmax", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["counts"] == [2, 6, 18, 56]
        assert payload["formula"]["min_n"] == 2
        assert payload["formula"]["values"] == [6, 18, 56]


class TestClassify:
    def test_pairs(self, capsys):
        code, out, _ = run(capsys, "classify", "--size", "2", "--nmax", "5",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["classes"]) == 8
        assert sum(len(c["members"]) for c in payload["classes"]) == 15

    def test_quads_table_format(self, capsys):
        code, out, _ = run(capsys, "classify", "--size", "4", "--nmax", "4")
        assert code == 0
        assert "4 Wilf classes" in out

    def test_bad_size(self, capsys):
        code, _, err = run(capsys, "classify", "--size", "9", "--nmax", "3")
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_all_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--all", "--nmax", "4")
        assert code == 0
        assert "FAIL" not in out

    def test_single_bijection(self, capsys):
        code, out, _ = run(capsys, "verify", "--bijection", "f", "-n", "4")
        assert code == 0
        assert "PASS bijection f at n=4 (domain 43)" in out

    def test_no_target_is_usage_error(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 2
        assert "nothing to verify" in out


class TestBijectionCommand:
    def test_f_round_trip(self, capsys):
        code, out, _ = run(capsys, "bijection", "f",
                           "1^24^1/2^1/3^26^1/5^1/7^2")
        assert code == 0
        assert out.strip() == "73861542"
        code, out, _ = run(capsys, "bijection", "f-inv", "73861542",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["image"]["blocks"] == "1^24^1/2^1/3^26^1/5^1/7^2"

    def test_g(self, capsys):
        code, out, _ = run(capsys, "bijection", "g", "1^2")
        assert code == 0
        assert out.strip() == "231"

    def test_domain_violation_is_usage_error(self, capsys):
        code, _, err = run(capsys, "bijection", "f", "1^12^1")
        assert code == 2
        assert "error" in err


class TestErrorsAndCaps:
    def test_malformed_pattern(self, capsys):
        code, _, err = run(capsys, "count", "-p", "garbage", "-n", "3")
        assert code == 2
        assert "error" in err

    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "count", "--bogus", "-n", "3")
        assert code == 2

    def test_nmax_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("PPL_NMAX_CAP", "5")
        code, _, err = run(capsys, "count", "-p", "1^11^2", "-n", "9")
        assert code == 3
        assert "PPL_NMAX_CAP" in err
        code, _, _ = run(capsys, "count", "-p", "1^11^2", "-n", "5")
        assert code == 0


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "colorpart.cli", "count", "-p", "1^12^1",
         "-n", "4", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 30
