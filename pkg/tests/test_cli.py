import json
import subprocess
import sys
from fractions import Fraction

import pytest

from fibsums import IdentityId
from fibsums.cli import bench_identity, main
from fibsums.identities import IdentityParams, _BY_ID, IdentityDescriptor


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSeq:
    @pytest.mark.parametrize("argv,expected", [(("fib", "10"), "55"), (("lucas", "0"), "2"), (("fib", "-7"), "13")])
    def test_values(self, capsys, argv, expected):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert out.strip() == expected

    def test_malformed_integer_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "fib", "ten")
        assert code == 2


class TestSum:
    def test_cubic_sum(self, capsys):
        code, out, _ = run_cli(
            capsys, "sum", "--n", "2", "--j", "1", "--r", "1", "--s", "1", "--m", "3", "--x", "1", "--z", "1", "--seq", "F"
        )
        assert (code, out.strip()) == (0, "11")

    def test_defaults(self, capsys):
        code, out, _ = run_cli(capsys, "sum", "--n", "3", "--m", "1", "--seq", "L")
        assert (code, out.strip()) == (0, "18")

    def test_m_zero_power_of_two(self, capsys):
        code, out, _ = run_cli(capsys, "sum", "--n", "5", "--m", "0")
        assert (code, out.strip()) == (0, "32")

    def test_rational_weights_print_with_denominator(self, capsys):
        code, out, _ = run_cli(capsys, "sum", "--n", "2", "--m", "0", "--x", "1/2", "--z", "1")
        assert (code, out.strip()) == (0, str(Fraction(9, 4)))

    def test_negative_n_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "sum", "--n", "-1")
        assert code == 2
        assert "n >= 0" in err


class TestClosed:
    def test_match(self, capsys):
        code, out, _ = run_cli(capsys, "closed", "--id", "C18", "--n", "2", "--s", "1")
        assert code == 0
        assert out.strip() == "lhs=11 rhs=11 MATCH"

    def test_match_with_p(self, capsys):
        code, out, _ = run_cli(capsys, "closed", "--id", "E9", "--n", "2", "--p", "2")
        assert code == 0
        assert out.strip() == "lhs=-3 rhs=-3 MATCH"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "closed", "--id", "C18", "--n", "2", "--s", "1", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj == {"id": "C18", "params": {"n": 2, "s": 1}, "lhs": "11", "rhs": "11", "match": True}

    def test_inapplicable_params(self, capsys):
        code, _, err = run_cli(capsys, "closed", "--id", "Q13", "--n", "1", "--p", "0")
        assert code == 2
        assert "p must be nonzero" in err

    def test_unknown_id(self, capsys):
        code, _, _ = run_cli(capsys, "closed", "--id", "NOPE", "--n", "1")
        assert code == 2

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        # force a wrong closed form to exercise the failure exit code
        real = _BY_ID[IdentityId.C18]
        broken = IdentityDescriptor(
            real.id, real.kind, real.slots, real.anchor, real.lhs_args, lambda q: Fraction(0)
        )
        monkeypatch.setitem(_BY_ID, IdentityId.C18, broken)
        code, out, _ = run_cli(capsys, "closed", "--id", "C18", "--n", "2", "--s", "1")
        assert code == 1
        assert "MISMATCH" in out


class TestVerify:
    def test_small_grid_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--ids", "C18", "--n", "0..2", "--s", "0..1", "--format", "json", "--jobs", "1"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        rows = [json.loads(line) for line in lines]
        assert all(row["match"] for row in rows[:-1])
        assert rows[-1]["verdict"] == "PASS"

    def test_all_skipped_is_success(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--ids", "Q13", "--p", "0..0", "--n", "0..1", "--j", "1..1",
            "--r", "1..1", "--s", "0..0", "--jobs", "1"
        )
        assert code == 0
        assert "skipped=2" in out

    def test_text_summary(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--ids", "C18,C19", "--n", "0..3", "--s", "-1..1", "--jobs", "1"
        )
        assert code == 0
        assert out.splitlines()[0].startswith("C18")
        assert "PASS (24 checks, 0 skipped)" in out

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        real = _BY_ID[IdentityId.C19]
        broken = IdentityDescriptor(
            real.id, real.kind, real.slots, real.anchor, real.lhs_args, lambda q: Fraction(-9)
        )
        monkeypatch.setitem(_BY_ID, IdentityId.C19, broken)
        code, out, _ = run_cli(capsys, "verify", "--ids", "C19", "--n", "0..1", "--s", "0..0", "--jobs", "1")
        assert code == 1
        assert "FAIL" in out

    def test_bad_range_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--n", "0..x")
        assert code == 2

    def test_empty_range_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--ids", "C18", "--n", "2..1")
        assert code == 2


class TestBench:
    def test_small_bench(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--id", "C18", "--n", "60", "--s", "1", "--reps", "3", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["id"] == "C18" and obj["reps"] == 3
        assert float(obj["speedup"]) > 0

    def test_equality_verified_before_timing(self, monkeypatch):
        real = _BY_ID[IdentityId.C18]
        broken = IdentityDescriptor(
            real.id, real.kind, real.slots, real.anchor, real.lhs_args, lambda q: Fraction(1)
        )
        monkeypatch.setitem(_BY_ID, IdentityId.C18, broken)
        with pytest.raises(Exception, match="refusing to time"):
            bench_identity(IdentityId.C18, IdentityParams(n=2, s=1), 1)

    def test_even_family_params_wired(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--id", "EVEN_F", "--n", "30", "--j", "3", "--r", "3",
            "--s", "1", "--m", "2", "--reps", "2", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["speedup"] > 0

    def test_degenerate_point_reports_without_asserting(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--id", "F1", "--n", "0", "--reps", "1")
        assert code == 0
        assert "speedup" in out

    def test_inapplicable(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--id", "Q13", "--n", "5", "--p", "0")
        assert code == 2


class TestList:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "list")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 30
        assert any(line.startswith("C18") and "F[k+s]^3" in line for line in lines)

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "list", "--format", "json")
        rows = [json.loads(line) for line in out.strip().splitlines()]
        assert len(rows) == 30
        assert rows[0]["id"] == "F1" and rows[0]["slots"] == ["n", "j", "r", "s"]


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fibsums", "fib", "12"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "144"

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fibsums", "frob"], capture_output=True, text=True
        )
        assert proc.returncode == 2
