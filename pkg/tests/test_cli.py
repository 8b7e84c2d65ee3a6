import io
import json
import subprocess
import sys

import pytest

from spinestat.cli import main


def run_main(*args):
    out = io.StringIO()
    code = main(list(args), out=out)
    return code, out.getvalue()


def run_subprocess(*args):
    return subprocess.run(
        [sys.executable, "-m", "spinestat", *args], capture_output=True, text=True
    )


class TestDist:
    def test_text_n3(self):
        code, out = run_main("dist", "--n", "3", "--method", "recurrence")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n=3 method=recurrence total=5"
        assert lines[1:] == ["2 x 1", "2 x 2", "1 x 3"]

    def test_n0_degenerate(self):
        for method in ("exhaustive", "recurrence", "series", "closed"):
            code, out = run_main("dist", "--n", "0", "--method", method)
            assert code == 0
            assert "total=1" in out
            assert "size 0" in out

    def test_csv_n8_closed(self):
        code, out = run_main("dist", "--n", "8", "--method", "closed", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,k,count,fraction,limit"
        assert lines[4].startswith("8,4,165,")

    def test_json_matches_csv_counts(self):
        _, csv_out = run_main("dist", "--n", "6", "--format", "csv")
        code, json_out = run_main("dist", "--n", "6", "--format", "json")
        assert code == 0
        doc = json.loads(json_out)
        assert doc["n"] == 6 and doc["total"] == "132" and doc["method"] == "recurrence"
        csv_counts = [line.split(",")[2] for line in csv_out.strip().splitlines()[1:]]
        assert [row["count"] for row in doc["rows"]] == csv_counts

    def test_cap_exceeded_exit_2(self):
        code, _ = run_main("dist", "--n", "15", "--method", "exhaustive")
        assert code == 2

    def test_methods_agree(self):
        outputs = {
            m: run_main("dist", "--n", "9", "--method", m, "--format", "csv")[1]
            for m in ("exhaustive", "recurrence", "series", "closed")
        }
        assert len(set(outputs.values())) == 1


class TestAverage:
    def test_n10(self):
        code, out = run_main("average", "--n", "10")
        assert code == 0
        assert out.strip() == "41990/16796 = 5/2 = 2.50"

    def test_n1(self):
        code, out = run_main("average", "--n", "1")
        assert code == 0
        assert out.strip() == "1/1 = 1.00"

    def test_n998_uses_closed_form(self):
        code, out = run_main("average", "--n", "998")
        assert code == 0
        assert out.strip() == "2994/1000 = 1497/500 = 2.99"

    def test_n0_exit_1(self):
        code, _ = run_main("average", "--n", "0")
        assert code == 1


class TestLimit:
    def test_k2(self):
        code, out = run_main("limit", "--k", "2")
        assert code == 0
        assert out.strip() == "2/8 = 1/4 = 0.25"

    def test_k1(self):
        code, out = run_main("limit", "--k", "1")
        assert code == 0
        assert out.strip() == "1/4 = 0.25"

    def test_k7(self):
        code, out = run_main("limit", "--k", "7")
        assert code == 0
        assert out.strip().startswith("7/256")

    def test_k0_exit_1(self):
        code, _ = run_main("limit", "--k", "0")
        assert code == 1


class TestVerify:
    def test_max_n_9(self):
        code, out = run_main("verify", "--max-n", "9")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert all(line.startswith("PASS") for line in lines)

    def test_max_n_0_vacuous(self):
        code, out = run_main("verify", "--max-n", "0")
        assert code == 0
        assert all(line.startswith("PASS") for line in out.strip().splitlines())


class TestSample:
    def test_n1_all_mass_on_k1(self):
        code, out = run_main("sample", "--n", "1", "--samples", "10", "--seed", "7")
        assert code == 0
        assert "k=1 observed=10 empirical=1.0000" in out

    def test_deterministic_reruns(self):
        a = run_main("sample", "--n", "12", "--samples", "500", "--seed", "42")
        b = run_main("sample", "--n", "12", "--samples", "500", "--seed", "42")
        assert a == b

    def test_n4_k3_near_exact(self):
        code, out = run_main(
            "sample", "--n", "4", "--samples", "14000", "--seed", "1",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        row = next(r for r in doc["rows"] if r["k"] == 3)
        assert abs(float(row["empirical"]) - 3 / 14) < 0.02

    def test_bad_samples_exit_1(self):
        code, _ = run_main("sample", "--n", "4", "--samples", "0", "--seed", "1")
        assert code == 1


class TestEnumerate:
    def test_n2_codes(self):
        code, out = run_main("enumerate", "--n", "2")
        assert code == 0
        # canonical order: left-subtree size ascending
        assert out.split() == ["10100", "11000"]

    def test_counts(self):
        code, out = run_main("enumerate", "--n", "5")
        assert code == 0
        assert len(out.split()) == 42

    def test_cap_exit_2(self):
        code, _ = run_main("enumerate", "--n", "3", "--cap", "2")
        assert code == 2


class TestProcessLevel:
    def test_help(self):
        cp = run_subprocess("--help")
        assert cp.returncode == 0
        assert "spinestat" in cp.stdout

    def test_usage_error_exit_1(self):
        cp = run_subprocess("dist")
        assert cp.returncode == 1

    def test_unknown_command_exit_1(self):
        cp = run_subprocess("frobnicate")
        assert cp.returncode == 1

    def test_byte_identical_output(self):
        args = ("dist", "--n", "7", "--format", "json")
        assert run_subprocess(*args).stdout == run_subprocess(*args).stdout

    def test_console_script(self):
        try:
            cp = subprocess.run(
                ["spinestat", "average", "--n", "4"], capture_output=True, text=True
            )
        except FileNotFoundError:
            pytest.skip("console script not on PATH")
        assert cp.returncode == 0
        assert cp.stdout.strip() == "28/14 = 2 = 2.00"
