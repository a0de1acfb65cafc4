import json
import subprocess
import sys

import pytest

BASE = [sys.executable, "-m", "charcore"]


def run_cli(*args):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, timeout=300
    )


class TestBasicCommands:
    def test_chi(self):
        res = run_cli("chi", "--lambda", "[2,2]", "--mu", "[4]")
        assert res.returncode == 0
        assert res.stdout == "0\n"

    def test_reduce(self):
        res = run_cli("reduce", "--mu", "[1,1,1,1,1,1,1,1]", "--p", "2", "--r", "2")
        assert res.returncode == 0
        assert res.stdout == "[4,4]\n"

    def test_core(self):
        res = run_cli("core", "--lambda", "[6,5,3,1,1,1]", "--t", "5")
        assert res.returncode == 0
        assert res.stdout == "[6,2,1,1,1,1]\n"

    def test_core_json(self):
        res = run_cli(
            "core", "--lambda", "[2,2]", "--t", "4", "--format", "json"
        )
        data = json.loads(res.stdout)
        assert data["is_core"] is True and data["core"] == "[2,2]"

    def test_sample_deterministic(self):
        a = run_cli("sample", "--n", "30", "--seed", "11", "--count", "5")
        b = run_cli("sample", "--n", "30", "--seed", "11", "--count", "5")
        assert a.returncode == 0 and a.stdout == b.stdout
        lines = a.stdout.strip().split("\n")
        assert len(lines) == 5

    def test_table_csv_golden(self):
        res = run_cli("table", "3", "--format", "csv")
        assert res.stdout == (
            "partition,[3],[2,1],[1,1,1]\n"
            "[3],1,1,1\n"
            "[2,1],-1,0,2\n"
            "[1,1,1],1,-1,1\n"
        )

    def test_table_out_file(self, tmp_path):
        target = tmp_path / "table.json"
        res = run_cli("table", "4", "--format", "json", "--out", str(target))
        assert res.returncode == 0 and res.stdout == ""
        data = json.loads(target.read_text())
        assert len(data["rows"]) == 5


class TestExitCodes:
    def test_usage_error_unknown_flag(self):
        assert run_cli("chi", "--bogus", "x").returncode == 2

    def test_usage_error_bad_partition(self):
        assert run_cli("chi", "--lambda", "[1,2]", "--mu", "[3]").returncode == 2

    def test_usage_error_nonprime(self):
        res = run_cli("reduce", "--mu", "[1,1,1,1]", "--p", "4", "--r", "1")
        assert res.returncode == 2
        assert "error" in res.stderr

    def test_usage_error_missing_seed(self):
        assert run_cli("sample", "--n", "5").returncode == 2

    def test_usage_error_missing_m(self):
        res = run_cli("verify", "lemma62", "--n", "6", "--p", "2", "--r", "2")
        assert res.returncode == 2

    def test_cap_is_usage_error(self):
        assert run_cli("table", "40").returncode == 2

    def test_verify_success_exit_zero(self):
        res = run_cli("verify", "combine", "--n", "6", "--p", "2", "--r", "2")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["violated"] == 0
        assert set(report) == {
            "lemma",
            "params",
            "checked",
            "skipped",
            "violated",
            "witness",
        }


class TestFormats:
    def test_verify_csv_json_same_numbers(self):
        js = json.loads(
            run_cli("verify", "lemma61", "--n", "6", "--m", "2").stdout
        )
        csv = run_cli(
            "verify", "lemma61", "--n", "6", "--m", "2", "--format", "csv"
        ).stdout.strip().split("\n")
        header, row = csv[0].split(","), csv[1].split(",")
        got = dict(zip(header, row))
        assert int(got["checked"]) == js["checked"]
        assert int(got["skipped"]) == js["skipped"]
        assert int(got["violated"]) == js["violated"]

    def test_density_csv_json_same_numbers(self):
        js = json.loads(run_cli("stats", "density", "--n", "5", "--mod", "2").stdout)
        csv = run_cli(
            "stats", "density", "--n", "5", "--mod", "2", "--format", "csv"
        ).stdout.strip().split("\n")
        got = dict(zip(csv[0].split(","), csv[1].split(",")))
        for key in ("total", "divisible", "zero"):
            assert int(got[key]) == js[key]

    def test_stats_subcommands_run(self):
        assert run_cli("stats", "tcores", "--n", "8", "--t", "3").returncode == 0
        assert run_cli("stats", "fp", "--p", "2", "--t", "5").returncode == 0
        assert (
            run_cli("stats", "ppower", "--p", "2", "--k", "12").returncode == 0
        )
        res = run_cli(
            "stats", "pdiff", "--p", "2", "--r", "2", "--s", "2", "--k", "24"
        )
        assert res.returncode == 0
        assert json.loads(res.stdout)["satisfied"] is True

    def test_prop4_requires_seed(self):
        assert (
            run_cli(
                "stats", "prop4", "--n", "60", "--p", "2", "--r", "2",
                "--samples", "5",
            ).returncode
            == 2
        )

    def test_prop4_runs(self):
        res = run_cli(
            "stats", "prop4", "--n", "60", "--p", "2", "--r", "2",
            "--samples", "5", "--seed", "3",
        )
        assert res.returncode == 0
        assert json.loads(res.stdout)["samples"] == 5


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("table", "8", "--format", "csv"),
            ("table", "8", "--format", "json"),
            ("verify", "combine", "--n", "8", "--p", "2", "--r", "2"),
            ("stats", "density", "--n", "6", "--mod", "2"),
            ("sample", "--n", "25", "--seed", "9", "--count", "4"),
        ],
    )
    def test_reruns_byte_identical(self, args):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

    def test_thread_count_invariant(self):
        outputs = {
            run_cli("table", "9", "--format", "csv", "--threads", str(t)).stdout
            for t in (1, 2, 4)
        }
        assert len(outputs) == 1
