import json
import subprocess
import sys

import pytest

from cherednik.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestExitCodes:
    def test_pass(self, capsys):
        code, _ = run_cli(capsys, "verify-relations", "--n", "2", "--t", "1",
                          "--c", "1/2", "--max-degree", "3")
        assert code == 0

    def test_usage_error_bad_rational(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify-relations", "--n", "2", "--t", "x", "--c", "1/2"])
        assert exc.value.code == 2

    def test_usage_error_bad_params(self, capsys):
        code = main(["oracle-check", "--m", "2", "--n", "4", "--max-degree", "2"])
        assert code == 2  # gcd(2,4) != 1 rejected as invalid parameters

    def test_compositional_needs_r(self, capsys):
        code = main(["hilb", "enum", "--m", "2", "--n", "3", "--k", "1",
                     "--compositional"])
        assert code == 2


class TestOutputs:
    def test_json_schema(self, capsys):
        code, out = run_cli(capsys, "hilb", "enum", "--m", "4", "--n", "3",
                            "--k", "15", "--parabolic", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == "v1"
        assert {"c": [3, 7, 5], "alpha": [2, 0, 1], "label": [5, 7, 3],
                "weights": [17, 21, 19]} in payload["rows"]

    def test_csv_header(self, capsys):
        code, out = run_cli(capsys, "hilb", "enum", "--m", "2", "--n", "3",
                            "--k", "2", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "c,jordan"

    def test_deterministic(self, capsys):
        args = ["hilb", "enum", "--m", "3", "--n", "4", "--k", "5",
                "--compositional", "--r", "2", "--json"]
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2

    def test_bgg_table(self, capsys):
        code, out = run_cli(capsys, "bgg", "--m", "2", "--n", "3",
                            "--max-degree", "4", "--emit-ranks")
        assert code == 0
        assert "composites vanish: True" in out

    def test_figures(self, capsys):
        code, out = run_cli(capsys, "figures")
        assert code == 0
        assert "PASS" in out

    def test_sweep_deterministic(self, capsys):
        _, out1 = run_cli(capsys, "sweep", "--seed", "11", "--trials", "50")
        _, out2 = run_cli(capsys, "sweep", "--seed", "11", "--trials", "50")
        assert out1 == out2
        assert "failures=0" in out1


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "cherednik.cli", "simple-dim", "--m", "2",
             "--n", "3"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "PASS" in proc.stdout
