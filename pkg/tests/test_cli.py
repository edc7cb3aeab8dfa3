"""End-to-end tests of the command-line front end (argv in, text out)."""

import json

import pytest

from artifact.cli import build_parser, main, run


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestGenfun:
    def test_worked_example(self, capsys):
        code, doc = run_json(capsys, ["genfun", "--tau", "1,2,3"])
        assert code == 0
        assert doc["tau"] == [1, 2, 3]
        assert doc["F"]["num"] == ["1", "-1"]
        assert doc["F"]["den"] == ["1", "-2"]
        assert doc["M"]["num"] == ["1", "1"]
        assert doc["M"]["den"] == ["1"]
        assert doc["F"]["series"][:5] == ["1", "1", "2", "4", "8"]
        assert doc["E"]["series"][:4] == ["1", "1", "1", "2"]
        assert doc["O"]["series"][:4] == ["0", "0", "1", "2"]

    def test_compact_pattern_form(self, capsys):
        code, doc = run_json(capsys, ["genfun", "--tau", "123"])
        assert code == 0
        assert doc["tau"] == [1, 2, 3]

    def test_parity_selects_parts(self, capsys):
        code, doc = run_json(capsys, ["genfun", "--tau", "12",
                                      "--parity", "even"])
        assert code == 0
        assert "E" in doc and "F" in doc
        assert "M" not in doc and "O" not in doc
        code, doc = run_json(capsys, ["genfun", "--tau", "12",
                                      "--parity", "odd"])
        assert "O" in doc and "E" not in doc

    def test_text_format(self, capsys):
        code = run(["genfun", "--tau", "1,2", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "tau = 1,2" in out
        assert "F = RatFunc" in out

    def test_order_controls_series_length(self, capsys):
        code, doc = run_json(capsys, ["genfun", "--tau", "12",
                                      "--order", "4"])
        assert code == 0
        assert len(doc["F"]["series"]) == 5

    def test_pattern_bound(self, capsys):
        long_pattern = ",".join(str(i) for i in range(1, 11))
        code = run(["genfun", "--tau", long_pattern])
        assert code == 1
        assert "error" in capsys.readouterr().err
        code, doc = run_json(capsys, ["genfun", "--tau", long_pattern,
                                      "--order", "4", "--unsafe-bounds"])
        assert code == 0

    def test_order_bounds(self, capsys):
        assert run(["genfun", "--tau", "12", "--order", "31"]) == 1
        capsys.readouterr()
        assert run(["genfun", "--tau", "12", "--order", "-1"]) == 1

    def test_non_avoiding_pattern_is_a_domain_error(self, capsys):
        code = run(["genfun", "--tau", "1,3,2"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_output_is_deterministic(self, capsys):
        run(["genfun", "--tau", "2,1,3"])
        first = capsys.readouterr().out
        run(["genfun", "--tau", "2,1,3"])
        assert capsys.readouterr().out == first


class TestOracle:
    def test_worked_example(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "3",
                                      "--avoid", "1,3,2",
                                      "--parity", "even"])
        assert code == 0
        assert doc["even"] == 3
        assert "odd" not in doc and "total" not in doc

    def test_both_parities(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "4"])
        assert code == 0
        assert doc["even"] + doc["odd"] == doc["total"] == 14
        assert isinstance(doc["even"], int)

    def test_contain_spec(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "3",
                                      "--contain", "1,2:1"])
        assert code == 0
        assert doc["total"] == 2
        assert doc["constraints"]["contain"] == [
            {"pattern": [1, 2], "count": 1}]

    def test_multiple_avoids(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "4",
                                      "--avoid", "123", "--avoid", "321"])
        assert code == 0
        # 3412 is the only length-4 avoider of {132, 123, 321}
        assert doc["total"] == 1

    def test_statistic_distribution(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "3", "--stat", "rlm"])
        assert code == 0
        assert doc["distribution"]["3"]["total"] == 1

    def test_statistic_occ_and_inc(self, capsys):
        code, doc = run_json(capsys, ["oracle", "--n", "3",
                                      "--stat", "occ:1,2"])
        assert code == 0
        assert doc["distribution"]["3"]["total"] == 1
        code, doc = run_json(capsys, ["oracle", "--n", "3", "--stat",
                                      "inc:2"])
        assert code == 0
        assert doc["distribution"]["3"]["total"] == 1

    def test_bad_statistic(self, capsys):
        assert run(["oracle", "--n", "3", "--stat", "median"]) == 1
        assert "error" in capsys.readouterr().err

    def test_csv_format(self, capsys):
        code = run(["oracle", "--n", "3", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines() == ["n,even,odd,total", "3,3,2,5"]

    def test_csv_distribution(self, capsys):
        code = run(["oracle", "--n", "2", "--stat", "rlm",
                    "--format", "csv"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out[0] == "value,even,odd,total"
        assert out[1] == "1,1,0,1"
        assert out[2] == "2,0,1,1"

    def test_text_format(self, capsys):
        code = run(["oracle", "--n", "3", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "n = 3: even 3, odd 2, total 5" in out

    def test_bound_refused_without_flag(self, capsys):
        code = run(["oracle", "--n", "15"])
        assert code == 1
        assert "exceeds bound" in capsys.readouterr().err

    def test_bad_pattern_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["oracle", "--n", "3", "--avoid", "1,1"])
        assert exc.value.code == 1
        assert "error" in capsys.readouterr().err

    def test_bad_contain_spec_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["oracle", "--n", "3", "--contain", "12"])
        assert exc.value.code == 1


class TestDecompose:
    def test_json_document(self, capsys):
        code, doc = run_json(capsys, ["decompose", "--tau", "3,4,1,2"])
        assert code == 0
        assert doc["r"] == 1
        assert doc["blocks"] == [{"segment": [3], "maximum": 4},
                                 {"segment": [1], "maximum": 2}]
        assert doc["prefixes"] == [[1], [3, 4, 1, 2]]
        assert doc["suffixes"] == [[3, 4, 1, 2], [1, 2], []]

    def test_text_format(self, capsys):
        code = run(["decompose", "--tau", "2,1,3", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "tau = 2,1,3" in out
        assert "block 0" in out

    def test_non_avoider_rejected(self, capsys):
        assert run(["decompose", "--tau", "1,3,2"]) == 1


class TestChebyshev:
    def test_print_document(self, capsys):
        code, doc = run_json(capsys, ["chebyshev", "--n", "3"])
        assert code == 0
        assert doc["U"] == ["0", "-4", "0", "8"]
        assert doc["W_cleared"] == ["1", "-2"]
        assert doc["U_cleared"] == ["1", "0", "-2"]
        assert doc["R"] == {"num": ["1", "-1"], "den": ["1", "-2"]}

    def test_print_text(self, capsys):
        code = run(["chebyshev", "--n", "2", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "U (in t)" in out

    def test_print_rejects_negative_index(self, capsys):
        assert run(["chebyshev", "--n", "-1"]) == 1

    def test_verify_mode(self, capsys):
        code = run(["chebyshev", "verify", "--max-k", "5", "--max-pq", "2",
                    "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "0 fail" in out

    def test_verify_mode_json(self, capsys):
        code, doc = run_json(capsys, ["chebyshev", "verify", "--max-k", "3",
                                      "--max-pq", "1", "--format", "json"])
        assert code == 0
        assert doc["summary"]["fail"] == 0
        assert doc["summary"]["total"] == len(doc["records"])

    def test_verify_mode_exit_two_on_failure(self, capsys, monkeypatch):
        fake = [{"family": "chebyshev-rk", "params": {}, "source": "s",
                 "expected": "1", "observed": "2", "verdict": "fail",
                 "runtime_ms": 0.0}]
        monkeypatch.setattr("artifact.cli.verify_identity",
                            lambda *a, **k: list(fake))
        code = run(["chebyshev", "verify", "--format", "text"])
        capsys.readouterr()
        assert code == 2


class TestVerify:
    def test_documented_example_family(self, capsys):
        code = run(["verify", "--family", "increasing", "--max-k", "4",
                    "--max-n", "12", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5  # 4 records + summary
        assert all(line.startswith("[pass") for line in lines[:4])
        assert "4 checks: 4 pass, 0 fail" in lines[-1]

    def test_json_format(self, capsys):
        code, doc = run_json(capsys, ["verify", "--family", "examples",
                                      "--format", "json"])
        assert code == 0
        assert doc["summary"]["pass"] == 12
        assert doc["summary"]["fail"] == 0

    def test_csv_format(self, capsys):
        code = run(["verify", "--family", "identities", "--max-n", "12",
                    "--format", "csv"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out[0] == ("family,params,source,expected,observed,"
                          "verdict,runtime_ms")
        assert len(out) == 4

    def test_seed_report_written(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code = run(["verify", "--family", "examples",
                    "--seed-report", str(target), "--format", "text"])
        capsys.readouterr()
        assert code == 0
        doc = json.loads(target.read_text())
        assert doc["summary"]["total"] == 12
        assert len(doc["records"]) == 12

    def test_exit_two_on_failure(self, capsys, monkeypatch):
        fake = [{"family": "examples", "params": {}, "source": "s",
                 "expected": "1", "observed": "2", "verdict": "fail",
                 "runtime_ms": 0.0}]
        monkeypatch.setattr("artifact.verify.run_all",
                            lambda *a, **k: list(fake))
        code = run(["verify", "--family", "examples", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 2
        assert "1 fail" in out

    def test_discrepancies_do_not_fail_the_run(self, capsys):
        code = run(["verify", "--family", "kd", "--max-k", "4",
                    "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "2 known formula discrepancies" in out

    def test_unknown_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["verify", "--family", "bogus"])
        assert exc.value.code == 1


class TestSeries:
    def test_json_document(self, capsys):
        code, doc = run_json(capsys, ["series", "--order", "5"])
        assert code == 0
        assert doc["even"] == ["1", "1", "1", "3", "7", "22"]
        assert doc["odd"] == ["0", "0", "1", "2", "7", "20"]
        assert doc["signed"] == ["1", "1", "0", "1", "0", "2"]
        assert doc["total"] == ["1", "1", "2", "5", "14", "42"]

    def test_csv_format(self, capsys):
        code = run(["series", "--order", "2", "--format", "csv"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out[0] == "n,even,odd,signed,total"
        assert out[1] == "0,1,0,1,1"
        assert out[3] == "2,1,1,0,2"

    def test_text_format(self, capsys):
        code = run(["series", "--order", "3", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "even" in out and "odd" in out

    def test_order_bounds(self, capsys):
        assert run(["series", "--order", "31"]) == 1
        capsys.readouterr()
        assert run(["series", "--order", "31", "--unsafe-bounds"]) == 0
        capsys.readouterr()
        assert run(["series", "--order", "-1"]) == 1


class TestParserContract:
    def test_missing_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run([])
        assert exc.value.code == 1

    def test_unknown_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 1

    def test_build_parser_is_reusable(self):
        parser = build_parser()
        args = parser.parse_args(["genfun", "--tau", "12"])
        assert args.subcommand == "genfun"
        assert args.tau == (1, 2)

    def test_main_returns_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.argv", ["artifact", "series",
                                         "--order", "2"])
        assert main() == 0
        capsys.readouterr()
