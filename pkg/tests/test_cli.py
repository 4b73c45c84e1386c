import json

import pytest

from supercong.cli import all_known_ids, collect_records, emit_report, main, parse_args

JSONL_KEYS = ["id", "p", "r", "modulus", "lhs", "rhs", "pass", "micros"]


class TestParseArgs:
    def test_full_sweep_config(self):
        cfg = parse_args(["verify", "--primes", "5:200", "--ids", "all", "--format", "jsonl"])
        assert cfg.primes[0] == 5 and cfg.primes[-1] == 199
        assert set(cfg.ids) == set(all_known_ids())
        assert cfg.fmt == "jsonl"

    def test_power_run_config(self):
        cfg = parse_args(["verify", "--primes", "5:50", "--ids", "thm-prime-power", "--r-max", "2"])
        assert cfg.ids == ("thm-prime-power",)
        assert cfg.r_max == 2
        assert cfg.primes == (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

    def test_empty_range_is_usage_error(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["verify", "--primes", "4:3"])
        assert err.value.code == 2

    def test_bad_range_syntax(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["--primes", "5..9"])
        assert err.value.code == 2

    def test_unknown_id_rejected(self):
        with pytest.raises(SystemExit) as err:
            parse_args(["--primes", "5:7", "--ids", "thm-main,bogus"])
        assert err.value.code == 2

    def test_small_primes_skipped_with_warning(self, capsys):
        cfg = parse_args(["--primes", "2:11"])
        assert cfg.primes == (5, 7, 11)
        warned = capsys.readouterr().err
        assert "p = 2" in warned and "p = 3" in warned

    def test_composites_silently_skipped(self, capsys):
        cfg = parse_args(["--primes", "8:10"])
        assert cfg.primes == ()
        assert capsys.readouterr().err == ""

    def test_jobs_auto(self):
        assert parse_args(["--primes", "5:7", "--jobs", "auto"]).jobs >= 1
        with pytest.raises(SystemExit):
            parse_args(["--primes", "5:7", "--jobs", "zero"])
        with pytest.raises(SystemExit):
            parse_args(["--primes", "5:7", "--jobs", "0"])

    def test_leading_program_word_optional(self):
        with_word = parse_args(["verify", "--primes", "5:7"])
        without = parse_args(["--primes", "5:7"])
        assert with_word == without


class TestEmitReport:
    def _records(self):
        cfg = parse_args(["--primes", "5:7", "--ids", "thm-main,vanhamme", "--no-timing"])
        return collect_records(cfg)

    def test_jsonl_schema(self, capsys):
        rows = self._records()
        code = emit_report(rows, "jsonl", None, no_timing=True)
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 4
        for line in lines:
            rec = json.loads(line)
            assert list(rec) == JSONL_KEYS
            assert isinstance(rec["lhs"], str) and rec["lhs"].isdigit()
            assert rec["micros"] == 0

    def test_csv_mirrors_jsonl_keys(self, capsys):
        emit_report(self._records(), "csv", None, no_timing=True)
        out = capsys.readouterr().out.splitlines()
        assert out[0] == ",".join(JSONL_KEYS)
        assert out[1].startswith("thm-main,5,1,5^4,255,255,true,0")

    def test_table_format(self, capsys):
        emit_report(self._records(), "table", None, no_timing=True)
        out = capsys.readouterr().out.splitlines()
        assert out[0].split() == JSONL_KEYS
        assert all("ok" in line for line in out[1:])

    def test_writes_file(self, tmp_path):
        target = tmp_path / "report.jsonl"
        code = emit_report(self._records(), "jsonl", str(target), no_timing=True)
        assert code == 0
        assert len(target.read_text().splitlines()) == 4

    def test_failure_sets_exit_one(self, capsys):
        rows = self._records()

        class Failing:
            id, p, r = "synthetic", 5, 1

            def record(self, no_timing=False):
                return dict(zip(JSONL_KEYS, ["synthetic", 5, 1, "5^1", "1", "2", False, 0]))

        assert emit_report(rows + [Failing()], "jsonl", None, True) == 1
        lines = capsys.readouterr().out.strip().splitlines()
        assert json.loads(lines[-1])["pass"] is False


class TestMain:
    def test_exit_zero_and_output(self, capsys):
        code = main(["--primes", "5:13", "--ids", "morley,I1,wz-half-sum",
                     "--format", "jsonl", "--no-timing"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        ids = [json.loads(line)["id"] for line in lines]
        assert ids == sorted(ids)
        assert "I1" in ids and "wz-half-sum" in ids and ids.count("morley") == 4

    def test_identity_and_wz_rows_use_exact_modulus(self, capsys):
        main(["--primes", "5:5", "--ids", "I2,wz-pair", "--wz-grid", "3",
              "--identities-n-max", "4", "--no-timing"])
        for line in capsys.readouterr().out.strip().splitlines():
            rec = json.loads(line)
            assert rec["modulus"] == "exact"
            assert rec["p"] == 0 and rec["r"] == 0
            assert rec["lhs"] == "0" and rec["rhs"] == "0" and rec["pass"] is True

    def test_unwritable_out_path_exits_three(self, capsys, tmp_path):
        code = main(["--primes", "5:5", "--ids", "morley",
                     "--out", str(tmp_path / "missing-dir" / "x.jsonl")])
        assert code == 3
        assert "error:" in capsys.readouterr().err

    def test_byte_identical_reruns_without_timing(self, tmp_path):
        args = ["--primes", "5:31", "--ids", "thm-main,vanhamme,I1,I10,wz-pair",
                "--wz-grid", "10", "--identities-n-max", "10",
                "--format", "jsonl", "--no-timing"]
        first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert main(args + ["--out", str(first)]) == 0
        assert main(args + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_timing_field_populated_without_flag(self, capsys):
        main(["--primes", "5:5", "--ids", "thm-main"])
        rec = json.loads(capsys.readouterr().out.strip())
        assert rec["micros"] >= 0
