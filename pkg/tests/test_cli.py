"""End-to-end tests of the command-line surface."""

import shutil
import urllib.request

import pytest

from conftest import SYNTHETIC_CSV
from hra import fixtures
from hra.cli import main
from test_fetch import make_source

TABLE_PATH = fixtures.fixture_path(fixtures.DIMENSION_RANK_TABLE)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRun:
    def test_full_pipeline(self, capsys, tmp_path):
        out_dir = tmp_path / "report"
        code, out, err = run_cli(capsys, "run", "--data", str(SYNTHETIC_CSV),
                                 "--weights", "equal", "--out", str(out_dir))
        assert code == 0 and err == ""
        assert (out_dir / "final_ranking.csv").exists()
        assert "algorithm" in out and "alg_c" in out

    def test_byte_identical_reruns(self, capsys, tmp_path):
        args = ("run", "--data", str(SYNTHETIC_CSV))
        code1, out1, _ = run_cli(capsys, *args, "--out",
                                 str(tmp_path / "one"))
        code2, out2, _ = run_cli(capsys, *args, "--out",
                                 str(tmp_path / "two"))
        assert code1 == code2 == 0
        assert out1.replace("one", "X") == out2.replace("two", "X")
        assert (tmp_path / "one/final_ranking.csv").read_bytes() == \
               (tmp_path / "two/final_ranking.csv").read_bytes()

    def test_missing_file_exits_4(self, capsys, tmp_path):
        missing = tmp_path / "nowhere.csv"
        code, out, err = run_cli(capsys, "run", "--data", str(missing))
        assert code == 4
        assert str(missing) in err
        assert err.count("\n") == 1  # exactly one diagnostic line

    def test_bad_weight_sum_exits_3(self, capsys, tmp_path):
        code, out, err = run_cli(
            capsys, "run", "--data", str(SYNTHETIC_CSV), "--out",
            str(tmp_path), "--dimension-weights", "0.5,0.4")
        assert code == 3
        assert "0.5" in err and "0.4" in err
        assert err.count("\n") == 1

    def test_wrong_weight_count_exits_3(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "run", "--data", str(SYNTHETIC_CSV),
                               "--out", str(tmp_path), "--weights", "0.5,0.5")
        assert code == 3 and "--weights" in err

    def test_markdown_format(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "run", "--data", str(SYNTHETIC_CSV),
                             "--out", str(tmp_path / "md"), "--format",
                             "markdown")
        assert code == 0
        assert (tmp_path / "md/final_ranking.md").exists()

    def test_verbose_dumps_traces(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "run", "--data", str(SYNTHETIC_CSV),
                               "--out", str(tmp_path), "--verbose")
        assert code == 0
        assert "trace [leaf/10/best]" in out
        assert "PIS" in out and "S-" in out


class TestRtopsis:
    def test_published_matrix(self, capsys):
        code, out, err = run_cli(capsys, "rtopsis", "--matrix",
                                 str(TABLE_PATH), "--weights", "equal")
        assert code == 0 and err == ""
        jso_line = next(l for l in out.splitlines() if l.startswith("jSO"))
        assert "0.7735" in jso_line
        assert jso_line.rstrip().endswith("2")

    def test_direction_flip_reverses_dominated_pair(self, capsys, tmp_path):
        path = tmp_path / "pair.csv"
        path.write_text("algorithm,c1,c2\nlow,1,1\nhigh,2,2\n")
        _, cost_out, _ = run_cli(capsys, "rtopsis", "--matrix", str(path))
        _, benefit_out, _ = run_cli(capsys, "rtopsis", "--matrix", str(path),
                                    "--direction", "benefit")

        def rank_of(out, label):
            line = next(l for l in out.splitlines() if l.startswith(label))
            return line.split()[-1]

        assert rank_of(cost_out, "low") == "1"
        assert rank_of(cost_out, "high") == "2"
        assert rank_of(benefit_out, "low") == "2"
        assert rank_of(benefit_out, "high") == "1"

    def test_two_by_two_scores(self, capsys, tmp_path):
        path = tmp_path / "toy.csv"
        path.write_text("algorithm,c1,c2\nfirst,1,1\nsecond,2,2\n")
        code, out, _ = run_cli(capsys, "rtopsis", "--matrix", str(path))
        assert code == 0
        assert "0.6667" in out and "0.3333" in out

    def test_explicit_domain_matches_default(self, capsys):
        _, default_out, _ = run_cli(capsys, "rtopsis", "--matrix",
                                    str(TABLE_PATH))
        _, explicit_out, _ = run_cli(capsys, "rtopsis", "--matrix",
                                     str(TABLE_PATH), "--domain", "0:14")
        assert default_out == explicit_out

    def test_bad_domain_syntax_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "rtopsis", "--matrix",
                               str(TABLE_PATH), "--domain", "zero-fourteen")
        assert code == 1 and "--domain" in err

    def test_out_of_domain_value_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "rtopsis", "--matrix",
                               str(TABLE_PATH), "--domain", "0:4")
        assert code == 3 and "outside the domain" in err


class TestVerifyPaper:
    def test_all_checks_pass(self, capsys):
        code, out, err = run_cli(capsys, "verify-paper")
        assert code == 0 and err == ""
        assert "6/6 checks PASS" in out
        assert out.count("PASS") == 7  # six lines plus the summary

    def test_zero_tolerance_fails_scores_only(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--tolerance", "0")
        assert code == 1
        assert "FAIL overall-scores" in out
        assert "5/6 checks PASS" in out

    def test_corrupted_fixture_named(self, capsys, tmp_path, monkeypatch):
        corrupt = tmp_path / "fixtures"
        shutil.copytree(fixtures.fixtures_dir(), corrupt)
        target = corrupt / fixtures.MEASURE_RANK_TABLES[30]
        target.write_text(target.read_text().replace("EBOwithCMAR,1,1,1,1,3",
                                                     "EBOwithCMAR,9,9,9,9,9"))
        monkeypatch.setenv(fixtures.FIXTURES_ENV, str(corrupt))
        code, out, _ = run_cli(capsys, "verify-paper")
        assert code == 1
        assert "FAIL dim30-ranking" in out
        assert "EBOwithCMAR" in out

    def test_hermetic(self, capsys, monkeypatch):
        def refuse(*args, **kwargs):
            raise AssertionError("network access attempted")

        monkeypatch.setattr(urllib.request, "urlopen", refuse)
        code, out, _ = run_cli(capsys, "verify-paper")
        assert code == 0 and "6/6 checks PASS" in out


class TestStats:
    def test_toy_directory(self, capsys, tmp_path):
        runs_dir = tmp_path / "runs"
        runs_dir.mkdir()
        (runs_dir / "solver_1_10.txt").write_text("1 2 3\n")
        out_csv = tmp_path / "stats.csv"
        code, out, err = run_cli(capsys, "stats", str(runs_dir), "--out",
                                 str(out_csv))
        assert code == 0 and err == ""
        body = out_csv.read_text()
        assert body.startswith("dimension,measure,function,algorithm,value\n")
        rows = dict()
        for line in body.splitlines()[1:]:
            d, p, f, a, v = line.split(",")
            rows[p] = float(v)
        assert rows == {"best": 1.0, "worst": 3.0, "median": 2.0,
                        "mean": 2.0, "std": 1.0}

    def test_empty_directory_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "stats", str(tmp_path), "--out",
                               str(tmp_path / "x.csv"))
        assert code == 2 and "no run files" in err

    def test_population_std_flag(self, capsys, tmp_path):
        runs_dir = tmp_path / "runs"
        runs_dir.mkdir()
        (runs_dir / "solver_1_10.txt").write_text("1 2 3\n")
        out_csv = tmp_path / "stats.csv"
        code, _, _ = run_cli(capsys, "stats", str(runs_dir), "--out",
                             str(out_csv), "--std-population")
        assert code == 0
        std_line = next(l for l in out_csv.read_text().splitlines()
                        if l.split(",")[1] == "std")
        assert float(std_line.split(",")[-1]) == pytest.approx(0.8164965809)


class TestFetch:
    def test_fetch_then_idempotent(self, capsys, tmp_path):
        source = tmp_path / "src"
        source.mkdir()
        url = make_source(source, {"solver_1_10.txt": "1 2 3\n"})
        dest = tmp_path / "dest"
        code, out, _ = run_cli(capsys, "fetch", url, "--out", str(dest))
        assert code == 0 and "1 downloaded" in out
        code, out, _ = run_cli(capsys, "fetch", url, "--out", str(dest))
        assert code == 0 and "0 downloaded" in out and "1 already" in out

    def test_unreachable_source_exits_4(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "fetch",
                               (tmp_path / "void").as_uri(), "--out",
                               str(tmp_path / "dest"))
        assert code == 4 and err.count("\n") == 1


class TestUsage:
    def test_no_subcommand_exits_1(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == 1 and err.count("\n") == 1

    def test_unknown_flag_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "rtopsis", "--nope")
        assert code == 1
