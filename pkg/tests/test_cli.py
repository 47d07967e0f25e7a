import json
import shutil
import subprocess

import pytest

from reltree.cli import main
from conftest import DATA_DIR, FIXTURE_QUERY


@pytest.fixture()
def index_file(tmp_path):
    out = tmp_path / "fixture.idx"
    code = main(["index", str(DATA_DIR / "fixture_corpus.nbib"), "-o", str(out)])
    assert code == 0
    return out


class TestIndexCommand:
    def test_builds_and_reports(self, tmp_path, capsys):
        out = tmp_path / "c.idx"
        code = main(["index", str(DATA_DIR / "fixture_corpus.nbib"), "-o", str(out)])
        assert code == 0
        assert "indexed 4 documents" in capsys.readouterr().out
        assert out.exists()

    def test_missing_corpus_is_diagnostic(self, tmp_path, capsys):
        code = main(["index", str(tmp_path / "absent.nbib"), "-o", str(tmp_path / "x")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_malformed_corpus_is_diagnostic(self, tmp_path, capsys):
        bad = tmp_path / "bad.nbib"
        bad.write_text("TI  - No id here\n", encoding="utf-8")
        code = main(["index", str(bad), "-o", str(tmp_path / "x.idx")])
        assert code == 1
        err = capsys.readouterr().err
        assert err.startswith("error:") and err.count("\n") == 1


class TestSearchCommand:
    def test_text_format(self, index_file, capsys):
        code = main(["search", str(index_file), FIXTURE_QUERY, "--format", "text"])
        assert code == 0
        out = capsys.readouterr().out
        assert "#1 2 DS=4.2000 CL=100.0000" in out

    def test_json_format(self, index_file, capsys):
        code = main(["search", str(index_file), FIXTURE_QUERY, "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["clusters"][0]["documents"][0]["id"] == "2"

    def test_empty_query_diagnostic(self, index_file, capsys):
        code = main(["search", str(index_file), ""])
        assert code == 1
        assert "empty query" in capsys.readouterr().err

    def test_no_results_sentinel(self, index_file, capsys):
        code = main(["search", str(index_file), "zebra"])
        assert code == 0
        assert "(no results)" in capsys.readouterr().out

    def test_stale_index_version_diagnostic(self, tmp_path, capsys):
        stale = tmp_path / "old.idx"
        stale.write_text("RTIDX v0\n", encoding="utf-8")
        code = main(["search", str(stale), "aspirin"])
        assert code == 1
        assert "v0" in capsys.readouterr().err


class TestEvalCommand:
    def test_table_output(self, tmp_path, capsys):
        idx = tmp_path / "eval.idx"
        assert main(["index", str(DATA_DIR / "eval_corpus.nbib"), "-o", str(idx)]) == 0
        capsys.readouterr()
        code = main(["eval", str(idx), str(DATA_DIR / "eval_qrels.tsv")])
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("query_id\tprecision\trecall\tretrieved\trelevant")
        assert "\nq1\t0.6\t1.0\t5\t3\n" in out
        assert "\nmacro\t" in out

    def test_report_dir_writes_figures(self, tmp_path, capsys):
        idx = tmp_path / "eval.idx"
        main(["index", str(DATA_DIR / "eval_corpus.nbib"), "-o", str(idx)])
        report_dir = tmp_path / "report"
        code = main(["eval", str(idx), str(DATA_DIR / "eval_qrels.tsv"),
                     "--report-dir", str(report_dir)])
        assert code == 0
        tsv = report_dir / "eval_results.tsv"
        assert tsv.exists()
        assert tsv.read_text(encoding="utf-8").startswith("query_id\t")
        pngs = sorted(p.name for p in report_dir.glob("*.png"))
        assert pngs == ["eval_precision_recall.png", "eval_scatter.png"]
        for png in report_dir.glob("*.png"):
            assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


class TestUsage:
    def test_unknown_subcommand_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_unknown_flag_exits_2(self, index_file, capsys):
        assert main(["search", str(index_file), "aspirin", "--loud"]) == 2
        capsys.readouterr()

    def test_console_script_installed(self):
        exe = shutil.which("reltree")
        assert exe, "console script should be on PATH after install"
        proc = subprocess.run([exe, "--help"], capture_output=True, text=True)
        assert proc.returncode == 0
        assert "search" in proc.stdout
