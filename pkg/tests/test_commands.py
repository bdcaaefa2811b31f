"""
Tests for command dispatch and the sgcm command line
"""
import json

import pytest

from cli import EXIT_CODES, ToolkitConfig, parse_session_text, run_command
from main import build_parser, main

SESSION = """
ring Q[x,y]
ideal I = x^2, x*y
ideal P = x
module M = quot(I)
filtration D on M = [[P], [R]]
sop s on M = y
"""

PLANE_AND_LINE = """
ring Q[x,y,z]
ideal I = x*y, x*z
ideal P = x
module M = quot(I)
sop bad on M = y, x + z
"""


@pytest.fixture(scope="module")
def session():
    return parse_session_text(SESSION, source="embedded.sgcm")


@pytest.fixture
def config():
    return ToolkitConfig()


class TestRunCommand:
    def test_dimfilt(self, session, config):
        report = run_command(session, "dimfilt", {}, config)
        assert report.status == "success"
        assert report.verdicts["dims"] == [0, 1]
        assert report.verifications[0]["check"] == "D embeds in D"

    def test_good_sop_given(self, session, config):
        report = run_command(session, "good-sop", {"sop": "s", "filtration": "D"}, config)
        assert report.status == "success"
        assert report.verdicts["is_good_sop"] is True

    def test_good_sop_negative(self, config):
        session = parse_session_text(PLANE_AND_LINE)
        report = run_command(session, "good-sop", {"sop": "bad"}, config)
        assert report.status == "negative"
        assert report.tables["violations"] == [{"step": 1, "component": 0}]

    def test_good_sop_search_uses_seed_override(self, session, config):
        report = run_command(session, "good-sop", {"seed": 7}, config)
        assert report.status == "success"
        assert report.seeds == [7]

    def test_dd_check(self, session, config):
        report = run_command(session, "dd-check", {"sop": "s", "bound": 2}, config)
        assert report.status == "success"
        assert report.verdicts["is_dd_sequence"] is True
        assert report.verifications[0]["rows"][0]["equal"] is True

    def test_ifm(self, session, config):
        report = run_command(session, "ifm", {"sop": "s", "filtration": "D", "grid": 3}, config)
        assert report.status == "success"
        assert report.verdicts["constant"] is True
        assert (report.verdicts["min"], report.verdicts["max"]) == (0, 0)
        assert [row["value"] for row in report.tables["length"]] == [2, 3, 4]
        assert "ifm" in report.text_tables

    def test_invariant(self, session, config):
        report = run_command(session, "invariant", {"sop": "s"}, config)
        assert report.status == "success"
        assert report.invariants["parametric"] == 0
        assert report.invariants["cohomological"] == 0
        assert report.invariants["agreement"] is True

    def test_seq_gcm(self, session, config):
        report = run_command(session, "seq-gcm", {}, config)
        assert report.status == "success"
        assert report.verdicts["is_seq_gcm"] is True
        assert report.verifications[0]["verdict"] is True

    def test_seq_cm(self, session, config):
        report = run_command(session, "seq-cm", {}, config)
        assert report.status == "success"
        assert report.invariants == {"I_D": 0}

    def test_hilbert_samuel(self, session, config):
        report = run_command(session, "hilbert-samuel", {"sop": "s"}, config)
        assert report.status == "success"
        assert report.verdicts["hilbert_samuel"]["coefficients"] == [1, 1]
        assert report.verdicts["I_n_independent"] is True

    def test_describe(self, session, config):
        report = run_command(session, "describe", {}, config)
        assert report.status == "success"
        assert report.tables["modules"][0]["dimension_filtration"] == [0, 1]

    def test_describe_squarefree(self, config):
        report = run_command(parse_session_text(PLANE_AND_LINE), "describe", {}, config)
        row = report.tables["modules"][0]
        assert row["local_cohomology"] == [0, "infinite"]
        assert len(row["complexes"]) == 1

    def test_corpus(self, config, tmp_path):
        report = run_command(None, "corpus", {"count": 3, "out_dir": str(tmp_path)}, config)
        assert report.status == "success"
        assert len(report.tables["corpus"]) == 3
        assert len(list(tmp_path.glob("*.sgcm"))) == 3

    def test_unknown_command(self, session, config):
        report = run_command(session, "frobnicate", {}, config)
        assert report.status == "error"
        assert "unknown command" in report.message

    def test_missing_session(self, config):
        report = run_command(None, "dimfilt", {}, config)
        assert report.status == "error"
        assert report.message.startswith("SessionError")

    def test_unknown_module(self, session, config):
        report = run_command(session, "dimfilt", {"module": "N"}, config)
        assert report.status == "error"
        assert "unknown module" in report.message

    def test_timing(self, session):
        report = run_command(session, "dimfilt", {}, ToolkitConfig(record_timing=True))
        assert report.timing is not None
        assert report.schema_version == 1

    @pytest.mark.slow
    def test_verify_direct_sum(self, config):
        report = run_command(None, "verify-paper-example", {"example": "5.5"}, config)
        assert report.status == "success", report.verifications
        assert all(row["passed"] for row in report.verifications)

    @pytest.mark.slow
    def test_verify_crossed_planes_reports_invariant(self, config):
        report = run_command(None, "verify-paper-example", {"example": "4.7", "grid": 2}, config)
        assert report.status == "success", report.verifications
        assert report.invariants["parametric"] == 1
        assert report.invariants["agreement"] is True

    @pytest.mark.slow
    def test_verify_accepts_alias(self, config):
        report = run_command(None, "verify-paper-example", {"example": "flat-ifm", "grid": 2}, config)
        assert report.status == "success", report.verifications
        assert report.message.startswith("example 5.6")

    def test_verify_unknown_example(self, config):
        report = run_command(None, "verify-paper-example", {"example": "1.1"}, config)
        assert report.status == "error"
        assert "4.7" in report.message


class TestMain:
    @pytest.fixture
    def session_file(self, tmp_path):
        path = tmp_path / "embedded.sgcm"
        path.write_text(SESSION, encoding="utf-8")
        return path

    def test_parser(self):
        args = build_parser().parse_args(["ifm", "s.sgcm", "--grid", "3", "--out-dir", "x"])
        assert (args.command, args.session, args.grid, args.out_dir) == ("ifm", "s.sgcm", 3, "x")

    def test_example_id_is_positional(self, capsys):
        code = main(["verify-paper-example", "9.9", "--quiet"])
        assert code == EXIT_CODES["error"]
        report = json.loads(capsys.readouterr().out)
        assert report["command"] == "verify-paper-example"
        assert "unknown example '9.9'" in report["message"]

    def test_json_on_stdout(self, session_file, capsys):
        code = main(["dimfilt", str(session_file), "--quiet"])
        assert code == EXIT_CODES["success"]
        report = json.loads(capsys.readouterr().out)
        assert report["verdicts"]["dims"] == [0, 1]

    def test_report_file(self, session_file, tmp_path):
        out = tmp_path / "report.json"
        code = main(["seq-cm", str(session_file), "--out", str(out), "--quiet"])
        assert code == 0
        assert json.loads(out.read_text(encoding="utf-8"))["invariants"]["I_D"] == 0

    def test_negative_exit_code(self, tmp_path):
        path = tmp_path / "plane.sgcm"
        path.write_text(PLANE_AND_LINE, encoding="utf-8")
        assert main(["good-sop", str(path), "--sop", "bad", "--quiet"]) == EXIT_CODES["negative"]

    def test_missing_file(self, tmp_path, capsys):
        code = main(["dimfilt", str(tmp_path / "absent.sgcm"), "--quiet"])
        assert code == EXIT_CODES["error"]
        assert json.loads(capsys.readouterr().out)["status"] == "error"

    def test_syntax_error_exit_code(self, tmp_path):
        path = tmp_path / "broken.sgcm"
        path.write_text("ring Q[x,y]\nideal I = x +\n", encoding="utf-8")
        assert main(["dimfilt", str(path), "--quiet"]) == EXIT_CODES["error"]

    def test_summary_printed(self, session_file, capsys):
        main(["dimfilt", str(session_file)])
        assert "dimfilt: SUCCESS" in capsys.readouterr().out
