"""End-to-end pipelines, JSON round trips, batch cross-checks, CLI."""

import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

from cuspbounds import AnalysisRequest, Slope, run_analyze, run_batch, run_surgery
from cuspbounds.cli import main
from cuspbounds.errors import FileUnreadable, MissingHeader
from cuspbounds.pipeline import parse_slope_list

DATA = Path(__file__).parent / "data" / "reference_meridians.csv"
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


class TestRunAnalyze:
    def test_fig8_report(self):
        report = run_analyze(AnalysisRequest(pd=FIG8))
        assert report["status"] == "ok"
        assert report["bounds"]["meridian"] == {"value": 1.5, "rule": "adequate"}
        inv = report["invariants"]
        assert (inv["c"], inv["vA"], inv["vB"], inv["gT"]) == (4, 3, 3, 0)
        assert inv["delta"] == {"num": -1, "den": 2}
        assert (inv["t"], inv["vBi"], inv["vNb"], inv["torusDegenerate"]) == (2, 2, 4, False)

    def test_trefoil_inapplicable(self):
        report = run_analyze(AnalysisRequest(pd=TREFOIL))
        assert report["status"] == "inapplicable"
        assert any("torus-degenerate" in d for d in report["diagnostics"])
        assert report["bounds"] is None

    def test_pretzel_report(self):
        report = run_analyze(AnalysisRequest(pretzel=(3, 5, 7)))
        assert report["bounds"]["meridian"] == {"value": 3.0, "rule": "pretzel"}
        assert report["surfacePair"] == {"absChi1": 11, "absChi2": 1, "intersection": 24}

    def test_pair_report_with_budget(self):
        report = run_analyze(AnalysisRequest(pair=(11, 1, 24), budget=Fraction(4)))
        assert report["bounds"]["meridian"]["value"] == 3.0
        assert report["criterion"] == {"budget": 4.0, "satisfied": True}

    def test_braid_report_includes_verdict(self):
        report = run_analyze(AnalysisRequest(braid="4: s1^3 s2^3 s3^3", prime_asserted=True))
        assert report["braidVerdict"] == "MeridianUnderFour"
        assert report["invariants"]["t"] == 3
        # the checkerboard bound 3 - 6/9 beats the twist bound 10/3; both
        # must be present among the candidates
        assert report["bounds"]["meridian"]["rule"] == "adequate"
        assert report["bounds"]["meridian"]["value"] == pytest.approx(3 - 6 / 9, abs=1e-10)
        twist_candidates = [
            cand
            for cand in report["bounds"]["candidates"]
            if cand["rule"] == "twist" and cand["quantity"] == "meridian"
        ]
        assert twist_candidates and twist_candidates[0]["value"] == pytest.approx(10 / 3)

    def test_fig8_slopes_and_windows(self):
        report = run_analyze(
            AnalysisRequest(
                pd=FIG8, slopes=parse_slope_list("1/3,1/5"), volume=2.029883212819
            )
        )
        first, second = report["slopes"]
        # delta = -1/2: threshold 6(1+delta) = 3, exclusion at 360/67 * 1/2
        assert first["q"] == 3 and first["nonExceptional"] is True
        assert first["boundaryHit"] is True
        assert first["volumeWindow"]["lower"] == 0.0
        assert second["volumeWindow"]["upper"] == pytest.approx(2.029883212819)

    def test_non_adequate_diagram_reports_no_bounds(self):
        report = run_analyze(AnalysisRequest(pd="X[1,1,2,2]"))
        assert report["status"] == "ok"
        assert report["bounds"] is None
        assert any("not adequate" in d for d in report["diagnostics"])

    def test_exactly_one_source_required(self):
        with pytest.raises(ValueError):
            AnalysisRequest(pd=FIG8, braid="2: s1^3")
        with pytest.raises(ValueError):
            AnalysisRequest()

    def test_json_round_trip(self):
        for request in (
            AnalysisRequest(pd=FIG8, slopes=parse_slope_list("1/5"), volume=2.03, budget=Fraction(2)),
            AnalysisRequest(pretzel=(3, 5, 7)),
            AnalysisRequest(pair=(11, 1, 24)),
            AnalysisRequest(braid="4: s1^3 s2^3 s3^3"),
        ):
            report = run_analyze(request)
            assert json.loads(json.dumps(report)) == report


class TestRunSurgery:
    def test_delta_zero_thresholds(self):
        verdicts = run_surgery(parse_slope_list("1/5,1/6,1/7,1/8"), delta=Fraction(0))
        assert [v["nonExceptional"] for v in verdicts] == [False, True, True, True]

    def test_counts_mode_has_length_floor(self):
        verdicts = run_surgery(parse_slope_list("1/6"), c=10, g_t=1)
        assert verdicts[0]["lengthLower"] == pytest.approx(6.7)

    def test_montesinos_mode(self):
        verdicts = run_surgery(parse_slope_list("1/7,1/5"), montesinos_t=10)
        assert verdicts[0]["volumeWindow"]["upper"] == pytest.approx(73.2772475342)
        assert verdicts[1]["error"]["code"] == "SlopeTooSmall"

    def test_invalid_slope_entries_pass_through(self):
        verdicts = run_surgery(parse_slope_list("1/0,2/4,1/6"), delta=Fraction(0))
        assert verdicts[0]["error"]["code"] == "InvalidSlope"
        assert verdicts[1]["error"]["code"] == "InvalidSlope"
        assert verdicts[2]["nonExceptional"] is True

    def test_needs_a_delta_source(self):
        with pytest.raises(ValueError):
            run_surgery((Slope(1, 6),))


class TestRunBatch:
    def test_vetted_table_all_pass(self):
        result = run_batch(os.fspath(DATA))
        assert result.failed == 0 and result.skipped == 0
        assert result.passed == 5
        by_name = {row.name: row for row in result.rows}
        fig8 = by_name["figure_eight"]
        assert fig8.computed_bound == pytest.approx(1.5)
        assert fig8.slack == pytest.approx(0.5)

    def test_bad_rows_are_skipped_not_fatal(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text(
            "name,pd,reference_meridian\n"
            f'good,"{FIG8}",1.0\n'
            "mangled,X[1,2,3,garbage,1.0\n"
            f'degenerate,"{TREFOIL}",1.0\n'
            "badref,X[1,1,2,2],-3\n"
        )
        result = run_batch(os.fspath(path))
        assert result.passed == 1 and result.failed == 0 and result.skipped == 3

    def test_theory_violation_fails(self, tmp_path):
        path = tmp_path / "table.csv"
        path.write_text(f'name,pd,reference_meridian\ntoobig,"{FIG8}",5.0\n')
        result = run_batch(os.fspath(path))
        assert result.failed == 1
        assert result.rows[0].slack == pytest.approx(-3.5)

    def test_missing_header(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(MissingHeader):
            run_batch(os.fspath(path))
        path.write_text("name,reference_meridian\nrow,1.0\n")
        with pytest.raises(MissingHeader):
            run_batch(os.fspath(path))

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(FileUnreadable):
            run_batch(os.fspath(tmp_path / "nope.csv"))

    def test_order_independence(self, tmp_path):
        base = DATA.read_text().strip().splitlines()
        header, rows = base[0], base[1:]
        shuffled = [header] + rows[::-1]
        path = tmp_path / "shuffled.csv"
        path.write_text("\n".join(shuffled) + "\n")
        forward = {r.name: r.to_dict() for r in run_batch(os.fspath(DATA)).rows}
        backward = {r.name: r.to_dict() for r in run_batch(os.fspath(path)).rows}
        assert forward == backward
        assert [r.name for r in run_batch(os.fspath(path)).rows] == [
            row.split(",")[0] for row in rows[::-1]
        ]


class TestCli:
    def test_analyze_exit_codes(self, capsys):
        assert main(["analyze", FIG8]) == 0
        assert main(["analyze", TREFOIL]) == 2
        assert main(["analyze", "X[1,2"]) == 1
        capsys.readouterr()

    def test_analyze_json_output(self, capsys):
        assert main(["analyze", FIG8, "--format", "json", "--budget", "2"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["bounds"]["meridian"]["value"] == 1.5
        assert report["criterion"]["satisfied"] is True

    def test_pair_mode(self, capsys):
        assert main(["analyze", "--pair", "11,1,24", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["bounds"]["meridian"]["value"] == 3.0

    def test_braid_subcommand(self, capsys):
        assert main(["braid", "4: s1^3 s2^3 s3^3", "--prime", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["braidVerdict"] == "MeridianUnderFour"

    def test_braid_link_closure_errors(self, capsys):
        assert main(["braid", "3: s1^3 s2^3 s1^3"]) == 1
        assert "ClosureIsLink" in capsys.readouterr().err

    def test_pretzel_subcommand(self, capsys):
        assert main(["pretzel", "3,5,7", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["bounds"]["meridian"]["rule"] == "pretzel"

    def test_surgery_subcommand(self, capsys):
        assert main(["surgery", "--delta", "0", "--slopes", "1/5,1/6", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [v["nonExceptional"] for v in report["slopes"]] == [False, True]

    def test_surgery_montesinos(self, capsys):
        assert main(["surgery", "--montesinos", "10", "--slopes", "1/7", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["slopes"][0]["volumeWindow"]["lower"] == pytest.approx(0.125169947268)

    def test_batch_subcommand(self, capsys, tmp_path):
        assert main(["batch", os.fspath(DATA), "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["summary"] == {"pass": 5, "fail": 0, "skip": 0}
        bad = tmp_path / "bad.csv"
        bad.write_text(f'name,pd,reference_meridian\nx,"{FIG8}",5.0\n')
        assert main(["batch", os.fspath(bad)]) == 1
        capsys.readouterr()

    def test_usage_errors_exit_one(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["surgery", "--delta", "0"])  # missing --slopes
        assert excinfo.value.code == 1
        with pytest.raises(SystemExit) as excinfo:
            main(["analyze"])  # no source at all
        assert excinfo.value.code == 1
        capsys.readouterr()
