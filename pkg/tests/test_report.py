"""Tests for the CSV schema and the experiment exit codes."""

import pytest

from instanton_gluing.experiments.report import (
    ANOMALY_COUNT,
    ANOMALY_DEGENERATE_TARGET,
    ANOMALY_ORACLE,
    ANOMALY_SIGN,
    BRANCH_COLUMNS,
    CSV_COLUMNS,
    EXIT_COUNT_ANOMALY,
    EXIT_OK,
    EXIT_ORACLE_DISAGREEMENT,
    EXIT_SIGN_ANOMALY,
    BranchRow,
    ExperimentReport,
    ExperimentRow,
    branch_label,
    read_branches_csv,
    read_csv,
    write_branches_csv,
    write_csv,
)


def _row(seed=0, L=0.1, oracle_ok=None):
    return ExperimentRow(
        seed=seed,
        L=L,
        alpha=1.0,
        count=6,
        counts={"c11": 1, "c12": 2, "c21": 2, "c22": 1},
        signs_ok=True,
        min_lambda_over_L2=0.95,
        max_lambda_over_L2=1.4,
        oracle_ok=oracle_ok,
        wall_ms=0,
    )


class TestExperimentRow:
    def test_to_csv_formats(self):
        data = _row().to_csv()

        assert list(data) == CSV_COLUMNS
        assert data["signs_ok"] == "true"
        assert data["oracle_ok"] == "na"
        assert data["L"] == "0.1"

    def test_from_csv_restores_row(self):
        row = _row(oracle_ok=False)

        assert ExperimentRow.from_csv(row.to_csv()) == row


class TestCsvFile:
    def test_header_and_line_terminator(self, tmp_path):
        path = write_csv(tmp_path / "out" / "results.csv", [_row(0), _row(1, oracle_ok=True)])

        content = path.read_bytes()

        assert b"\r\n" not in content
        lines = content.decode("utf-8").splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 3
        assert lines[2].endswith(",true,0")

    def test_read_back(self, tmp_path):
        rows = [_row(0), _row(3, L=0.05, oracle_ok=True)]
        path = write_csv(tmp_path / "results.csv", rows)

        assert read_csv(path) == rows


class TestBranchCsv:
    @pytest.mark.parametrize(
        "pairing, lift, label",
        [((1, 1), -1, "11-"), ((1, 2), 1, "12+"), ((2, 1), -1, "21-"), ((2, 2), 0, "22+")],
    )
    def test_branch_label(self, pairing, lift, label):
        assert branch_label(pairing, lift) == label

    def test_header_and_read_back(self, tmp_path):
        rows = [
            BranchRow(seed=2, L=0.1, alpha=1.0, branch="12-", lambda_over_L2=3.25, scale_ratio=1.06),
            BranchRow(seed=2, L=0.05, alpha=1.0, branch="12-", lambda_over_L2=3.1, scale_ratio=1.01),
        ]

        path = write_branches_csv(tmp_path / "branches.csv", rows)

        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(BRANCH_COLUMNS)
        assert lines[1] == "2,0.1,1.0,12-,3.25,1.06"
        assert read_branches_csv(path) == rows


class TestExitCode:
    def test_ok_without_anomalies(self):
        report = ExperimentReport(rows=[_row()])

        assert report.ok
        assert report.exit_code == EXIT_OK

    @pytest.mark.parametrize(
        "kinds, expected",
        [
            ([ANOMALY_ORACLE], EXIT_ORACLE_DISAGREEMENT),
            ([ANOMALY_SIGN, ANOMALY_ORACLE], EXIT_SIGN_ANOMALY),
            ([ANOMALY_ORACLE, ANOMALY_SIGN, ANOMALY_COUNT], EXIT_COUNT_ANOMALY),
            ([ANOMALY_DEGENERATE_TARGET], EXIT_COUNT_ANOMALY),
        ],
    )
    def test_most_important_anomaly_wins(self, kinds, expected):
        report = ExperimentReport(anomalies=[{"kind": kind} for kind in kinds])

        assert not report.ok
        assert report.exit_code == expected
