"""Tests for the command-line interface."""

import argparse
import json
from pathlib import Path

import pytest

from instanton_gluing.experiments.cli import (
    build_parser,
    parse_seeds,
    run_cli,
    solver_config_from_args,
)
from instanton_gluing.experiments.lemma_suite import LemmaSuiteSummary, PropertyCheck
from instanton_gluing.experiments.report import ExperimentReport


class TestParseSeeds:
    def test_inclusive_range(self):
        assert parse_seeds("0-3") == [0, 1, 2, 3]

    def test_list(self):
        assert parse_seeds("1,5,7") == [1, 5, 7]

    def test_single_seed(self):
        assert parse_seeds("4") == [4]

    @pytest.mark.parametrize("text", ["a-b", "1,x", "", ","])
    def test_invalid_text(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_seeds(text)


class TestParser:
    def test_run_defaults(self):
        args = build_parser().parse_args(["run"])

        assert args.seeds == [0]
        assert args.L == [0.2, 0.1, 0.05]
        assert args.sweep_depth == 2
        assert args.alpha is None
        assert not args.oracle
        assert not args.no_timing

    def test_run_flags(self):
        args = build_parser().parse_args(
            ["run", "--seeds", "0-19", "--L", "0.1", "0.03", "--alpha", "0.5", "1.5",
             "--oracle", "--starts", "500", "--no-timing", "--plots", "--out", "res",
             "--sweep-depth", "4"]
        )

        assert args.seeds == list(range(20))
        assert args.L == [0.1, 0.03]
        assert args.alpha == [0.5, 1.5]
        assert args.oracle and args.plots and args.no_timing
        assert args.starts == 500
        assert args.out == Path("res")
        assert args.sweep_depth == 4

    def test_command_is_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestSolverConfigFromArgs:
    def test_overrides(self):
        args = build_parser().parse_args(["run", "--K", "2", "--tol", "1e-10", "--workers", "3"])

        config = solver_config_from_args(args)

        assert config.K == 2.0
        assert config.certify_tol == 1e-10
        assert config.workers == 3

    def test_file_then_overrides(self, tmp_path):
        path = tmp_path / "solver.json"
        path.write_text(json.dumps({"K": 3.0, "grid_density": 8}), encoding="utf-8")
        args = build_parser().parse_args(["run", "--config", str(path), "--workers", "2"])

        config = solver_config_from_args(args)

        assert config.K == 3.0
        assert config.grid_density == 8
        assert config.workers == 2


class TestRunCli:
    def test_run_returns_report_exit_code(self, mocker, capsys, tmp_path):
        run = mocker.patch(
            "instanton_gluing.experiments.runner.run",
            return_value=ExperimentReport(
                anomalies=[{"kind": "sign"}], csv_path=tmp_path / "results.csv"
            ),
        )
        mocker.patch("instanton_gluing.experiments.cli.Logger.setup")

        code = run_cli(
            ["run", "--seeds", "1,2", "--L", "0.1", "--no-timing", "--sweep-depth", "3",
             "--out", str(tmp_path)]
        )

        spec = run.call_args.args[0]
        assert spec.seeds == [1, 2]
        assert spec.alphas == [1.0]
        assert spec.timing is False
        assert spec.stability_depth == 3
        assert code == 3
        assert "codi de sortida 3" in capsys.readouterr().out

    def test_lemma_success(self, mocker, capsys):
        suite = mocker.patch(
            "instanton_gluing.experiments.lemma_suite.lemma_suite",
            return_value=LemmaSuiteSummary(checks=[PropertyCheck("coalescence", True, "ok")]),
        )
        mocker.patch("instanton_gluing.experiments.cli.Logger.setup")

        code = run_cli(["lemma", "--n", "5", "--seed", "2"])

        assert code == 0
        assert suite.call_args.args[:3] == (5, 2, None)
        assert "[OK] coalescence ok" in capsys.readouterr().out

    def test_lemma_failure(self, mocker):
        mocker.patch(
            "instanton_gluing.experiments.lemma_suite.lemma_suite",
            return_value=LemmaSuiteSummary(checks=[PropertyCheck("equivariance", False)]),
        )
        mocker.patch("instanton_gluing.experiments.cli.Logger.setup")

        assert run_cli(["lemma"]) == 1
