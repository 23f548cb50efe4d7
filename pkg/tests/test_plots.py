"""Tests for the SVG figures rendered from the results CSVs."""

from instanton_gluing.experiments.plots import plot_lambda_ratio_vs_L, render_plots
from instanton_gluing.experiments.report import (
    BranchRow,
    ExperimentRow,
    write_branches_csv,
    write_csv,
)


def _rows():
    return [
        ExperimentRow(
            seed=seed,
            L=L,
            alpha=1.0,
            count=6,
            counts={"c11": 1, "c12": 2, "c21": 2, "c22": 1},
            signs_ok=True,
            min_lambda_over_L2=1.0 - L,
            max_lambda_over_L2=1.0 + L,
            oracle_ok=None,
            wall_ms=0,
        )
        for seed in (0, 1)
        for L in (0.1, 0.05)
    ]


BRANCHES = ("11+", "12+", "12-", "21+", "21-", "22+")


def _branches():
    return [
        BranchRow(
            seed=seed,
            L=L,
            alpha=1.0,
            branch=branch,
            lambda_over_L2=1.0 + index * L,
            scale_ratio=1.0,
        )
        for seed in (0, 1)
        for L in (0.1, 0.05)
        for index, branch in enumerate(BRANCHES)
    ]


class TestRenderPlots:
    def test_writes_three_svgs(self, tmp_path):
        csv_path = write_csv(tmp_path / "results.csv", _rows())
        write_branches_csv(tmp_path / "branches.csv", _branches())

        written = render_plots(csv_path, tmp_path / "figs")

        assert [path.name for path in written] == [
            "count_vs_L.svg",
            "lambda_ratio_vs_L.svg",
            "sign_table.svg",
        ]
        for path in written:
            assert path.read_text(encoding="utf-8").lstrip().startswith("<?xml")

    def test_output_is_deterministic(self, tmp_path):
        csv_path = write_csv(tmp_path / "results.csv", _rows())
        branches_path = write_branches_csv(tmp_path / "branches.csv", _branches())

        first = render_plots(csv_path, tmp_path / "a", branches_path)
        second = render_plots(csv_path, tmp_path / "b", branches_path)

        for a, b in zip(first, second):
            assert a.read_bytes() == b.read_bytes()

    def test_empty_csv(self, tmp_path):
        csv_path = write_csv(tmp_path / "results.csv", [])

        written = render_plots(csv_path, tmp_path)

        assert all(path.exists() for path in written)


class TestLambdaRatioPlot:
    def test_one_curve_per_branch(self, mocker, tmp_path):
        save = mocker.patch("instanton_gluing.experiments.plots._save")

        plot_lambda_ratio_vs_L(_branches(), tmp_path / "ratio.svg")

        fig = save.call_args.args[0]
        lines = fig.axes[0].get_lines()
        assert len(lines) == 2 * len(BRANCHES)
        for line in lines:
            assert list(line.get_xdata()) == [0.05, 0.1]

    def test_curve_follows_its_branch(self, mocker, tmp_path):
        save = mocker.patch("instanton_gluing.experiments.plots._save")

        plot_lambda_ratio_vs_L(_branches(), tmp_path / "ratio.svg")

        lines = save.call_args.args[0].axes[0].get_lines()
        by_label = {line.get_label(): list(line.get_ydata()) for line in lines}
        assert by_label["seed 0, alpha 1, 12-"] == [1.0 + 2 * 0.05, 1.0 + 2 * 0.1]
