"""Interfaz de línea de órdenes.

Subórdenes:
    run    Barrido de semillas × L × α con recuento, signos y oráculo opcional
    lemma  Batería de comprobaciones del lema de rango uno

Códigos de salida: 0 todo verificado, 2 anomalía de recuento, 3 anomalía
de signo, 4 desacuerdo con el oráculo, 1 error inesperado.
"""

import argparse
from dataclasses import replace
from pathlib import Path
from typing import List, Optional

from instanton_gluing.core.config import LemmaConfig, SolverConfig
from instanton_gluing.experiments.report import EXIT_OK, EXIT_UNEXPECTED
from instanton_gluing.utils import translations as t
from instanton_gluing.utils.logger import Logger


def parse_seeds(text: str) -> List[int]:
    """Interpreta "0-19" como rango inclusivo o "1,5,7" como lista."""
    text = text.strip()
    try:
        if "-" in text.lstrip("-") and "," not in text:
            start, end = text.split("-", 1)
            seeds = list(range(int(start), int(end) + 1))
        else:
            seeds = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(t.CLI_ERROR_SEEDS.format(text=text)) from e
    if not seeds:
        raise argparse.ArgumentTypeError(t.CLI_ERROR_SEEDS.format(text=text))
    return seeds


def build_parser() -> argparse.ArgumentParser:
    """Construye el analizador de argumentos."""
    parser = argparse.ArgumentParser(prog="instanton-gluing", description=t.CLI_DESCRIPTION)
    parser.add_argument("--log-level", default="INFO", help=t.CLI_HELP_LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help=t.CLI_HELP_RUN)
    run.add_argument("--seeds", type=parse_seeds, default=[0], help=t.CLI_HELP_SEEDS)
    run.add_argument("--L", type=float, nargs="+", default=[0.2, 0.1, 0.05], help=t.CLI_HELP_L)
    run.add_argument("--alpha", type=float, nargs="+", default=None, help=t.CLI_HELP_ALPHA)
    run.add_argument("--K", type=float, default=None, help=t.CLI_HELP_K)
    run.add_argument("--degree", type=int, default=2, help=t.CLI_HELP_DEGREE)
    run.add_argument("--amplitude", type=float, default=1.0, help=t.CLI_HELP_AMPLITUDE)
    run.add_argument("--oracle", action="store_true", help=t.CLI_HELP_ORACLE)
    run.add_argument("--starts", type=int, default=1000, help=t.CLI_HELP_STARTS)
    run.add_argument("--out", type=Path, default=None, help=t.CLI_HELP_OUT)
    run.add_argument("--plots", action="store_true", help=t.CLI_HELP_PLOTS)
    run.add_argument("--tol", type=float, default=None, help=t.CLI_HELP_TOL)
    run.add_argument("--no-timing", action="store_true", help=t.CLI_HELP_NO_TIMING)
    run.add_argument("--sweep-depth", type=int, default=2, help=t.CLI_HELP_SWEEP_DEPTH)
    run.add_argument("--workers", type=int, default=None, help=t.CLI_HELP_WORKERS)
    run.add_argument("--config", type=str, default=None, help=t.CLI_HELP_CONFIG)

    lemma = sub.add_parser("lemma", help=t.CLI_HELP_LEMMA)
    lemma.add_argument("--n", type=int, default=100, help=t.CLI_HELP_N)
    lemma.add_argument("--seed", type=int, default=0, help=t.CLI_HELP_SEED)
    lemma.add_argument("--starts", type=int, default=None, help=t.CLI_HELP_STARTS)
    lemma.add_argument("--config", type=str, default=None, help=t.CLI_HELP_CONFIG)
    return parser


def solver_config_from_args(args: argparse.Namespace) -> SolverConfig:
    """SolverConfig del archivo --config (o por defecto) con los ajustes de la CLI."""
    config = SolverConfig.from_file(args.config) if args.config else SolverConfig.default()
    overrides = {}
    if args.K is not None:
        overrides["K"] = args.K
    if args.tol is not None:
        overrides["certify_tol"] = args.tol
    if args.workers is not None:
        overrides["workers"] = args.workers
    return replace(config, **overrides)


def _run_command(args: argparse.Namespace) -> int:
    from instanton_gluing.experiments.runner import ExperimentSpec, run

    solver = solver_config_from_args(args)
    spec = ExperimentSpec(
        seeds=args.seeds,
        L_values=args.L,
        alphas=args.alpha or [solver.alpha],
        solver=solver,
        out_dir=args.out,
        degree=args.degree,
        amplitude=args.amplitude,
        oracle=args.oracle,
        oracle_starts=args.starts,
        plots=args.plots,
        timing=not args.no_timing,
        stability_depth=args.sweep_depth,
    )
    report = run(spec)
    print(t.CLI_RUN_SUMMARY.format(rows=len(report.rows), csv=report.csv_path, code=report.exit_code))
    return report.exit_code


def _lemma_command(args: argparse.Namespace) -> int:
    from instanton_gluing.experiments.lemma_suite import lemma_suite

    config = LemmaConfig.from_file(args.config) if args.config else LemmaConfig.default()
    summary = lemma_suite(args.n, args.seed, args.starts, config)
    for line in summary.lines():
        print(line)
    return EXIT_OK if summary.passed else EXIT_UNEXPECTED


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Analiza argv, configura el logging y despacha la suborden.

    Args:
        argv: Argumentos (por defecto sys.argv[1:])

    Returns:
        Código de salida
    """
    args = build_parser().parse_args(argv)
    Logger.setup(level=args.log_level)
    Logger.debug(t.CLI_DEBUG_ARGS.format(args=vars(args)))

    if args.command == "run":
        return _run_command(args)
    return _lemma_command(args)
