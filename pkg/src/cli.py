"""CLI interface for the covert quorum simulator."""

import logging
import os
from pathlib import Path

import typer
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.consts import DEFAULT_DATA_DIR
from src.errors import CovertSimError
from src.graph.degree_stats import degree_stats
from src.graph.edge_list import bfs_subsample, load_edge_list
from src.harness.acceptance import SUITES, run_acceptance
from src.harness.results import ResultStore
from src.harness.runner import ExperimentRunner
from src.harness.sweep import (
    NO_POLICE,
    gnuplot_script,
    render_csv,
    report_rows,
    run_sweep,
    sweep_rows,
)
from src.models.model_analysis import Estimate
from src.models.model_config import ExperimentConfig, TopologyKind, TopologySpec
from src.models.model_sweep import SweepMetadata

app = typer.Typer(
    name="cqs",
    help="Covert quorum simulator - success, output risk and message risk of covert protocols",
)

console = Console()

EXIT_INVALID = 1
EXIT_ACCEPTANCE_FAILED = 2


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress at INFO level"),
) -> None:
    """Configure logging and load environment defaults from .env."""
    load_dotenv()
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )


def _fail(message: str) -> typer.Exit:
    console.print(f"[red]Error:[/red] {message}")
    return typer.Exit(EXIT_INVALID)


def _load_config(path: Path | None, seed: int | None, threads: int | None) -> ExperimentConfig:
    """Load a config file and apply flag and environment overrides (flag > env > file)."""
    if path is None:
        raise _fail("Must specify --config")
    try:
        config = ExperimentConfig.from_file(path)
    except OSError as e:
        raise _fail(f"Cannot read config {path}: {e}") from e
    except ValidationError as e:
        raise _fail(f"Invalid config {path}:\n{e}") from e

    updates: dict[str, int] = {}
    if seed is not None:
        updates["seed"] = seed
    workers = _threads(threads)
    if workers is not None:
        updates["threads"] = workers
    try:
        return ExperimentConfig.model_validate(config.model_dump() | updates)
    except ValidationError as e:
        raise _fail(f"Invalid override:\n{e}") from e


def _threads(flag: int | None) -> int | None:
    """Worker threads from the flag, else CQS_THREADS, else None."""
    if flag is not None:
        return flag
    env_threads = os.getenv("CQS_THREADS")
    if not env_threads:
        return None
    try:
        return int(env_threads)
    except ValueError as e:
        raise _fail(f"CQS_THREADS must be an integer, got {env_threads!r}") from e


def _store(out: Path | None, config: ExperimentConfig | None = None) -> ResultStore:
    """Results root: --out, then CQS_DATA_DIR, then the config's output, then the default."""
    if out is not None:
        return ResultStore(out)
    env_dir = os.getenv("CQS_DATA_DIR")
    if env_dir:
        return ResultStore(env_dir)
    if config is not None and config.output is not None:
        return ResultStore(config.output)
    return ResultStore(DEFAULT_DATA_DIR)


def _progress() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
        console=console,
    )


def _fmt_estimate(estimate: Estimate | None) -> str:
    if estimate is None:
        return "-"
    return f"{estimate.value:.4f} [{estimate.lo:.4f}, {estimate.hi:.4f}]"


@app.command()
def run(
    config_path: Path = typer.Option(None, "--config", "-c", help="Experiment config (JSON)"),
    seed: int = typer.Option(None, "--seed", help="Master seed (overrides config)"),
    out: Path = typer.Option(None, "--out", "-o", help="Results directory"),
    threads: int = typer.Option(None, "--threads", "-t", help="Worker threads"),
) -> None:
    """Run one configuration in both regimes and report success and risks."""
    config = _load_config(config_path, seed, threads)
    console.print(f"\n[bold]Running {config.name} ({config.trials} trials per regime)...[/bold]\n")

    try:
        with _progress() as progress:
            task = progress.add_task("Trials...", total=config.trials * 2)

            def on_progress(current: int, total: int) -> None:
                progress.update(task, completed=current)

            runner = ExperimentRunner(config.threads)
            result = runner.run_experiment(config, progress_callback=on_progress)

        labels = [spec.label for spec in config.police]
        rows = report_rows(result.report, config, result.stats, config.protocol.epsilon, labels)
        path = _store(out, config).save_run(config.name, render_csv(rows))
    except (CovertSimError, ValidationError, OSError) as e:
        raise _fail(str(e)) from e

    report = result.report
    table = Table(title=f"{config.name}: {config.protocol.kind.value}, {config.mode.value} mode")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right", style="magenta")
    table.add_row("Agents / median degree", f"{result.stats.n} / {result.stats.median_degree}")
    table.add_row("Success", _fmt_estimate(report.success))
    table.add_row("Output risk", _fmt_estimate(report.output_risk))
    table.add_row("Output risk (all rebels)", _fmt_estimate(report.output_risk_unrestricted))
    table.add_row("Message risk (analytic)", f"{report.message_risk_analytic:.4f}")
    if report.total_risk is not None:
        table.add_row("Total risk", f"{report.total_risk:.4f}")
    for regime, risks in report.message_risk_empirical.items():
        for label, risk in risks.items():
            table.add_row(
                f"Message risk vs {label} ({regime.value})",
                f"{risk.value:.4f} [{risk.lo:.4f}, {risk.hi:.4f}]",
            )
    table.add_row("Duration", f"{result.duration_seconds:.1f}s")
    console.print(table)
    console.print(f"\n[green]Saved {path}[/green]")


@app.command()
def sweep(
    config_path: Path = typer.Option(
        None, "--config", "-c", help="Experiment config with a sweep section"
    ),
    seed: int = typer.Option(None, "--seed", help="Master seed (overrides config)"),
    out: Path = typer.Option(None, "--out", "-o", help="Results directory"),
    threads: int = typer.Option(None, "--threads", "-t", help="Worker threads"),
    gnuplot: bool = typer.Option(False, "--gnuplot", help="Also write a gnuplot script"),
) -> None:
    """Sweep one parameter over a grid and write CSV plus metadata."""
    config = _load_config(config_path, seed, threads)
    if config.sweep is None:
        raise _fail(f"Config {config_path} has no sweep section")

    grid_size = len(config.sweep.grid)
    console.print(f"\n[bold]Sweeping {config.sweep.parameter} over {grid_size} values...[/bold]\n")
    try:
        with _progress() as progress:
            task = progress.add_task("Grid...", total=grid_size)

            def on_progress(current: int, total: int) -> None:
                progress.update(task, completed=current)

            runner = ExperimentRunner(config.threads)
            result = run_sweep(config, runner, progress_callback=on_progress)

        rows = sweep_rows(result)
        metadata = SweepMetadata(
            name=config.name,
            parameter=config.sweep.parameter,
            grid=sorted(config.sweep.grid),
            seed=config.seed,
            trials=config.trials,
            network=result.stats,
            network_name=result.network.name,
            config=config,
            duration_seconds=result.duration_seconds,
        )
        script = None
        if gnuplot:
            police = config.police[0].label if config.police else NO_POLICE
            script = gnuplot_script(f"{config.name}.csv", config.sweep.parameter, police)
        path = _store(out, config).save_sweep(config.name, render_csv(rows), metadata, script)
    except (CovertSimError, ValidationError, OSError) as e:
        raise _fail(str(e)) from e

    table = Table(title=f"Sweep of {config.sweep.parameter}")
    table.add_column(config.sweep.parameter, justify="right", style="cyan")
    table.add_column("Success", justify="right")
    table.add_column("Output risk", justify="right")
    table.add_column("Message risk", justify="right")
    table.add_column("Total risk", justify="right", style="magenta")
    for point in result.points:
        report = point.result.report
        table.add_row(
            f"{point.value:g}",
            "-" if report.success is None else f"{report.success.value:.4f}",
            "-" if report.output_risk is None else f"{report.output_risk.value:.4f}",
            f"{report.message_risk_analytic:.4f}",
            "-" if report.total_risk is None else f"{report.total_risk:.4f}",
        )
    console.print(table)
    console.print(f"\n[green]Saved {path}[/green] ({len(rows)} rows)")


@app.command()
def accept(
    suite: str = typer.Argument(..., help=f"Suite: {', '.join([*SUITES, 'all'])}"),
    seed: int = typer.Option(None, "--seed", help="Master seed"),
    out: Path = typer.Option(None, "--out", "-o", help="Results directory"),
    threads: int = typer.Option(None, "--threads", "-t", help="Worker threads"),
    trials: int = typer.Option(None, "--trials", help="Override every suite's trial count"),
    edge_list: Path = typer.Option(None, "--edge-list", help="Edge-list file for the risk_gap suite"),
    max_nodes: int = typer.Option(None, "--max-nodes", help="Breadth-first sample size of --edge-list"),
) -> None:
    """Run an acceptance suite; exit code 2 when any criterion fails."""
    kwargs: dict[str, int | None] = {"threads": _threads(threads) or 1, "trials": trials}
    if seed is not None:
        kwargs["seed"] = seed

    console.print(f"\n[bold]Running acceptance suite {suite}...[/bold]\n")
    try:
        topology = None
        if edge_list is not None:
            topology = TopologySpec(
                kind=TopologyKind.EDGE_LIST, path=edge_list, n=None, degree=None, max_nodes=max_nodes
            )
        report = run_acceptance(suite, topology=topology, **kwargs)
        path = _store(out).save_acceptance(report)
    except (CovertSimError, ValidationError, OSError) as e:
        raise _fail(str(e)) from e

    table = Table(title=f"Acceptance: {suite} (seed {report.seed})")
    table.add_column("Criterion", style="cyan")
    table.add_column("Result", justify="center")
    table.add_column("Measured")
    for criterion in report.criteria:
        status = "[green]PASS[/green]" if criterion.passed else "[red]FAIL[/red]"
        measured = ", ".join(f"{k}={v:.4g}" for k, v in criterion.measured.items())
        table.add_row(criterion.name, status, measured)
    console.print(table)
    console.print(f"\nSaved {path} ({report.duration_seconds:.1f}s)")

    if not report.passed:
        console.print(f"[red]Suite {suite} failed[/red]")
        raise typer.Exit(EXIT_ACCEPTANCE_FAILED)
    console.print(f"[bold green]Suite {suite} passed[/bold green]")


@app.command("graph-stats")
def graph_stats(
    path: Path = typer.Argument(..., help="Edge-list file"),
    max_nodes: int = typer.Option(None, "--max-nodes", help="Breadth-first sample size"),
    root: int = typer.Option(None, "--root", help="Sample root (file node id)"),
) -> None:
    """Print degree statistics of an edge-list file."""
    try:
        network = load_edge_list(path)
        if max_nodes is not None:
            network = bfs_subsample(network, max_nodes, root)
        stats = degree_stats(network)
    except (CovertSimError, OSError) as e:
        raise _fail(str(e)) from e

    table = Table(title=f"Degree statistics: {network.name or path}")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right", style="magenta")
    table.add_row("Nodes", str(stats.n))
    table.add_row("Edges", str(stats.edge_count))
    table.add_row("Median degree", str(stats.median_degree))
    table.add_row("Min degree", str(stats.min_degree))
    table.add_row("Max degree", str(stats.max_degree))
    table.add_row("Mean degree", f"{stats.mean_degree:.2f}")
    console.print(table)


if __name__ == "__main__":
    app()
