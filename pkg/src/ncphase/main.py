"""
ncphase CLI 主入口 - 使用 Typer 构建命令行界面
"""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError
from rich.console import Console

from ncphase import __version__
from ncphase.algebra.observables import DEFAULT_REPRESENTATION
from ncphase.core.context import AppConfig, AppContext
from ncphase.core.engine import MUTATED_REPRESENTATION, VerificationEngine
from ncphase.core.exceptions import (
    ConfigError,
    DivergentFormulaError,
    DivergentMomentError,
    DomainError,
    NCPhaseError,
)
from ncphase.core.report import ReportGenerator
from ncphase.domain.models import QuantumNumbers
from ncphase.domain.types import BoundRoute, MomentMethod, OutputFormat, UnitSystem
from ncphase.infra.config import RunConfig, load_config
from ncphase.physics.bounds import DEFAULT_SPLIT, estimate_bounds
from ncphase.physics.corrections import correction as level_correction
from ncphase.physics.corrections import scan_levels
from ncphase.physics.hydrogen import moment_report
from ncphase.plugins.jacobi import DEFAULT_RANDOM_TRIPLETS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DIVERGENT = 3

# 创建 Typer 应用
app = typer.Typer(
    name="ncphase",
    help="ncphase - 相空间非对易量子力学的代数验证与氢原子能级修正",
    add_completion=False,
    rich_markup_mode="rich",
)

console = Console()
err_console = Console(stderr=True)


def version_callback(value: bool) -> None:
    """显示版本信息"""
    if value:
        console.print(f"[bold blue]ncphase[/bold blue] version [green]{__version__}[/green]")
        raise typer.Exit()


@app.callback()
def main(
    version: bool | None = typer.Option(
        None,
        "--version",
        "-V",
        help="显示版本信息",
        callback=version_callback,
        is_eager=True,
    ),
) -> None:
    """
    ncphase - 相空间非对易量子力学工具

    验证扩展相空间代数，计算氢原子能级的一阶修正并给出参数上界。
    """


def _init_context(verbose: bool) -> None:
    AppContext.reset()
    AppContext(AppConfig(verbose=verbose))


@contextmanager
def _exit_codes() -> Iterator[None]:
    """把领域异常映射为进程退出码"""
    try:
        yield
    except (DivergentFormulaError, DivergentMomentError) as e:
        err_console.print(f"[red]发散:[/red] {e}")
        raise typer.Exit(code=EXIT_DIVERGENT) from e
    except (ConfigError, DomainError, ValidationError) as e:
        err_console.print(f"[red]参数错误:[/red] {e}")
        raise typer.Exit(code=EXIT_USAGE) from e
    except NCPhaseError as e:
        err_console.print(f"[red]计算失败:[/red] {e}")
        raise typer.Exit(code=EXIT_FAILURE) from e


def _resolve(config: Path | None, **overrides: Any) -> RunConfig:
    return load_config(config, overrides)


def _emit(text: str) -> None:
    typer.echo(text if text.endswith("\n") else text + "\n", nl=False)


CONFIG_OPTION = typer.Option(None, "--config", "-c", help="JSON 配置文件路径")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="输出格式: json, csv, text")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="显示调试日志")


@app.command()
def verify(
    seed: int | None = typer.Option(None, "--seed", help="随机三元组的种子"),
    random_triplets: int = typer.Option(
        DEFAULT_RANDOM_TRIPLETS, "--random-triplets", min=0, help="随机 Jacobi 三元组数量"
    ),
    mutate_representation: bool = typer.Option(
        False, "--mutate-representation", hidden=True
    ),
    commutative_limit: bool = typer.Option(False, "--commutative-limit", hidden=True),
    config: Path | None = CONFIG_OPTION,
    output: OutputFormat | None = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    🧮 运行扩展相空间的代数验证套件

    任何一条恒等式不成立时退出码为 1。
    """
    _init_context(verbose)
    with _exit_codes():
        run = _resolve(config, seed=seed, output=output)
        engine = VerificationEngine(
            representation=(
                MUTATED_REPRESENTATION if mutate_representation else DEFAULT_REPRESENTATION
            ),
            seed=run.seed,
            random_triplets=random_triplets,
            commutative_limit=commutative_limit,
        )
        report = engine.run()

    generator = ReportGenerator()
    fmt = run.output or OutputFormat.TEXT
    if fmt == OutputFormat.JSON:
        _emit(generator.suite_json(report))
    elif fmt == OutputFormat.CSV:
        _emit(generator.suite_csv(report))
    else:
        console.print(generator.suite_table(report))
        if report.failures:
            console.print(generator.failures_table(report))

    if not report.all_passed:
        raise typer.Exit(code=EXIT_FAILURE)


@app.command()
def correction(
    n: int = typer.Option(..., "--n", help="主量子数 n ≥ 1"),
    l: int = typer.Option(0, "--l", help="角量子数 0 ≤ l < n"),  # noqa: E741
    m: int = typer.Option(0, "--m", help="磁量子数 |m| ≤ l"),
    l0: float | None = typer.Option(None, "--l0", help="坐标非对易尺度 (Bohr)"),
    p0: float | None = typer.Option(None, "--p0", help="动量非对易尺度 (原子单位)"),
    l_planck: float | None = typer.Option(None, "--l-planck", help="Planck 长度 (Bohr)"),
    theta_tilde: float | None = typer.Option(None, "--theta-tilde", help="⟨θ̃⟩"),
    theta_sq_tilde: float | None = typer.Option(None, "--theta-sq-tilde", help="⟨θ̃²⟩"),
    eta_sq_tilde: float | None = typer.Option(None, "--eta-sq-tilde", help="⟨η̃²⟩"),
    units: UnitSystem | None = typer.Option(None, "--units", help="单位制: hartree, si"),
    config: Path | None = CONFIG_OPTION,
    output: OutputFormat | None = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    ⚛️ 计算单个能级的一阶能量修正
    """
    _init_context(verbose)
    with _exit_codes():
        QuantumNumbers(n=n, l=l, m=m)
        run = _resolve(
            config,
            units=units,
            output=output,
            l0=l0,
            p0=p0,
            l_planck=l_planck,
            theta_tilde=theta_tilde,
            theta_sq_tilde=theta_sq_tilde,
            eta_sq_tilde=eta_sq_tilde,
        )
        result = level_correction(n, l, run.nc_params())
        generator = ReportGenerator(run.physical_constants(), run.units)

    if (run.output or OutputFormat.JSON) == OutputFormat.TEXT:
        console.print(generator.correction_table(result))
    else:
        _emit(generator.correction_json(result))


@app.command()
def scan(
    n_max: int = typer.Option(10, "--n-max", help="扫描的最大主量子数 (1..50)"),
    l0: float | None = typer.Option(None, "--l0", help="坐标非对易尺度 (Bohr)"),
    p0: float | None = typer.Option(None, "--p0", help="动量非对易尺度 (原子单位)"),
    l_planck: float | None = typer.Option(None, "--l-planck", help="Planck 长度 (Bohr)"),
    theta_tilde: float | None = typer.Option(None, "--theta-tilde", help="⟨θ̃⟩"),
    theta_sq_tilde: float | None = typer.Option(None, "--theta-sq-tilde", help="⟨θ̃²⟩"),
    eta_sq_tilde: float | None = typer.Option(None, "--eta-sq-tilde", help="⟨η̃²⟩"),
    config: Path | None = CONFIG_OPTION,
    output: OutputFormat | None = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    📈 列出 n ≤ n_max 的全部能级修正
    """
    _init_context(verbose)
    with _exit_codes():
        run = _resolve(
            config,
            output=output,
            l0=l0,
            p0=p0,
            l_planck=l_planck,
            theta_tilde=theta_tilde,
            theta_sq_tilde=theta_sq_tilde,
            eta_sq_tilde=eta_sq_tilde,
        )
        rows = scan_levels(n_max, run.nc_params())

    generator = ReportGenerator()
    fmt = run.output or OutputFormat.CSV
    if fmt == OutputFormat.JSON:
        _emit(generator.scan_json(rows))
    elif fmt == OutputFormat.TEXT:
        console.print(generator.scan_table(rows))
    else:
        _emit(generator.scan_csv(rows))


@app.command()
def bounds(
    accuracy: float | None = typer.Option(None, "--accuracy", help="相对测量精度"),
    split: float = typer.Option(DEFAULT_SPLIT, "--split", help="分配给 θ 的误差比例"),
    route: BoundRoute = typer.Option(BoundRoute.PAPER, "--route", help="θ 跃迁系数来源"),
    config: Path | None = CONFIG_OPTION,
    output: OutputFormat | None = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    📏 由 1s-2s 跃迁精度估计 θ、η 上界
    """
    _init_context(verbose)
    with _exit_codes():
        run = _resolve(config, output=output)
        result = estimate_bounds(accuracy, split, route, run.physical_constants())

    generator = ReportGenerator(run.physical_constants())
    if (run.output or OutputFormat.JSON) == OutputFormat.TEXT:
        console.print(generator.bounds_table(result))
    else:
        _emit(generator.bounds_json(result))


@app.command()
def moment(
    n: int = typer.Option(..., "--n", help="主量子数 n ≥ 1"),
    l: int = typer.Option(0, "--l", help="角量子数 0 ≤ l < n"),  # noqa: E741
    s: int = typer.Option(..., "--s", help="径向矩的幂次"),
    tol: float = typer.Option(1e-10, "--tol", help="求积相对容差"),
    method: MomentMethod = typer.Option(MomentMethod.CLOSED, "--method", help="closed, recursion"),
    config: Path | None = CONFIG_OPTION,
    output: OutputFormat | None = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    🔬 径向矩 ⟨r^s⟩：精确值与数值积分对照
    """
    _init_context(verbose)
    with _exit_codes():
        run = _resolve(config, output=output)
        report = moment_report(QuantumNumbers(n=n, l=l), s, tol, method)

    generator = ReportGenerator()
    if (run.output or OutputFormat.JSON) == OutputFormat.TEXT:
        console.print(generator.moment_table(report))
    else:
        _emit(generator.moment_json(report))


if __name__ == "__main__":
    app()
