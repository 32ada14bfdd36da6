"""
ReportGenerator - 结果输出

JSON（与包内 data/schemas 中的模式一致）、CSV（固定表头、17 位有效数字）
以及供终端查看的 rich 表格。所有输出对固定输入逐字节确定。
"""

from __future__ import annotations

import csv
import io
import json
from importlib.resources import files
from typing import Any

from rich.table import Table

from ncphase.domain.models import (
    BoundResult,
    CorrectionResult,
    MomentReport,
    ScanRow,
    SuiteReport,
)
from ncphase.domain.types import UnitSystem
from ncphase.infra.constants import PhysicalConstants
from ncphase.utils.numbers import format_sig17

SCAN_HEADER = ("n", "l", "delta_theta", "delta_eta", "total", "route")

SCHEMA_DIR = files("ncphase") / "data" / "schemas"


def load_schema(name: str) -> dict[str, Any]:
    """读取随包附带的 JSON Schema"""
    path = SCHEMA_DIR / f"{name}.schema.json"
    data: dict[str, Any] = json.loads(path.read_text(encoding="utf-8"))
    return data


def _dumps(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


class ReportGenerator:
    """把计算结果转换为 JSON、CSV 或 rich 表格"""

    def __init__(
        self,
        constants: PhysicalConstants | None = None,
        units: UnitSystem = UnitSystem.HARTREE,
    ) -> None:
        self._constants = constants
        self._units = units

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------

    def suite_json(self, report: SuiteReport) -> str:
        """[{id, lhs, rhs, pass}, ...]"""
        return _dumps([entry.model_dump(by_alias=True) for entry in report.entries])

    def correction_json(self, result: CorrectionResult) -> str:
        payload: dict[str, Any] = result.model_dump(mode="json")
        if self._units is UnitSystem.SI and self._constants is not None:
            payload["si"] = {
                "unit": "J",
                "delta_theta": self._constants.hartree_to_joule(result.delta_theta),
                "delta_eta": self._constants.hartree_to_joule(result.delta_eta),
                "total": self._constants.hartree_to_joule(result.total),
            }
        return _dumps(payload)

    def scan_json(self, rows: list[ScanRow]) -> str:
        return _dumps([row.model_dump(mode="json") for row in rows])

    def bounds_json(self, result: BoundResult) -> str:
        return _dumps(result.model_dump(mode="json"))

    def moment_json(self, report: MomentReport) -> str:
        return _dumps(report.model_dump(mode="json"))

    # ------------------------------------------------------------------
    # CSV
    # ------------------------------------------------------------------

    def scan_csv(self, rows: list[ScanRow]) -> str:
        """n,l,delta_theta,delta_eta,total,route；l = 1 行的 θ 与总和为空"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SCAN_HEADER)
        for row in rows:
            writer.writerow(
                (
                    row.n,
                    row.l,
                    format_sig17(row.delta_theta),
                    format_sig17(row.delta_eta),
                    format_sig17(row.total),
                    row.route.value,
                )
            )
        return buffer.getvalue()

    def suite_csv(self, report: SuiteReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("id", "pass", "lhs", "rhs"))
        for entry in report.entries:
            writer.writerow((entry.id, str(entry.passed).lower(), entry.lhs, entry.rhs))
        return buffer.getvalue()

    # ------------------------------------------------------------------
    # rich 表格
    # ------------------------------------------------------------------

    def suite_table(self, report: SuiteReport) -> Table:
        """按组汇总通过数"""
        table = Table(title=f"代数验证 (seed={report.seed})")
        table.add_column("组", style="cyan")
        table.add_column("通过", justify="right")
        table.add_column("总数", justify="right")
        for group, (ok, total) in report.summary().items():
            style = "green" if ok == total else "red"
            table.add_row(group, f"[{style}]{ok}[/{style}]", str(total))
        return table

    def failures_table(self, report: SuiteReport) -> Table:
        """列出失败条目的两端规范形"""
        table = Table(title="未通过的恒等式")
        table.add_column("id", style="red")
        table.add_column("lhs")
        table.add_column("rhs")
        for entry in report.failures:
            table.add_row(entry.id, entry.lhs, entry.rhs)
        return table

    def correction_table(self, result: CorrectionResult) -> Table:
        table = Table(title=f"能级修正 n={result.n}, l={result.l} ({result.route.value})")
        table.add_column("项", style="cyan")
        table.add_column("Hartree", justify="right")
        si = self._units is UnitSystem.SI and self._constants is not None
        if si:
            table.add_column("J", justify="right")
        for label, value in (
            ("delta_theta", result.delta_theta),
            ("delta_eta", result.delta_eta),
            ("total", result.total),
        ):
            cells = [label, format_sig17(value)]
            if si and self._constants is not None:
                cells.append(format_sig17(self._constants.hartree_to_joule(value)))
            table.add_row(*cells)
        return table

    def scan_table(self, rows: list[ScanRow]) -> Table:
        table = Table(title="能级扫描")
        for column in SCAN_HEADER:
            table.add_column(column, justify="right" if column != "route" else "left")
        for row in rows:
            table.add_row(
                str(row.n),
                str(row.l),
                format_sig17(row.delta_theta),
                format_sig17(row.delta_eta),
                format_sig17(row.total),
                row.route.value,
            )
        return table

    def bounds_table(self, result: BoundResult) -> Table:
        title = f"参数上界 (accuracy={result.accuracy_used:g}, split={result.split:g})"
        table = Table(title=title)
        table.add_column("参数", style="cyan")
        table.add_column("无量纲", justify="right")
        table.add_column("SI", justify="right")
        table.add_column("已发表", justify="right")
        table.add_column("对照", justify="left")
        table.add_row(
            "ħ<θ> (m²)",
            f"{result.theta.theta_tilde:.6g}",
            f"{result.theta.theta_si:.6g}",
            f"{result.published_theta_si:.0e}",
            "数量级一致" if result.paper_order_match else "[red]数量级不一致[/red]",
        )
        table.add_row(
            "ħ√<η²> (kg²·m²/s²)",
            f"{result.eta.eta_tilde:.6g}",
            f"{result.eta.eta_si:.6g}",
            f"{result.published_eta_si:.0e}",
            "[yellow]与已发表值不符[/yellow]" if result.paper_value_discrepancy else "一致",
        )
        return table

    def moment_table(self, report: MomentReport) -> Table:
        table = Table(title=f"<r^{report.s}>  n={report.n}, l={report.l}")
        table.add_column("路径", style="cyan")
        table.add_column("值", justify="right")
        table.add_row(f"{report.method.value} (exact)", report.exact)
        table.add_row(report.method.value, format_sig17(report.value))
        table.add_row("quadrature", format_sig17(report.quadrature))
        table.add_row("relative gap", f"{report.relative_gap:.3e}")
        return table
