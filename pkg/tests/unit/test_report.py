import json
from fractions import Fraction

import pytest
from jsonschema import validate
from rich.console import Console

from ncphase.core.engine import VerificationEngine
from ncphase.core.report import SCAN_HEADER, ReportGenerator, load_schema
from ncphase.domain.models import NCParams, QuantumNumbers
from ncphase.domain.types import UnitSystem
from ncphase.infra.constants import default_constants
from ncphase.physics.bounds import estimate_bounds
from ncphase.physics.corrections import correction, scan_levels
from ncphase.physics.hydrogen import moment_report
from ncphase.utils.numbers import format_sig17, fraction_str, relative_gap


def test_number_helpers() -> None:
    assert format_sig17(0.1) == "0.10000000000000001"
    assert format_sig17(None) == ""
    assert format_sig17(3.5) == "3.5"
    assert format_sig17(-2.0) == "-2"
    assert fraction_str(Fraction(6, 2)) == "3"
    assert fraction_str(Fraction(-1, 3)) == "-1/3"
    assert relative_gap(1.1, 1.0) == abs(1.1 - 1.0)
    assert relative_gap(0.5, 0.0) == 0.5


def test_suite_json_uses_pass_key() -> None:
    report = VerificationEngine(random_triplets=0).run(["nc"])
    payload = json.loads(ReportGenerator().suite_json(report))
    assert len(payload) == 27
    assert set(payload[0]) == {"id", "lhs", "rhs", "pass"}
    assert all(item["pass"] for item in payload)


def test_suite_csv() -> None:
    report = VerificationEngine(random_triplets=0).run(["nc"])
    lines = ReportGenerator().suite_csv(report).splitlines()
    assert lines[0] == "id,pass,lhs,rhs"
    assert lines[1].startswith("nc.XX.11,true,")


def test_scan_csv_leaves_unsupported_cells_empty() -> None:
    rows = scan_levels(2, NCParams.from_moments(theta_tilde=1.0, eta_sq_tilde=1.0))
    lines = ReportGenerator().scan_csv(rows).splitlines()
    assert lines[0] == ",".join(SCAN_HEADER)
    assert len(lines) == 4
    n, l, theta, eta, total, route = lines[3].split(",")
    assert (n, l, theta, total, route) == ("2", "1", "", "", "unsupported")
    assert float(eta) == 2.5


def test_correction_json_in_si() -> None:
    result = correction(1, 0, NCParams.from_moments(theta_tilde=1.0))
    constants = default_constants()
    payload = json.loads(ReportGenerator(constants, UnitSystem.SI).correction_json(result))
    assert payload["route"] == "ns_formula"
    assert payload["si"]["unit"] == "J"
    assert payload["si"]["total"] == constants.hartree_to_joule(payload["total"])


def test_correction_json_in_hartree_has_no_si_block() -> None:
    result = correction(1, 0, NCParams.from_moments(theta_tilde=1.0))
    payload = json.loads(ReportGenerator().correction_json(result))
    assert "si" not in payload
    assert payload["unit"] == "hartree"


def test_suite_json_validates_against_schema() -> None:
    report = VerificationEngine(random_triplets=2).run(["nc", "jacobi"])
    validate(json.loads(ReportGenerator().suite_json(report)), load_schema("suite_report"))


@pytest.mark.parametrize("rel_accuracy", [None, 9e-15])
def test_bounds_json_validates_against_schema(rel_accuracy: float | None) -> None:
    payload = json.loads(ReportGenerator().bounds_json(estimate_bounds(rel_accuracy)))
    validate(payload, load_schema("bound_result"))


@pytest.mark.parametrize("units", [UnitSystem.HARTREE, UnitSystem.SI])
def test_correction_json_validates_against_schema(units: UnitSystem) -> None:
    result = correction(3, 2, NCParams.from_moments(theta_sq_tilde=1.0, eta_sq_tilde=0.5))
    generator = ReportGenerator(default_constants(), units)
    validate(json.loads(generator.correction_json(result)), load_schema("correction_result"))


def test_scan_json_validates_against_schema() -> None:
    rows = scan_levels(4, NCParams.from_moments(theta_tilde=1.0, eta_sq_tilde=1.0))
    validate(json.loads(ReportGenerator().scan_json(rows)), load_schema("scan_rows"))


@pytest.mark.parametrize(("n", "l", "s"), [(1, 0, 2), (3, 2, -3)])
def test_moment_json_validates_against_schema(n: int, l: int, s: int) -> None:  # noqa: E741
    report = moment_report(QuantumNumbers(n=n, l=l), s)
    validate(json.loads(ReportGenerator().moment_json(report)), load_schema("moment_report"))


def test_tables_render() -> None:
    generator = ReportGenerator(default_constants(), UnitSystem.SI)
    console = Console(record=True, width=140)
    console.print(generator.bounds_table(estimate_bounds()))
    console.print(generator.correction_table(correction(2, 0, NCParams.from_moments(1.0))))
    text = console.export_text()
    assert "ħ<θ> (m²)" in text
    assert "delta_theta" in text


@pytest.mark.parametrize("value", [1.0 / 3.0, -1.0 / 32805.0, 4.0108e-36, 6.02214076e23, 2.5])
def test_format_sig17_round_trips(value: float) -> None:
    assert float(format_sig17(value)) == value
