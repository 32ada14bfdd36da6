import logging

import pytest

from ncphase.core.engine import (
    MUTATED_REPRESENTATION,
    VerificationEngine,
    run_algebra_suite,
)
from ncphase.domain.models import SuiteReport
from ncphase.plugins.canonical import CanonicalAlgebraGroup
from ncphase.plugins.nc_algebra import NCAlgebraGroup

GROUP_IDS = [
    "nc",
    "ccr",
    "mixed",
    "tensor",
    "scalar",
    "magnitude",
    "vector",
    "jacobi",
    "oscillator",
    "canonical",
]


@pytest.fixture(scope="module")
def full_report() -> SuiteReport:
    return run_algebra_suite(random_triplets=20)


def _entry(report: SuiteReport, entry_id: str) -> bool:
    return next(e.passed for e in report.entries if e.id == entry_id)


def test_groups_are_registered_in_order() -> None:
    engine = VerificationEngine(random_triplets=0)
    assert [g.id for g in engine.get_groups()] == GROUP_IDS
    assert engine.get_group("jacobi") is not None
    assert engine.get_group("missing") is None


def test_register_group_replaces_same_id() -> None:
    engine = VerificationEngine(random_triplets=0)
    replacement = CanonicalAlgebraGroup()
    engine.register_group(replacement)
    assert engine.get_group("canonical") is replacement
    assert len(engine.get_groups()) == len(GROUP_IDS)


def test_full_suite_passes(full_report: SuiteReport) -> None:
    assert full_report.all_passed, [e.id for e in full_report.failures]


def test_entry_counts(full_report: SuiteReport) -> None:
    summary = full_report.summary()
    assert summary["nc"] == (27, 27)
    assert summary["ccr"] == (90, 90)
    assert summary["mixed"] == (72, 72)
    assert summary["jacobi"] == (56 + 20, 56 + 20)
    assert summary["magnitude"] == (6, 6)
    assert summary["vector"] == (54, 54)
    assert summary["canonical"] == (29, 29)


def test_entry_ids_and_renderings(full_report: SuiteReport) -> None:
    entry = next(e for e in full_report.entries if e.id == "nc.XX.12")
    assert entry.lhs == "i*l0*a3"
    assert entry.rhs == "i*l0*a3"
    assert _entry(full_report, "jacobi.X1_X2_P3")
    assert _entry(full_report, "jacobi.random019")
    assert _entry(full_report, "canonical.L1_R2")
    assert _entry(full_report, "scalar.Lt2_r^2")
    assert _entry(full_report, "mixed.X_pb.12")


def test_mutated_representation_is_detected(caplog: pytest.LogCaptureFixture) -> None:
    engine = VerificationEngine(representation=MUTATED_REPRESENTATION, random_triplets=0)
    with caplog.at_level(logging.WARNING, logger="ncphase"):
        report = engine.run(["nc"])
    assert not report.all_passed
    failed = {e.id for e in report.failures}
    assert "nc.XX.12" in failed
    assert "nc.PP.12" not in failed
    assert any("nc.XX.12" in record.getMessage() for record in caplog.records)


def test_commutative_limit() -> None:
    engine = VerificationEngine(random_triplets=0, commutative_limit=True)
    report = engine.run(["nc", "mixed"])
    assert report.all_passed
    entry = next(e for e in report.entries if e.id == "nc.XX.12")
    assert entry.lhs == "0"
    entry = next(e for e in report.entries if e.id == "nc.XP.11")
    assert entry.lhs == "i*hbar"


def test_seed_changes_only_random_triplets() -> None:
    first = VerificationEngine(seed=7, random_triplets=10).run(["jacobi"])
    second = VerificationEngine(seed=8, random_triplets=10).run(["jacobi"])
    assert [e.id for e in first.entries] == [e.id for e in second.entries]
    assert [e.passed for e in first.entries] == [e.passed for e in second.entries]
    assert first.all_passed
    assert first.seed == 7


def test_report_is_deterministic() -> None:
    first = VerificationEngine(seed=3, random_triplets=5).run(["jacobi", "nc"])
    second = VerificationEngine(seed=3, random_triplets=5).run(["jacobi", "nc"])
    assert first == second


def test_run_group_directly() -> None:
    engine = VerificationEngine(random_triplets=0)
    entries = engine.run_group(NCAlgebraGroup())
    assert len(entries) == 27
    assert entries[0].id == "nc.XX.11"
    assert entries[0].lhs == "0"
