import io
import json

import pytest

from graphs.canonical import canonical_form
from graphs.families import g_n, g_one, g_star_1, g_star_2
from graphs.io import emit_graph6
from schemas.report import VerifyTask
from services.corpus import CONNECTED_COUNTS, enumerate_connected
from services.errors import ContractError, SourceError
from services.harness import (
    CSV_FIELDS, check_monotonicity, expected_exceptions, run_verification,
    search_counterexamples, write_csv, write_jsonl,
)


def forms(*graphs):
    return sorted(canonical_form(g).decode("ascii") for g in graphs)


def violator_forms(report):
    return report.summary.exception_matches


# ─── THEOREM REPLAYS ──────────────────────────────────────────────────────────

def test_small_order_flags_exactly_g1():
    report = run_verification(VerifyTask(theorem="thm-small-order", n=7))
    assert report.summary.scanned == CONNECTED_COUNTS[7]
    assert violator_forms(report) == forms(g_one())
    assert report.summary.exceptions_match is True
    assert report.summary.exhaustive and report.passed


@pytest.mark.parametrize("n", [5, 6])
def test_small_order_has_no_violations_below_seven(n):
    report = run_verification(VerifyTask(theorem="thm-small-order", n=n))
    assert report.summary.violations == 0
    assert report.summary.expected_exceptions == []
    assert report.summary.exceptions_match is True


@pytest.mark.parametrize("n, exception", [(5, g_star_1), (6, g_star_2)])
def test_gnk_exceptions(n, exception):
    report = run_verification(VerifyTask(theorem="thm-gnk", n=n))
    assert violator_forms(report) == forms(exception())
    assert report.summary.expected_exceptions == forms(exception())
    assert report.passed


def test_gnk_has_no_exceptions_at_seven():
    report = run_verification(VerifyTask(theorem="thm-gnk", n=7))
    assert report.summary.violations == 0
    assert report.summary.expected_exceptions == []


def test_k2_d2_flags_g1():
    report = run_verification(VerifyTask(theorem="thm-k2-d2", n=7))
    assert violator_forms(report) == forms(g_one())
    assert report.summary.exceptions_match is True


@pytest.mark.parametrize("theorem", ["thm2-bridgeless", "thm3-gstar", "prop11", "lemma-bridge-bound"])
def test_clean_theorems_at_six(theorem):
    report = run_verification(VerifyTask(theorem=theorem, n=6))
    assert report.summary.scanned == CONNECTED_COUNTS[6]
    assert report.summary.violations == 0
    assert report.summary.undecided == 0


def test_bridge_bound_at_seven():
    report = run_verification(VerifyTask(theorem="lemma-bridge-bound", n=7))
    assert report.summary.violations == 0
    assert report.summary.in_class == CONNECTED_COUNTS[7]


@pytest.mark.parametrize("n", [6, 7])
def test_long_cycle_bounds_are_sound(n):
    report = run_verification(VerifyTask(theorem="woodall-eg-soundness", n=n))
    assert report.summary.violations == 0


@pytest.mark.parametrize("n", [6, 7])
@pytest.mark.parametrize("reading", ["theorem", "abstract"])
def test_main_k3_in_both_readings(n, reading):
    report = run_verification(VerifyTask(theorem="thm-main-k3", n=n, reading=reading))
    assert report.summary.scanned == CONNECTED_COUNTS[n]
    assert report.summary.violations == 0


def test_filters_count_as_filtered():
    report = run_verification(VerifyTask(theorem="thm2-bridgeless", n=6, min_degree=3))
    assert report.summary.filtered > 0
    assert report.summary.filtered + report.summary.in_class <= report.summary.scanned
    filtered = [r for r in report.records if r.note == "filtered"]
    assert all(r.delta < 3 for r in filtered)


def test_exact_pc_fills_every_checked_record():
    report = run_verification(VerifyTask(theorem="thm2-bridgeless", n=5, exact_pc=True))
    checked = [r for r in report.records if r.predicted is not None]
    assert checked and all(isinstance(r.pc, int) for r in checked)


def test_violators_carry_their_exact_value():
    report = run_verification(VerifyTask(theorem="thm-small-order", n=7))
    (record,) = report.violators
    assert record.pc == 3 and record.observed == "pc=3"


def test_expected_exceptions_need_the_right_order():
    assert expected_exceptions(VerifyTask(theorem="thm-small-order", n=6)) == []
    assert expected_exceptions(VerifyTask(theorem="thm-k2-d2", n=9)) == forms(g_n(9))
    assert expected_exceptions(VerifyTask(theorem="thm2-bridgeless", n=7)) == []


def test_contract_violations():
    with pytest.raises(ContractError):
        run_verification(VerifyTask(theorem="thm-gnk", n=5, k=1))
    with pytest.raises(ContractError):
        run_verification(VerifyTask(theorem="thm-main-k3", n=5, k=2))


def test_builtin_source_stops_at_its_cap():
    with pytest.raises(SourceError):
        run_verification(VerifyTask(theorem="prop11", n=9))


def test_deterministic():
    first = run_verification(VerifyTask(theorem="thm-gnk", n=6))
    second = run_verification(VerifyTask(theorem="thm-gnk", n=6))
    assert first.records == second.records


def test_parallel_run_matches_sequential():
    sequential = run_verification(VerifyTask(theorem="thm3-gstar", n=5))
    parallel = run_verification(VerifyTask(theorem="thm3-gstar", n=5, jobs=2))
    assert parallel.records == sequential.records


# ─── STREAMS ──────────────────────────────────────────────────────────────────

def test_stream_source(tmp_path):
    source = tmp_path / "five.g6"
    source.write_text("".join(emit_graph6(g) + "\n" for g in enumerate_connected(5)))

    partial = run_verification(VerifyTask(theorem="thm-gnk", n=5, source=str(source)))
    assert partial.summary.scanned == CONNECTED_COUNTS[5]
    assert violator_forms(partial) == forms(g_star_1())
    assert not partial.summary.exhaustive

    complete = run_verification(VerifyTask(
        theorem="thm-gnk", n=5, source=str(source), stream_completeness="geng -c 5",
    ))
    assert complete.summary.exhaustive
    assert complete.summary.stream_completeness == "geng -c 5"


def test_stream_order_mismatch(tmp_path):
    source = tmp_path / "mixed.g6"
    source.write_text("Bw\nCF\n")
    with pytest.raises(SourceError, match="line 2"):
        run_verification(VerifyTask(theorem="prop11", n=3, source=str(source)))


# ─── SEARCH + MONOTONICITY ────────────────────────────────────────────────────

def test_search_needs_min_degree_three():
    with pytest.raises(ContractError):
        search_counterexamples(7, 2)


def test_search_needs_a_stream_above_the_cap():
    with pytest.raises(SourceError):
        search_counterexamples(9, 3)


def test_search_at_seven():
    report = search_counterexamples(7, 4)
    assert report.summary.scanned == CONNECTED_COUNTS[7]
    assert report.summary.violations == 0
    assert all(r.delta >= 4 for r in report.records if r.predicted is not None)


def test_monotonicity_samples():
    report = check_monotonicity(25, seed=7)
    assert report.summary.scanned == 25
    assert report.summary.violations == 0
    assert all(r.note.startswith("removed ") for r in report.records)
    assert check_monotonicity(25, seed=7).records == report.records


def test_monotonicity_without_samples():
    report = check_monotonicity(0, seed=1)
    assert report.records == [] and report.summary.scanned == 0


def test_monotonicity_through_run_verification():
    report = run_verification(VerifyTask(theorem="lemma-monotonicity", n=1, samples=5, seed=3))
    assert report.summary.theorem == "lemma-monotonicity"
    assert len(report.records) == 5


# ─── WRITERS ──────────────────────────────────────────────────────────────────

def test_write_jsonl_ends_with_summary():
    report = run_verification(VerifyTask(theorem="thm-gnk", n=5))
    out = io.StringIO()
    write_jsonl(report, out)
    lines = out.getvalue().splitlines()
    assert len(lines) == len(report.records) + 1
    assert json.loads(lines[-1])["theorem"] == "thm-gnk"
    assert json.loads(lines[0])["graph6"] == report.records[0].graph6


def test_write_csv():
    report = run_verification(VerifyTask(theorem="thm-gnk", n=4))
    out = io.StringIO()
    write_csv(report, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_FIELDS)
    assert len(lines) == CONNECTED_COUNTS[4] + 1


# ─── FULL n = 8 REPLAYS ───────────────────────────────────────────────────────

@pytest.mark.slow
def test_small_order_at_eight():
    report = run_verification(VerifyTask(theorem="thm-small-order", n=8))
    assert violator_forms(report) == forms(g_n(8))
    assert report.summary.exceptions_match is True


@pytest.mark.slow
@pytest.mark.parametrize("theorem", ["thm2-bridgeless", "thm3-gstar"])
def test_structural_theorems_at_eight(theorem):
    report = run_verification(VerifyTask(theorem=theorem, n=8))
    assert report.summary.violations == 0


@pytest.mark.slow
def test_search_at_eight():
    report = search_counterexamples(8, 3)
    assert report.summary.violations == 0


@pytest.mark.slow
def test_monotonicity_thousand_samples():
    report = check_monotonicity(1000, seed=42)
    assert report.summary.scanned == 1000
    assert report.summary.violations == 0


@pytest.mark.slow
def test_long_cycle_bounds_at_eight():
    report = run_verification(VerifyTask(theorem="woodall-eg-soundness", n=8))
    assert report.summary.violations == 0


@pytest.mark.slow
def test_k2_d2_at_eight_flags_the_small_order_exception():
    report = run_verification(VerifyTask(theorem="thm-k2-d2", n=8))
    assert violator_forms(report) == forms(g_n(8))
    small_order = run_verification(VerifyTask(theorem="thm-small-order", n=8))
    assert violator_forms(report) == violator_forms(small_order)
