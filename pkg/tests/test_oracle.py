import pytest

from domain.configuration_filter import FilterKind
from domain.counting import CountData, Infeasible
from domain.oracle import (
    IncompleteClassificationError,
    arithmetic_feasible,
    oracle_diff,
    oracle_enumerate,
    realized_figures,
)
from domain.rule_based_filters import RuleBasedConfigurationScreen
from domain.vertex_figure import canonical_figure

SPURIOUS_AT_12 = {
    FilterKind.TRIANGLE_NEIGHBORS: [
        (3, 3, 4, 4), (3, 3, 4, 6), (3, 4, 3, 6), (3, 3, 4, 8), (3, 4, 3, 8),
        (3, 3, 4, 9), (3, 4, 3, 9), (3, 3, 4, 10), (3, 4, 3, 10), (3, 3, 4, 11),
        (3, 4, 3, 11), (3, 3, 5, 5), (3, 3, 5, 6), (3, 5, 3, 6), (3, 3, 5, 7),
        (3, 5, 3, 7), (3, 4, 4, 5),
    ],
    FilterKind.TRIANGLE_EQUAL_FACES: [
        (3, 3, 6), (3, 4, 12), (3, 6, 9), (3, 6, 12), (3, 8, 12), (3, 9, 12),
        (3, 10, 12), (3, 11, 12),
    ],
    FilterKind.TRIANGLE_PARITY: [(3, 9, 9), (3, 11, 11)],
    FilterKind.SQUARE_EVENNESS: [
        (4, 5, 10), (4, 5, 12), (4, 6, 9), (4, 6, 11), (4, 7, 7), (4, 7, 8), (4, 7, 9),
    ],
    FilterKind.PENTAGON_EQUAL_FACES: [(5, 5, 6), (5, 5, 8), (5, 5, 9), (5, 6, 7)],
}


@pytest.fixture(scope="module")
def report_12():
    return oracle_diff(12)


def test_feasible_examples():
    data = arithmetic_feasible(canonical_figure((3, 7, 14)))
    assert isinstance(data, CountData)
    assert (data.V, data.E, data.F) == (42, 63, 23)
    assert isinstance(arithmetic_feasible(canonical_figure((3, 3, 4, 5))), Infeasible)
    assert isinstance(arithmetic_feasible(canonical_figure((6, 6, 6))), Infeasible)


def test_oracle_keeps_every_cyclic_order():
    figures = set(oracle_enumerate(10))
    assert canonical_figure((3, 4, 5, 4)) in figures
    assert canonical_figure((3, 4, 4, 5)) in figures
    assert canonical_figure((3, 4, 3, 4)) in figures
    assert canonical_figure((3, 3, 4, 4)) in figures


def test_oracle_excludes_flat_and_fractional():
    figures = set(oracle_enumerate(10))
    assert canonical_figure((3, 6, 3, 6)) not in figures
    assert canonical_figure((4, 4, 4, 4)) not in figures
    assert canonical_figure((3, 3, 3, 3, 3, 3)) not in figures
    assert canonical_figure((3, 4, 5)) not in figures


def test_oracle_output_is_sorted_and_unique():
    figures = oracle_enumerate(12)
    assert len(figures) == len(set(figures))
    assert [f.sort_key for f in figures] == sorted(f.sort_key for f in figures)
    assert all(3 <= f.r <= 5 for f in figures)


def test_oracle_rejects_small_bound():
    with pytest.raises(ValueError):
        oracle_enumerate(4)
    with pytest.raises(ValueError):
        oracle_diff(11)


def test_realized_figures_instantiate_families(classifications):
    realized = realized_figures(classifications, 12)
    assert canonical_figure((4, 4, 12)) in realized
    assert canonical_figure((3, 3, 3, 12)) in realized
    assert canonical_figure((3, 4, 4)) in realized
    assert canonical_figure((4, 6, 10)) in realized
    assert canonical_figure((4, 4, 13)) not in realized


def test_realized_are_feasible(report_12):
    assert set(report_12.realized) <= set(report_12.feasible)


def test_spurious_figures_at_12(report_12):
    expected = {canonical_figure(d) for group in SPURIOUS_AT_12.values() for d in group}
    assert len(expected) == 38
    assert report_12.spurious_figures() == expected
    assert report_12.complete


def test_spurious_figures_are_attributed(report_12):
    by_figure = {s.figure: s.verdict for s in report_12.spurious}
    for kind, group in SPURIOUS_AT_12.items():
        for degrees in group:
            verdict = by_figure[canonical_figure(degrees)]
            assert verdict.kind == kind, degrees


@pytest.mark.parametrize("p_max", [16, 20])
def test_no_unexplained_figures(p_max):
    report = oracle_diff(p_max)
    assert report.unexplained == ()
    assert canonical_figure((3, 7, 14)) in report.spurious_figures()


def test_strict_diff_raises_without_filters():
    with pytest.raises(IncompleteClassificationError) as excinfo:
        oracle_diff(12, screen=RuleBasedConfigurationScreen(filters=()))
    assert len(excinfo.value.unexplained) == 38


def test_lenient_diff_reports_unexplained():
    report = oracle_diff(12, strict=False, screen=RuleBasedConfigurationScreen(filters=()))
    assert not report.complete
    assert len(report.unexplained) == 38
