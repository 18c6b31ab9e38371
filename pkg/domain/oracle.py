"""
Brute-force arithmetic oracle.

Sweeps every cyclic vertex figure with r in 3..5 and face degrees up to
p_max, keeps the arithmetic-feasible ones and compares them with the case
analysis. Whatever the case analysis does not produce has to be ruled out
by one of the configuration filters.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Optional, Set, Tuple, Union

import structlog

from domain.case_analysis import full_catalog, max_valence
from domain.classification import Classification
from domain.configuration_filter import FilterVerdict
from domain.counting import CountData, Infeasible, counts, has_small_face, vertex_denominator
from domain.rule_based_filters import RuleBasedConfigurationScreen
from domain.vertex_figure import MIN_FACE_DEGREE, MIN_VALENCE, VertexFigure, canonical_degrees

logger = structlog.get_logger()

MIN_ORACLE_P = 5
MIN_DIFF_P = 12

Feasibility = Union[CountData, Infeasible]


class IncompleteClassificationError(RuntimeError):
    """Raised when a feasible figure is neither realized nor ruled out."""

    def __init__(self, unexplained: Tuple[VertexFigure, ...]):
        self.unexplained = unexplained
        listed = ", ".join(str(f) for f in unexplained)
        super().__init__(f"Feasible figures with no explanation: {listed}")


@dataclass(frozen=True)
class SpuriousFigure:
    """A feasible figure the case analysis rejects, with the rule that rejects it."""
    figure: VertexFigure
    verdict: Optional[FilterVerdict]

    @property
    def explained(self) -> bool:
        return self.verdict is not None


@dataclass(frozen=True)
class OracleReport:
    p_max: int
    feasible: Tuple[VertexFigure, ...]
    realized: Tuple[VertexFigure, ...]
    spurious: Tuple[SpuriousFigure, ...]

    @property
    def unexplained(self) -> Tuple[VertexFigure, ...]:
        return tuple(s.figure for s in self.spurious if not s.explained)

    @property
    def complete(self) -> bool:
        return not self.unexplained

    def spurious_figures(self) -> Set[VertexFigure]:
        return {s.figure for s in self.spurious}


def arithmetic_feasible(figure: VertexFigure) -> Feasibility:
    """CountData when the denominator is positive and V, E, every F_p integral."""
    result = counts(figure)
    if isinstance(result, CountData):
        assert has_small_face(result), f"{figure} has no face below 6"
    return result


def _multisets(r: int, p_max: int, prefix: Tuple[int, ...] = ()) -> Iterator[Tuple[int, ...]]:
    """
    Nondecreasing degree tuples with a positive denominator.

    Filling the rest with the smallest admissible degree gives the largest
    denominator, so a prefix is dropped once that is non-positive.
    """
    if len(prefix) == r:
        yield prefix
        return
    low = prefix[-1] if prefix else MIN_FACE_DEGREE
    for p in range(low, p_max + 1):
        candidate = prefix + (p,)
        if vertex_denominator(candidate + (p,) * (r - len(candidate))) <= 0:
            break
        yield from _multisets(r, p_max, candidate)


def _necklaces(multiset: Tuple[int, ...]) -> Set[Tuple[int, ...]]:
    return {canonical_degrees(order) for order in permutations(multiset)}


def oracle_enumerate(p_max: int) -> List[VertexFigure]:
    """
    Every arithmetic-feasible figure with 3 <= r <= 5 and degrees in
    3..p_max, one per cyclic order, sorted by (r, degrees).
    """
    if p_max < MIN_ORACLE_P:
        raise ValueError(f"p_max must be at least {MIN_ORACLE_P}, got {p_max}")
    found: Set[Tuple[int, ...]] = set()
    for r in range(MIN_VALENCE, max_valence() + 1):
        for multiset in _multisets(r, p_max):
            if isinstance(arithmetic_feasible(VertexFigure(multiset)), Infeasible):
                continue
            found |= _necklaces(multiset)
    figures = sorted((VertexFigure(d) for d in found), key=lambda f: f.sort_key)
    logger.debug("Oracle sweep finished", p_max=p_max, feasible=len(figures))
    return figures


def realized_figures(catalog: List[Classification], p_max: int) -> Set[VertexFigure]:
    """Catalog figures with every degree <= p_max, families instantiated."""
    realized: Set[VertexFigure] = set()
    for entry in catalog:
        if entry.family is not None:
            realized.update(entry.family.instance(m) for m in range(entry.family.min_param, p_max + 1))
        elif max(entry.figure.degrees) <= p_max:
            realized.add(entry.figure)
    return realized


def oracle_diff(
    p_max: int,
    strict: bool = True,
    screen: Optional[RuleBasedConfigurationScreen] = None,
) -> OracleReport:
    """
    Compares the oracle with the case analysis.

    Raises:
        ValueError: p_max below 12
        IncompleteClassificationError: in strict mode, when some spurious
            figure is not ruled out by any filter
    """
    if p_max < MIN_DIFF_P:
        raise ValueError(f"p_max must be at least {MIN_DIFF_P} for a diff, got {p_max}")
    screen = screen or RuleBasedConfigurationScreen()

    feasible = oracle_enumerate(p_max)
    realized = realized_figures(full_catalog(), p_max)
    missing = realized.difference(feasible)
    assert not missing, f"Realized figures missing from the oracle: {sorted(map(str, missing))}"

    spurious = tuple(
        SpuriousFigure(figure, screen.screen(figure)) for figure in feasible if figure not in realized
    )
    report = OracleReport(
        p_max=p_max,
        feasible=tuple(feasible),
        realized=tuple(sorted(realized, key=lambda f: f.sort_key)),
        spurious=spurious,
    )
    logger.info(
        "Oracle diff computed",
        p_max=p_max,
        feasible=len(report.feasible),
        realized=len(report.realized),
        spurious=len(report.spurious),
        unexplained=len(report.unexplained),
    )
    if strict and not report.complete:
        raise IncompleteClassificationError(report.unexplained)
    return report
