from typing import List, Optional, Sequence

import structlog

from domain.classification import ProofCase
from domain.configuration_filter import ConfigurationFilter, FilterKind, FilterVerdict
from domain.vertex_figure import VertexFigure

logger = structlog.get_logger()


def smallest_face(figure: VertexFigure) -> int:
    return min(figure.degrees)


class TriangleNeighborFilter(ConfigurationFilter):
    """
    Four faces at a vertex, one of them a triangle.

    Walking round a triangle forces the two faces flanking it in the
    vertex figure to be equal, so some 3 must sit between equal neighbours.
    """
    kind = FilterKind.TRIANGLE_NEIGHBORS
    proof_case = ProofCase.R4_TRIANGLE

    def applies_to(self, figure: VertexFigure) -> bool:
        return figure.r == 4 and smallest_face(figure) == 3

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        if not self.applies_to(figure):
            return None
        seq = figure.degrees
        r = len(seq)
        for i, p in enumerate(seq):
            if p == 3 and seq[i - 1] == seq[(i + 1) % r]:
                return None
        return FilterVerdict(
            self.kind, self.proof_case,
            f"No triangle in {figure} has equal faces on both sides",
        )


class TriangleEqualFacesFilter(ConfigurationFilter):
    """Three faces with a triangle: the other two faces must be equal."""
    kind = FilterKind.TRIANGLE_EQUAL_FACES
    proof_case = ProofCase.R3_TRIANGLE

    def applies_to(self, figure: VertexFigure) -> bool:
        return figure.r == 3 and smallest_face(figure) == 3

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        if not self.applies_to(figure):
            return None
        _, p2, p3 = figure.sorted_degrees
        if p2 != p3:
            return FilterVerdict(
                self.kind, self.proof_case,
                f"Faces beside the triangle differ ({p2} != {p3})",
            )
        return None


class TriangleParityFilter(ConfigurationFilter):
    """
    Figure 3.p.p: the edges of a p-gon alternate between triangle edges
    and p-gon/p-gon edges, so p is even unless p == 3.
    """
    kind = FilterKind.TRIANGLE_PARITY
    proof_case = ProofCase.R3_TRIANGLE

    def applies_to(self, figure: VertexFigure) -> bool:
        if figure.r != 3 or smallest_face(figure) != 3:
            return False
        _, p2, p3 = figure.sorted_degrees
        return p2 == p3

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        if not self.applies_to(figure):
            return None
        p = figure.sorted_degrees[2]
        if p != 3 and p % 2 == 1:
            return FilterVerdict(
                self.kind, self.proof_case,
                f"{p}-gon edges cannot alternate in pairs around an odd face",
            )
        return None


class SquareEvennessFilter(ConfigurationFilter):
    """
    Three faces, smallest a square: both other faces are even.

    4.4.m is exempt for every m, odd included (the prism family).
    """
    kind = FilterKind.SQUARE_EVENNESS
    proof_case = ProofCase.R3_SQUARE

    def applies_to(self, figure: VertexFigure) -> bool:
        return figure.r == 3 and smallest_face(figure) == 4

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        if not self.applies_to(figure):
            return None
        _, p2, p3 = figure.sorted_degrees
        if p2 == 4:
            return None
        odd = [p for p in (p2, p3) if p % 2 == 1]
        if odd:
            return FilterVerdict(
                self.kind, self.proof_case,
                f"Odd face {odd[0]} next to a square in a 3-valent figure",
            )
        return None


class PentagonEqualFacesFilter(ConfigurationFilter):
    """Three faces, smallest a pentagon: the other two faces must be equal."""
    kind = FilterKind.PENTAGON_EQUAL_FACES
    proof_case = ProofCase.R3_PENTAGON

    def applies_to(self, figure: VertexFigure) -> bool:
        return figure.r == 3 and smallest_face(figure) == 5

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        if not self.applies_to(figure):
            return None
        _, p2, p3 = figure.sorted_degrees
        if p2 != p3:
            return FilterVerdict(
                self.kind, self.proof_case,
                f"Faces beside the pentagon differ ({p2} != {p3})",
            )
        return None


DEFAULT_FILTERS: Sequence[ConfigurationFilter] = (
    TriangleNeighborFilter(),
    TriangleEqualFacesFilter(),
    TriangleParityFilter(),
    SquareEvennessFilter(),
    PentagonEqualFacesFilter(),
)


class RuleBasedConfigurationScreen:
    """
    Runs the configuration filters in order and reports the first one
    that rules a figure out.
    """

    def __init__(self, filters: Sequence[ConfigurationFilter] = DEFAULT_FILTERS):
        self.filters = tuple(filters)

    def screen(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        for rule in self.filters:
            verdict = rule.check(figure)
            if verdict is not None:
                logger.debug("Figure ruled out", figure=str(figure), filter=verdict.kind.value)
                return verdict
        return None

    def verdicts(self, figure: VertexFigure) -> List[FilterVerdict]:
        """Every filter that rules the figure out, not just the first."""
        return [v for v in (rule.check(figure) for rule in self.filters) if v is not None]
