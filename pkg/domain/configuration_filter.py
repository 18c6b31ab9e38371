from dataclasses import dataclass
from enum import Enum
from typing import Optional

from domain.classification import ProofCase
from domain.vertex_figure import VertexFigure


class FilterKind(str, Enum):
    TRIANGLE_NEIGHBORS = "triangle-neighbors"
    TRIANGLE_EQUAL_FACES = "triangle-equal-faces"
    TRIANGLE_PARITY = "triangle-parity"
    SQUARE_EVENNESS = "square-evenness"
    PENTAGON_EQUAL_FACES = "pentagon-equal-faces"


@dataclass(frozen=True)
class FilterVerdict:
    """Evidence that a configuration argument rules a figure out."""
    kind: FilterKind
    proof_case: ProofCase
    description: str


class ConfigurationFilter:
    """Abstract base class for configuration (adjacency/parity) arguments."""

    kind: FilterKind
    proof_case: ProofCase

    def applies_to(self, figure: VertexFigure) -> bool:
        """Whether the figure falls in this filter's subcase."""
        raise NotImplementedError

    def check(self, figure: VertexFigure) -> Optional[FilterVerdict]:
        """
        Checks a figure against the argument.

        Args:
            figure: canonical vertex figure

        Returns:
            FilterVerdict if the figure cannot occur at every vertex, else None
        """
        raise NotImplementedError
