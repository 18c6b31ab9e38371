from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from domain.vertex_figure import VertexFigure


class PolyhedronClass(str, Enum):
    PLATONIC = "platonic"
    ARCHIMEDEAN = "archimedean"
    PRISM_FAMILY = "prism-family"
    ANTIPRISM_FAMILY = "antiprism-family"


class ProofCase(str, Enum):
    """Subcase of the valence/smallest-face case split that produced a figure."""
    R5_TRIANGLE = "r5-triangle"
    R4_TRIANGLE = "r4-triangle"
    R3_TRIANGLE = "r3-triangle"
    R3_SQUARE = "r3-square"
    R3_PENTAGON = "r3-pentagon"

    @property
    def order(self) -> int:
        return list(ProofCase).index(self)


class FamilyKind(str, Enum):
    PRISM = "prism"
    ANTIPRISM = "antiprism"


@dataclass(frozen=True)
class PolyhedronFamily:
    """
    Infinite family indexed by the polygon size m.

    prism: 4.4.m, antiprism: 3.3.3.m. min_param is the smallest m the
    case analysis attributes to the family itself.
    """
    kind: FamilyKind
    min_param: int

    def instance(self, m: int) -> VertexFigure:
        if self.kind == FamilyKind.PRISM:
            return VertexFigure((4, 4, m))
        return VertexFigure((3, 3, 3, m))

    def member_parameter(self, figure: VertexFigure) -> Optional[int]:
        """The m with instance(m) == figure, ignoring min_param."""
        if self.kind == FamilyKind.PRISM:
            fixed, r = 4, 3
        else:
            fixed, r = 3, 4
        if figure.r != r or figure.multiplicity(fixed) < r - 1:
            return None
        rest = list(figure.degrees)
        for _ in range(r - 1):
            rest.remove(fixed)
        return rest[0]

    def contains(self, figure: VertexFigure) -> bool:
        m = self.member_parameter(figure)
        return m is not None and m >= self.min_param

    @property
    def symbol(self) -> str:
        return "4^2.m" if self.kind == FamilyKind.PRISM else "3^3.m"


@dataclass(frozen=True)
class Classification:
    """A figure (or family of figures) found by one branch of the case analysis."""
    cls: PolyhedronClass
    name: str
    proof_cases: Tuple[ProofCase, ...]
    figure: Optional[VertexFigure] = None
    family: Optional[PolyhedronFamily] = None

    def __post_init__(self) -> None:
        if (self.figure is None) == (self.family is None):
            raise ValueError("A classification carries either a figure or a family, not both.")
        ordered = tuple(sorted(set(self.proof_cases), key=lambda c: c.order))
        object.__setattr__(self, "proof_cases", ordered)

    @property
    def proof_case(self) -> ProofCase:
        return self.proof_cases[0]

    @property
    def is_family(self) -> bool:
        return self.family is not None

    @property
    def slug(self) -> str:
        return slugify(self.name)

    @property
    def representative(self) -> VertexFigure:
        if self.family is not None:
            return self.family.instance(self.family.min_param)
        return self.figure

    @property
    def sort_key(self):
        return self.representative.sort_key + (self.is_family,)

    def matches(self, figure: VertexFigure) -> bool:
        if self.family is not None:
            return self.family.contains(figure)
        return self.figure == figure


def slugify(name: str) -> str:
    return "-".join(name.lower().split())

