"""Exact counting formulas for maps with a uniform vertex figure."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import count
from typing import Dict, FrozenSet, Optional, Tuple, Union

import structlog

from domain.vertex_figure import VertexFigure

logger = structlog.get_logger()

Rational = Fraction

EULER_CHARACTERISTIC = 2
FIRST_LEMMA_CONSTANT = 12

REGULAR_NAMES: Dict[Tuple[int, int], str] = {
    (3, 3): "tetrahedron",
    (4, 3): "cube",
    (3, 4): "octahedron",
    (5, 3): "dodecahedron",
    (3, 5): "icosahedron",
}


class MissingValenceDataError(ValueError):
    """Raised when a balance check needs per-valence vertex counts."""


class InfeasibilityReason(str, Enum):
    NON_POSITIVE_DENOMINATOR = "non-positive-denominator"
    NON_INTEGRAL_COUNT = "non-integral-count"


@dataclass(frozen=True)
class Infeasible:
    """Why a vertex figure cannot close up into a map on the sphere."""
    reason: InfeasibilityReason
    quantity: str
    value: Fraction

    def __str__(self) -> str:
        return f"{self.reason.value}: {self.quantity} = {self.value}"


@dataclass(frozen=True)
class CountData:
    """
    Vertex, edge and face totals of a polyhedron.

    face_counts maps a face degree p to F_p. valence_counts maps a vertex
    degree d to V_d and is only filled for realized maps.
    """
    V: int
    E: int
    F: int
    face_counts: Dict[int, int] = field(default_factory=dict)
    valence_counts: Optional[Dict[int, int]] = None

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    def face_count(self, p: int) -> int:
        return self.face_counts.get(p, 0)

    def same_totals(self, other: "CountData") -> bool:
        """Equality of V, E, F and the face counts, ignoring valence data."""
        return (
            (self.V, self.E, self.F) == (other.V, other.E, other.F)
            and self.face_counts == other.face_counts
        )

    def is_consistent(self) -> bool:
        """Handshake identities between the totals and the per-degree counts."""
        ok = sum(self.face_counts.values()) == self.F
        ok = ok and sum(p * n for p, n in self.face_counts.items()) == 2 * self.E
        if self.valence_counts is not None:
            ok = ok and sum(self.valence_counts.values()) == self.V
            ok = ok and sum(d * n for d, n in self.valence_counts.items()) == 2 * self.E
        return ok


CountResult = Union[CountData, Infeasible]


def vertex_denominator(degrees) -> Fraction:
    """1 - r/2 + sum(1/p_i): twice the reciprocal of V when positive."""
    degrees = tuple(degrees)
    return 1 - Fraction(len(degrees), 2) + sum((Fraction(1, p) for p in degrees), Fraction(0))


def valence_denominator(r: int) -> Fraction:
    """Denominator for r triangles at a vertex, the largest possible for valence r."""
    return vertex_denominator((3,) * r)


def vertex_count(figure: VertexFigure) -> Union[Fraction, Infeasible]:
    """
    V = 2 / (1 - r/2 + 1/p_1 + ... + 1/p_r).

    A zero denominator is a flat tiling and a negative one a hyperbolic
    tiling; both come back as Infeasible.
    """
    denominator = vertex_denominator(figure.degrees)
    if denominator <= 0:
        return Infeasible(InfeasibilityReason.NON_POSITIVE_DENOMINATOR, "denominator", denominator)
    return Fraction(2) / denominator


def edge_count(figure: VertexFigure, V) -> Fraction:
    """E = rV/2."""
    return Fraction(figure.r) * Fraction(V) / 2


def face_count(figure: VertexFigure, V, p: int) -> Fraction:
    """F_p = qV/p where q is the number of p-gons at each vertex."""
    q = figure.multiplicity(p)
    if q == 0:
        return Fraction(0)
    return Fraction(q) * Fraction(V) / p


def counts(figure: VertexFigure) -> CountResult:
    """
    Derive V, E and every F_p from the figure alone.

    All of them have to be positive integers for the figure to be
    feasible; the first quantity that is not is reported.
    """
    V = vertex_count(figure)
    if isinstance(V, Infeasible):
        return V
    if V.denominator != 1:
        return Infeasible(InfeasibilityReason.NON_INTEGRAL_COUNT, "V", V)

    E = edge_count(figure, V)
    if E.denominator != 1:
        return Infeasible(InfeasibilityReason.NON_INTEGRAL_COUNT, "E", E)

    face_counts: Dict[int, int] = {}
    for p in figure.distinct_degrees:
        F_p = face_count(figure, V, p)
        if F_p.denominator != 1:
            return Infeasible(InfeasibilityReason.NON_INTEGRAL_COUNT, f"F_{p}", F_p)
        face_counts[p] = int(F_p)

    data = CountData(V=int(V), E=int(E), F=sum(face_counts.values()), face_counts=face_counts)
    assert euler_check(data), f"Euler formula fails for {figure}: {data}"
    return data


def euler_check(c: CountData) -> bool:
    return c.V - c.E + c.F == EULER_CHARACTERISTIC


def lemma1_balance(c: CountData) -> bool:
    """
    3F_3 + 2F_4 + F_5 = 12 + sum 2(d-3) V_d + sum_{p>=7} (p-6) F_p.

    Raises:
        MissingValenceDataError: when the counts carry no valence data
    """
    if not c.valence_counts:
        raise MissingValenceDataError("Balance identity needs valence_counts.")
    lhs = sum((6 - p) * n for p, n in c.face_counts.items() if p < 6)
    rhs = FIRST_LEMMA_CONSTANT
    rhs += sum(2 * (d - 3) * n for d, n in c.valence_counts.items())
    rhs += sum((p - 6) * n for p, n in c.face_counts.items() if p > 6)
    return lhs == rhs


def has_small_face(c: CountData) -> bool:
    """At least one triangle, quadrilateral or pentagon is present."""
    return any(c.face_count(p) > 0 for p in (3, 4, 5))


def regular_vertex_count(p: int, q: int) -> Union[Fraction, Infeasible]:
    """V = 4p / (2p - qp + 2q) for q p-gons at every vertex."""
    denominator = 2 * p - q * p + 2 * q
    if denominator <= 0:
        return Infeasible(InfeasibilityReason.NON_POSITIVE_DENOMINATOR, "denominator", Fraction(denominator))
    return Fraction(4 * p, denominator)


def regular_counts(p: int, q: int) -> CountResult:
    V = regular_vertex_count(p, q)
    if isinstance(V, Infeasible):
        return V
    return counts(VertexFigure((p,) * q))


def enumerate_regular() -> FrozenSet[Tuple[int, int]]:
    """
    All (p, q) with p, q >= 3 and (p - 2)(q - 2) < 4.

    The product grows in both arguments, so each scan stops at the first
    failure.
    """
    pairs = set()
    for p in count(3):
        if (p - 2) * (3 - 2) >= 4:
            break
        for q in count(3):
            if (p - 2) * (q - 2) >= 4:
                break
            pairs.add((p, q))
    logger.debug("Regular pairs enumerated", pairs=sorted(pairs))
    return frozenset(pairs)


def regular_name(p: int, q: int) -> str:
    return REGULAR_NAMES[(p, q)]
