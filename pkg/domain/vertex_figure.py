"""Vertex figures: cyclic face-degree sequences up to rotation and reflection."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

MIN_FACE_DEGREE = 3
MIN_VALENCE = 3


class MalformedFigureError(ValueError):
    """Raised when a degree sequence cannot describe a vertex figure."""


def _rotations(seq: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    for i in range(len(seq)):
        yield seq[i:] + seq[:i]


def canonical_degrees(degrees: Iterable[int]) -> Tuple[int, ...]:
    """
    Lexicographically least sequence among all rotations of ``degrees``
    and of its reversal.

    Raises:
        MalformedFigureError: empty input or a degree below 3
    """
    seq = tuple(int(d) for d in degrees)
    if not seq:
        raise MalformedFigureError("Vertex figure needs at least one face degree.")
    bad = [d for d in seq if d < MIN_FACE_DEGREE]
    if bad:
        raise MalformedFigureError(f"Face degrees must be >= {MIN_FACE_DEGREE}, got {bad}")
    return min(min(_rotations(seq)), min(_rotations(seq[::-1])))


@dataclass(frozen=True)
class VertexFigure:
    """
    Canonical cyclic sequence of the face degrees met around a vertex.

    The constructor canonicalises its input, so two figures compare equal
    exactly when they agree up to rotation and reflection.
    """
    degrees: Tuple[int, ...]

    def __post_init__(self) -> None:
        canonical = canonical_degrees(self.degrees)
        if len(canonical) < MIN_VALENCE:
            raise MalformedFigureError(
                f"A vertex figure needs at least {MIN_VALENCE} faces, got {len(canonical)}"
            )
        object.__setattr__(self, "degrees", canonical)

    @property
    def r(self) -> int:
        """Number of faces (and edges) at the vertex."""
        return len(self.degrees)

    @property
    def multiplicities(self) -> Counter:
        return Counter(self.degrees)

    def multiplicity(self, p: int) -> int:
        return self.degrees.count(p)

    @property
    def distinct_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.degrees)))

    @property
    def sorted_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.degrees))

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.r, self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return ".".join(str(d) for d in self.degrees)


def canonical_figure(degrees: Iterable[int]) -> VertexFigure:
    """Build the canonical vertex figure of a cyclic degree sequence."""
    return VertexFigure(tuple(degrees))
