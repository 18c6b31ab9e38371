from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import networkx as nx
import structlog

from domain.counting import CountData, euler_check, has_small_face, lemma1_balance
from domain.vertex_figure import MalformedFigureError, VertexFigure
from realization.polyhedral_map import PolyhedralMap

logger = structlog.get_logger()


@dataclass(frozen=True)
class MapReport:
    """
    Combinatorial facts read off a realized map.

    figures holds one vertex figure per vertex, in vertex order; it is
    empty when some face has fewer than three sides.
    """
    counts: CountData
    figures: Tuple[VertexFigure, ...]
    uniform: bool
    bipartite: bool
    euler_ok: bool
    balance_ok: bool
    small_face_ok: bool
    problems: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def figure(self) -> Optional[VertexFigure]:
        """The common vertex figure of a uniform map."""
        return self.figures[0] if self.uniform else None

    @property
    def figure_multiset(self) -> Counter:
        return Counter(self.figures)

    @property
    def ok(self) -> bool:
        return self.uniform and self.euler_ok and self.balance_ok and self.small_face_ok

    def matches(self, figure: VertexFigure, counts: CountData) -> bool:
        return self.ok and self.figure == figure and self.counts.same_totals(counts)


def map_counts(m: PolyhedralMap) -> CountData:
    face_counts = Counter(int(p) for p in m.face_sizes)
    valence_counts = Counter(int(d) for d in m.degrees)
    return CountData(
        V=m.V,
        E=m.E,
        F=m.F,
        face_counts=dict(sorted(face_counts.items())),
        valence_counts=dict(sorted(valence_counts.items())),
    )


def analyze(m: PolyhedralMap) -> MapReport:
    """Counts, per-vertex figures, uniformity and bipartiteness; never raises for a failed check."""
    data = map_counts(m)
    problems: List[str] = []

    try:
        figures = tuple(VertexFigure(tuple(m.vertex_figure_degrees(v))) for v in range(m.V))
    except MalformedFigureError as e:
        figures = ()
        problems.append(f"vertex figure: {e}")
    uniform = bool(figures) and len(set(figures)) == 1
    if figures and not uniform:
        problems.append(f"{len(set(figures))} distinct vertex figures")

    euler_ok = euler_check(data)
    if not euler_ok:
        problems.append(f"V - E + F = {data.euler_characteristic}")
    balance_ok = lemma1_balance(data)
    if not balance_ok:
        problems.append("face/valence balance identity fails")
    small_face_ok = has_small_face(data)
    if not small_face_ok:
        problems.append("no triangle, square or pentagon")
    if not data.is_consistent():
        problems.append("handshake identities fail")

    report = MapReport(
        counts=data,
        figures=figures,
        uniform=uniform,
        bipartite=nx.is_bipartite(m.vertex_graph()),
        euler_ok=euler_ok,
        balance_ok=balance_ok,
        small_face_ok=small_face_ok,
        problems=tuple(problems),
    )
    logger.debug(
        "Map analyzed",
        map=m.name,
        V=data.V, E=data.E, F=data.F,
        figure=str(report.figure) if report.figure else None,
        bipartite=report.bipartite,
        problems=list(problems),
    )
    return report
