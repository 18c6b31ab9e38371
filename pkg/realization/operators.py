"""
Map operators and generators.

Every operator writes the oriented face list of its result and rebuilds a
map from it, so the result passes the same invariant checks as any other
map. Faces of the input are read as phi-orbits, vertices as sigma-orbits.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Sequence

import networkx as nx
import structlog

from realization.polyhedral_map import PolyhedralMap

logger = structlog.get_logger()

MIN_POLYGON = 3

Faces = List[List[int]]


class UnknownSeedError(ValueError):
    """Raised for a seed name outside the five regular solids."""


class FamilyParameterError(ValueError):
    """Raised when a prism or antiprism is asked for fewer than three sides."""


class AlternationError(RuntimeError):
    """Raised when a map cannot be alternated."""


def _build(faces: Faces, operator: str, source: PolyhedralMap) -> PolyhedralMap:
    name = f"{operator}({source.name})" if source.name else operator
    result = PolyhedralMap.from_faces(faces, name=name)
    logger.debug("Operator applied", operator=operator, source=source.name, V=result.V, E=result.E, F=result.F)
    return result


def dual(m: PolyhedralMap) -> PolyhedralMap:
    """Vertices and faces swap: one face per vertex, listing the faces around it."""
    faces = [[int(m.face_of[d]) for d in darts] for darts in m.vertices]
    return _build(faces, "dual", m)


def ambo(m: PolyhedralMap) -> PolyhedralMap:
    """
    One vertex per edge. Each face keeps its size over its edge midpoints
    and each vertex of degree d becomes a d-gon.
    """
    edge = m.edge_of
    faces = [[int(edge[d]) for d in darts] for darts in m.face_darts]
    faces += [[int(edge[d]) for d in reversed(darts)] for darts in m.vertices]
    return _build(faces, "ambo", m)


def truncate(m: PolyhedralMap) -> PolyhedralMap:
    """
    Cuts every corner. New vertices are the darts (a point near the tail of
    each directed edge); a p-gon becomes a 2p-gon and a degree-d vertex a d-gon.
    """
    faces = []
    for darts in m.face_darts:
        face = []
        for d in darts:
            face += [d, int(m.alpha[d])]
        faces.append(face)
    faces += [list(reversed(darts)) for darts in m.vertices]
    return _build(faces, "truncate", m)


def expand(m: PolyhedralMap) -> PolyhedralMap:
    return ambo(ambo(m)).renamed(f"expand({m.name})" if m.name else "expand")


def bevel(m: PolyhedralMap) -> PolyhedralMap:
    return truncate(ambo(m)).renamed(f"bevel({m.name})" if m.name else "bevel")


def alternate(m: PolyhedralMap) -> PolyhedralMap:
    """
    Keeps one colour class of a bipartite, 3-valent map.

    Each 2k-gon shrinks to a k-gon over the kept vertices and each removed
    vertex becomes a triangle over its three neighbours. Squares shrink to
    digons and are dropped: the edge between their two kept vertices is
    already bounded by the triangles on either side.

    Raises:
        AlternationError: the vertex graph is not bipartite or a removed
            vertex is not 3-valent
    """
    graph = m.vertex_graph()
    if not nx.is_bipartite(graph):
        raise AlternationError(f"{m.name or 'map'} has an odd cycle and cannot be 2-coloured")
    colors = nx.bipartite.color(graph)
    kept = {v for v, c in colors.items() if c == colors[0]}

    faces: Faces = []
    for darts in m.face_darts:
        face = [int(m.vertex_of[d]) for d in darts if int(m.vertex_of[d]) in kept]
        if len(face) == 2:
            continue
        faces.append(face)
    for v, darts in enumerate(m.vertices):
        if v in kept:
            continue
        if len(darts) != 3:
            raise AlternationError(f"Removed vertex {v} has degree {len(darts)}, expected 3")
        x0, x1, x2 = darts
        faces.append([m.head(x0), m.head(x2), m.head(x1)])
    return _build(faces, "alternate", m)


def snub(m: PolyhedralMap) -> PolyhedralMap:
    """Alternation of the bevel."""
    return alternate(bevel(m)).renamed(f"snub({m.name})" if m.name else "snub")


# -- generators ---------------------------------------------------------------

def _check_sides(n: int) -> None:
    if n < MIN_POLYGON:
        raise FamilyParameterError(f"Need at least {MIN_POLYGON} sides, got {n}")


def prism_faces(n: int) -> Faces:
    """Bottom n-gon 0..n-1, top n-gon n..2n-1, n squares between them."""
    _check_sides(n)
    faces = [list(range(n - 1, -1, -1)), list(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        faces.append([i, j, n + j, n + i])
    return faces


def antiprism_faces(n: int) -> Faces:
    """Two n-gons joined by a band of 2n alternating triangles."""
    _check_sides(n)
    faces = [list(range(n - 1, -1, -1)), list(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        faces.append([i, j, n + i])
        faces.append([j, n + j, n + i])
    return faces


def kis_face(faces: Sequence[Sequence[int]], index: int, apex: int) -> Faces:
    """Replaces one face by a pyramid of triangles over a new apex vertex."""
    target = list(faces[index])
    k = len(target)
    cap = [[target[i], target[(i + 1) % k], apex] for i in range(k)]
    return [list(f) for i, f in enumerate(faces) if i != index] + cap


def prism(n: int) -> PolyhedralMap:
    return PolyhedralMap.from_faces(prism_faces(n), name=f"prism({n})")


def antiprism(n: int) -> PolyhedralMap:
    return PolyhedralMap.from_faces(antiprism_faces(n), name=f"antiprism({n})")


# -- seeds --------------------------------------------------------------------

TETRAHEDRON_FACES: Faces = [[0, 1, 2], [1, 0, 3], [2, 1, 3], [0, 2, 3]]


def _tetrahedron() -> PolyhedralMap:
    return PolyhedralMap.from_faces(TETRAHEDRON_FACES, name="tetrahedron")


def _cube() -> PolyhedralMap:
    return prism(4).renamed("cube")


def _octahedron() -> PolyhedralMap:
    return dual(_cube()).renamed("octahedron")


def _icosahedron() -> PolyhedralMap:
    # Pentagonal antiprism with a pyramid on each pentagon; the two
    # pentagons are faces 0 and 1, and face 1 is index 0 after the first cap.
    faces = antiprism_faces(5)
    faces = kis_face(faces, 0, apex=10)
    faces = kis_face(faces, 0, apex=11)
    return PolyhedralMap.from_faces(faces, name="icosahedron")


def _dodecahedron() -> PolyhedralMap:
    return dual(_icosahedron()).renamed("dodecahedron")


SEEDS: Dict[str, Callable[[], PolyhedralMap]] = {
    "tetrahedron": _tetrahedron,
    "cube": _cube,
    "octahedron": _octahedron,
    "dodecahedron": _dodecahedron,
    "icosahedron": _icosahedron,
}


def platonic_seed(name: str) -> PolyhedralMap:
    """
    Raises:
        UnknownSeedError: name is not one of the five regular solids
    """
    builder = SEEDS.get(name.strip().lower())
    if builder is None:
        raise UnknownSeedError(f"Unknown seed {name!r}; expected one of {sorted(SEEDS)}")
    return builder()
