"""
Polyhedral maps as rotation systems on darts.

A dart is a directed edge u -> v read off an oriented face list. Three
permutations act on the darts:

    alpha  the opposite dart (v -> u); a fixed-point-free involution
    phi    the next dart along the same face
    sigma  the next dart out of the same vertex, sigma = phi o alpha

Vertices are sigma-orbits, edges alpha-orbits and faces phi-orbits, with
phi = sigma o alpha (``sigma[alpha]``). Composition of numpy permutation
arrays is fancy indexing: (p o q)[d] == p[q[d]] == p[q][d].
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import structlog

logger = structlog.get_logger()

SPHERE_CHARACTERISTIC = 2


class MapInvariantError(ValueError):
    """Raised when permutations do not describe a map on the sphere."""


class NonManifoldError(MapInvariantError):
    """Raised when a face list repeats a directed edge."""


def orbits(perm: np.ndarray) -> Tuple[np.ndarray, List[List[int]]]:
    """
    Cycles of a permutation, discovered by scanning 0..n-1.

    Returns:
        (label, cycles): label[d] is the index of the cycle holding d
    """
    n = len(perm)
    label = np.full(n, -1, dtype=np.int64)
    cycles: List[List[int]] = []
    for start in range(n):
        if label[start] >= 0:
            continue
        cycle = []
        d = start
        while label[d] < 0:
            label[d] = len(cycles)
            cycle.append(d)
            d = int(perm[d])
        cycles.append(cycle)
    return label, cycles


def _is_permutation(perm: np.ndarray) -> bool:
    n = len(perm)
    return perm.ndim == 1 and np.array_equal(np.sort(perm), np.arange(n))


@dataclass(frozen=True, eq=False)
class PolyhedralMap:
    """
    Immutable rotation system. Construction checks every map invariant
    and raises MapInvariantError on the first violation.
    """
    sigma: np.ndarray
    alpha: np.ndarray
    name: Optional[str] = None

    def __post_init__(self) -> None:
        sigma = np.array(self.sigma, dtype=np.int64)
        alpha = np.array(self.alpha, dtype=np.int64)
        sigma.flags.writeable = False
        alpha.flags.writeable = False
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)
        self._validate()

    def _validate(self) -> None:
        n = len(self.alpha)
        if n == 0 or len(self.sigma) != n:
            raise MapInvariantError("sigma and alpha must act on the same non-empty dart set")
        if not (_is_permutation(self.sigma) and _is_permutation(self.alpha)):
            raise MapInvariantError("sigma and alpha must both be permutations")
        if not np.array_equal(self.alpha[self.alpha], np.arange(n)):
            raise MapInvariantError("alpha is not an involution")
        if np.any(self.alpha == np.arange(n)):
            raise MapInvariantError("alpha has a fixed point")
        if not nx.is_connected(self.dart_graph()):
            raise MapInvariantError("sigma and alpha do not act transitively on the darts")
        chi = self.euler_characteristic
        if chi != SPHERE_CHARACTERISTIC:
            raise MapInvariantError(f"Euler characteristic is {chi}, not {SPHERE_CHARACTERISTIC}")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_faces(cls, faces: Sequence[Sequence[int]], name: Optional[str] = None) -> "PolyhedralMap":
        """
        Builds the map of an oriented face list.

        Every face is a cyclic list of vertex labels, all faces oriented
        the same way, so each edge appears once in each direction.

        Raises:
            NonManifoldError: a directed edge appears twice
            MapInvariantError: an edge has no opposite, or a loop edge
        """
        dart_of: Dict[Tuple, int] = {}
        phi: List[int] = []
        for face in faces:
            face = list(face)
            k = len(face)
            first = len(phi)
            for i, u in enumerate(face):
                v = face[(i + 1) % k]
                if u == v:
                    raise MapInvariantError(f"Loop edge at {u!r} in face {face}")
                if (u, v) in dart_of:
                    raise NonManifoldError(f"Directed edge {u!r} -> {v!r} appears twice")
                dart_of[(u, v)] = len(phi)
                phi.append(first + (i + 1) % k)

        alpha = np.empty(len(phi), dtype=np.int64)
        for (u, v), d in dart_of.items():
            opposite = dart_of.get((v, u))
            if opposite is None:
                raise MapInvariantError(f"Edge {u!r} -> {v!r} has no opposite dart")
            alpha[d] = opposite

        phi_arr = np.asarray(phi, dtype=np.int64)
        return cls(sigma=phi_arr[alpha], alpha=alpha, name=name)

    def renamed(self, name: str) -> "PolyhedralMap":
        return PolyhedralMap(sigma=self.sigma, alpha=self.alpha, name=name)

    # -- structure ---------------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def phi(self) -> np.ndarray:
        """Face permutation sigma o alpha."""
        return self.sigma[self.alpha]

    @cached_property
    def _vertex_orbits(self) -> Tuple[np.ndarray, List[List[int]]]:
        return orbits(self.sigma)

    @cached_property
    def _face_orbits(self) -> Tuple[np.ndarray, List[List[int]]]:
        return orbits(self.phi)

    @cached_property
    def _edge_orbits(self) -> Tuple[np.ndarray, List[List[int]]]:
        return orbits(self.alpha)

    @property
    def vertex_of(self) -> np.ndarray:
        """Tail vertex of each dart."""
        return self._vertex_orbits[0]

    @property
    def face_of(self) -> np.ndarray:
        return self._face_orbits[0]

    @property
    def edge_of(self) -> np.ndarray:
        return self._edge_orbits[0]

    @property
    def vertices(self) -> List[List[int]]:
        """Darts around each vertex in rotation order."""
        return self._vertex_orbits[1]

    @property
    def face_darts(self) -> List[List[int]]:
        """Darts around each face in boundary order."""
        return self._face_orbits[1]

    @property
    def edges(self) -> List[List[int]]:
        return self._edge_orbits[1]

    def head(self, d: int) -> int:
        return int(self.vertex_of[self.alpha[d]])

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.face_darts)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    @cached_property
    def face_sizes(self) -> np.ndarray:
        return np.array([len(f) for f in self.face_darts], dtype=np.int64)

    @property
    def degrees(self) -> np.ndarray:
        return np.array([len(v) for v in self.vertices], dtype=np.int64)

    def vertex_figure_degrees(self, v: int) -> List[int]:
        """Sizes of the faces met in rotation order around vertex v."""
        return [int(self.face_sizes[self.face_of[d]]) for d in self.vertices[v]]

    # -- graphs and export -------------------------------------------------

    def dart_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_darts))
        graph.add_edges_from((d, int(self.sigma[d])) for d in range(self.n_darts))
        graph.add_edges_from((d, int(self.alpha[d])) for d in range(self.n_darts))
        return graph

    def vertex_graph(self) -> nx.Graph:
        """1-skeleton on vertex indices 0..V-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.V))
        graph.add_edges_from((int(self.vertex_of[e[0]]), self.head(e[0])) for e in self.edges)
        return graph

    def faces(self) -> List[List[int]]:
        """
        Face list with vertices numbered by sigma-orbit discovery order and
        faces by phi-orbit discovery order, each starting at its lowest dart.
        """
        return [[int(self.vertex_of[d]) for d in darts] for darts in self.face_darts]

    def __repr__(self) -> str:
        label = self.name or "map"
        return f"PolyhedralMap({label!r}, V={self.V}, E={self.E}, F={self.F})"
