"""The graph of squares (vertex-edge-face incidence graph) and induced cell maps.

Vertices of the square graph are numbered: source vertices first
(``0..V-1``), then source edges (``V..V+E-1``), then source faces
(``V+E..V+E+F-1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sipoly.duality import StrongInvolution, tau_edge_id
from sipoly.planar_map import build_map
from sipoly.polyhedron import Polyhedron, validate


class Cell(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    FACE = "face"


@dataclass(frozen=True)
class SquareGraph:
    source: Polyhedron
    polyhedron: Polyhedron
    tags: tuple[tuple[Cell, int], ...]

    def vertex_tag(self, v: int) -> int:
        return v

    def edge_tag(self, k: int) -> int:
        return self.source.V + k

    def face_tag(self, f: int) -> int:
        return self.source.V + self.source.E + f


@dataclass(frozen=True)
class CellMap:
    """A permutation of square-graph vertices."""

    perm: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.perm[x]

    def compose(self, other: "CellMap") -> "CellMap":
        return CellMap(tuple(self.perm[other.perm[x]] for x in range(len(self.perm))))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.perm))


def graph_of_squares(P: Polyhedron) -> SquareGraph:
    """Build the square graph with the rotations inherited from P.

    Around a vertex-tag: its edges in rotation order.  Around a face-tag:
    its boundary edges in reverse walk order.  Around the edge-tag of
    ``u -> w``: ``u``, the face of that dart, ``w``, the face of its twin.
    """
    V, E = P.V, P.E
    m = P.map
    df = P.faces.dart_face
    rots: list[list[int]] = []
    for v in range(V):
        rots.append([V + d // 2 for d in m.rotations[v]])
    for k in range(E):
        d, t = 2 * k, 2 * k + 1
        rots.append([m.origin[d], V + E + df[d], m.origin[t], V + E + df[t]])
    for walk in P.faces.walks:
        rots.append([V + d // 2 for d in reversed(walk)])
    tags = (
        tuple((Cell.VERTEX, v) for v in range(V))
        + tuple((Cell.EDGE, k) for k in range(E))
        + tuple((Cell.FACE, f) for f in range(P.F))
    )
    return SquareGraph(P, validate(build_map(rots)), tags)


def induced_cell_map(P: Polyhedron, tau: StrongInvolution, S: SquareGraph | None = None) -> CellMap:
    """vertex v -> face tau(v), face f -> vertex tau^-1(f), edge e -> tau(e)."""
    if S is None:
        S = graph_of_squares(P)
    inv = tau.inverse()
    perm = [0] * len(S.tags)
    for x, (kind, i) in enumerate(S.tags):
        if kind is Cell.VERTEX:
            perm[x] = S.face_tag(tau(i))
        elif kind is Cell.FACE:
            perm[x] = S.vertex_tag(inv[i])
        else:
            perm[x] = S.edge_tag(tau_edge_id(P, tau, i))
    return CellMap(tuple(perm))


def is_automorphism(S: SquareGraph, cm: CellMap) -> bool:
    """Bijective, preserves adjacency, and sends faces onto faces."""
    Q = S.polyhedron
    if sorted(cm.perm) != list(range(Q.V)):
        return False
    if any(cm(w) not in Q.adjacency[cm(u)] for u, w in Q.edges):
        return False
    faces = set(Q.face_vertex_sets)
    return all(frozenset(cm(x) for x in fs) in faces for fs in Q.face_vertex_sets)


def is_involution(cm: CellMap) -> bool:
    return cm.compose(cm).is_identity()


def respects_tags(S: SquareGraph, cm: CellMap) -> bool:
    """Vertex-tags go to face-tags and back; edge-tags stay edge-tags."""
    swap = {Cell.VERTEX: Cell.FACE, Cell.FACE: Cell.VERTEX, Cell.EDGE: Cell.EDGE}
    return all(S.tags[cm(x)][0] is swap[kind] for x, (kind, _) in enumerate(S.tags))


def is_fixed_point_free(S: SquareGraph, cm: CellMap) -> bool:
    """No fixed vertex, no fixed edge (as a pair), no fixed face (as a cell)."""
    Q = S.polyhedron
    if any(cm(x) == x for x in range(Q.V)):
        return False
    if any({cm(u), cm(w)} == {u, w} for u, w in Q.edges):
        return False
    return not any(frozenset(cm(x) for x in fs) == fs for fs in Q.face_vertex_sets)
