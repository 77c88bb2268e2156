"""Validated polyhedra, duals, wheels and canonical codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from sipoly.errors import NotGenusZero, NotSimple, NotThreeConnected, TooSmall
from sipoly.planar_map import (
    CombinatorialMap,
    FaceSet,
    build_map,
    is_connected,
    is_simple,
    is_three_connected,
    trace_faces,
)

Edge = tuple[int, int]
CanonicalCode = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """A simple, spherical, 3-connected map with at least four vertices.

    Build through :func:`validate`; the constructor itself trusts its input.
    Edges are identified by index ``k`` (darts ``2k``, ``2k+1``) and faces by
    their index in ``faces.walks``.
    """

    map: CombinatorialMap
    faces: FaceSet

    @property
    def V(self) -> int:
        return self.map.vertex_count

    @property
    def E(self) -> int:
        return self.map.edge_count

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.V, self.E, self.F

    def degree(self, v: int) -> int:
        return self.map.degree(v)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edge ``k`` as a sorted vertex pair."""
        return tuple((u, w) if u < w else (w, u) for u, w in self.map.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}

    def edge_id(self, e) -> int:
        """Accept an edge index or an endpoint pair in either order."""
        if isinstance(e, int):
            return e
        u, w = e
        return self.edge_index[(u, w) if u < w else (w, u)]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self.map.adjacency

    def adjacent(self, u: int, w: int) -> bool:
        return w in self.map.adjacency[u]

    @cached_property
    def edge_faces(self) -> tuple[tuple[int, int], ...]:
        """The two faces on either side of each edge."""
        df = self.faces.dart_face
        return tuple((df[2 * k], df[2 * k + 1]) for k in range(self.E))

    @cached_property
    def face_pair_edge(self) -> dict[frozenset[int], int]:
        """Edge shared by an (unordered) pair of adjacent faces."""
        return {frozenset(fs): k for k, fs in enumerate(self.edge_faces)}

    @cached_property
    def face_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return self.faces.vertex_sets

    @cached_property
    def face_by_vertices(self) -> dict[frozenset[int], int]:
        # vertex sets determine faces in a 3-connected plane graph
        return {vs: f for f, vs in enumerate(self.face_vertex_sets)}

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(fs) for fs in self.faces.incidence(self.V))

    def face_size(self, f: int) -> int:
        return self.faces.size(f)

    def rotation_lists(self) -> list[list[int]]:
        return self.map.rotation_lists()

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Polyhedron":
        """Rename vertex ``v`` to ``perm[v]``, keeping the orientation."""
        rots = self.rotation_lists()
        new = [None] * self.V
        for v, r in enumerate(rots):
            new[perm[v]] = [perm[w] for w in r]
        return Polyhedron._trusted(build_map(new))

    @classmethod
    def _trusted(cls, m: CombinatorialMap) -> "Polyhedron":
        return cls(m, trace_faces(m))

    def __repr__(self):
        return f"Polyhedron(V={self.V}, E={self.E}, F={self.F})"


def validate(m: CombinatorialMap) -> Polyhedron:
    """Promote a raw map to a :class:`Polyhedron` or raise the first failed gate."""
    if not is_simple(m):
        raise NotSimple("map has a loop or a multiple edge")
    if not is_connected(m):
        raise NotThreeConnected("map is disconnected")
    faces = trace_faces(m)
    if m.vertex_count - m.edge_count + len(faces) != 2:
        raise NotGenusZero(f"Euler characteristic {m.vertex_count - m.edge_count + len(faces)} != 2")
    if m.vertex_count < 4:
        raise TooSmall(f"{m.vertex_count} vertices; a polyhedron needs at least 4")
    if not is_three_connected(m):
        raise NotThreeConnected("map has a cutting set of at most two vertices")
    return Polyhedron(m, faces)


def from_rotations(rotations) -> Polyhedron:
    return validate(build_map(rotations))


def dual_map(m: CombinatorialMap, faces: FaceSet | None = None) -> CombinatorialMap:
    """Dual rotation system; dart ``d`` of the dual crosses dart ``d`` of ``m``.

    Dual vertex ``f`` is face ``f`` of ``m`` and its rotation is the face's
    boundary walk, so the dual's faces are the vertex rotations of ``m`` and
    ``dual_map(dual_map(m))`` equals ``m`` exactly.
    """
    if faces is None:
        faces = trace_faces(m)
    return CombinatorialMap(faces.dart_face, faces.walks)


def dual(P: Polyhedron) -> tuple[Polyhedron, dict[int, int]]:
    """The dual polyhedron and the edge bijection (edge of P -> dual edge).

    Edge ids coincide because darts are shared, so the bijection is the
    identity on indices; it joins the two faces on either side of the edge.
    """
    D = validate(dual_map(P.map, P.faces))
    return D, {k: k for k in range(P.E)}


def wheel(n: int) -> Polyhedron:
    """Hub ``0`` joined to the rim cycle ``1..n``."""
    if n < 3:
        raise ValueError(f"wheel needs a rim of at least 3 vertices, got {n}")
    rots = [list(range(1, n + 1))]
    for i in range(1, n + 1):
        nxt = i % n + 1
        prv = (i - 2) % n + 1
        rots.append([0, prv, nxt])
    return from_rotations(rots)


# -- canonical codes ----------------------------------------------------------


def _dart_invariants(m: CombinatorialMap, faces: FaceSet):
    deg = [m.degree(v) for v in range(m.vertex_count)]
    flen = [len(faces.walks[f]) for f in faces.dart_face]
    o = m.origin
    pos = [(deg[o[d]], deg[o[d ^ 1]], flen[d], flen[d ^ 1]) for d in range(m.dart_count)]
    # reversing the orientation swaps the faces on the two sides of a dart
    neg = [(a, b, y, x) for a, b, x, y in pos]
    return pos, neg


def _trace(m: CombinatorialMap, start: int, succ: tuple[int, ...], best: list[int] | None):
    """Breadth-first code from ``start``; returns None once it exceeds ``best``."""
    n = m.vertex_count
    origin = m.origin
    label = [0] * n
    entry = [0] * n
    v0 = origin[start]
    label[v0] = 1
    entry[v0] = start
    order = [v0]
    code: list[int] = []
    smaller = best is None
    i = 0
    while i < len(order):
        v = order[i]
        d0 = entry[v]
        d = d0
        while True:
            w = origin[d ^ 1]
            if not label[w]:
                order.append(w)
                label[w] = len(order)
                entry[w] = d ^ 1
            code.append(label[w])
            if not smaller:
                c, b = code[-1], best[len(code) - 1]
                if c > b:
                    return None
                if c < b:
                    smaller = True
            d = succ[d]
            if d == d0:
                break
        code.append(0)
        if not smaller and best[len(code) - 1] > 0:
            smaller = True
        i += 1
    return code, order


def canonical_form(m: CombinatorialMap, faces: FaceSet | None = None):
    """Minimal code over starting darts and both orientations.

    Returns ``(code, order, reflected)``: ``order[i]`` is the vertex that
    gets canonical label ``i`` and ``reflected`` says whether the minimum
    was reached on the mirrored map.  The code lists, for canonical vertex
    1, 2, ... in turn, its neighbor labels in rotation order, each list
    closed by ``0``.  Only darts with the least local invariant are tried
    as starts, which cannot change the minimum because isomorphisms
    preserve the invariant.
    """
    if faces is None:
        faces = trace_faces(m)
    pos, neg = _dart_invariants(m, faces)
    target = min(min(pos), min(neg))
    best = None
    result = None
    for reflected, inv, succ in ((False, pos, m.sigma), (True, neg, m.sigma_inv)):
        for d in range(m.dart_count):
            if inv[d] != target:
                continue
            out = _trace(m, d, succ, best)
            if out is not None and (best is None or out[0] < best):
                best = out[0]
                result = (tuple(out[0]), out[1], reflected)
    return result


def canonical_code(P: Polyhedron | CombinatorialMap) -> CanonicalCode:
    if isinstance(P, Polyhedron):
        return canonical_form(P.map, P.faces)[0]
    return canonical_form(P)[0]


def oriented_code(P: Polyhedron) -> CanonicalCode:
    """Code minimized over the given orientation only."""
    pos, _ = _dart_invariants(P.map, P.faces)
    target = min(pos)
    best = None
    for d in range(P.map.dart_count):
        if pos[d] == target:
            out = _trace(P.map, d, P.map.sigma, best)
            if out is not None and (best is None or out[0] < best):
                best = out[0]
    return tuple(best)


def is_chiral(P: Polyhedron) -> bool:
    """True iff P is not isomorphic to its mirror image by an orientation-preserving map."""
    return oriented_code(P) != oriented_code(Polyhedron(P.map.mirror(), trace_faces(P.map.mirror())))


def canonical_relabeling(P: Polyhedron) -> tuple[Polyhedron, list[int]]:
    """Relabel P into canonical vertex order; returns ``(Q, perm)`` with ``perm[old] = new``."""
    code, order, _ = canonical_form(P.map, P.faces)
    perm = [0] * P.V
    for new, old in enumerate(order):
        perm[old] = new
    return from_code(code), perm


def from_code(code) -> Polyhedron:
    """Rebuild the polyhedron a canonical code describes (trusted input)."""
    rots: list[list[int]] = [[]]
    for c in code:
        if c == 0:
            rots.append([])
        else:
            rots[-1].append(c - 1)
    rots.pop()
    return Polyhedron._trusted(build_map(rots))


def are_isomorphic(P: Polyhedron, Q: Polyhedron) -> bool:
    """Map isomorphism up to reflection."""
    if P.counts != Q.counts:
        return False
    return canonical_code(P) == canonical_code(Q)


@lru_cache(maxsize=None)
def _wheel_code(n: int) -> CanonicalCode:
    return canonical_code(wheel(n))


def is_wheel(P: Polyhedron) -> bool:
    if P.E != 2 * (P.V - 1):
        return False
    return canonical_code(P) == _wheel_code(P.V - 1)


def triangle_degree3_test(P: Polyhedron) -> bool:
    """Every edge lies on a triangular face and has an endpoint of degree 3."""
    for k, (u, w) in enumerate(P.edges):
        f1, f2 = P.edge_faces[k]
        if P.face_size(f1) != 3 and P.face_size(f2) != 3:
            return False
        if P.degree(u) != 3 and P.degree(w) != 3:
            return False
    return True
