"""Simultaneous vertex split and face diagonal: the inverse of remove-contract."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator

from sipoly.duality import DualityIso, StrongInvolution, is_duality, is_strong_involution
from sipoly.errors import InvalidMove, MapError, ValidationError
from sipoly.planar_map import build_map
from sipoly.polyhedron import Polyhedron, validate


@dataclass(frozen=True)
class ExpansionMove:
    """Split ``vertex`` into ``a`` (keeps the id, neighbors ``arc_a``) and a
    new vertex ``b`` (neighbors ``arc_b``), and add ``diagonal`` inside
    ``tau(vertex)``.

    The diagonal cuts ``tau(vertex)`` into the face that contains the
    boundary run from ``x`` forward to ``y`` and the other one;
    ``a_takes_forward`` says whether ``a`` is sent to the former.
    """

    vertex: int
    arc_a: tuple[int, ...]
    arc_b: tuple[int, ...]
    diagonal: tuple[int, int]
    a_takes_forward: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["arc_a"] = list(self.arc_a)
        d["arc_b"] = list(self.arc_b)
        d["diagonal"] = list(self.diagonal)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ExpansionMove":
        return cls(d["vertex"], tuple(d["arc_a"]), tuple(d["arc_b"]), tuple(d["diagonal"]), d["a_takes_forward"])


def _insert_after(rot: list[int], after: int, new: int) -> None:
    rot.insert(rot.index(after) + 1, new)


def expand_step(P: Polyhedron, tau: DualityIso, m: ExpansionMove) -> tuple[Polyhedron, StrongInvolution]:
    v = m.vertex
    walk = P.faces.vertex_walks[tau(v)]
    k = len(walk)
    if k < 4:
        raise InvalidMove(f"tau({v}) is a {k}-gon and has no diagonal")
    x, y = m.diagonal
    if x not in walk or y not in walk or x == y:
        raise InvalidMove(f"diagonal {m.diagonal} is not inside tau({v})")
    i, j = walk.index(x), walk.index(y)
    if (i - j) % k in (1, k - 1):
        raise InvalidMove(f"{x} and {y} are consecutive on tau({v})")

    rots = P.rotation_lists()
    nbrs = rots[v]
    d = len(nbrs)
    if len(m.arc_a) < 2 or len(m.arc_b) < 2 or len(m.arc_a) + len(m.arc_b) != d:
        raise InvalidMove("both arcs need at least two neighbors and together cover the rotation")
    start = nbrs.index(m.arc_a[0]) if m.arc_a[0] in nbrs else -1
    cyc = nbrs[start:] + nbrs[:start]
    if start < 0 or tuple(cyc) != m.arc_a + m.arc_b:
        raise InvalidMove(f"arcs {m.arc_a} / {m.arc_b} do not split the rotation of {v}")

    # the face corner at x lies between its predecessor and successor on the walk
    _insert_after(rots[x], walk[i - 1], y)
    _insert_after(rots[y], walk[j - 1], x)
    b = P.V
    rots[v] = list(m.arc_a) + [b]
    rots.append(list(m.arc_b) + [v])
    for w in m.arc_b:
        rots[w][rots[w].index(v)] = b
    try:
        Q = validate(build_map(rots))
    except (ValidationError, MapError) as exc:
        raise InvalidMove(f"expanded map is not a polyhedron: {exc}") from exc

    fwd = Q.face_by_vertices.get(_face_with(Q, {x, y, walk[(i + 1) % k]}))
    back = Q.face_by_vertices.get(_face_with(Q, {x, y, walk[i - 1]}))
    if fwd is None or back is None:
        raise InvalidMove("diagonal faces not found")
    # faces away from the diagonal are recognized by their vertex sets with b folded back into v
    folded = {}
    for f, vs in enumerate(Q.face_vertex_sets):
        folded.setdefault(frozenset(v if z == b else z for z in vs), []).append(f)
    sets = P.face_vertex_sets
    table = [0] * Q.V
    for u in range(P.V):
        if u == v:
            continue
        hit = folded.get(sets[tau(u)], [])
        if len(hit) != 1:
            raise InvalidMove(f"face tau({u}) has no unique counterpart")
        table[u] = hit[0]
    table[v], table[b] = (fwd, back) if m.a_takes_forward else (back, fwd)
    sigma = StrongInvolution(tuple(table))
    if not (is_duality(Q, sigma) and is_strong_involution(Q, sigma)):
        raise InvalidMove("no strong involution extends through this move")
    return Q, sigma


def _face_with(Q: Polyhedron, vertices: set[int]) -> frozenset[int] | None:
    hits = [s for s in Q.face_vertex_sets if vertices <= s]
    return hits[0] if len(hits) == 1 else None


def candidate_moves(P: Polyhedron, tau: DualityIso) -> Iterator[ExpansionMove]:
    """Every well-formed move: vertex, unordered arc split, diagonal of tau(v), side."""
    for v in range(P.V):
        walk = P.faces.vertex_walks[tau(v)]
        k = len(walk)
        if k < 4:
            continue
        diagonals = [(walk[i], walk[j]) for i in range(k) for j in range(i + 2, k) if (i, j) != (0, k - 1)]
        nbrs = P.rotation_lists()[v]
        d = len(nbrs)
        arcs = [
            (tuple(nbrs[i:j]), tuple(nbrs[j:] + nbrs[:i]))
            for i in range(d)
            for j in range(i + 2, d - 1 + i)
            if j < d
        ]
        for arc_a, arc_b in arcs:
            for diag in diagonals:
                for side in (True, False):
                    yield ExpansionMove(v, arc_a, arc_b, diag, side)


def expansions(P: Polyhedron, tau: DualityIso) -> Iterator[tuple[ExpansionMove, Polyhedron, StrongInvolution]]:
    """Valid moves together with the polyhedra and involutions they produce."""
    for m in candidate_moves(P, tau):
        try:
            Q, sigma = expand_step(P, tau, m)
        except InvalidMove:
            continue
        yield m, Q, sigma


def enumerate_expansions(P: Polyhedron, tau: DualityIso) -> list[ExpansionMove]:
    return [m for m, _, _ in expansions(P, tau)]
