"""Edge deletion and contraction, essential edges, and remove-contract reduction."""

from __future__ import annotations

from dataclasses import dataclass, field

from sipoly.duality import (
    DualityIso,
    StrongInvolution,
    is_diameter,
    tau_edge_id,
    transport,
    canonicalize,
)
from sipoly.errors import MapError, NotReducible, ValidationError
from sipoly.planar_map import CombinatorialMap, connected_without
from sipoly.polyhedron import CanonicalCode, Edge, Polyhedron, canonical_code, is_wheel, validate


# -- raw map surgery ----------------------------------------------------------


def remove_edges(m: CombinatorialMap, ks) -> CombinatorialMap:
    """Drop edges ``ks``; surviving darts are renumbered in order, vertices kept."""
    drop = set()
    for k in ks:
        drop.update((2 * k, 2 * k + 1))
    renum = {}
    origin = []
    for d in range(m.dart_count):
        if d not in drop:
            renum[d] = len(origin)
            origin.append(m.origin[d])
    rots = tuple(tuple(renum[d] for d in rot if d not in drop) for rot in m.rotations)
    return CombinatorialMap(tuple(origin), rots)


def contract(m: CombinatorialMap, k: int) -> tuple[CombinatorialMap, list[int]]:
    """Contract edge ``k``, keeping any parallel edges that arise.

    The rotation of the merged vertex is the rotation of ``u`` after the
    removed dart followed by the rotation of ``w`` after its twin.  The
    merged vertex takes the smaller id and higher ids shift down by one.
    Returns the map and the vertex map old -> new.
    """
    d, t = 2 * k, 2 * k + 1
    u, w = m.origin[d], m.origin[t]
    if u == w:
        raise MapError("cannot contract a loop")
    ru, rw = m.rotations[u], m.rotations[w]
    i, j = ru.index(d), rw.index(t)
    merged = ru[i + 1:] + ru[:i] + rw[j + 1:] + rw[:j]
    keep, gone = min(u, w), max(u, w)
    vmap = [x if x < gone else x - 1 for x in range(m.vertex_count)]
    vmap[gone] = vmap[keep]

    def nd(x):
        return x if x < d else x - 2

    origin = tuple(vmap[m.origin[x]] for x in range(m.dart_count) if x not in (d, t))
    rots = []
    for x, rot in enumerate(m.rotations):
        if x == gone:
            continue
        src = merged if x == keep else rot
        rots.append(tuple(nd(y) for y in src))
    return CombinatorialMap(origin, tuple(rots)), vmap


def delete_edge(P: Polyhedron, e) -> CombinatorialMap:
    return remove_edges(P.map, [P.edge_id(e)])


def contract_edge(P: Polyhedron, e) -> CombinatorialMap:
    return contract(P.map, P.edge_id(e))[0]


def _is_polyhedron(m: CombinatorialMap) -> bool:
    try:
        validate(m)
    except (ValidationError, MapError):
        return False
    return True


def can_delete(P: Polyhedron, e) -> bool:
    return _is_polyhedron(delete_edge(P, e))


def can_contract(P: Polyhedron, e) -> bool:
    return _is_polyhedron(contract_edge(P, e))


def is_essential(P: Polyhedron, e) -> bool:
    return not can_delete(P, e) and not can_contract(P, e)


def all_edges_essential(P: Polyhedron) -> bool:
    return all(is_essential(P, k) for k in range(P.E))


# -- remove-contract ----------------------------------------------------------


@dataclass(frozen=True)
class EdgeFlags:
    on_triangle: bool
    in_three_cut: bool
    diameter: bool

    @property
    def reducible(self) -> bool:
        return not (self.on_triangle or self.in_three_cut or self.diameter)


def is_cutting_set(P: Polyhedron, vertices) -> bool:
    """Whether deleting ``vertices`` disconnects P.

    Deleting all but one vertex also counts, so every triple of K4 cuts.
    """
    vertices = set(vertices)
    if P.V - len(vertices) <= 1:
        return True
    return not connected_without(P.adjacency, vertices)


def in_three_cut(P: Polyhedron, e) -> bool:
    """Both endpoints of ``e`` lie in a common 3-cutting set."""
    a, b = P.edges[P.edge_id(e)]
    return any(is_cutting_set(P, (a, b, c)) for c in range(P.V) if c not in (a, b))


def edge_flags(P: Polyhedron, tau: DualityIso | None, e) -> EdgeFlags:
    k = P.edge_id(e)
    f1, f2 = P.edge_faces[k]
    return EdgeFlags(
        on_triangle=P.face_size(f1) == 3 or P.face_size(f2) == 3,
        in_three_cut=in_three_cut(P, k),
        diameter=tau is not None and is_diameter(P, tau, k),
    )


def find_reducible_edges(P: Polyhedron, tau: DualityIso) -> list[Edge]:
    """Edges that are off triangles, off 3-cuts and not diameters, sorted.

    Empty for wheels, which are the terminal objects of the reduction.
    """
    return sorted(P.edges[k] for k in range(P.E) if edge_flags(P, tau, k).reducible)


def _reduce(P: Polyhedron, tau: DualityIso, e):
    k = P.edge_id(e)
    flags = edge_flags(P, tau, k)
    if not flags.reducible:
        raise NotReducible(f"edge {P.edges[k]} has flags {flags}")
    a, b = P.edges[k]
    x, y = P.edges[tau_edge_id(P, tau, k)]
    m1, vmap = contract(P.map, k)
    dart = m1.find_dart(vmap[x], vmap[y])
    try:
        Q = validate(remove_edges(m1, [dart // 2]))
    except ValidationError as exc:
        raise NotReducible(f"remove-contract on {P.edges[k]} left the class of polyhedra: {exc}") from exc
    sets = P.face_vertex_sets
    union = sets[tau(a)] | sets[tau(b)]
    try:
        table = transport(P, tau, Q, vmap, merged={a: union, b: union})
    except KeyError as exc:
        raise NotReducible(f"involution does not descend along {P.edges[k]}") from exc
    return Q, StrongInvolution(table), vmap


def reduce_step(P: Polyhedron, tau: DualityIso, e) -> tuple[Polyhedron, StrongInvolution]:
    """Contract ``e = (a, b)`` and delete ``tau(ab)``.

    The new involution agrees with ``tau`` off ``{a, b}``; the merged vertex
    goes to the face formed by ``tau(a)`` and ``tau(b)`` once their common
    edge is gone.  The merged vertex takes the smaller of ``a``, ``b``.
    """
    Q, sigma, _ = _reduce(P, tau, e)
    return Q, sigma


@dataclass(frozen=True)
class ReductionStep:
    contracted: Edge
    deleted: Edge
    code: CanonicalCode


@dataclass(frozen=True)
class ReductionTrace:
    """Steps are expressed in the canonical labeling of the polyhedron they act on."""

    steps: tuple[ReductionStep, ...] = field(default_factory=tuple)
    terminal_rim: int = 0

    def __len__(self) -> int:
        return len(self.steps)


def reduce_to_wheel(P: Polyhedron, tau: DualityIso) -> ReductionTrace:
    """Apply remove-contract on the first reducible edge until a wheel remains."""
    steps = []
    Q, t, _ = canonicalize(P, tau)
    while not is_wheel(Q):
        edges = find_reducible_edges(Q, t)
        if not edges:
            raise NotReducible(f"non-wheel {Q} has no reducible edge")
        e = edges[0]
        deleted = Q.edges[tau_edge_id(Q, t, Q.edge_id(e))]
        R, r = reduce_step(Q, t, e)
        Q, t, _ = canonicalize(R, r)
        steps.append(ReductionStep(e, deleted, canonical_code(Q)))
    return ReductionTrace(tuple(steps), Q.V - 1)


def reduction_terminals(P: Polyhedron, tau: DualityIso) -> set[int]:
    """Rim lengths of every wheel reachable by some sequence of choices."""
    memo: dict[CanonicalCode, set[int]] = {}

    def walk(Q, t):
        code = canonical_code(Q)
        if code in memo:
            return memo[code]
        if is_wheel(Q):
            out = {Q.V - 1}
        else:
            out = set()
            for e in find_reducible_edges(Q, t):
                out |= walk(*reduce_step(Q, t, e))
        memo[code] = out
        return out

    return walk(P, tau)
