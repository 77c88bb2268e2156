"""Duality isomorphisms, strong involutions, the induced edge map and diameters."""

from __future__ import annotations

from dataclasses import dataclass

from sipoly.polyhedron import Edge, Polyhedron, canonical_relabeling


@dataclass(frozen=True)
class DualityIso:
    """Vertex -> face bijection that maps adjacent vertices to adjacent faces."""

    vertex_to_face: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.vertex_to_face[v]

    def __len__(self) -> int:
        return len(self.vertex_to_face)

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.vertex_to_face)
        for v, f in enumerate(self.vertex_to_face):
            inv[f] = v
        return tuple(inv)


@dataclass(frozen=True)
class StrongInvolution(DualityIso):
    """A duality with ``u in tau(v) <=> v in tau(u)`` and ``v not in tau(v)``."""


def face_adjacency(P: Polyhedron) -> list[set[int]]:
    adj = [set() for _ in range(P.F)]
    for f, g in P.edge_faces:
        adj[f].add(g)
        adj[g].add(f)
    return adj


def is_duality(P: Polyhedron, table) -> bool:
    """Check that ``table`` (vertex -> face) is a graph isomorphism onto the dual."""
    if isinstance(table, DualityIso):
        table = table.vertex_to_face
    if P.V != P.F or len(table) != P.V or sorted(table) != list(range(P.F)):
        return False
    fadj = face_adjacency(P)
    # both graphs have E edges, so edge preservation one way suffices
    return all(table[w] in fadj[table[u]] for u, w in P.edges)


def _search_order(P: Polyhedron) -> list[int]:
    order = [max(range(P.V), key=lambda v: (P.degree(v), -v))]
    placed = set(order)
    while len(order) < P.V:
        nxt = max(
            (v for v in range(P.V) if v not in placed),
            key=lambda v: (len(P.adjacency[v] & placed), P.degree(v), -v),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


def find_dualities(P: Polyhedron) -> list[DualityIso]:
    """Every duality isomorphism of P, sorted by image sequence.

    Backtracking over vertices (highest degree first), assigning faces of
    matching size and checking adjacency against every earlier assignment.
    """
    if P.V != P.F:
        return []
    fadj = face_adjacency(P)
    order = _search_order(P)
    # earlier vertices in the order, split by adjacency to each position
    checks = []
    for i, v in enumerate(order):
        prev = order[:i]
        checks.append(([u for u in prev if P.adjacent(u, v)], [u for u in prev if not P.adjacent(u, v)]))
    by_size: dict[int, list[int]] = {}
    for f in range(P.F):
        by_size.setdefault(P.face_size(f), []).append(f)

    table = [-1] * P.V
    used = [False] * P.F
    found: list[DualityIso] = []

    def extend(i: int) -> None:
        if i == len(order):
            found.append(DualityIso(tuple(table)))
            return
        v = order[i]
        adj_prev, non_prev = checks[i]
        for f in by_size.get(P.degree(v), ()):
            if used[f]:
                continue
            nb = fadj[f]
            if any(table[u] not in nb for u in adj_prev):
                continue
            if any(table[u] in nb for u in non_prev):
                continue
            table[v] = f
            used[f] = True
            extend(i + 1)
            used[f] = False
        table[v] = -1

    extend(0)
    found.sort(key=lambda d: d.vertex_to_face)
    return found


def is_strong_involution(P: Polyhedron, d: DualityIso) -> bool:
    sets = P.face_vertex_sets
    tau = d.vertex_to_face
    for v in range(P.V):
        if v in sets[tau[v]]:
            return False
    for u in range(P.V):
        su = sets[tau[u]]
        for v in range(u + 1, P.V):
            if (u in sets[tau[v]]) != (v in su):
                return False
    return True


def strong_involutions(P: Polyhedron) -> list[StrongInvolution]:
    return [StrongInvolution(d.vertex_to_face) for d in find_dualities(P) if is_strong_involution(P, d)]


def strong_involution(P: Polyhedron) -> StrongInvolution | None:
    """The strong involution of P, or None.  There is at most one."""
    found = strong_involutions(P)
    return found[0] if found else None


def tau_edge_id(P: Polyhedron, tau: DualityIso, k: int) -> int:
    a, b = P.edges[k]
    return P.face_pair_edge[frozenset((tau(a), tau(b)))]


def tau_edge(P: Polyhedron, tau: DualityIso, e) -> Edge:
    """The edge shared by the faces ``tau(a)`` and ``tau(b)``."""
    return P.edges[tau_edge_id(P, tau, P.edge_id(e))]


def is_diameter(P: Polyhedron, tau: DualityIso, e) -> bool:
    a, b = P.edges[P.edge_id(e)]
    return a in P.face_vertex_sets[tau(b)]


def transport(P: Polyhedron, tau: DualityIso, Q: Polyhedron, vmap, merged: dict[int, frozenset[int]] | None = None) -> tuple[int, ...]:
    """Carry ``tau`` from P to Q along the vertex map ``vmap`` (old -> new).

    Faces are matched by vertex sets, which identify faces of a polyhedron.
    ``merged`` overrides the source vertex set used for particular old
    vertices (the merged face of a remove-contract step).  Old vertices that
    collapse onto one new vertex must agree; raises ``KeyError`` when a face
    has no counterpart.
    """
    sets = P.face_vertex_sets
    out: dict[int, int] = {}
    for u in range(P.V):
        src = merged.get(u) if merged and u in merged else sets[tau(u)]
        key = frozenset(vmap[z] for z in src)
        f = Q.face_by_vertices[key]
        if out.setdefault(vmap[u], f) != f:
            raise KeyError(f"vertices mapped to {vmap[u]} disagree on their face")
    return tuple(out[v] for v in range(Q.V))


def canonicalize(P: Polyhedron, tau: DualityIso | None = None):
    """Relabel P (and tau) to the canonical labeling of its code.

    Returns ``(Q, tau_Q, perm)`` where ``perm[old] = new``; ``tau_Q`` is None
    when ``tau`` is.
    """
    Q, perm = canonical_relabeling(P)
    if tau is None:
        return Q, None, perm
    return Q, type(tau)(transport(P, tau, Q, perm)), perm
