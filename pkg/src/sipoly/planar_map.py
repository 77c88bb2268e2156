"""Combinatorial maps on the sphere.

A map is stored as a rotation system over darts (directed half-edges).
Darts ``2k`` and ``2k + 1`` are the two halves of edge ``k``, so the twin
of a dart is ``d ^ 1``.  ``rotations[v]`` lists the darts leaving ``v`` in
counterclockwise order.

Orientation convention, used everywhere in the package::

    face_next(d) = sigma(twin(d))

where ``sigma`` is the counterclockwise successor in the rotation at the
dart's origin.  Faces are the orbits of ``face_next``; they are always
derived, never stored.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from sipoly.errors import (
    AsymmetricIncidence,
    Disconnected,
    EmptyRotation,
    MapError,
    NonPlanar,
)

Dart = int
Rotations = Sequence[Sequence[int]]


def twin(d: Dart) -> Dart:
    return d ^ 1


@dataclass(frozen=True)
class CombinatorialMap:
    """Rotation system of an embedded graph.

    Loops and parallel edges are allowed here; they appear transiently
    during edge contraction and are rejected at the polyhedron layer.
    """

    origin: tuple[int, ...]
    rotations: tuple[tuple[Dart, ...], ...]

    def __post_init__(self):
        n_darts = len(self.origin)
        if n_darts % 2:
            raise MapError("odd number of darts")
        seen = [False] * n_darts
        for v, rot in enumerate(self.rotations):
            if not rot:
                raise EmptyRotation(f"vertex {v} has no incident darts")
            for d in rot:
                if not 0 <= d < n_darts or seen[d]:
                    raise MapError(f"dart {d} repeated or out of range")
                if self.origin[d] != v:
                    raise MapError(f"dart {d} listed at {v} but starts at {self.origin[d]}")
                seen[d] = True
        if not all(seen):
            raise MapError("rotations do not cover every dart")

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def dart_count(self) -> int:
        return len(self.origin)

    @property
    def edge_count(self) -> int:
        return len(self.origin) // 2

    def head(self, d: Dart) -> int:
        return self.origin[d ^ 1]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def sigma(self) -> tuple[Dart, ...]:
        """Counterclockwise successor of each dart around its origin."""
        nxt = [0] * self.dart_count
        for rot in self.rotations:
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        return tuple(nxt)

    @cached_property
    def sigma_inv(self) -> tuple[Dart, ...]:
        prv = [0] * self.dart_count
        for d, s in enumerate(self.sigma):
            prv[s] = d
        return tuple(prv)

    def face_next(self, d: Dart) -> Dart:
        return self.sigma[d ^ 1]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Endpoints of edge ``k`` as ``(origin(2k), origin(2k+1))``."""
        o = self.origin
        return tuple((o[2 * k], o[2 * k + 1]) for k in range(self.edge_count))

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in rotation order (with repetition)."""
        return [self.head(d) for d in self.rotations[v]]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.neighbors(v)) for v in range(self.vertex_count))

    def rotation_lists(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.vertex_count)]

    def mirror(self) -> "CombinatorialMap":
        """The same graph with every rotation reversed."""
        return CombinatorialMap(self.origin, tuple(tuple(reversed(r)) for r in self.rotations))

    def find_dart(self, u: int, v: int) -> Dart:
        """First dart from ``u`` to ``v`` in rotation order."""
        for d in self.rotations[u]:
            if self.head(d) == v:
                return d
        raise KeyError(f"no edge between {u} and {v}")


def build_map(rotations: Rotations | Mapping[int, Sequence[int]]) -> CombinatorialMap:
    """Build a map from per-vertex counterclockwise neighbor lists.

    The k-th occurrence of ``w`` in ``u``'s list is paired with the k-th
    occurrence of ``u`` in ``w``'s list counted from the end, which keeps
    digons planar.  Loops pair occurrences the same way within one list.
    """
    if isinstance(rotations, Mapping):
        n = len(rotations)
        if sorted(rotations) != list(range(n)):
            raise MapError("vertex ids must be 0..n-1")
        lists = [list(rotations[v]) for v in range(n)]
    else:
        lists = [list(r) for r in rotations]
    n = len(lists)
    if n == 0:
        raise MapError("a map needs at least one vertex")
    positions: dict[tuple[int, int], list[int]] = {}
    for u, nbrs in enumerate(lists):
        if not nbrs:
            raise EmptyRotation(f"vertex {u} has no neighbors")
        for i, w in enumerate(nbrs):
            if not isinstance(w, int) or not 0 <= w < n:
                raise MapError(f"vertex {u} lists unknown neighbor {w!r}")
            positions.setdefault((u, w), []).append(i)

    dart_at: dict[tuple[int, int], int] = {}
    origin: list[int] = []
    for (u, w), pos in sorted(positions.items()):
        if u > w:
            continue
        if u == w:
            if len(pos) % 2:
                raise AsymmetricIncidence(f"vertex {u} lists itself an odd number of times")
            pairs = [(pos[k], pos[-1 - k]) for k in range(len(pos) // 2)]
            for i, j in pairs:
                dart_at[(u, i)] = len(origin)
                dart_at[(u, j)] = len(origin) + 1
                origin += [u, u]
            continue
        back = positions.get((w, u), [])
        if len(back) != len(pos):
            raise AsymmetricIncidence(
                f"{w} appears {len(pos)} times around {u} but {u} appears {len(back)} times around {w}"
            )
        for k, i in enumerate(pos):
            dart_at[(u, i)] = len(origin)
            dart_at[(w, back[-1 - k])] = len(origin) + 1
            origin += [u, w]
    for (u, w), pos in positions.items():
        if u > w and (w, u) not in positions:
            raise AsymmetricIncidence(f"{w} appears around {u} but not vice versa")
    rot = tuple(tuple(dart_at[(u, i)] for i in range(len(lists[u]))) for u in range(n))
    return CombinatorialMap(tuple(origin), rot)


@dataclass(frozen=True)
class FaceSet:
    """Boundary walks of a map, as dart cycles."""

    walks: tuple[tuple[Dart, ...], ...]
    dart_face: tuple[int, ...]
    vertex_walks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.walks)

    def size(self, f: int) -> int:
        return len(self.walks[f])

    @cached_property
    def vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w) for w in self.vertex_walks)

    def incidence(self, vertex_count: int) -> list[list[int]]:
        """For each vertex, the faces whose boundary walk passes through it."""
        inc: list[list[int]] = [[] for _ in range(vertex_count)]
        for f, vs in enumerate(self.vertex_walks):
            for v in dict.fromkeys(vs):
                inc[v].append(f)
        return inc


def trace_faces(m: CombinatorialMap) -> FaceSet:
    dart_face = [-1] * m.dart_count
    walks = []
    for start in range(m.dart_count):
        if dart_face[start] >= 0:
            continue
        walk = []
        d = start
        while dart_face[d] < 0:
            dart_face[d] = len(walks)
            walk.append(d)
            d = m.face_next(d)
        walks.append(tuple(walk))
    vertex_walks = tuple(tuple(m.origin[d] for d in w) for w in walks)
    return FaceSet(tuple(walks), tuple(dart_face), vertex_walks)


def _reachable(adj: Sequence[Iterable[int]], start: int, removed: frozenset[int] | set[int] = frozenset()) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen and w not in removed:
                seen.add(w)
                todo.append(w)
    return seen


def is_connected(m: CombinatorialMap) -> bool:
    return len(_reachable(m.adjacency, 0)) == m.vertex_count


def connected_without(adj: Sequence[Iterable[int]], removed: Iterable[int]) -> bool:
    """Whether the graph stays connected after deleting the vertices ``removed``."""
    removed = set(removed)
    rest = [v for v in range(len(adj)) if v not in removed]
    if not rest:
        return True
    return len(_reachable(adj, rest[0], removed)) == len(rest)


def euler_check(m: CombinatorialMap) -> bool:
    """True iff V - E + F = 2, i.e. the rotation system is spherical."""
    if not is_connected(m):
        raise Disconnected("euler characteristic is only meaningful for connected maps")
    return m.vertex_count - m.edge_count + len(trace_faces(m)) == 2


def is_simple(m: CombinatorialMap) -> bool:
    seen = set()
    for u, w in m.edges:
        if u == w:
            return False
        key = (u, w) if u < w else (w, u)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_three_connected(m: CombinatorialMap) -> bool:
    """Vertex 3-connectivity by brute-force deletion of every vertex pair."""
    n = m.vertex_count
    if n < 4:
        return False
    adj = m.adjacency
    if not connected_without(adj, ()):
        return False
    return all(connected_without(adj, pair) for pair in itertools.combinations(range(n), 2))


# -- planar embedding ---------------------------------------------------------


def _normalize_adjacency(adjacency) -> list[set[int]]:
    if isinstance(adjacency, Mapping):
        n = len(adjacency)
        if sorted(adjacency) != list(range(n)):
            raise MapError("vertex ids must be 0..n-1")
        lists = [adjacency[v] for v in range(n)]
    else:
        lists = list(adjacency)
    n = len(lists)
    adj = [set() for _ in range(n)]
    for u, nbrs in enumerate(lists):
        for w in nbrs:
            if not isinstance(w, int) or not 0 <= w < n:
                raise MapError(f"vertex {u} lists unknown neighbor {w!r}")
            if w == u:
                raise MapError(f"loop at vertex {u}")
            adj[u].add(w)
    for u in range(n):
        for w in adj[u]:
            if u not in adj[w]:
                raise AsymmetricIncidence(f"{w} listed under {u} but not vice versa")
    return adj


def _blocks(adj: list[set[int]]) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (iterative Tarjan)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks = []
    estack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        block = []
                        while True:
                            e = estack.pop()
                            block.append(e)
                            if e == (u, v):
                                break
                        blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v]):
            if w == parent[v]:
                continue
            if w in parent:
                # back edge closes a cycle through the tree paths of v and w
                path_v = [v]
                while path_v[-1] != start:
                    path_v.append(parent[path_v[-1]])
                path_w = [w]
                while path_w[-1] != start:
                    path_w.append(parent[path_w[-1]])
                common = set(path_v) & set(path_w)
                while len(path_v) > 1 and path_v[-2] in common:
                    path_v.pop()
                while len(path_w) > 1 and path_w[-2] in common:
                    path_w.pop()
                return path_v + list(reversed(path_w[:-1]))
            parent[w] = v
            stack.append(w)
    raise MapError("block has no cycle")


def _embed_block(edges: list[tuple[int, int]]) -> dict[int, list[int]]:
    """Demoucron-Malgrange-Pertuiset embedding of a 2-connected graph."""
    adj: dict[int, set[int]] = {}
    for u, w in edges:
        adj.setdefault(u, set()).add(w)
        adj.setdefault(w, set()).add(u)
    cycle = _find_cycle(adj)
    faces = [list(cycle), list(reversed(cycle))]
    placed_v = set(cycle)
    placed_e = {frozenset((cycle[i], cycle[i - 1])) for i in range(len(cycle))}
    n_edges = len(edges)

    while len(placed_e) < n_edges:
        fragments = []  # (attachments, path-finder payload)
        for u, w in edges:
            if u in placed_v and w in placed_v and frozenset((u, w)) not in placed_e:
                fragments.append(({u, w}, ("edge", u, w)))
        free = [v for v in adj if v not in placed_v]
        seen: set[int] = set()
        for v in sorted(free):
            if v in seen:
                continue
            comp = set()
            todo = [v]
            seen.add(v)
            while todo:
                x = todo.pop()
                comp.add(x)
                for y in adj[x]:
                    if y not in placed_v and y not in seen:
                        seen.add(y)
                        todo.append(y)
            attach = {y for x in comp for y in adj[x] if y in placed_v}
            fragments.append((attach, ("comp", comp)))

        chosen = None
        for attach, payload in fragments:
            admissible = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                raise NonPlanar("graph has no planar embedding")
            if chosen is None or len(admissible) == 1:
                chosen = (attach, payload, admissible[0])
                if len(admissible) == 1:
                    break
        attach, payload, fi = chosen

        if payload[0] == "edge":
            path = [payload[1], payload[2]]
        else:
            comp = payload[1]
            u = min(attach)
            prev = {u: None}
            queue = deque([u])
            end = None
            while queue and end is None:
                x = queue.popleft()
                for y in sorted(adj[x]):
                    if y in prev:
                        continue
                    if y in comp:
                        prev[y] = x
                        queue.append(y)
                    elif x != u and y in attach and y != u:
                        prev[y] = x
                        end = y
                        break
            path = [end]
            while path[-1] != u:
                path.append(prev[path[-1]])
            path.reverse()

        u, w = path[0], path[-1]
        inner = path[1:-1]
        face = faces[fi]
        iu = face.index(u)
        face = face[iu:] + face[:iu]
        k = face.index(w)
        faces[fi] = face[: k + 1] + list(reversed(inner))
        faces.append(face[k:] + [u] + inner)
        placed_v.update(inner)
        placed_e.update(frozenset(p) for p in zip(path, path[1:]))

    # face walk (p, v, s) means s follows p counterclockwise around v
    succ: dict[int, dict[int, int]] = {v: {} for v in adj}
    for face in faces:
        k = len(face)
        for i in range(k):
            p, v, s = face[i - 1], face[i], face[(i + 1) % k]
            succ[v][p] = s
    rot = {}
    for v, nxt in succ.items():
        first = min(nxt)
        order = [first]
        while True:
            x = nxt[order[-1]]
            if x == first:
                break
            order.append(x)
        if len(order) != len(adj[v]):
            raise NonPlanar("inconsistent face structure")
        rot[v] = order
    return rot


def embed_planar(adjacency) -> list[list[int]]:
    """Counterclockwise neighbor lists realizing a planar embedding.

    ``adjacency`` is a list (or dict keyed 0..n-1) of unordered neighbor
    collections for a simple connected graph.  Raises ``NonPlanar`` when
    the graph has no embedding in the sphere.
    """
    adj = _normalize_adjacency(adjacency)
    n = len(adj)
    if n == 0:
        raise MapError("empty graph")
    if len(_reachable(adj, 0)) != n:
        raise Disconnected("embed_planar needs a connected graph")
    rot: list[list[int]] = [[] for _ in range(n)]
    if n == 1:
        raise EmptyRotation("vertex 0 has no neighbors")
    for block in _blocks(adj):
        if len(block) == 1:
            (u, w), = block
            brot = {u: [w], w: [u]}
        else:
            brot = _embed_block(block)
        # blocks meeting at a cut vertex occupy consecutive arcs of its rotation
        for v, r in brot.items():
            rot[v].extend(r)
    return rot
