"""Censuses of strongly involutive polyhedra.

Two independent routes:

* :func:`si_census_expand` grows odd wheels by expansion moves.
* :func:`si_census_oracle` generates every polyhedron within the bounds
  from wheels by face diagonals and vertex splits, then keeps those that
  admit a strong involution found by exhaustive duality search.

Entries are stored under the canonical labeling of their code, i.e. the
labeling produced by :func:`sipoly.polyhedron.from_code`.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from sipoly import __version__
from sipoly.duality import StrongInvolution, canonicalize, strong_involutions
from sipoly.errors import BoundMismatch, MapError, SchemaError, ValidationError
from sipoly.expansion import expansions
from sipoly.planar_map import CombinatorialMap, build_map
from sipoly.polyhedron import (
    CanonicalCode,
    Polyhedron,
    canonical_form,
    from_code,
    is_chiral,
    validate,
    wheel,
)


@dataclass(frozen=True)
class CensusEntry:
    code: CanonicalCode
    v: int
    e: int
    f: int
    involution: tuple[tuple[int, ...], ...]  # vertex set of tau(i), canonical labels
    provenance: dict | None
    chiral: bool

    def realize(self) -> tuple[Polyhedron, StrongInvolution]:
        P = from_code(self.code)
        tau = StrongInvolution(tuple(P.face_by_vertices[frozenset(s)] for s in self.involution))
        return P, tau

    def to_json(self) -> dict:
        return {
            "code": list(self.code),
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "involution": [list(s) for s in self.involution],
            "provenance": self.provenance,
            "chiral": self.chiral,
        }

    @classmethod
    def from_json(cls, d: dict) -> "CensusEntry":
        try:
            return cls(
                tuple(d["code"]),
                d["v"],
                d["e"],
                d["f"],
                tuple(tuple(s) for s in d["involution"]),
                d["provenance"],
                d["chiral"],
            )
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad census entry: {exc}") from exc


def make_entry(P: Polyhedron, tau: StrongInvolution, provenance: dict | None = None) -> CensusEntry:
    Q, t, _ = canonicalize(P, tau)
    sets = Q.face_vertex_sets
    inv = tuple(tuple(sorted(sets[t(v)])) for v in range(Q.V))
    code, _, _ = canonical_form(Q.map, Q.faces)
    return CensusEntry(code, Q.V, Q.E, Q.F, inv, provenance, is_chiral(Q))


@dataclass
class Census:
    max_v: int
    entries: dict[int, list[CensusEntry]] = field(default_factory=dict)

    def add(self, entry: CensusEntry) -> None:
        self.entries.setdefault(entry.v, []).append(entry)

    def finalize(self) -> "Census":
        for v in self.entries:
            self.entries[v].sort(key=lambda en: en.code)
        self.entries = dict(sorted(self.entries.items()))
        return self

    def __iter__(self) -> Iterator[CensusEntry]:
        for v in sorted(self.entries):
            yield from self.entries[v]

    def __len__(self) -> int:
        return sum(len(es) for es in self.entries.values())

    def codes(self, v: int | None = None) -> set[CanonicalCode]:
        if v is None:
            return {en.code for en in self}
        return {en.code for en in self.entries.get(v, [])}

    def counts(self) -> dict[int, int]:
        return {v: len(self.entries.get(v, [])) for v in range(4, self.max_v + 1)}

    def to_json(self) -> dict:
        return {"max_v": self.max_v, "entries": [en.to_json() for en in self]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, d: dict) -> "Census":
        try:
            c = cls(d["max_v"])
            for en in d["entries"]:
                c.add(CensusEntry.from_json(en))
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad census document: {exc}") from exc
        return c.finalize()


def _odd_wheel_seeds(max_v: int) -> list[tuple[Polyhedron, StrongInvolution]]:
    seeds = []
    for n in range(3, max_v, 2):
        W = wheel(n)
        (tau,) = strong_involutions(W)
        seeds.append((W, tau))
    return seeds


def si_census_expand(max_v: int) -> Census:
    """Breadth-first closure of the odd wheels under expansion moves.

    ``provenance`` records the ancestor wheel and the move list; each move
    is written in the canonical labeling of the entry it is applied to.
    """
    if max_v < 4:
        raise ValueError("max_v must be at least 4")
    census = Census(max_v)
    seen: dict[CanonicalCode, CensusEntry] = {}
    level: list[CensusEntry] = []
    for W, tau in _odd_wheel_seeds(max_v):
        en = make_entry(W, tau, {"wheel": W.V - 1, "moves": []})
        seen[en.code] = en
        level.append(en)
    queue = deque(sorted(level, key=lambda en: (en.v, en.code)))
    while queue:
        en = queue.popleft()
        census.add(en)
        if en.v >= max_v:
            continue
        P, tau = en.realize()
        children = []
        for move, Q, sigma in expansions(P, tau):
            child = make_entry(Q, sigma)
            if child.code in seen:
                continue
            prov = {"wheel": en.provenance["wheel"], "moves": en.provenance["moves"] + [move.to_dict()]}
            child = CensusEntry(child.code, child.v, child.e, child.f, child.involution, prov, child.chiral)
            seen[child.code] = child
            children.append(child)
        queue.extend(sorted(children, key=lambda c: c.code))
    return census.finalize()


# -- Tutte-generation oracle --------------------------------------------------


def _diagonal_children(P: Polyhedron) -> Iterator[CombinatorialMap]:
    for walk in P.faces.vertex_walks:
        k = len(walk)
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                rots = P.rotation_lists()
                x, y = walk[i], walk[j]
                rots[x].insert(rots[x].index(walk[i - 1]) + 1, y)
                rots[y].insert(rots[y].index(walk[j - 1]) + 1, x)
                yield build_map(rots)


def _split_children(P: Polyhedron) -> Iterator[CombinatorialMap]:
    for v in range(P.V):
        d = P.degree(v)
        if d < 4:
            continue
        for i in range(d):
            for j in range(i + 2, min(d, i + d - 1)):
                rots = P.rotation_lists()
                nbrs = rots[v]
                arc_a, arc_b = nbrs[i:j], nbrs[j:] + nbrs[:i]
                b = P.V
                rots[v] = arc_a + [b]
                rots.append(arc_b + [v])
                for w in arc_b:
                    rots[w][rots[w].index(v)] = b
                yield build_map(rots)


def all_polyhedra_tutte(max_v: int, max_e: int) -> set[CanonicalCode]:
    """Codes of every polyhedron with at most ``max_v`` vertices and ``max_e`` edges.

    Closure of the wheels under adding a diagonal to a face and under the
    dual move, splitting a vertex of degree at least four.
    """
    found: set[CanonicalCode] = set()
    rejected: set[CanonicalCode] = set()
    queue: deque[Polyhedron] = deque()
    for n in range(3, max_v):
        if 2 * n > max_e:
            break
        W = wheel(n)
        code = canonical_form(W.map, W.faces)[0]
        if code not in found:
            found.add(code)
            queue.append(W)
    while queue:
        P = queue.popleft()
        if P.E >= max_e:
            continue
        kids = list(_diagonal_children(P))
        if P.V < max_v:
            kids += _split_children(P)
        for m in kids:
            code = canonical_form(m)[0]
            if code in found or code in rejected:
                continue
            try:
                Q = validate(m)
            except (ValidationError, MapError):
                rejected.add(code)
                continue
            found.add(code)
            queue.append(Q)
    return found


def si_census_oracle(max_v: int) -> Census:
    """Strongly involutive polyhedra filtered out of the full Tutte generation."""
    if max_v < 4:
        raise ValueError("max_v must be at least 4")
    census = Census(max_v)
    for code in sorted(all_polyhedra_tutte(max_v, 2 * max_v - 2)):
        P = from_code(code)
        if P.V != P.F:
            continue
        if sorted(P.degree(v) for v in range(P.V)) != sorted(P.face_size(f) for f in range(P.F)):
            continue
        found = strong_involutions(P)
        if found:
            census.add(make_entry(P, found[0], None))
    return census.finalize()


def polyhedra_counts(codes: set[CanonicalCode]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for code in codes:
        v = code.count(0)
        counts[v] = counts.get(v, 0) + 1
    return dict(sorted(counts.items()))


def compare_censuses(a: Census, b: Census) -> dict:
    """Per-vertex-count symmetric difference of the code sets."""
    if a.max_v != b.max_v:
        raise BoundMismatch(f"max_v {a.max_v} != {b.max_v}")
    per_v = {}
    for v in range(4, a.max_v + 1):
        only_a = sorted(a.codes(v) - b.codes(v))
        only_b = sorted(b.codes(v) - a.codes(v))
        per_v[v] = {
            "count_a": len(a.codes(v)),
            "count_b": len(b.codes(v)),
            "only_a": [list(c) for c in only_a],
            "only_b": [list(c) for c in only_b],
        }
    equal = all(not r["only_a"] and not r["only_b"] for r in per_v.values())
    return {"max_v": a.max_v, "equal": equal, "per_v": per_v}


def golden_manifest(census: Census, oracle_checked: bool) -> dict:
    return {
        "generator": f"sipoly {__version__}",
        "max_v": census.max_v,
        "counts": {str(v): n for v, n in census.counts().items()},
        "oracle_checked": oracle_checked,
    }


def load_golden(max_v: int = 10) -> tuple[Census, dict]:
    """The frozen, oracle-checked census shipped with the package, and its manifest."""
    from importlib.resources import files

    data = files("sipoly") / "data"
    census = Census.from_json(json.loads((data / f"census_v{max_v}.json").read_text()))
    manifest = json.loads((data / f"census_v{max_v}.manifest.json").read_text())
    return census, manifest
