"""Map documents (JSON) and exports to json, dot and svg."""

from __future__ import annotations

import json

import numpy as np

from sipoly.errors import MapError, ParseError, SchemaError, UnsupportedFormat
from sipoly.planar_map import CombinatorialMap, build_map, embed_planar
from sipoly.polyhedron import Polyhedron

FORMATS = ("json", "dot", "svg")


def parse_input(data: bytes | str) -> CombinatorialMap:
    """Parse a map document.

    ``{"vertices": n, "rotations": [[...], ...]}`` gives counterclockwise
    neighbor lists; ``{"vertices": n, "adjacency": [[...], ...]}`` gives
    unordered neighbor lists that are embedded first.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if "rotations" in doc:
        key = "rotations"
    elif "adjacency" in doc:
        key = "adjacency"
    else:
        raise SchemaError('document needs "rotations" or "adjacency"')
    lists = doc[key]
    if not isinstance(lists, list) or not all(isinstance(r, list) for r in lists):
        raise SchemaError(f'"{key}" must be a list of lists')
    if "vertices" in doc and doc["vertices"] != len(lists):
        raise SchemaError(f'"vertices" is {doc["vertices"]} but "{key}" has {len(lists)} entries')
    try:
        if key == "adjacency":
            lists = embed_planar(lists)
        return build_map(lists)
    except MapError as exc:
        raise type(exc)(f"{key}: {exc}") from exc


def to_document(P: Polyhedron | CombinatorialMap) -> dict:
    m = P.map if isinstance(P, Polyhedron) else P
    return {"vertices": m.vertex_count, "rotations": m.rotation_lists()}


def export(P: Polyhedron, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(to_document(P)) + "\n").encode()
    if fmt == "dot":
        return _dot(P).encode()
    if fmt == "svg":
        return _svg(P).encode()
    raise UnsupportedFormat(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _dot(P: Polyhedron) -> str:
    lines = ["graph polyhedron {"]
    for f, walk in enumerate(P.faces.vertex_walks):
        lines.append(f"  // face {f}: {' '.join(map(str, walk))}")
    lines += [f"  {v};" for v in range(P.V)]
    lines += [f"  {u} -- {w};" for u, w in P.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def tutte_layout(P: Polyhedron) -> np.ndarray:
    """Barycentric layout with the largest face pinned to a circle."""
    outer = max(range(P.F), key=lambda f: (P.face_size(f), -f))
    ring = P.faces.vertex_walks[outer]
    pos = np.zeros((P.V, 2))
    angles = -2 * np.pi * np.arange(len(ring)) / len(ring)
    pos[list(ring)] = np.column_stack([np.cos(angles), np.sin(angles)])
    inner = [v for v in range(P.V) if v not in set(ring)]
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        A = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            A[i, i] = P.degree(v)
            for w in P.adjacency[v]:
                if w in idx:
                    A[i, idx[w]] -= 1
                else:
                    rhs[i] += pos[w]
        pos[inner] = np.linalg.solve(A, rhs)
    return pos


def _svg(P: Polyhedron, size: int = 400) -> str:
    pos = tutte_layout(P)
    xy = (pos + 1.1) * size / 2.2
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    for u, w in P.edges:
        (x1, y1), (x2, y2) = xy[u], xy[w]
        out.append(f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="black"/>')
    for v, (x, y) in enumerate(xy):
        out.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="9" fill="white" stroke="black"/>')
        out.append(f'  <text x="{x:.2f}" y="{y + 4:.2f}" font-size="10" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
