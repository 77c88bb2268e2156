"""Command-line interface.

Exit codes: 0 success, 1 validation or check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from sipoly.census import Census, compare_censuses, si_census_expand, si_census_oracle
from sipoly.duality import find_dualities, is_strong_involution, strong_involutions
from sipoly.errors import SipolyError, UnsupportedFormat
from sipoly.expansion import expansions
from sipoly.io import export, parse_input, to_document
from sipoly.polyhedron import canonical_code, dual, is_wheel, validate
from sipoly.reduction import reduce_to_wheel
from sipoly.squares import (
    graph_of_squares,
    induced_cell_map,
    is_automorphism,
    is_fixed_point_free,
    is_involution,
)


class CheckFailed(Exception):
    pass


def _load(path: str):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return validate(parse_input(data))


def _strong(P):
    found = strong_involutions(P)
    if not found:
        raise CheckFailed("polyhedron is not strongly involutive")
    return found[0]


def _emit(text: str | bytes, output: str | None) -> None:
    if isinstance(text, str):
        text = text.encode()
    if output:
        Path(output).write_bytes(text)
    else:
        sys.stdout.buffer.write(text)
        sys.stdout.flush()


def cmd_check(args) -> None:
    P = _load(args.file)
    print(f"polyhedron V={P.V} E={P.E} F={P.F}")
    print(f"wheel: {'yes' if is_wheel(P) else 'no'}")
    sis = strong_involutions(P)
    print(f"self-dual: {'yes' if find_dualities(P) else 'no'}")
    print(f"strongly involutive: {'yes' if sis else 'no'}")


def cmd_dual(args) -> None:
    D, _ = dual(_load(args.file))
    _emit(json.dumps(to_document(D)) + "\n", args.output)


def cmd_dualities(args) -> None:
    P = _load(args.file)
    found = find_dualities(P)
    if args.strong:
        found = [d for d in found if is_strong_involution(P, d)]
    label = "strong involutions" if args.strong else "dualities"
    print(f"{label}: {len(found)}")
    for d in found:
        print(" ".join(map(str, d.vertex_to_face)))


def cmd_reduce(args) -> None:
    P = _load(args.file)
    trace = reduce_to_wheel(P, _strong(P))
    print(f"steps: {len(trace)}")
    print(f"terminal wheel rim: {trace.terminal_rim}")
    if args.trace:
        for i, s in enumerate(trace.steps, 1):
            print(f"{i}: contract {s.contracted} delete {s.deleted} -> {' '.join(map(str, s.code))}")


def cmd_expand(args) -> None:
    P = _load(args.file)
    results = list(expansions(P, _strong(P)))
    codes = {canonical_code(Q) for _, Q, _ in results}
    print(f"moves: {len(results)}")
    print(f"distinct results: {len(codes)}")
    if args.all:
        for m, Q, _ in results:
            print(json.dumps({"move": m.to_dict(), "result": to_document(Q)}))


def cmd_census(args) -> None:
    n = args.max_vertices
    if n < 4:
        raise argparse.ArgumentTypeError("--max-vertices must be at least 4")
    if args.compare:
        a, b = si_census_expand(n), si_census_oracle(n)
        report = compare_censuses(a, b)
        for v, r in report["per_v"].items():
            print(f"V={v}: expand={r['count_a']} oracle={r['count_b']} "
                  f"only-expand={len(r['only_a'])} only-oracle={len(r['only_b'])}")
        print("PASS: censuses agree" if report["equal"] else "FAIL: censuses differ")
        if args.output:
            Path(args.output).write_text(json.dumps(report, indent=1) + "\n")
        if not report["equal"]:
            raise CheckFailed("symmetric difference is not empty")
        return
    census: Census = si_census_oracle(n) if args.oracle else si_census_expand(n)
    if args.output:
        Path(args.output).write_text(census.dumps() + "\n")
    for v, c in census.counts().items():
        print(f"V={v}: {c}")
    print(f"total: {len(census)}")


def cmd_squares(args) -> None:
    P = _load(args.file)
    S = graph_of_squares(P)
    Q = S.polyhedron
    quads = all(Q.face_size(f) == 4 for f in range(Q.F))
    print(f"graph of squares V={Q.V} E={Q.E} F={Q.F} all-quadrilateral={'yes' if quads else 'no'}")
    sis = strong_involutions(P)
    if not sis:
        print("no strong involution; cell map not available")
        return
    cm = induced_cell_map(P, sis[0], S)
    ok = is_automorphism(S, cm) and is_involution(cm) and is_fixed_point_free(S, cm)
    print(f"induced cell map: automorphism={is_automorphism(S, cm)} involution={is_involution(cm)} "
          f"fixed-point-free={is_fixed_point_free(S, cm)}")
    if not ok:
        raise CheckFailed("induced cell map is not a fixed-point-free involutive automorphism")


def cmd_export(args) -> None:
    _emit(export(_load(args.file), args.format), args.output)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sipoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="map document (JSON), or - for stdin")
        sp.set_defaults(func=func)
        return sp

    with_file("check", cmd_check, "validate and report counts")
    with_file("dual", cmd_dual, "print the dual map").add_argument("-o", "--output")
    with_file("dualities", cmd_dualities, "list duality isomorphisms").add_argument("--strong", action="store_true")
    with_file("reduce", cmd_reduce, "remove-contract down to an odd wheel").add_argument("--trace", action="store_true")
    with_file("expand", cmd_expand, "one-step expansions").add_argument("--all", action="store_true")
    with_file("squares", cmd_squares, "graph of squares and the induced cell map")
    ex = with_file("export", cmd_export, "export as json, dot or svg")
    ex.add_argument("--format", required=True)
    ex.add_argument("-o", "--output")

    c = sub.add_parser("census", help="census of strongly involutive polyhedra")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--oracle", action="store_true", help="use the Tutte-generation oracle")
    c.add_argument("--compare", action="store_true", help="run both routes and compare")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UnsupportedFormat as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SipolyError, CheckFailed) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
