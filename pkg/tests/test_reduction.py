import pytest

from sipoly.duality import is_duality, is_strong_involution, strong_involution
from sipoly.errors import NotReducible
from sipoly.planar_map import euler_check, is_simple, is_three_connected
from sipoly.polyhedron import are_isomorphic, dual, is_wheel, triangle_degree3_test, validate, wheel
from sipoly.reduction import (
    all_edges_essential,
    can_contract,
    can_delete,
    contract_edge,
    delete_edge,
    edge_flags,
    find_reducible_edges,
    is_essential,
    reduce_step,
    reduce_to_wheel,
    reduction_terminals,
)


def test_delete_examples(k4, cube):
    assert all(not is_three_connected(delete_edge(k4, e)) for e in k4.edges)
    m = delete_edge(cube, cube.edges[0])
    assert euler_check(m) and is_simple(m) and not is_three_connected(m)
    W = wheel(5)
    with pytest.raises(Exception):
        validate(delete_edge(W, (1, 2)))


def test_delete_merges_faces(cube):
    m = delete_edge(cube, 0)
    assert m.edge_count == 11
    from sipoly.planar_map import trace_faces

    assert len(trace_faces(m)) == 5


def test_contract_examples(k4, cube):
    assert all(not is_simple(contract_edge(k4, e)) for e in k4.edges)
    for e in cube.edges:
        assert validate(contract_edge(cube, e)).V == 7
    W = wheel(5)
    assert not is_simple(contract_edge(W, (0, 1)))


def test_can_delete_contract(k4, cube):
    assert not any(can_delete(k4, e) or can_contract(k4, e) for e in k4.edges)
    assert all(not can_delete(cube, e) and can_contract(cube, e) for e in cube.edges)
    octa, _ = dual(cube)
    assert all(can_delete(octa, e) and not can_contract(octa, e) for e in octa.edges)


def test_essential_examples(cube):
    for n in (3, 4, 5, 6, 9):
        W = wheel(n)
        assert all(is_essential(W, e) for e in W.edges)
    assert not is_essential(cube, 0)


def test_triangle_degree3_edges_are_essential(small_polyhedra):
    for P in small_polyhedra:
        for k, (u, w) in enumerate(P.edges):
            f1, f2 = P.edge_faces[k]
            if 3 in (P.face_size(f1), P.face_size(f2)) and 3 in (P.degree(u), P.degree(w)):
                assert is_essential(P, k)


def test_wheel_characterizations_agree(small_polyhedra):
    for P in small_polyhedra:
        a = is_wheel(P)
        assert a == all_edges_essential(P) == triangle_degree3_test(P)


def test_delete_contract_duality(small_polyhedra):
    for P in small_polyhedra:
        D, bij = dual(P)
        for k in range(P.E):
            assert can_delete(P, k) == can_contract(D, bij[k])
            assert can_contract(P, k) == can_delete(D, bij[k])


def test_edge_flags_examples(k4, cube):
    W = wheel(5)
    tau = strong_involution(W)
    f = edge_flags(W, tau, (0, 1))
    assert f.on_triangle and f.diameter
    tk = strong_involution(k4)
    for e in k4.edges:
        f = edge_flags(k4, tk, e)
        assert f.on_triangle and f.in_three_cut and f.diameter
    f = edge_flags(cube, None, 0)
    assert not f.diameter and not f.on_triangle


def test_reducible_edges_empty_on_wheels(k4):
    for n in (3, 5, 7):
        W = wheel(n)
        assert find_reducible_edges(W, strong_involution(W)) == []


def test_reducible_edges_nonempty_off_wheels(census9):
    for entry in census9:
        P, tau = entry.realize()
        assert bool(find_reducible_edges(P, tau)) != is_wheel(P)


def test_reduce_step_from_seven_vertices(census9):
    (entry,) = census9.entries[7]
    P, tau = entry.realize()
    assert P.counts == (7, 12, 7)
    for e in find_reducible_edges(P, tau):
        Q, sigma = reduce_step(P, tau, e)
        assert Q.counts == (6, 10, 6)
        assert is_duality(Q, sigma) and is_strong_involution(Q, sigma)
        assert are_isomorphic(Q, wheel(5))


def test_reduce_step_on_wheel_raises():
    W = wheel(5)
    tau = strong_involution(W)
    for e in W.edges:
        with pytest.raises(NotReducible):
            reduce_step(W, tau, e)


def test_reduce_to_wheel_on_wheels(k4):
    W = wheel(7)
    t = reduce_to_wheel(W, strong_involution(W))
    assert len(t) == 0 and t.terminal_rim == 7
    t = reduce_to_wheel(k4, strong_involution(k4))
    assert len(t) == 0 and t.terminal_rim == 3


def test_reduce_to_wheel_census(census9):
    for entry in census9:
        P, tau = entry.realize()
        t = reduce_to_wheel(P, tau)
        assert t.terminal_rim % 2 == 1
        assert len(t) == P.V - (t.terminal_rim + 1)
        codes = [s.code for s in t.steps]
        assert len(set(codes)) == len(codes)


def test_reduction_terminals_odd(census9):
    for entry in census9.entries[9]:
        P, tau = entry.realize()
        assert all(r % 2 for r in reduction_terminals(P, tau))


def test_trace_replays(census9):
    from sipoly.duality import canonicalize, tau_edge
    from sipoly.polyhedron import canonical_code

    for entry in census9:
        P, tau = entry.realize()
        Q, t, _ = canonicalize(P, tau)
        for step in reduce_to_wheel(P, tau).steps:
            assert tau_edge(Q, t, step.contracted) == step.deleted
            Q, t, _ = canonicalize(*reduce_step(Q, t, step.contracted))
            assert canonical_code(Q) == step.code
        assert is_wheel(Q)
