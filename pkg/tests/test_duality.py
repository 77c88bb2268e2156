import itertools

import pytest

from sipoly.duality import (
    DualityIso,
    find_dualities,
    is_diameter,
    is_duality,
    is_strong_involution,
    strong_involutions,
    tau_edge,
    tau_edge_id,
)
from sipoly.polyhedron import wheel

from oracles import dualities_bruteforce, strong_bruteforce

HUB = 0


def rim(i):
    """Rim vertex i of wheel(5), indices taken cyclically in 1..5."""
    return (i - 1) % 5 + 1


def w5_tau(W):
    """Hub -> outer face; rim i -> triangle (hub, i+2, i+3)."""
    table = [0] * W.V
    table[HUB] = W.face_by_vertices[frozenset(range(1, 6))]
    for i in range(1, 6):
        table[i] = W.face_by_vertices[frozenset((HUB, rim(i + 2), rim(i + 3)))]
    return DualityIso(tuple(table))


def k4_forced(P):
    return DualityIso(tuple(P.face_by_vertices[frozenset(set(range(4)) - {v})] for v in range(4)))


def test_k4_dualities(k4):
    found = find_dualities(k4)
    # all vertex pairs and all face pairs are adjacent, so every bijection works
    assert len(found) == 24 == len(dualities_bruteforce(k4)) == len(list(itertools.permutations(range(4))))


def test_cube_has_no_duality(cube):
    assert find_dualities(cube) == []


def test_wheel4_is_self_dual():
    assert find_dualities(wheel(4))


def test_dualities_sorted_and_valid(small_polyhedra):
    for P in small_polyhedra:
        found = find_dualities(P)
        assert [d.vertex_to_face for d in found] == sorted(d.vertex_to_face for d in found)
        assert all(is_duality(P, d) for d in found)


def test_k4_forced_map_is_strong(k4):
    tau = k4_forced(k4)
    assert is_strong_involution(k4, tau)


def test_k4_other_maps_fail(k4):
    tau = k4_forced(k4)
    for d in find_dualities(k4):
        if d != tau:
            assert not is_strong_involution(k4, d)


def test_w5_strong_involution():
    W = wheel(5)
    tau = w5_tau(W)
    sets = W.face_vertex_sets
    # direct check of both conditions on all pairs
    assert all(v not in sets[tau(v)] for v in range(6))
    assert all((u in sets[tau(v)]) == (v in sets[tau(u)]) for u in range(6) for v in range(6))
    assert is_duality(W, tau) and is_strong_involution(W, tau)
    assert [s.vertex_to_face for s in strong_involutions(W)] == [tau.vertex_to_face]


@pytest.mark.parametrize("n, expected", [(3, 1), (4, 0), (5, 1), (6, 0), (7, 1), (8, 0), (9, 1)])
def test_wheel_strong_involution_counts(n, expected):
    assert len(strong_involutions(wheel(n))) == expected


def test_wheel4_oracle_agrees():
    assert strong_bruteforce(wheel(4)) == []


def test_strong_involutions_match_bruteforce(small_polyhedra):
    self_dual = {}
    for P in small_polyhedra:
        if P.V != P.F:
            continue
        ours = sorted(s.vertex_to_face for s in strong_involutions(P))
        assert ours == sorted(strong_bruteforce(P))
        dualities = sorted(d.vertex_to_face for d in find_dualities(P))
        assert dualities == sorted(dualities_bruteforce(P))
        if dualities:
            self_dual[P.V] = self_dual.get(P.V, 0) + 1
    # published counts of self-dual polyhedra with 4..8 vertices
    assert self_dual == {4: 1, 5: 1, 6: 2, 7: 6, 8: 16}


def test_tau_edge_k4(k4):
    tau = k4_forced(k4)
    for a, b in k4.edges:
        assert set(tau_edge(k4, tau, (a, b))) == set(range(4)) - {a, b}


def test_tau_edge_w5():
    W = wheel(5)
    tau = w5_tau(W)
    # tau(1) & tau(2) = {o,3,4} & {o,4,5} = {o,4}
    assert tau_edge(W, tau, (1, 2)) == (HUB, 4)
    # tau(o) & tau(1) = rim & {o,3,4} = {3,4}
    assert tau_edge(W, tau, (HUB, 1)) == (3, 4)


def test_tau_edge_involution_and_reciprocity(census9):
    for entry in census9:
        P, tau = entry.realize()
        for k in range(P.E):
            j = tau_edge_id(P, tau, k)
            assert j != k
            assert tau_edge_id(P, tau, j) == k
            x, y = P.edges[j]
            a, b = P.edges[k]
            assert P.face_vertex_sets[tau(x)] & P.face_vertex_sets[tau(y)] == {a, b}


def test_diameters():
    W = wheel(5)
    tau = w5_tau(W)
    assert is_diameter(W, tau, (HUB, 1))
    assert not is_diameter(W, tau, (1, 2))


def test_k4_all_diameters(k4):
    tau = k4_forced(k4)
    assert all(is_diameter(k4, tau, e) for e in k4.edges)


def test_diameter_symmetric(census9):
    for entry in census9:
        P, tau = entry.realize()
        for a, b in P.edges:
            assert (a in P.face_vertex_sets[tau(b)]) == (b in P.face_vertex_sets[tau(a)])
