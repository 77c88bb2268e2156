import itertools
import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from sipoly.errors import AsymmetricIncidence, Disconnected, EmptyRotation, NonPlanar
from sipoly.planar_map import (
    build_map,
    embed_planar,
    euler_check,
    is_simple,
    is_three_connected,
    trace_faces,
)

from conftest import CUBE_ADJACENCY, K4_ROTATIONS
from oracles import three_connected_nx


def cycle_rotations(n):
    return [[(i - 1) % n, (i + 1) % n] for i in range(n)]


def wheel_rotations(n):
    return [list(range(1, n + 1))] + [[0, (i - 2) % n + 1, i % n + 1] for i in range(1, n + 1)]


def test_build_k4():
    m = build_map(K4_ROTATIONS)
    assert (m.vertex_count, m.edge_count) == (4, 6)


def test_build_single_edge():
    m = build_map({0: (1,), 1: (0,)})
    assert m.edge_count == 1 and m.dart_count == 2


def test_build_rejects_broken_pairing():
    with pytest.raises((AsymmetricIncidence, EmptyRotation)):
        build_map({0: (1,), 1: ()})
    with pytest.raises(AsymmetricIncidence):
        build_map([[1, 1], [0], [0]])


def test_build_rejects_empty_rotation():
    with pytest.raises(EmptyRotation):
        build_map([[1], [0], []])


def test_twin_is_fixed_point_free_involution():
    m = build_map(K4_ROTATIONS)
    for d in range(m.dart_count):
        assert d ^ 1 != d and (d ^ 1) ^ 1 == d
        assert m.origin[d ^ 1] == m.head(d)


@pytest.mark.parametrize(
    "rots, sizes",
    [
        (K4_ROTATIONS, [3, 3, 3, 3]),
        (cycle_rotations(4), [4, 4]),
        (wheel_rotations(5), [3, 3, 3, 3, 3, 5]),
    ],
)
def test_trace_faces(rots, sizes):
    faces = trace_faces(build_map(rots))
    assert sorted(len(w) for w in faces.walks) == sizes
    covered = sorted(d for w in faces.walks for d in w)
    assert covered == list(range(build_map(rots).dart_count))


def test_euler():
    assert euler_check(build_map(K4_ROTATIONS))
    assert euler_check(build_map(wheel_rotations(5)))
    k5 = [[j for j in range(5) if j != i] for i in range(5)]
    assert not euler_check(build_map(k5))


def test_euler_requires_connected():
    with pytest.raises(Disconnected):
        euler_check(build_map([[1], [0], [3], [2]]))


def test_is_simple():
    assert is_simple(build_map(K4_ROTATIONS))
    assert not is_simple(build_map({0: (1, 1), 1: (0, 0)}))
    assert not is_simple(build_map({0: (0, 1, 0), 1: (0,)}))


def test_is_three_connected_examples():
    assert is_three_connected(build_map(K4_ROTATIONS))
    assert not is_three_connected(build_map(cycle_rotations(5)))
    assert is_three_connected(build_map(wheel_rotations(4)))


def test_embed_k4():
    assert euler_check(build_map(embed_planar([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])))


def test_embed_k5_nonplanar():
    with pytest.raises(NonPlanar):
        embed_planar([[j for j in range(5) if j != i] for i in range(5)])


def test_embed_k33_nonplanar():
    with pytest.raises(NonPlanar):
        embed_planar([[3, 4, 5]] * 3 + [[0, 1, 2]] * 3)


def test_embed_cube():
    m = build_map(embed_planar(CUBE_ADJACENCY))
    assert euler_check(m)
    assert sorted(len(w) for w in trace_faces(m).walks) == [4] * 6


def test_embed_not_biconnected():
    # two triangles sharing vertex 0, plus a pendant edge
    adj = [[1, 2, 3, 4], [0, 2], [0, 1], [0, 4, 5], [0, 3], [3]]
    assert euler_check(build_map(embed_planar(adj)))


@st.composite
def random_graphs(draw, max_n=10):
    n = draw(st.integers(4, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=n - 1))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(chosen)
    return G


def _map_of(G):
    return build_map([sorted(G[v]) for v in range(G.number_of_nodes())])


@settings(max_examples=150, deadline=None)
@given(random_graphs())
def test_three_connected_agrees_with_networkx(G):
    if any(G.degree(v) == 0 for v in G):
        return
    m = _map_of(G)
    assert is_three_connected(m) == three_connected_nx(m)


@settings(max_examples=150, deadline=None)
@given(random_graphs(max_n=9))
def test_embed_planar_agrees_with_networkx(G):
    if not nx.is_connected(G):
        with pytest.raises(Disconnected):
            embed_planar([sorted(G[v]) for v in range(G.number_of_nodes())])
        return
    planar, _ = nx.check_planarity(G)
    adj = [sorted(G[v]) for v in range(G.number_of_nodes())]
    if planar:
        m = build_map(embed_planar(adj))
        assert euler_check(m)
        assert {frozenset(e) for e in m.edges} == {frozenset(e) for e in G.edges}
    else:
        with pytest.raises(NonPlanar):
            embed_planar(adj)


def test_degree_and_face_sums(small_polyhedra):
    for P in small_polyhedra:
        m = P.map
        assert sum(len(w) for w in trace_faces(m).walks) == 2 * m.edge_count
        assert sum(m.degree(v) for v in range(m.vertex_count)) == 2 * m.edge_count
        assert euler_check(m)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_embed_recovers_polyhedra(small_polyhedra, data):
    P = data.draw(st.sampled_from(small_polyhedra))
    perm = data.draw(st.permutations(range(P.V)))
    adj = [None] * P.V
    for v in range(P.V):
        adj[perm[v]] = [perm[w] for w in P.adjacency[v]]
    m = build_map(embed_planar(adj))
    assert euler_check(m)
    assert sorted(len(w) for w in trace_faces(m).walks) == sorted(len(w) for w in P.faces.walks)
