from itertools import combinations

import pytest

from flipspectra.census import (
    count_pentagons_total,
    hexagon_census,
    hexagon_census_oracle,
    hexagon_count_edge_bounds,
    hexagon_count_vertex_formula,
    hexagon_count_vertex_oracle,
    hexagon_supports,
    pentagon_census,
    pentagon_count_edge,
    pentagon_count_edge_oracle,
    pentagon_count_vertex_formula,
    pentagon_count_vertex_oracle,
)
from flipspectra.errors import CapacityError, InvalidInputError
from flipspectra.flipgraph import build_associahedron, cycle_graph, petersen_graph
from flipspectra.triangulations import (
    Triangulation,
    ear_count,
    enumerate_triangulations,
    fan_triangulation,
)


def test_pentagon_vertex_formula_examples():
    assert all(pentagon_count_vertex_formula(t) == 1 for t in enumerate_triangulations(5))
    star = Triangulation(6, ((1, 3), (3, 5), (1, 5)))
    assert pentagon_count_vertex_formula(star) == 3
    assert pentagon_count_vertex_formula(fan_triangulation(6)) == 2


@pytest.mark.parametrize("n", range(5, 9))
def test_pentagon_vertex_formula_identity(n):
    for t in enumerate_triangulations(n):
        c = pentagon_count_vertex_formula(t)
        assert c == n - 6 + ear_count(t)
        assert c >= n - 4


def test_pentagon_vertex_oracle_examples():
    g5 = build_associahedron(5)
    assert all(pentagon_count_vertex_oracle(g5, v) == 1 for v in range(5))
    c6 = cycle_graph(6)
    assert all(pentagon_count_vertex_oracle(c6, v) == 0 for v in range(6))
    p = petersen_graph()
    assert all(pentagon_count_vertex_oracle(p, v) == 6 for v in range(10))


def test_petersen_five_cycles_against_subset_enumeration():
    # independent count: 5-subsets of vertices carrying a spanning cycle
    p = petersen_graph()
    adj = p.adjacency_sets()

    def subset_has_c5(subset):
        # on 5 vertices a 2-regular spanning subgraph is exactly a 5-cycle
        inner = {v: adj[v] & set(subset) for v in subset}
        return all(len(nb) == 2 for nb in inner.values())

    total = sum(1 for subset in combinations(range(10), 5) if subset_has_c5(subset))
    assert total == 12
    assert count_pentagons_total(p) == 12


@pytest.mark.parametrize("n", range(5, 9))
def test_pentagon_vertex_formula_matches_oracle(n):
    g = build_associahedron(n)
    ts = enumerate_triangulations(n)
    for i, t in enumerate(ts):
        assert pentagon_count_vertex_formula(t) == pentagon_count_vertex_oracle(g, i)


def test_pentagon_edge_examples():
    ts5 = enumerate_triangulations(5)
    g5 = build_associahedron(5)
    for u, v in g5.edges():
        assert pentagon_count_edge(ts5[u], ts5[v]) == 1
    # hexagon edge between the two triangulations sharing (1,3) and (1,5)
    t1 = Triangulation(6, ((1, 3), (1, 4), (1, 5)))
    t2 = Triangulation(6, ((1, 3), (3, 5), (1, 5)))
    assert pentagon_count_edge(t1, t2) == 2


@pytest.mark.parametrize("n", range(5, 9))
def test_pentagon_edge_formula_matches_oracle(n):
    g = build_associahedron(n)
    ts = enumerate_triangulations(n)
    for u, v in g.edges():
        c = pentagon_count_edge(ts[u], ts[v])
        assert 1 <= c <= 4
        assert c == pentagon_count_edge_oracle(g, u, v)


def test_pentagon_edge_rejects_non_adjacent():
    ts = enumerate_triangulations(6)
    t1 = Triangulation(6, ((1, 3), (1, 4), (1, 5)))
    t2 = Triangulation(6, ((2, 4), (2, 5), (2, 6)))
    with pytest.raises(InvalidInputError):
        pentagon_count_edge(t1, t2)


@pytest.mark.parametrize("n", range(5, 9))
def test_pentagon_aggregation_identity(n):
    # every 5-cycle is counted once per each of its 5 vertices
    g = build_associahedron(n)
    ts = enumerate_triangulations(n)
    total = count_pentagons_total(g)
    assert sum(pentagon_count_vertex_formula(t) for t in ts) == 5 * total


def test_hexagon_vertex_formula_examples():
    for t in enumerate_triangulations(6):
        assert sum(hexagon_count_vertex_formula(t)) == 1
    assert hexagon_count_vertex_formula(fan_triangulation(7)) == (2, 0)
    # a path dual tree realizes the minimum n - 5
    snake8 = next(t for t in enumerate_triangulations(8) if ear_count(t) == 2)
    assert sum(hexagon_count_vertex_formula(snake8)) == 3


def test_hexagon_vertex_oracle_examples():
    for t in enumerate_triangulations(6):
        assert hexagon_count_vertex_oracle(6, t) == 1
    assert hexagon_count_vertex_oracle(7, fan_triangulation(7)) == 2


def test_hexagon_vertex_oracle_checks_n():
    with pytest.raises(InvalidInputError):
        hexagon_count_vertex_oracle(7, fan_triangulation(8))


@pytest.mark.parametrize("n", range(6, 9))
def test_hexagon_vertex_formula_matches_oracle(n):
    for t in enumerate_triangulations(n):
        p4, star = hexagon_count_vertex_formula(t)
        total = p4 + star
        assert total == hexagon_count_vertex_oracle(n, t)
        assert total >= n - 5


def test_hexagon_edge_single_class_n6():
    ts = enumerate_triangulations(6)
    g = build_associahedron(6)
    for u, v in g.edges():
        assert hexagon_count_edge_bounds(ts[u], ts[v]) == 1


@pytest.mark.parametrize("n", range(6, 9))
def test_hexagon_edge_matches_support_oracle(n):
    ts = enumerate_triangulations(n)
    g = build_associahedron(n)
    per_vertex, per_edge = hexagon_census_oracle(n)
    for u, v in g.edges():
        c = hexagon_count_edge_bounds(ts[u], ts[v])
        assert 1 <= c <= 14
        assert c == per_edge[(u, v)]
    for i, t in enumerate(ts):
        assert sum(hexagon_count_vertex_formula(t)) == per_vertex[i]


def test_hexagon_supports_counts():
    assert hexagon_supports(6) == [()]
    # heptagon: one support per ear-cutting diagonal
    assert len(hexagon_supports(7)) == 7


def test_census_reports():
    rep = pentagon_census(6, oracle=True)
    assert rep.per_vertex == rep.oracle_per_vertex
    assert rep.per_edge == rep.oracle_per_edge
    assert rep.vertex_min == 2 and rep.vertex_max == 3
    hexa = hexagon_census(6, oracle=True)
    assert hexa.per_vertex == (1,) * 14
    assert hexa.edge_min == hexa.edge_max == 1


def test_oracle_capacity():
    g = build_associahedron(6)
    with pytest.raises(CapacityError):
        pentagon_count_vertex_oracle(g, 0, limit=5)
