import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flipspectra.errors import CapacityError, InvalidInputError, RangeError
from flipspectra.flipgraph import (
    box_product,
    build_associahedron,
    complete_graph,
    contains_triangle,
    cycle_graph,
    diagonal_slice,
    from_edges,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    path_graph,
    petersen_graph,
    random_regular_graph,
    single_vertex,
    validate_regular,
    write_edge_list,
)
from flipspectra.triangulations import catalan


def test_small_flip_graphs():
    g4 = build_associahedron(4)
    assert g4.vertex_count == 2 and g4.edge_count == 1 and g4.degree == 1
    g5 = build_associahedron(5)
    assert is_isomorphic(g5, cycle_graph(5))
    g6 = build_associahedron(6)
    assert g6.vertex_count == 14 and g6.degree == 3


def test_single_vertex_flip_graph():
    g3 = build_associahedron(3)
    assert g3.vertex_count == 1 and g3.edge_count == 0


@pytest.mark.parametrize("n", range(4, 10))
def test_flip_graph_structure(n):
    g = build_associahedron(n)
    assert g.vertex_count == catalan(n - 2)
    assert validate_regular(g, n - 3)
    assert is_connected(g)
    assert g.edge_count == catalan(n - 2) * (n - 3) // 2
    assert not contains_triangle(g)


def test_flip_graph_structure_at_scale(assoc):
    # regularity, connectivity and the edge count through n = 12;
    # triangle-freeness through n = 10
    for n in (10, 11, 12):
        g = assoc(n)
        assert validate_regular(g, n - 3)
        assert is_connected(g)
        assert g.edge_count == catalan(n - 2) * (n - 3) // 2
    assert not contains_triangle(assoc(10))


def test_flip_graph_labels_follow_enumeration():
    g = build_associahedron(5)
    assert g.labels[0] == "1-3,1-4"
    assert len(set(g.labels)) == 5


def test_range_errors():
    with pytest.raises(RangeError):
        build_associahedron(2)
    with pytest.raises(RangeError):
        build_associahedron(15)


def test_box_product_examples():
    k2 = complete_graph(2)
    assert is_isomorphic(box_product(k2, k2), cycle_graph(4))
    prism = box_product(cycle_graph(5), k2)
    assert prism.vertex_count == 10 and prism.degree == 3
    assert is_isomorphic(box_product(cycle_graph(5), single_vertex()), cycle_graph(5))


@settings(max_examples=30)
@given(st.integers(1, 6), st.integers(1, 6))
def test_box_product_vertex_count(a, b):
    g = path_graph(a)
    h = path_graph(b)
    assert box_product(g, h).vertex_count == a * b


def test_box_product_capacity():
    with pytest.raises(CapacityError):
        box_product(cycle_graph(100), cycle_graph(100), max_vertices=5000)


def test_induced_subgraph():
    g = build_associahedron(6)
    full, kept = induced_subgraph(g, range(14))
    assert full.edge_count == g.edge_count and kept == tuple(range(14))
    solo, _ = induced_subgraph(g, [3])
    assert solo.vertex_count == 1 and solo.edge_count == 0
    with pytest.raises(InvalidInputError):
        induced_subgraph(g, [0, 99])


def test_a6_slice_on_diagonal_13():
    # triangulations of the hexagon containing (1,3): catalan(1)*catalan(3) = 5
    slc = diagonal_slice(6, (1, 3))
    assert slc.vertex_count == 5
    assert is_isomorphic(slc, cycle_graph(5))


def test_slice_is_box_product():
    slc = diagonal_slice(8, (1, 4))
    prod = box_product(build_associahedron(4), build_associahedron(6))
    assert is_isomorphic(slc, prod)


@pytest.mark.parametrize("n", range(4, 10))
def test_slice_vertex_counts(n):
    for k in range(3, n):
        slc = diagonal_slice(n, (1, k))
        assert slc.vertex_count == catalan(k - 2) * catalan(n - k)


def test_isomorphism_negatives():
    assert not is_isomorphic(cycle_graph(5), path_graph(5))
    # same degree sequence, different structure: C6 vs two triangles
    two_triangles = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert not is_isomorphic(cycle_graph(5), cycle_graph(6))


def test_isomorphism_capacity():
    with pytest.raises(CapacityError):
        is_isomorphic(cycle_graph(20), cycle_graph(20), size_limit=10)


def test_petersen():
    p = petersen_graph()
    assert p.vertex_count == 10 and p.degree == 3
    assert not contains_triangle(p)
    assert is_connected(p)


def test_validate_regular():
    assert validate_regular(cycle_graph(5), 2)
    assert not validate_regular(complete_graph(2), 3)
    assert not validate_regular(path_graph(3), 1)


def test_random_regular_graph():
    g1 = random_regular_graph(20, 3, seed=1)
    assert validate_regular(g1, 3)
    g2 = random_regular_graph(20, 3, seed=1)
    assert (g1.neighbors == g2.neighbors).all()
    with pytest.raises(InvalidInputError):
        random_regular_graph(5, 3, seed=0)  # odd stub count


def test_loops_rejected():
    with pytest.raises(InvalidInputError):
        from_edges(3, [(0, 0)])


def test_edge_list_export():
    buf = io.StringIO()
    write_edge_list(build_associahedron(4), buf)
    assert buf.getvalue() == "# vertices=2 degree=1\n0 1\n"
