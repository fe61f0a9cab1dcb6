import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flipspectra.errors import CapacityError, ConvergenceError, InvalidInputError
from flipspectra.flipgraph import (
    build_associahedron,
    box_product,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    path_graph,
    petersen_graph,
    single_vertex,
)
from flipspectra.reference import A6_SPECTRUM_CORRECTED
from flipspectra.spectra import (
    box_spectrum_min,
    cycle_spectrum,
    dense_spectrum,
    lambda_2,
    lambda_min,
    matvec,
    quadratic_form_check,
)


def test_dense_spectrum_small_graphs():
    assert np.allclose(dense_spectrum(complete_graph(2)).eigenvalues, [1.0, -1.0])
    c5 = dense_spectrum(cycle_graph(5)).eigenvalues
    assert np.allclose(c5, cycle_spectrum(5).eigenvalues, atol=1e-12)


def test_a6_spectrum_closed_forms():
    # the 14-vertex flip graph: 3, 2^2, sqrt3, (sqrt2-1)^3, 0^2, -1, -sqrt3, (-1-sqrt2)^3
    vals = dense_spectrum(build_associahedron(6)).eigenvalues
    assert np.allclose(vals, A6_SPECTRUM_CORRECTED, atol=1e-9)


@pytest.mark.parametrize("n", range(4, 9))
def test_trace_and_frobenius_identities(n):
    g = build_associahedron(n)
    vals = dense_spectrum(g).eigenvalues
    assert abs(vals.sum()) < 1e-8
    assert abs((vals**2).sum() - 2 * g.edge_count) < 1e-8


def test_matvec_matches_dense():
    g = petersen_graph()
    rng = np.random.default_rng(3)
    x = rng.standard_normal(10)
    assert np.allclose(matvec(g, x), g.dense_adjacency() @ x)


@pytest.mark.parametrize("n", range(5, 11))
def test_dense_and_iterative_agree(n, assoc):
    g = assoc(n)
    dm = lambda_min(g, method="dense")
    im = lambda_min(g, method="iterative")
    assert abs(dm.value - im.value) < 1e-6
    assert im.residual <= 1e-9
    d2 = lambda_2(g, method="dense")
    i2 = lambda_2(g, method="iterative")
    assert abs(d2.value - i2.value) < 1e-6
    assert i2.residual <= 1e-9


def test_lambda_min_is_strictly_decreasing(lambda_min_values):
    vals = [lambda_min_values[n] for n in range(4, 13)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_cycle_spectrum_triangle():
    assert np.allclose(cycle_spectrum(3).eigenvalues, [2.0, -1.0, -1.0])


@given(st.integers(1, 20))
def test_cycle_spectrum_odd_minimum_identity(r):
    m = 2 * r + 1
    spec = cycle_spectrum(m)
    assert abs(2.0 + spec.lambda_min - 4.0 * math.sin(math.pi / (4 * r + 2)) ** 2) < 1e-12


def test_cycle_spectrum_pentagon_value():
    spec = cycle_spectrum(5)
    assert abs(spec.lambda_min + 2 * math.cos(math.pi / 5)) < 1e-12
    assert abs(2.0 + spec.lambda_min - 0.3819660112501051) < 1e-12


def test_quadratic_form_examples():
    c5 = cycle_graph(5)
    lhs, rhs = quadratic_form_check(c5, np.ones(5))
    assert abs(lhs - 20.0) < 1e-12
    assert abs(rhs - (2.0 + dense_spectrum(c5).lambda_min) * 5.0) < 1e-12
    lhs, rhs = quadratic_form_check(c5, np.zeros(5))
    assert lhs == rhs == 0.0
    # equality at the minimizer
    a = c5.dense_adjacency()
    _, vecs = np.linalg.eigh(a)
    lhs, rhs = quadratic_form_check(c5, vecs[:, 0])
    assert abs(lhs - rhs) < 1e-8


def test_quadratic_form_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        quadratic_form_check(cycle_graph(5), np.ones(4))


@pytest.mark.parametrize(
    "make", [lambda: cycle_graph(5), lambda: cycle_graph(7), petersen_graph, lambda: build_associahedron(6)]
)
def test_quadratic_form_inequality_random_vectors(make):
    g = make()
    rng = np.random.default_rng(11)
    xs = rng.standard_normal((1000, g.vertex_count))
    k = g.degree
    lam = dense_spectrum(g).lambda_min
    src = np.repeat(np.arange(g.vertex_count), np.diff(g.offsets))
    lhs = ((xs[:, src] + xs[:, g.neighbors]) ** 2).sum(axis=1) / 2.0
    rhs = (k + lam) * (xs**2).sum(axis=1)
    assert (lhs >= rhs - 1e-9).all()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-10, 10), min_size=5, max_size=5))
def test_quadratic_form_inequality_hypothesis(x):
    lhs, rhs = quadratic_form_check(cycle_graph(5), np.asarray(x))
    assert lhs >= rhs - 1e-9


def test_box_spectrum_min():
    assert box_spectrum_min(-1.0, -1.0) == -2.0
    g = box_product(build_associahedron(4), build_associahedron(6))
    direct = dense_spectrum(g).lambda_min
    parts = (
        dense_spectrum(build_associahedron(4)).lambda_min
        + dense_spectrum(build_associahedron(6)).lambda_min
    )
    assert abs(direct - parts) < 1e-9


def test_box_spectrum_min_a5_squared():
    g = box_product(build_associahedron(5), build_associahedron(5))
    assert abs(dense_spectrum(g).lambda_min - (-3.236)) < 1e-3


def test_interlacing_on_induced_subgraphs(assoc):
    g = assoc(8)
    base = dense_spectrum(g).lambda_min
    rng = np.random.default_rng(5)
    for _ in range(20):
        size = int(rng.integers(2, g.vertex_count))
        keep = rng.choice(g.vertex_count, size=size, replace=False)
        sub, _ = induced_subgraph(g, keep)
        assert dense_spectrum(sub).lambda_min >= base - 1e-9


def test_single_vertex_cases():
    assert lambda_min(single_vertex()).value == 0.0
    with pytest.raises(InvalidInputError):
        lambda_2(single_vertex())


def test_iterative_requires_regular():
    with pytest.raises(InvalidInputError):
        lambda_min(path_graph(4), method="iterative")


def test_lambda_2_requires_connected():
    from flipspectra.flipgraph import from_edges

    g = from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidInputError):
        lambda_2(g)


def test_dense_capacity():
    with pytest.raises(CapacityError):
        dense_spectrum(build_associahedron(8), limit=100)
    with pytest.raises(CapacityError):
        lambda_min(build_associahedron(8), method="dense", dense_limit=100)


def test_convergence_error_carries_best():
    g = build_associahedron(8)
    with pytest.raises(ConvergenceError) as err:
        lambda_min(g, method="iterative", max_iterations=3)
    best = err.value.best
    assert best is not None
    assert best.method == "iterative"
    assert best.residual > 1e-9


def test_iterative_seed_determinism():
    g = build_associahedron(8)
    a = lambda_min(g, method="iterative", seed=42)
    b = lambda_min(g, method="iterative", seed=42)
    assert a == b
