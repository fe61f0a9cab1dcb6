"""Random walks on flip graphs and Dirichlet-quotient gap bounds.

The walk picks a uniform random neighbor at each step; on a connected
regular graph its stationary distribution is uniform.  Gap bounds come
from exact edge summation of the Dirichlet form of a test function, never
from sampling, so scaling checks are noise free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .flipgraph import Graph, build_associahedron, is_connected
from .spectra import lambda_2
from .triangulations import Triangulation, dual_tree, enumerate_triangulations


@dataclass(frozen=True)
class WalkConfig:
    steps: int
    seed: int = 0
    start: int | None = None  # None draws the start uniformly at random


@dataclass(frozen=True)
class WalkSummary:
    steps: int
    seed: int
    start: int
    counts: tuple[int, ...]  # visits per vertex, including the start state
    return_count: int        # visits to the start after step 0


def simulate_walk(g: Graph, cfg: WalkConfig) -> WalkSummary:
    """Run the uniform-neighbor walk; fully determined by the seed."""
    if cfg.steps < 0:
        raise InvalidInputError("steps must be nonnegative")
    if not is_connected(g):
        raise InvalidInputError("walk requires a connected graph")
    d = g.degree
    if d is None:
        raise InvalidInputError("walk requires a regular graph")
    if d == 0 and cfg.steps > 0:
        raise InvalidInputError("cannot step on an edgeless graph")
    rng = np.random.default_rng(cfg.seed)
    if cfg.start is None:
        start = int(rng.integers(g.vertex_count))
    else:
        start = int(cfg.start)
        if not 0 <= start < g.vertex_count:
            raise InvalidInputError(f"start {start} outside 0..{g.vertex_count - 1}")
    counts = np.zeros(g.vertex_count, dtype=np.int64)
    counts[start] += 1
    returns = 0
    if cfg.steps > 0:
        picks = rng.integers(0, d, size=cfg.steps)
        offsets, nbrs = g.offsets, g.neighbors
        cur = start
        for p in picks:
            cur = int(nbrs[offsets[cur] + p])
            counts[cur] += 1
            if cur == start:
                returns += 1
    return WalkSummary(cfg.steps, cfg.seed, start, tuple(int(c) for c in counts), returns)


@dataclass(frozen=True)
class TestFunctionReport:
    """Exact Dirichlet data of a test function under the uniform walk.

    dirichlet = E[(f(X1) - f(X0))^2] with X0 uniform and X1 a uniform
    neighbor; quotient = dirichlet / Var(f); gap_upper = quotient / 2 is an
    upper bound on the spectral gap 1 - lambda_2/d of the walk, with
    equality when f is a second eigenvector.
    """

    dirichlet: float
    variance: float
    quotient: float
    gap_upper: float


def dirichlet_quotient(g: Graph, f: np.ndarray) -> TestFunctionReport:
    """Exact Dirichlet quotient of f, by summation over all directed edges."""
    f = np.asarray(f, dtype=float)
    if len(f) != g.vertex_count:
        raise InvalidInputError(
            f"function length {len(f)} != vertex count {g.vertex_count}"
        )
    d = g.degree
    if d is None or d == 0:
        raise InvalidInputError("requires a regular graph with positive degree")
    if bool(np.all(f == f[0])):
        raise InvalidInputError("test function must be non-constant")
    src = np.repeat(np.arange(g.vertex_count), np.diff(g.offsets))
    diffs = f[src] - f[g.neighbors]
    dirichlet = float((diffs**2).sum() / (g.vertex_count * d))
    variance = float(f.var())
    quotient = dirichlet / variance
    return TestFunctionReport(dirichlet, variance, quotient, quotient / 2.0)


def central_triangle(t: Triangulation) -> tuple[int, int, int]:
    """Triangle at a centroid of the dual tree.

    A centroid node leaves components of at most (n-2)/2 nodes when
    removed; ties break toward the lexicographically smallest triple.
    """
    dt = dual_tree(t)
    nn = dt.node_count
    if nn == 1:
        return dt.triangles[0]
    adj = [[] for _ in range(nn)]
    for i, j in dt.adjacency:
        adj[i].append(j)
        adj[j].append(i)
    parent = [-1] * nn
    order = []
    stack = [0]
    seen = [False] * nn
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    size = [1] * nn
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best_val = None
    best_tri = None
    for v in range(nn):
        worst = nn - size[v]
        for u in adj[v]:
            if u != parent[v]:
                worst = max(worst, size[u])
        key = (worst, dt.triangles[v])
        if best_val is None or key < best_val:
            best_val = key
            best_tri = dt.triangles[v]
    return best_tri


def aldous_test_function(n: int, max_n: int | None = None) -> np.ndarray:
    """Distance from the central triangle to a fixed boundary point.

    For each triangulation, the minimum cyclic distance between a vertex
    of its central triangle and polygon vertex floor(n/4).  Indexed in the
    canonical enumeration order of the flip graph.
    """
    if n < 6:
        raise InvalidInputError("test function needs n >= 6")
    ts = enumerate_triangulations(n, max_n)
    p = n // 4
    values = np.empty(len(ts))
    for i, t in enumerate(ts):
        tri_v = central_triangle(t)
        values[i] = min(min(abs(a - p), n - abs(a - p)) for a in tri_v)
    return values


def gap_scan(n_values, tol: float = 1e-9, seed: int = 0) -> list[tuple[int, float, float]]:
    """Rows (n, lambda_2, (n-3-lambda_2) * sqrt(n)) for each requested n.

    The last column is the empirical constant in the gap lower bound
    lambda_2 >= (n-3) - c/sqrt(n).
    """
    rows = []
    for n in n_values:
        g = build_associahedron(n)
        lam2 = lambda_2(g, tol=tol, seed=seed).value
        rows.append((n, lam2, (n - 3 - lam2) * math.sqrt(n)))
    return rows
