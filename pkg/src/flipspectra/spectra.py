"""Extreme adjacency eigenvalues: dense at small scale, Lanczos beyond.

The iterative path is a restarted Lanczos iteration with full
reorthogonalization.  For the smallest eigenvalue it runs on the positive
semidefinite shift d*I - A (d the uniform degree), for the second-largest
it runs on A with the constant Perron eigenvector projected out, which is
exact for connected regular graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import CapacityError, ConvergenceError, InvalidInputError
from .flipgraph import Graph, is_connected

DENSE_LIMIT_DEFAULT = 5000
LANCZOS_BASIS_CAP = 350


@dataclass(frozen=True)
class SpectralResult:
    value: float
    residual: float  # ||A x - value * x||_2 with ||x||_2 = 1
    method: str      # "dense" or "iterative"
    iterations: int
    tolerance: float


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues, sorted descending; multiplicities by repetition."""

    eigenvalues: np.ndarray

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_2(self) -> float:
        if len(self.eigenvalues) < 2:
            raise InvalidInputError("second eigenvalue undefined on a single vertex")
        return float(self.eigenvalues[1])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1])


def matvec(g: Graph, x: np.ndarray) -> np.ndarray:
    """y = A x streamed over the compressed adjacency."""
    x = np.asarray(x, dtype=float)
    if len(g.neighbors) == 0:
        return np.zeros(g.vertex_count)
    deg = np.diff(g.offsets)
    if deg.min() > 0:
        return np.add.reduceat(x[g.neighbors], g.offsets[:-1])
    src = np.repeat(np.arange(g.vertex_count), deg)
    return np.bincount(src, weights=x[g.neighbors], minlength=g.vertex_count)


def dense_spectrum(g: Graph, limit: int | None = None) -> Spectrum:
    """Full symmetric eigendecomposition of the adjacency matrix."""
    cap = DENSE_LIMIT_DEFAULT if limit is None else limit
    if g.vertex_count > cap:
        raise CapacityError(f"dense spectrum limited to {cap} vertices")
    vals = np.linalg.eigvalsh(g.dense_adjacency())
    return Spectrum(vals[::-1].copy())


def _top_tridiag(alphas: list[float], betas: list[float]) -> tuple[float, np.ndarray]:
    k = len(alphas)
    if k == 1:
        return alphas[0], np.ones(1)
    vals, vecs = scipy.linalg.eigh_tridiagonal(
        np.asarray(alphas), np.asarray(betas), select="i", select_range=(k - 1, k - 1)
    )
    return float(vals[0]), vecs[:, 0]


def _lanczos_largest(op, nv, rng, tol, max_iterations, basis_cap=LANCZOS_BASIS_CAP, project=None):
    """Largest eigenvalue of a symmetric operator given by ``op``.

    Full reorthogonalization against the stored basis; when the basis hits
    its cap the iteration restarts from the best Ritz vector.  Returns
    (value, vector, iterations, residual) or raises ConvergenceError with
    the best pair found.
    """

    def prep(v):
        if project is not None:
            v = project(v)
        nrm = np.linalg.norm(v)
        if nrm == 0.0:
            raise InvalidInputError("start vector vanished under projection")
        return v / nrm

    v0 = prep(rng.standard_normal(nv))
    total = 0
    best = None  # (value, vector, residual)

    while total < max_iterations:
        cap = min(basis_cap, nv, max_iterations - total)
        basis = np.empty((cap, nv))
        alphas: list[float] = []
        betas: list[float] = []
        q = v0
        q_prev = None
        beta_prev = 0.0
        restart_vec = None
        for j in range(cap):
            basis[j] = q
            w = op(q)
            if project is not None:
                w = project(w)
            a = float(q @ w)
            alphas.append(a)
            w = w - a * q
            if q_prev is not None:
                w = w - beta_prev * q_prev
            # full reorthogonalization, applied twice for 1e-9 residuals
            w -= basis[: j + 1].T @ (basis[: j + 1] @ w)
            w -= basis[: j + 1].T @ (basis[: j + 1] @ w)
            b = float(np.linalg.norm(w))
            total += 1

            theta, s = _top_tridiag(alphas, betas)
            estimate = abs(b * s[-1])
            at_end = j == cap - 1 or total >= max_iterations
            if estimate <= tol or b <= 1e-13 or at_end:
                x = basis[: j + 1].T @ s
                if project is not None:
                    x = project(x)
                x /= np.linalg.norm(x)
                r = op(x)
                if project is not None:
                    r = project(r)
                value = float(x @ r)
                residual = float(np.linalg.norm(r - value * x))
                if best is None or residual < best[2]:
                    best = (value, x, residual)
                if residual <= tol:
                    return value, x, total, residual
                if b <= 1e-13:
                    # invariant subspace exhausted without reaching tol
                    restart_vec = prep(rng.standard_normal(nv))
                    break
                if at_end:
                    restart_vec = x
                    break
            betas.append(b)
            q_prev, beta_prev = q, b
            q = w / b
        v0 = restart_vec if restart_vec is not None else prep(rng.standard_normal(nv))

    value, x, residual = best
    raise ConvergenceError(
        f"no convergence to {tol:g} within {max_iterations} iterations "
        f"(best residual {residual:.3e})",
        best=SpectralResult(value, residual, "iterative", total, tol),
    )


def _dense_extreme(g: Graph, index: int, tol: float) -> SpectralResult:
    a = g.dense_adjacency()
    vals, vecs = scipy.linalg.eigh(a, subset_by_index=[index, index])
    value = float(vals[0])
    x = vecs[:, 0]
    residual = float(np.linalg.norm(a @ x - value * x))
    return SpectralResult(value, residual, "dense", 0, tol)


def _choose_method(g: Graph, method: str, dense_limit: int | None) -> str:
    cap = DENSE_LIMIT_DEFAULT if dense_limit is None else dense_limit
    if method == "auto":
        return "dense" if g.vertex_count <= cap else "iterative"
    if method == "dense" and g.vertex_count > cap:
        raise CapacityError(f"dense solver limited to {cap} vertices")
    if method not in ("dense", "iterative"):
        raise InvalidInputError(f"unknown method {method!r}")
    return method


def lambda_min(
    g: Graph,
    tol: float = 1e-9,
    method: str = "auto",
    seed: int = 0,
    max_iterations: int = 5000,
    dense_limit: int | None = None,
) -> SpectralResult:
    """Smallest adjacency eigenvalue.

    The iterative path requires a regular graph: it maximizes over the
    Krylov space of the shift d*I - A and returns d minus the result.
    """
    if g.vertex_count == 0:
        raise InvalidInputError("empty graph")
    chosen = _choose_method(g, method, dense_limit)
    if chosen == "dense":
        return _dense_extreme(g, 0, tol)
    d = g.degree
    if d is None:
        raise InvalidInputError("iterative path requires a regular graph")
    rng = np.random.default_rng(seed)
    op = lambda x: d * x - matvec(g, x)
    theta, _, iters, residual = _lanczos_largest(op, g.vertex_count, rng, tol, max_iterations)
    return SpectralResult(d - theta, residual, "iterative", iters, tol)


def lambda_2(
    g: Graph,
    tol: float = 1e-9,
    method: str = "auto",
    seed: int = 0,
    max_iterations: int = 5000,
    dense_limit: int | None = None,
) -> SpectralResult:
    """Second-largest adjacency eigenvalue of a connected graph.

    The iterative path deflates the constant Perron eigenvector (exact for
    regular graphs) and maximizes over its orthogonal complement.
    """
    if g.vertex_count < 2:
        raise InvalidInputError("second eigenvalue undefined on fewer than 2 vertices")
    if not is_connected(g):
        raise InvalidInputError("graph must be connected")
    chosen = _choose_method(g, method, dense_limit)
    if chosen == "dense":
        return _dense_extreme(g, g.vertex_count - 2, tol)
    if g.degree is None:
        raise InvalidInputError("iterative path requires a regular graph")
    rng = np.random.default_rng(seed)
    project = lambda v: v - v.mean()
    op = lambda x: matvec(g, x)
    value, _, iters, residual = _lanczos_largest(
        op, g.vertex_count, rng, tol, max_iterations, project=project
    )
    return SpectralResult(value, residual, "iterative", iters, tol)


def cycle_spectrum(m: int) -> Spectrum:
    """Spectrum of the m-cycle: {2 cos(2 pi j / m)}.

    For odd m = 2r+1 the smallest value satisfies
    2 + lambda_min = 4 sin^2(pi / (4r+2)).
    """
    if m < 3:
        raise InvalidInputError("cycle needs at least 3 vertices")
    vals = 2.0 * np.cos(2.0 * np.pi * np.arange(m) / m)
    return Spectrum(np.sort(vals)[::-1].copy())


def quadratic_form_check(k_graph: Graph, x: np.ndarray) -> tuple[float, float]:
    """Evaluate both sides of sum_{ij in E} (x_i + x_j)^2 >= (k + lambda_min) ||x||^2.

    Returns (lhs, rhs); the contract is lhs >= rhs up to roundoff for any
    real vector on a k-regular graph.
    """
    x = np.asarray(x, dtype=float)
    if len(x) != k_graph.vertex_count:
        raise InvalidInputError(
            f"vector length {len(x)} != vertex count {k_graph.vertex_count}"
        )
    k = k_graph.degree
    if k is None:
        raise InvalidInputError("quadratic form check requires a regular graph")
    lam = dense_spectrum(k_graph).lambda_min
    src = np.repeat(np.arange(k_graph.vertex_count), np.diff(k_graph.offsets))
    lhs = float(((x[src] + x[k_graph.neighbors]) ** 2).sum() / 2.0)
    rhs = float((k + lam) * (x @ x))
    return lhs, rhs


def box_spectrum_min(a: float, b: float) -> float:
    """Smallest eigenvalue of a box product from those of its factors."""
    return a + b
