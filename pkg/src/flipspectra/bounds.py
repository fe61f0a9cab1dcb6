"""Closed-form eigenvalue bounds and their certification.

The central inequality: if a d-regular graph G carries a collection of
copies of a k-regular graph K covering every vertex at least m times and
every edge at most t times, then

    d + lambda_min(G) >= (k + lambda_min(K)) * m / t.

Specializing K to an odd cycle C_{2r+1} turns the constant into
4 sin^2(pi / (4r+2)).  The module evaluates these and the derived
closed-form bounds for flip graphs, plus the mixing-time sandwich and the
chromatic lower bound, and certifies each against exact spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import CapacityError, InvalidInputError
from .flipgraph import Graph
from .reference import (
    CHROMATIC_NUMBER_KNOWN,
    LAMBDA_MIN_TABLE,
    LIMIT_LOWER_CONSTANT,
    LIMIT_UPPER_CONSTANT,
)
from .spectra import dense_spectrum
from .triangulations import catalan

COLLECTION_HOST_LIMIT = 5000
COLLECTION_PATTERN_LIMIT = 12


@dataclass(frozen=True)
class CollectionStats:
    """Incidence statistics of all copies of a pattern graph inside a host.

    m is the minimum, over host vertices, of copies containing the vertex;
    t is the maximum, over host edges, of copies containing the edge.
    """

    m: int
    t: int
    per_vertex: tuple[int, ...]
    per_edge: dict[tuple[int, int], int]
    copy_count: int


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    bound_value: float
    exact_value: float | None
    satisfied: bool | None
    parameters: dict = field(default_factory=dict)


def _pattern_order(adj: list[set[int]]) -> list[int]:
    """Connected expansion order of the pattern, highest degree first."""
    nk = len(adj)
    start = max(range(nk), key=lambda v: (len(adj[v]), -v))
    order = [start]
    placed = {start}
    while len(order) < nk:
        frontier = [
            v for v in range(nk) if v not in placed and adj[v] & placed
        ]
        if not frontier:
            raise InvalidInputError("pattern graph must be connected")
        nxt = max(frontier, key=lambda v: (len(adj[v] & placed), len(adj[v]), -v))
        order.append(nxt)
        placed.add(nxt)
    return order


def collection_stats(
    g: Graph,
    pattern: Graph,
    host_limit: int | None = None,
    pattern_limit: int | None = None,
) -> CollectionStats:
    """Statistics of the maximal collection: all subgraphs isomorphic to the pattern.

    Copies are counted as subgraphs (a vertex set with the required edges
    present), deduplicated over the pattern's automorphisms by keying each
    embedding on its mapped edge set.
    """
    host_cap = COLLECTION_HOST_LIMIT if host_limit is None else host_limit
    pat_cap = COLLECTION_PATTERN_LIMIT if pattern_limit is None else pattern_limit
    if g.vertex_count > host_cap:
        raise CapacityError(f"collection search limited to hosts with {host_cap} vertices")
    if pattern.vertex_count > pat_cap:
        raise CapacityError(f"collection search limited to patterns with {pat_cap} vertices")

    adj_g = g.adjacency_sets()
    adj_k = pattern.adjacency_sets()
    deg_g = [len(a) for a in adj_g]
    order = _pattern_order(adj_k)
    pos_in_order = {v: i for i, v in enumerate(order)}
    # pattern neighbors already placed when each position is reached
    back_edges = [
        [pos_in_order[u] for u in adj_k[order[i]] if pos_in_order[u] < i]
        for i in range(len(order))
    ]
    k_edges = [(u, v) for u in range(pattern.vertex_count) for v in adj_k[u] if u < v]

    copies: set[tuple[tuple[int, int], ...]] = set()
    mapping = [-1] * pattern.vertex_count
    used = [False] * g.vertex_count

    def extend(i: int) -> None:
        if i == len(order):
            mapped = tuple(
                sorted(
                    (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                    for u, v in k_edges
                )
            )
            copies.add(mapped)
            return
        kv = order[i]
        need = len(adj_k[kv])
        if back_edges[i]:
            cands = set(adj_g[mapping[order[back_edges[i][0]]]])
            for b in back_edges[i][1:]:
                cands &= adj_g[mapping[order[b]]]
        else:
            cands = range(g.vertex_count)
        for hv in cands:
            if used[hv] or deg_g[hv] < need:
                continue
            mapping[kv] = hv
            used[hv] = True
            extend(i + 1)
            mapping[kv] = -1
            used[hv] = False

    extend(0)

    per_vertex = [0] * g.vertex_count
    per_edge: dict[tuple[int, int], int] = {}
    for copy_edges in copies:
        verts = set()
        for u, v in copy_edges:
            verts.add(u)
            verts.add(v)
            per_edge[(u, v)] = per_edge.get((u, v), 0) + 1
        for w in verts:
            per_vertex[w] += 1
    m = min(per_vertex) if per_vertex else 0
    t = max(per_edge.values()) if per_edge else 0
    return CollectionStats(m, t, tuple(per_vertex), per_edge, len(copies))


def collection_stats_from_copies(
    g: Graph, pattern: Graph, copies: Iterable[Iterable[int]]
) -> CollectionStats:
    """Incidence statistics of a user-supplied (possibly non-maximal) collection.

    Each copy lists the host-vertex images of the pattern vertices, in
    pattern vertex order; every pattern edge must map to a host edge.
    Copies describing the same subgraph collapse to one.
    """
    adj = g.adjacency_sets()
    pattern_edges = list(pattern.edges())
    per_vertex = [0] * g.vertex_count
    per_edge: dict[tuple[int, int], int] = {}
    seen: set[tuple[tuple[int, int], ...]] = set()
    for copy in copies:
        copy = [int(v) for v in copy]
        if len(copy) != pattern.vertex_count:
            raise InvalidInputError(
                f"copy {copy} has {len(copy)} vertices, pattern has {pattern.vertex_count}"
            )
        if len(set(copy)) != len(copy):
            raise InvalidInputError(f"copy {copy} repeats a vertex")
        if any(not 0 <= v < g.vertex_count for v in copy):
            raise InvalidInputError(f"copy {copy} leaves the host vertex range")
        edges = []
        for u, v in pattern_edges:
            gu, gv = copy[u], copy[v]
            if gv not in adj[gu]:
                raise InvalidInputError(
                    f"copy {copy} maps pattern edge ({u},{v}) to the non-edge ({gu},{gv})"
                )
            edges.append((min(gu, gv), max(gu, gv)))
        key = tuple(sorted(edges))
        if key in seen:
            continue
        seen.add(key)
        for w in set(copy):
            per_vertex[w] += 1
        for e in edges:
            per_edge[e] = per_edge.get(e, 0) + 1
    m = min(per_vertex) if per_vertex else 0
    t = max(per_edge.values()) if per_edge else 0
    return CollectionStats(m, t, tuple(per_vertex), per_edge, len(seen))


def theorem_bound(d: int, k: int, lam_min_pattern: float, m: int, t: int) -> float:
    """Lower bound for lambda_min of the host: -d + (k + lam_min_pattern) m / t."""
    if t < 1:
        raise InvalidInputError("need t >= 1 (each edge in at most t copies)")
    if not d >= k >= 1:
        raise InvalidInputError("need d >= k >= 1")
    if m < 0:
        raise InvalidInputError("need m >= 0")
    return -d + (k + lam_min_pattern) * m / t


def odd_cycle_bound(d: int, r: int, m: int, t: int) -> float:
    """Odd-cycle specialization: -d + 4 sin^2(pi/(4r+2)) * m / t."""
    if r < 1:
        raise InvalidInputError("need r >= 1")
    if t < 1:
        raise InvalidInputError("need t >= 1")
    if m < 0:
        raise InvalidInputError("need m >= 0")
    return -d + 4.0 * math.sin(math.pi / (4 * r + 2)) ** 2 * m / t


def assoc_lower_bound(n: int) -> float:
    """Closed-form lower bound for lambda_min of the flip graph of the n-gon.

    -(5 + sqrt 5)/8 * (n-3) - (3 - sqrt 5)/8; identical to the odd-cycle
    bound with d = n-3, r = 2, m = n-4, t = 4.
    """
    if n < 5:
        raise InvalidInputError("lower bound needs n >= 5")
    s5 = math.sqrt(5.0)
    return -(5.0 + s5) / 8.0 * (n - 3) - (3.0 - s5) / 8.0


@lru_cache(maxsize=None)
def assoc_upper_bound(n: int) -> float:
    """Best upper bound for lambda_min of the flip graph from diagonal slices.

    For n <= 12 this is the computed table value.  Beyond, dynamic
    programming over all slice splits: ub(n) = min over 4 <= k <= n-2 of
    ub(k) + ub(n-k+2), which never loses to any fixed split.
    """
    if n < 4:
        raise InvalidInputError("upper bound needs n >= 4")
    if n <= 12:
        return LAMBDA_MIN_TABLE[n]
    return min(assoc_upper_bound(k) + assoc_upper_bound(n - k + 2) for k in range(4, n - 1))


def upper_bound_residue_constants(n_max: int = 200) -> dict[int, float]:
    """Per-residue constants c_r with ub(n) <= -0.6904 n + c_r for n = r mod 10.

    ub(n) + 0.6904 n is non-increasing along n -> n+10 (the 12/10 split
    loses exactly 6.904 per step), so the maximum over n <= n_max is the
    true constant once n_max is past the first class representatives.
    """
    out: dict[int, float] = {}
    for n in range(4, n_max + 1):
        r = n % 10
        c = assoc_upper_bound(n) + 0.6904 * n
        out[r] = max(out.get(r, -math.inf), c)
    return dict(sorted(out.items()))


def assoc_hexagon_lower_bound(n: int) -> float:
    """Hexagon-collection lower bound: -(n-3) + (2 - sqrt 2)(n-5)/14.

    Weaker than the pentagon-based closed form for every n; kept for
    comparison.
    """
    if n < 6:
        raise InvalidInputError("hexagon bound needs n >= 6")
    return -(n - 3) + (2.0 - math.sqrt(2.0)) * (n - 5) / 14.0


def chromatic_lower_bound(n: int, lam_min: float) -> float:
    """Chromatic number lower bound 1 + (n-3)/|lam_min| for the flip graph."""
    if lam_min >= 0:
        raise InvalidInputError("lam_min must be negative")
    return 1.0 + (n - 3) / abs(lam_min)


def mixing_bounds(n: int, lam2: float, eps: float) -> tuple[float, float]:
    """Mixing-time sandwich for the flip-graph walk (natural logarithm).

    upper = (n-3)/(n-3-lam2) * log(catalan(n-2)/eps),
    lower = lam2 / (2 (n-3-lam2)).
    """
    if not 0.0 < eps < 1.0:
        raise InvalidInputError("eps must lie in (0, 1)")
    d = n - 3
    if lam2 >= d:
        raise InvalidInputError("lam2 must be below the degree n-3 (positive gap)")
    upper = d / (d - lam2) * math.log(catalan(n - 2) / eps)
    lower = lam2 / (2.0 * (d - lam2))
    return upper, lower


@dataclass(frozen=True)
class LimitBracket:
    """Bracket for lim lambda_min / (n-3) with the table-derived estimate.

    ``empirical_upper`` is min over the table of lambda_min / (n-2): the
    subadditive sequence lambda_min(n) is indexed by n-2 under slicing
    (a k-gon and an (n-k+2)-gon share two vertices), so Fekete's lemma
    bounds the limit by every per-step rate lambda_min / (n-2).
    """

    upper: float
    lower: float
    empirical_upper: float
    ratios: dict[int, float]


def limit_bracket() -> LimitBracket:
    ratios = {n: LAMBDA_MIN_TABLE[n] / (n - 3) for n in range(5, 13)}
    empirical = min(LAMBDA_MIN_TABLE[n] / (n - 2) for n in range(4, 13))
    return LimitBracket(LIMIT_UPPER_CONSTANT, LIMIT_LOWER_CONSTANT, empirical, ratios)


def certify_collection_bound(
    g: Graph,
    pattern: Graph,
    exact_lambda_min: float | None = None,
    name: str = "collection-bound",
    stats: CollectionStats | None = None,
) -> BoundReport:
    """Compute the collection bound on g and compare with the exact value.

    Uses the maximal collection unless ``stats`` supplies a custom one.
    When the collection is empty the bound degenerates to -d, which every
    graph satisfies.
    """
    if stats is None:
        stats = collection_stats(g, pattern)
    d = g.degree
    if d is None:
        raise InvalidInputError("host graph must be regular")
    k = pattern.degree
    if k is None:
        raise InvalidInputError("pattern graph must be regular")
    lam_k = dense_spectrum(pattern).lambda_min
    if stats.copy_count == 0:
        bound = float(-d)
    else:
        bound = theorem_bound(d, k, lam_k, stats.m, stats.t)
    exact = (
        exact_lambda_min
        if exact_lambda_min is not None
        else dense_spectrum(g).lambda_min
    )
    return BoundReport(
        bound_name=name,
        bound_value=bound,
        exact_value=exact,
        satisfied=bool(bound <= exact + 1e-9),
        parameters={
            "d": d,
            "k": k,
            "lambda_min_pattern": lam_k,
            "m": stats.m,
            "t": stats.t,
            "copies": stats.copy_count,
        },
    )


def flipgraph_bound_reports(
    n: int,
    lam_min: float | None = None,
    lam2: float | None = None,
    eps: float = 0.1,
) -> list[BoundReport]:
    """All closed-form bounds for the flip graph of the n-gon.

    Exact eigenvalues may be passed in; whichever is present is certified
    against its bound.
    """
    if n < 5:
        raise InvalidInputError("bound reports need n >= 5")
    reports = []
    lower = assoc_lower_bound(n)
    reports.append(
        BoundReport(
            "pentagon-collection-lower",
            lower,
            lam_min,
            None if lam_min is None else bool(lower <= lam_min + 1e-9),
            {"n": n},
        )
    )
    upper = assoc_upper_bound(n)
    reports.append(
        BoundReport(
            "slice-upper",
            upper,
            lam_min,
            None if lam_min is None else bool(lam_min <= upper + 1e-9),
            {"n": n},
        )
    )
    if n >= 6:
        hex_lower = assoc_hexagon_lower_bound(n)
        reports.append(
            BoundReport(
                "hexagon-collection-lower",
                hex_lower,
                lam_min,
                None if lam_min is None else bool(hex_lower <= lam_min + 1e-9),
                {"n": n},
            )
        )
    if lam_min is not None:
        chrom = chromatic_lower_bound(n, lam_min)
        known = CHROMATIC_NUMBER_KNOWN.get(n)
        reports.append(
            BoundReport(
                "chromatic-lower",
                chrom,
                None if known is None else float(known),
                None if known is None else bool(chrom <= known + 1e-9),
                {"n": n, "lambda_min": lam_min},
            )
        )
    if lam2 is not None:
        up, low = mixing_bounds(n, lam2, eps)
        reports.append(
            BoundReport(
                "mixing-time-upper",
                up,
                None,
                None,
                {"n": n, "lambda_2": lam2, "eps": eps},
            )
        )
        reports.append(
            BoundReport(
                "mixing-time-lower",
                low,
                None,
                None,
                {"n": n, "lambda_2": lam2, "eps": eps},
            )
        )
    bracket = limit_bracket()
    if n in bracket.ratios:
        ratio = (lam_min / (n - 3)) if lam_min is not None else bracket.ratios[n]
        reports.append(
            BoundReport(
                "limit-ratio-bracket",
                ratio,
                None,
                bool(bracket.lower - 1e-9 <= ratio <= bracket.upper + 1e-9),
                {"n": n, "bracket": [bracket.lower, bracket.upper]},
            )
        )
    return reports
