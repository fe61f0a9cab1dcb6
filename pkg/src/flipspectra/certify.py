"""Cross-module claim suite behind the CLI's --certify flag.

Each claim callable returns a ClaimResult; the driver collects them into a
machine-readable report.  Scope scales with n_max so small runs stay fast:
census claims cap at n = 9 (pentagons) and n = 8 (hexagons), slice
isomorphism at n = 10 regardless of n_max.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds, census, spectra
from .flipgraph import (
    box_product,
    build_associahedron,
    complete_graph,
    contains_triangle,
    cycle_graph,
    diagonal_slice,
    is_connected,
    is_isomorphic,
    petersen_graph,
    random_regular_graph,
    validate_regular,
)
from .reference import LAMBDA_2_TABLE, LAMBDA_MIN_TABLE
from .triangulations import catalan, ear_count, enumerate_triangulations


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str


def _lambda_min_values(n_max: int, seed: int = 0) -> dict[int, float]:
    return {
        n: spectra.lambda_min(build_associahedron(n), seed=seed).value
        for n in range(4, n_max + 1)
    }


def _claim_structure(n_max: int) -> ClaimResult:
    bad = []
    for n in range(4, min(n_max, 12) + 1):
        g = build_associahedron(n)
        if g.vertex_count != catalan(n - 2):
            bad.append(f"n={n}: vertex count")
        if not validate_regular(g, n - 3):
            bad.append(f"n={n}: not {n - 3}-regular")
        if not is_connected(g):
            bad.append(f"n={n}: disconnected")
        if g.edge_count != catalan(n - 2) * (n - 3) // 2:
            bad.append(f"n={n}: edge count")
        if n <= 10 and contains_triangle(g):
            bad.append(f"n={n}: triangle found")
    return ClaimResult(
        "flip-graph-structure",
        not bad,
        "; ".join(bad) if bad else f"regular, connected, triangle-free up to n={min(n_max, 12)}",
    )


def _claim_pentagon_census(n_max: int) -> ClaimResult:
    top = min(n_max, 9)
    if top < 5:
        return ClaimResult("pentagon-census", True, "vacuous: no 5-cycles below n=5")
    bad = []
    for n in range(5, top + 1):
        rep = census.pentagon_census(n, oracle=True)
        if rep.per_vertex != rep.oracle_per_vertex:
            bad.append(f"n={n}: vertex formula != oracle")
        if any(v < n - 4 for v in rep.per_vertex):
            bad.append(f"n={n}: vertex count below n-4")
        if rep.per_edge != rep.oracle_per_edge:
            bad.append(f"n={n}: edge formula != oracle")
        if rep.edge_min < 1 or rep.edge_max > 4:
            bad.append(f"n={n}: edge count outside [1,4]")
        ts = enumerate_triangulations(n)
        if any(
            c != n - 6 + ear_count(t) for c, t in zip(rep.per_vertex, ts)
        ):
            bad.append(f"n={n}: vertex count != n-6+t1")
    return ClaimResult(
        "pentagon-census", not bad, "; ".join(bad) if bad else f"exact for n=5..{top}"
    )


def _claim_hexagon_census(n_max: int) -> ClaimResult:
    top = min(n_max, 8)
    if top < 6:
        return ClaimResult("hexagon-census", True, "vacuous: needs n >= 6")
    bad = []
    for n in range(6, top + 1):
        rep = census.hexagon_census(n, oracle=True)
        if rep.per_vertex != rep.oracle_per_vertex:
            bad.append(f"n={n}: vertex formula != oracle")
        if any(v < n - 5 for v in rep.per_vertex):
            bad.append(f"n={n}: vertex count below n-5")
        if rep.per_edge != rep.oracle_per_edge:
            bad.append(f"n={n}: edge count != support oracle")
        if rep.edge_min < 1 or rep.edge_max > 14:
            bad.append(f"n={n}: edge count outside [1,14]")
    return ClaimResult(
        "hexagon-census", not bad, "; ".join(bad) if bad else f"exact for n=6..{top}"
    )


def _claim_lower_bound(lam_min: dict[int, float]) -> ClaimResult:
    bad = []
    for n, lam in lam_min.items():
        if n < 5:
            continue
        if bounds.assoc_lower_bound(n) > lam + 1e-9:
            bad.append(f"n={n}")
    return ClaimResult(
        "pentagon-lower-bound",
        not bad,
        "; ".join(bad) if bad else "closed form below exact lambda_min everywhere",
    )


def _claim_table_match(lam_min: dict[int, float], lam2: dict[int, float]) -> ClaimResult:
    bad = []
    for n, lam in lam_min.items():
        want = LAMBDA_MIN_TABLE.get(n)
        if want is not None and abs(lam - want) > 1e-3:
            bad.append(f"lambda_min n={n}: {lam:.6f} vs {want}")
    for n, lam in lam2.items():
        want = LAMBDA_2_TABLE.get(n)
        if want is not None and abs(lam - want) > 1e-3:
            bad.append(f"lambda_2 n={n}: {lam:.6f} vs {want}")
    return ClaimResult(
        "eigenvalue-tables", not bad, "; ".join(bad) if bad else "within 1e-3 of reference"
    )


def _claim_subadditivity(lam_min: dict[int, float]) -> ClaimResult:
    bad = []
    n_max = max(lam_min)
    for k in range(4, n_max - 3):
        for l in range(k, n_max - k + 1):
            if k + l > n_max:
                continue
            if lam_min[k + l] > lam_min[k] + lam_min[l] + 1e-8:
                bad.append(f"k={k},l={l}")
    return ClaimResult(
        "slice-subadditivity", not bad, "; ".join(bad) if bad else "holds for all splits"
    )


def _claim_slice_isomorphism(n_max: int) -> ClaimResult:
    top = min(n_max, 10)
    bad = []
    for n in range(4, top + 1):
        for k in range(3, n):
            slc = diagonal_slice(n, (1, k))
            prod = box_product(build_associahedron(k), build_associahedron(n - k + 2))
            if slc.vertex_count != catalan(k - 2) * catalan(n - k):
                bad.append(f"n={n},k={k}: vertex count")
            if not is_isomorphic(slc, prod):
                bad.append(f"n={n},k={k}: not isomorphic")
    return ClaimResult(
        "diagonal-slice-isomorphism",
        not bad,
        "; ".join(bad) if bad else f"slice(n,(1,k)) matches the box product up to n={top}",
    )


def _claim_collection_bounds(n_max: int) -> ClaimResult:
    suite = [("K4/K3", complete_graph(4), complete_graph(3)), ("Petersen/C5", petersen_graph(), cycle_graph(5))]
    for n in range(5, min(n_max, 9) + 1):
        suite.append((f"A{n}/C5", build_associahedron(n), cycle_graph(5)))
    for seed in range(10):
        g = random_regular_graph(20, 3, seed=seed)
        for label, pat in (("K3", complete_graph(3)), ("C5", cycle_graph(5)), ("C7", cycle_graph(7))):
            suite.append((f"rand20-seed{seed}/{label}", g, pat))
    bad = []
    for label, g, pat in suite:
        rep = bounds.certify_collection_bound(g, pat, name=label)
        if not rep.satisfied:
            bad.append(label)
    return ClaimResult(
        "collection-bound-certification",
        not bad,
        "; ".join(bad) if bad else f"bound <= exact lambda_min on {len(suite)} instances",
    )


def _claim_limit_bracket(lam_min: dict[int, float]) -> ClaimResult:
    br = bounds.limit_bracket()
    bad = []
    for n, lam in lam_min.items():
        if n < 5:
            continue
        ratio = lam / (n - 3)
        if not br.lower - 1e-9 <= ratio <= br.upper + 1e-9:
            bad.append(f"n={n}: ratio {ratio:.4f}")
    return ClaimResult(
        "limit-ratio-bracket", not bad, "; ".join(bad) if bad else "all ratios inside bracket"
    )


def run_certification(n_max: int, seed: int = 0) -> list[ClaimResult]:
    """Run every claim up to n_max; heavier census/slice claims self-cap."""
    if n_max < 4:
        raise ValueError("certification needs n_max >= 4")
    results = [
        _claim_structure(n_max),
        _claim_pentagon_census(n_max),
        _claim_hexagon_census(n_max),
        _claim_slice_isomorphism(n_max),
        _claim_collection_bounds(n_max),
    ]
    lam_min = _lambda_min_values(min(n_max, 12), seed=seed)
    lam2 = {
        n: spectra.lambda_2(build_associahedron(n), seed=seed).value
        for n in range(5, min(n_max, 12) + 1)
    }
    results.append(_claim_table_match(lam_min, lam2))
    results.append(_claim_lower_bound(lam_min))
    results.append(_claim_subadditivity(lam_min))
    results.append(_claim_limit_bracket(lam_min))
    return results
