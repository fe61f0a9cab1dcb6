"""Graphs over triangulations and friends.

Storage is flat compressed adjacency (offsets + sorted neighbor array),
which keeps matrix-vector products cache friendly.  Besides the flip graph
itself the module builds box products, induced subgraphs, diagonal slices,
and provides a refinement-plus-backtracking isomorphism test for the small
graphs used in certification.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from . import triangulations as tri
from .errors import CapacityError, InvalidInputError, RangeError

ISO_SIZE_LIMIT_DEFAULT = 5000
BOX_PRODUCT_LIMIT_DEFAULT = 2_000_000


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in compressed adjacency form.

    ``labels`` optionally carries the triangulation code of each vertex.
    ``degree`` is set when every vertex has the same degree.
    """

    offsets: np.ndarray
    neighbors: np.ndarray
    labels: tuple[str, ...] | None = None
    degree: int | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:
        return len(self.neighbors) // 2

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def degree_of(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, (u, v) with u < v, in sorted order."""
        for u in range(self.vertex_count):
            for v in self.neighbors_of(u):
                if u < v:
                    yield (u, int(v))

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors_of(u)
        k = int(np.searchsorted(row, v))
        return k < len(row) and row[k] == v

    def adjacency_sets(self) -> list[set[int]]:
        return [set(map(int, self.neighbors_of(u))) for u in range(self.vertex_count)]

    def dense_adjacency(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count))
        for u in range(self.vertex_count):
            a[u, self.neighbors_of(u)] = 1.0
        return a


def from_edges(
    vertex_count: int,
    edges: Iterable[tuple[int, int]],
    labels: tuple[str, ...] | None = None,
) -> Graph:
    """Build a Graph from an edge list; duplicates collapse, loops are rejected."""
    if vertex_count < 0:
        raise InvalidInputError("vertex_count must be nonnegative")
    pairs = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InvalidInputError(f"loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidInputError(f"edge ({u},{v}) outside 0..{vertex_count - 1}")
        pairs.add((u, v) if u < v else (v, u))
    deg = np.zeros(vertex_count, dtype=np.int64)
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    offsets = np.zeros(vertex_count + 1, dtype=np.int64)
    np.cumsum(deg, out=offsets[1:])
    nbrs = np.empty(int(offsets[-1]), dtype=np.int64)
    cursor = offsets[:-1].copy()
    # lexicographic insertion leaves every row sorted ascending
    for u, v in sorted(pairs):
        nbrs[cursor[u]] = v
        cursor[u] += 1
        nbrs[cursor[v]] = u
        cursor[v] += 1
    uniform = int(deg[0]) if vertex_count > 0 and bool((deg == deg[0]).all()) else None
    return Graph(offsets, nbrs, labels, uniform)


@lru_cache(maxsize=32)
def _associahedron_cached(n: int) -> Graph:
    # range validation happens in build_associahedron
    ts = tri.enumerate_triangulations(n, max_n=n)
    index = {t.diagonals: i for i, t in enumerate(ts)}
    edges = []
    for i, t in enumerate(ts):
        for nb in tri.neighbors(t):
            j = index[nb.diagonals]
            if i < j:
                edges.append((i, j))
    return from_edges(len(ts), edges, labels=tuple(t.code() for t in ts))


def build_associahedron(n: int, max_n: int | None = None) -> Graph:
    """Flip graph on triangulations of the n-gon.

    Vertices are indexed by the canonical enumeration order, so vertex i is
    enumerate_triangulations(n)[i].  The graph is (n-3)-regular on
    catalan(n-2) vertices; n = 3 gives the single-vertex graph.
    """
    limit = tri.max_polygon(max_n)
    if n < 3 or n > limit:
        raise RangeError(f"n={n} outside the supported range 3..{limit}")
    return _associahedron_cached(n)


def box_product(g: Graph, h: Graph, max_vertices: int | None = None) -> Graph:
    """Cartesian (box) product; vertex (a, b) gets index a*|V(H)| + b."""
    cap = BOX_PRODUCT_LIMIT_DEFAULT if max_vertices is None else max_vertices
    nv = g.vertex_count * h.vertex_count
    if nv > cap:
        raise CapacityError(f"box product on {nv} vertices exceeds the cap of {cap}")
    m = h.vertex_count
    edges = []
    for a1, a2 in g.edges():
        for b in range(m):
            edges.append((a1 * m + b, a2 * m + b))
    for b1, b2 in h.edges():
        for a in range(g.vertex_count):
            edges.append((a * m + b1, a * m + b2))
    return from_edges(nv, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``keep`` with its internal edges.

    Returns (subgraph, kept) where kept[new_index] = old_index; new indices
    follow ascending old-index order.
    """
    kept = sorted({int(v) for v in keep})
    if kept and (kept[0] < 0 or kept[-1] >= g.vertex_count):
        raise InvalidInputError("keep contains an out-of-range vertex index")
    pos = {old: new for new, old in enumerate(kept)}
    edges = []
    for old in kept:
        for w in g.neighbors_of(old):
            w = int(w)
            if old < w and w in pos:
                edges.append((pos[old], pos[w]))
    labels = tuple(g.labels[old] for old in kept) if g.labels is not None else None
    return from_edges(len(kept), edges, labels), tuple(kept)


def diagonal_slice(n: int, d: Iterable[int], max_n: int | None = None) -> Graph:
    """Induced subgraph of the flip graph on triangulations containing d.

    For d = (1, k) the slice is isomorphic to the box product of the flip
    graphs of a k-gon and an (n-k+2)-gon.
    """
    d = tri.validate_diagonal(n, d)
    g = build_associahedron(n, max_n)
    ts = tri.enumerate_triangulations(n, max_n)
    keep = [i for i, t in enumerate(ts) if d in t.diagonals]
    sub, _ = induced_subgraph(g, keep)
    return sub


def _refined_colors(adj: list[set[int]]) -> list[int]:
    """Iterated degree/neighborhood refinement; stable and graph-comparable."""
    colors = [len(a) for a in adj]
    classes = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            for v in range(len(adj))
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [relabel[s] for s in sigs]
        if len(relabel) == classes:
            return colors
        classes = len(relabel)


def is_isomorphic(g: Graph, h: Graph, size_limit: int | None = None) -> bool:
    """Adjacency-preserving bijection test for small graphs.

    Color refinement prunes, then backtracking maps vertices in an order
    that keeps each new vertex attached to already-mapped ones.  Intended
    for certification at desk scale, not as a general iso engine.
    """
    cap = ISO_SIZE_LIMIT_DEFAULT if size_limit is None else size_limit
    if g.vertex_count > cap or h.vertex_count > cap:
        raise CapacityError(f"isomorphism test limited to {cap} vertices")
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    nv = g.vertex_count
    if nv == 0:
        return True
    adj_g = g.adjacency_sets()
    adj_h = h.adjacency_sets()
    col_g = _refined_colors(adj_g)
    col_h = _refined_colors(adj_h)
    if sorted(col_g) != sorted(col_h):
        return False

    class_size = Counter(col_g)
    order = []
    placed = [False] * nv
    attach = [0] * nv
    for _ in range(nv):
        best = min(
            (v for v in range(nv) if not placed[v]),
            key=lambda v: (-attach[v], class_size[col_g[v]], -len(adj_g[v]), v),
        )
        order.append(best)
        placed[best] = True
        for u in adj_g[best]:
            if not placed[u]:
                attach[u] += 1

    by_color_h: dict[int, list[int]] = {}
    for v in range(nv):
        by_color_h.setdefault(col_h[v], []).append(v)

    mapping = [-1] * nv
    used = [False] * nv
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * nv + 100))

    def extend(i: int) -> bool:
        if i == nv:
            return True
        gv = order[i]
        mapped_imgs = [mapping[u] for u in adj_g[gv] if mapping[u] >= 0]
        if mapped_imgs:
            cands = set(adj_h[mapped_imgs[0]])
            for w in mapped_imgs[1:]:
                cands &= adj_h[w]
            pool = [hv for hv in cands if not used[hv] and col_h[hv] == col_g[gv]]
        else:
            pool = [hv for hv in by_color_h.get(col_g[gv], ()) if not used[hv]]
        k = len(mapped_imgs)
        for hv in sorted(pool):
            # no adjacency into the mapped region beyond the required ones
            if sum(1 for w in adj_h[hv] if used[w]) != k:
                continue
            used[hv] = True
            mapping[gv] = hv
            if extend(i + 1):
                return True
            used[hv] = False
            mapping[gv] = -1
        return False

    return extend(0)


def validate_regular(g: Graph, d: int) -> bool:
    if g.vertex_count == 0:
        return True
    return bool((g.degrees() == d).all())


def is_connected(g: Graph) -> bool:
    nv = g.vertex_count
    if nv <= 1:
        return True
    seen = np.zeros(nv, dtype=bool)
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in g.neighbors_of(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(int(v))
    return count == nv


def contains_triangle(g: Graph) -> bool:
    adj = g.adjacency_sets()
    for u, v in g.edges():
        if adj[u] & adj[v]:
            return True
    return False


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise InvalidInputError("cycle needs at least 3 vertices")
    return from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m: int) -> Graph:
    if m < 1:
        raise InvalidInputError("path needs at least 1 vertex")
    return from_edges(m, [(i, i + 1) for i in range(m - 1)])


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise InvalidInputError("complete graph needs at least 1 vertex")
    return from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def single_vertex() -> Graph:
    return complete_graph(1)


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return from_edges(10, edges)


def random_regular_graph(vertex_count: int, d: int, seed: int = 0, max_tries: int = 500) -> Graph:
    """Uniform-ish d-regular simple graph via the pairing model with rejection."""
    if vertex_count * d % 2 != 0:
        raise InvalidInputError("vertex_count * d must be even")
    if d >= vertex_count:
        raise InvalidInputError("degree must be below the vertex count")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        stubs = np.repeat(np.arange(vertex_count), d)
        rng.shuffle(stubs)
        halves = stubs.reshape(-1, 2)
        pairs = {(min(int(u), int(v)), max(int(u), int(v))) for u, v in halves}
        if any(u == v for u, v in pairs) or len(pairs) != vertex_count * d // 2:
            continue
        return from_edges(vertex_count, pairs)
    raise CapacityError("could not sample a simple regular graph; raise max_tries")


def write_edge_list(g: Graph, fh) -> None:
    """Text export: header '# vertices=<N> degree=<d>' then one 'u v' per line."""
    d = g.degree if g.degree is not None else "mixed"
    fh.write(f"# vertices={g.vertex_count} degree={d}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")
