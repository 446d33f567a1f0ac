"""Core graph values: dense bit-matrix graphs, permutations, ordered partitions,
and conversions between the supported text/term representations.

Graphs are simple and undirected.  Adjacency is stored as one integer bitmask
per vertex, which keeps neighbourhood operations cheap for the search code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_VERTEX_CAP = 64

ADJ_MATRIX = "adj_matrix"
ADJ_LIST = "adj_list"
EDGE_LIST = "edge_list"
GRAPH6_ATOM = "graph6_atom"

FORMATS = frozenset({ADJ_MATRIX, ADJ_LIST, EDGE_LIST, GRAPH6_ATOM})


class GraphError(ValueError):
    """Malformed graph data: bad shape, asymmetry, self loop, index range."""


class VertexCapExceeded(GraphError):
    """Vertex count above the configured cap (default 64)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, one bitmask row per vertex."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        if self.n > DEFAULT_VERTEX_CAP:
            raise VertexCapExceeded(
                f"n={self.n} exceeds vertex cap {DEFAULT_VERTEX_CAP}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        # Cheap O(n) checks only; from_matrix does the full symmetry check.
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits outside [0,{self.n})")
            if row >> u & 1:
                raise GraphError(f"self loop at vertex {u}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in range(u + 1, self.n) if self.rows[u] >> v & 1]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def to_matrix(self) -> list[list[int]]:
        return [[self.rows[u] >> v & 1 for v in range(self.n)]
                for u in range(self.n)]

    def upper_triangle_bits(self) -> int:
        """Upper-triangle adjacency packed as an integer, graph6 bit order
        (column by column), first bit most significant.  Total order key on
        graphs of equal n."""
        bits = 0
        for v in range(1, self.n):
            for u in range(v):
                bits = bits << 1 | (self.rows[u] >> v & 1)
        return bits

    def delete_vertex(self, v: int) -> "Graph":
        """Induced subgraph on the other n-1 vertices, order preserved."""
        keep = [u for u in range(self.n) if u != v]
        rows = []
        for u in keep:
            row = 0
            for j, w in enumerate(keep):
                if self.rows[u] >> w & 1:
                    row |= 1 << j
            rows.append(row)
        return Graph(self.n - 1, tuple(rows))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def from_matrix(matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise GraphError("adjacency matrix is not square")
        rows = []
        for u in range(n):
            row = 0
            for v in range(n):
                x = matrix[u][v]
                if x not in (0, 1, False, True):
                    raise GraphError(f"non-boolean entry at ({u},{v})")
                if x:
                    row |= 1 << v
            rows.append(row)
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v & 1) != (rows[v] >> u & 1):
                    raise GraphError(f"asymmetric adjacency at ({u},{v})")
        return Graph(n, tuple(rows))


@dataclass(frozen=True)
class Permutation:
    """Bijection on [0,n) in one-line notation: map[i] is the image of i."""

    map: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.map) != list(range(len(self.map))):
            raise GraphError("permutation is not a bijection on [0,n)")

    def __len__(self) -> int:
        return len(self.map)

    def __call__(self, i: int) -> int:
        return self.map[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for i, j in enumerate(self.map):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.map[j] for j in other.map))

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.map]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered sequence of disjoint non-empty vertex cells covering [0,n)."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for cell in self.cells:
            if not cell:
                raise GraphError("empty cell in partition")
            for v in cell:
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two cells")
                seen.add(v)
        if seen != set(range(len(seen))):
            raise GraphError("partition does not cover an initial segment")

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    @staticmethod
    def unit(n: int) -> "OrderedPartition":
        if n == 0:
            return OrderedPartition(())
        return OrderedPartition((tuple(range(n)),))


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel g by p: result.adj[p(u)][p(v)] = g.adj[u][v]."""
    if len(p) != g.n:
        raise GraphError("permutation length does not match vertex count")
    rows = [0] * g.n
    for u in range(g.n):
        pu = p.map[u]
        row = g.rows[u]
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            rows[pu] |= 1 << p.map[v]
    return Graph(g.n, tuple(rows))


def extensions(g: Graph) -> Iterator[Graph]:
    """All 2^n one-vertex extensions of g, the new vertex appended last.

    Ordered by the new vertex's adjacency bitmask, 0 .. 2^n - 1.
    """
    if g.n + 1 > DEFAULT_VERTEX_CAP:
        raise VertexCapExceeded("extension would exceed vertex cap")
    n1 = g.n + 1
    newbit = 1 << g.n
    for mask in range(1 << g.n):
        rows = [g.rows[u] | newbit if mask >> u & 1 else g.rows[u]
                for u in range(g.n)]
        rows.append(mask)
        yield Graph(n1, tuple(rows))


def k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All size-k subsets of [0,n) in lexicographic order."""
    if k < 0:
        raise GraphError("negative subset size")
    return itertools.combinations(range(n), k)


def _check_vertex(n: int, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise GraphError(f"vertex {v!r} out of range for n={n}")
    return v


def _from_adj_list(n: int, value) -> Graph:
    if len(value) != n:
        raise GraphError("adjacency list length does not match vertex count")
    rows = [0] * n
    for u, nbrs in enumerate(value):
        for v in nbrs:
            rows[u] |= 1 << _check_vertex(n, v)
    g = Graph(n, tuple(rows))
    return g


def _from_edge_list(n: int, value) -> Graph:
    edges = []
    for e in value:
        u, v = e
        edges.append((_check_vertex(n, u), _check_vertex(n, v)))
    return Graph.from_edges(n, edges)


def graph_convert(n: int, from_fmt: str, to_fmt: str, value):
    """Convert a graph between representations; lossless on the edge set.

    adj_list and edge_list outputs are normalized (sorted, deduplicated);
    converting any representation to itself yields the normalized value.
    """
    for fmt in (from_fmt, to_fmt):
        if fmt not in FORMATS:
            raise GraphError(f"unknown graph format {fmt!r}")
    from . import graph6

    if from_fmt == ADJ_MATRIX:
        if len(value) != n:
            raise GraphError("matrix size does not match declared n")
        g = Graph.from_matrix(value)
    elif from_fmt == ADJ_LIST:
        g = _from_adj_list(n, value)
    elif from_fmt == EDGE_LIST:
        g = _from_edge_list(n, value)
    else:
        g = graph6.decode_graph6(value)
        if g.n != n:
            raise GraphError(
                f"graph6 atom encodes {g.n} vertices, expected {n}")

    if to_fmt == ADJ_MATRIX:
        return g.to_matrix()
    if to_fmt == ADJ_LIST:
        return [[v for v in range(n) if g.rows[u] >> v & 1] for u in range(n)]
    if to_fmt == EDGE_LIST:
        return g.edges()
    return graph6.encode_graph6(g)
