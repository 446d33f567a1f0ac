"""Canonical labeling by individualization-refinement.

The canonical representative of a graph is the leaf of the refinement search
tree whose relabeled upper-triangle bit string is numerically smallest.  This
differs from nauty's internal choice of representative but is a valid
canonical form: two graphs get the same representative iff they are
isomorphic (color-respectingly so, when an initial coloring is given).

Automorphisms discovered as certificate collisions between leaves drive orbit
pruning of the search and yield the reported vertex orbits (union-find over
generator images; complete on small graphs, sound in general).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import (
    ADJ_MATRIX,
    Graph,
    GraphError,
    OrderedPartition,
    Permutation,
    apply_permutation,
    graph_convert,
)


@dataclass(frozen=True)
class CanonOptions:
    input_format: str = ADJ_MATRIX
    output_format: str = ADJ_MATRIX
    initial_coloring: Optional[OrderedPartition] = None


@dataclass(frozen=True)
class CanonicalResult:
    """Full canonization output.

    labeling lists input vertices in canonical-position order, so
    permutation(labeling[i]) = i, and applying permutation to the input graph
    yields canonic exactly.  orbits[v] is the least vertex found in v's
    automorphism orbit.  partition is the equitable refinement of the root
    coloring (implementation-defined cell order).
    """

    labeling: Permutation
    permutation: Permutation
    orbits: tuple[int, ...]
    canonic: Graph
    partition: OrderedPartition


def _refine(rows, cells, seeds):
    """Refine cells (list of sorted vertex tuples) against the seed splitter
    masks until equitable.  Sub-cells replace their parent in place, ordered
    by ascending neighbour count; the result is the coarsest equitable
    refinement reachable from the seeds."""
    queue = deque(seeds)
    while queue:
        smask = queue.popleft()
        newcells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                newcells.append(cell)
                continue
            groups = {}
            for v in cell:
                groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                newcells.append(cell)
                continue
            changed = True
            for cnt in sorted(groups):
                sub = tuple(groups[cnt])
                newcells.append(sub)
                mask = 0
                for v in sub:
                    mask |= 1 << v
                queue.append(mask)
        if changed:
            cells = newcells
    return cells


def refine_equitable(g: Graph, p: OrderedPartition) -> OrderedPartition:
    """Coarsest equitable refinement of p with deterministic cell order."""
    if p.n != g.n:
        raise GraphError("partition does not cover the graph's vertices")
    cells = [tuple(sorted(c)) for c in p.cells]
    seeds = []
    for cell in cells:
        mask = 0
        for v in cell:
            mask |= 1 << v
        seeds.append(mask)
    return OrderedPartition(tuple(_refine(g.rows, cells, seeds)))


def _leaf_certificate(rows, labeling):
    """Upper-triangle bits of the graph relabeled so labeling[i] sits at
    position i; graph6 bit order, first bit most significant."""
    cert = 0
    for j in range(1, len(labeling)):
        lj = labeling[j]
        for i in range(j):
            cert = cert << 1 | (rows[labeling[i]] >> lj & 1)
    return cert


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


class _CanonSearch:
    def __init__(self, rows, n):
        self.rows = rows
        self.n = n
        self.generators = []
        self.first_cert = None
        self.first_labeling = None
        self.best_cert = None
        self.best_labeling = None

    def run(self, root_cells):
        self._descend(root_cells, [])
        return self.best_labeling, self.generators

    def _target_cell_index(self, cells):
        best = -1
        best_size = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (best_size is None or len(cell) < best_size):
                best, best_size = i, len(cell)
        return best

    def _descend(self, cells, path):
        ti = self._target_cell_index(cells)
        if ti < 0:
            self._leaf([c[0] for c in cells])
            return
        target = cells[ti]
        processed = []
        for v in target:
            if processed and self._in_processed_orbit(v, processed, path):
                continue
            processed.append(v)
            rest = tuple(w for w in target if w != v)
            child = cells[:ti] + [(v,)] + [rest] + cells[ti + 1:]
            child = _refine(self.rows, child, [1 << v])
            path.append(v)
            self._descend(child, path)
            path.pop()

    def _in_processed_orbit(self, v, processed, path):
        uf = None
        for gen in self.generators:
            if all(gen[w] == w for w in path):
                if uf is None:
                    uf = _UnionFind(self.n)
                for u in range(self.n):
                    uf.union(u, gen[u])
        if uf is None:
            return False
        rv = uf.find(v)
        return any(uf.find(u) == rv for u in processed)

    def _leaf(self, labeling):
        cert = _leaf_certificate(self.rows, labeling)
        if self.first_cert is None:
            self.first_cert = cert
            self.first_labeling = labeling
        elif cert == self.first_cert:
            # Two labelings with the same certificate witness an automorphism.
            gen = [0] * self.n
            for a, b in zip(self.first_labeling, labeling):
                gen[a] = b
            if any(gen[i] != i for i in range(self.n)):
                self.generators.append(tuple(gen))
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert = cert
            self.best_labeling = labeling


def _canonize_rows(rows, n, coloring_cells=None):
    """Core search; returns (labeling, canonic_rows, generators, root_cells)."""
    if n == 0:
        return [], (), [], []
    if coloring_cells is None:
        cells = [tuple(range(n))]
    else:
        cells = [tuple(sorted(c)) for c in coloring_cells]
    seeds = []
    for cell in cells:
        mask = 0
        for v in cell:
            mask |= 1 << v
        seeds.append(mask)
    root = _refine(rows, cells, seeds)
    search = _CanonSearch(rows, n)
    labeling, gens = search.run(root)
    pos = [0] * n
    for i, v in enumerate(labeling):
        pos[v] = i
    crows = [0] * n
    for u in range(n):
        row = rows[u]
        pu = pos[u]
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            crows[pu] |= 1 << pos[v]
    return labeling, tuple(crows), gens, root


def canonize(g: Graph, opts: CanonOptions = CanonOptions()) -> CanonicalResult:
    """Canonical labeling, relabeling permutation, orbits, and canonical form.

    With an initial coloring, only color-preserving relabelings compete, so
    two colored graphs share a canonic value iff they are isomorphic via a
    color-respecting permutation (colorings compared cell-by-cell in order).
    """
    coloring = opts.initial_coloring
    if coloring is not None and coloring.n != g.n:
        raise GraphError("coloring does not cover the graph's vertices")
    cells = coloring.cells if coloring is not None else None
    labeling, crows, gens, root = _canonize_rows(g.rows, g.n, cells)
    uf = _UnionFind(g.n)
    for gen in gens:
        for u in range(g.n):
            uf.union(u, gen[u])
    orbits = tuple(uf.find(v) for v in range(g.n))
    lab = Permutation(tuple(labeling))
    return CanonicalResult(
        labeling=lab,
        permutation=lab.inverse(),
        orbits=orbits,
        canonic=Graph(g.n, crows),
        partition=OrderedPartition(tuple(root)),
    )


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    _, crows, _, _ = _canonize_rows(g.rows, g.n)
    return Graph(g.n, crows)


def isomorphic(n: int, g1: Graph, g2: Graph,
               opts: CanonOptions = CanonOptions()
               ) -> Optional[tuple[Permutation, Graph]]:
    """Isomorphism test; on success returns (p, canonic) with
    apply_permutation(g1, p) = g2 and canonic their shared canonical form.
    Returns None when the graphs are not isomorphic."""
    if g1.n != n or g2.n != n:
        raise GraphError("vertex count mismatch")
    r1 = canonize(g1, opts)
    r2 = canonize(g2, opts)
    if r1.canonic != r2.canonic:
        return None
    p = r2.permutation.inverse().compose(r1.permutation)
    return p, r1.canonic


def canonize_value(n: int, value, opts: CanonOptions = CanonOptions()):
    """Format-aware canonization: convert, canonize, convert back.

    Returns (result, canonic value in opts.output_format).
    """
    matrix = graph_convert(n, opts.input_format, ADJ_MATRIX, value)
    g = Graph.from_matrix(matrix)
    result = canonize(g, opts)
    out = graph_convert(n, ADJ_MATRIX, opts.output_format,
                        result.canonic.to_matrix())
    return result, out
