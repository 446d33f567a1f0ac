"""Ramsey coloring search: the property test, the generate-test-reduce
pipeline, and the constrain-generate-reduce pipeline over a CNF encoding
with lexicographic symmetry breaking.

Convention (matching the generate-side code): an edge is color 1.  A graph
is a Ramsey (s,t;n) coloring when no s vertices are pairwise non-adjacent
(independent set) and no t vertices are pairwise adjacent (clique).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator

from . import sat
from .canon import canonical_form
from .generate import extend_and_reduce, sort_canonical
from .graph import Graph, GraphError, extensions, k_subsets
from .graph6 import encode_graph6


@dataclass(frozen=True)
class RamseyInstance:
    s: int  # forbidden independent-set size
    t: int  # forbidden clique size
    n: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1 or self.n < 0:
            raise GraphError("require s >= 1, t >= 1, n >= 0")


@dataclass(frozen=True)
class EdgeVarMap:
    """Bijection between vertex pairs {u,v}, u < v, and CNF variables
    1..C(n,2), pairs in lexicographic order.  The diagonal is constant
    false."""

    n: int
    var: dict[tuple[int, int], int] = field(compare=False)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return self.var[(u, v) if u < v else (v, u)]

    @property
    def num_edge_vars(self) -> int:
        return self.n * (self.n - 1) // 2

    @staticmethod
    def for_vertices(n: int) -> "EdgeVarMap":
        pairs = itertools.combinations(range(n), 2)
        return EdgeVarMap(n, {p: i + 1 for i, p in enumerate(pairs)})


def is_ramsey(inst: RamseyInstance, g: Graph) -> bool:
    """True iff g has no independent set of size s and no clique of size t."""
    if g.n != inst.n:
        raise GraphError("graph size does not match instance")
    for vs in k_subsets(g.n, inst.s):
        if all(not g.rows[u] >> v & 1 for u, v in itertools.combinations(vs, 2)):
            return False
    for vs in k_subsets(g.n, inst.t):
        if all(g.rows[u] >> v & 1 for u, v in itertools.combinations(vs, 2)):
            return False
    return True


def _has_clique(rows, cand: int, k: int) -> bool:
    """Is there a k-clique inside the candidate bitmask?"""
    if k == 0:
        return True
    while cand.bit_count() >= k:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        if _has_clique(rows, cand & rows[v], k - 1):
            return True
    return False


def _extension_keep(s: int, t: int):
    """Ramsey check for a one-vertex extension of an already-Ramsey parent:
    only subsets through the new (last) vertex can violate the property."""

    def keep(h: Graph) -> bool:
        v = h.n - 1
        full = (1 << h.n) - 1
        nbrs = h.rows[v]
        comp = [full & ~r & ~(1 << u) for u, r in enumerate(h.rows)]
        if _has_clique(comp, comp[v], s - 1):
            return False
        if _has_clique(h.rows, nbrs, t - 1):
            return False
        return True

    return keep


def gen_ramsey_gt(inst: RamseyInstance, *, canonize: bool = True,
                  ramsey_filter: bool = True) -> list[Graph]:
    """Generate-test-reduce: grow from the empty graph one vertex at a time,
    keeping Ramsey extensions and reducing to canonical representatives.

    The two keyword flags disable the reduce and test steps (then labeled
    solutions, all non-isomorphic graphs, or all labeled graphs come out).
    """
    acc = [Graph.empty(0)]
    for i in range(inst.n):
        keep = _extension_keep(inst.s, inst.t) if ramsey_filter else None
        if canonize:
            acc = extend_and_reduce(acc, keep, strict=False)
        else:
            new = []
            for g in acc:
                for h in extensions(g):
                    if keep is None or keep(h):
                        new.append(h)
            acc = sort_canonical(new)
    return acc


@dataclass
class PipelineStep:
    n: int
    graphs: list[Graph]
    total_seconds: float
    canon_seconds: float


def gen_ramsey_gt_trace(inst: RamseyInstance) -> Iterator[PipelineStep]:
    """gen_ramsey_gt with per-size timing, for stats reporting."""
    acc = [Graph.empty(0)]
    for i in range(inst.n):
        t0 = time.perf_counter()
        canon_time = 0.0
        keep = _extension_keep(inst.s, inst.t)
        out = {}
        for g in acc:
            for h in extensions(g):
                if not keep(h):
                    continue
                c0 = time.perf_counter()
                c = canonical_form(h)
                canon_time += time.perf_counter() - c0
                out[encode_graph6(c)] = c
        acc = [out[k] for k in sorted(out)]
        yield PipelineStep(i + 1, acc, time.perf_counter() - t0, canon_time)


def _lex_leq(xs, ys, next_var: int, clauses) -> int:
    """CNF for xs <=lex ys via chained prefix-equality auxiliaries.

    Auxiliary e_k is defined (both directions) as 'first k positions equal',
    so the auxiliaries are functions of the compared variables.
    """
    m = len(xs)
    if m == 0:
        return next_var
    clauses.append([-xs[0], ys[0]])
    prev = None
    for k in range(1, m):
        next_var += 1
        e = next_var
        x, y = xs[k - 1], ys[k - 1]
        if prev is None:
            clauses += [[-e, -x, y], [-e, x, -y], [e, x, y], [e, -x, -y]]
        else:
            clauses += [[-e, prev], [-e, -x, y], [-e, x, -y],
                        [e, -prev, x, y], [e, -prev, -x, -y]]
        clauses.append([-e, -xs[k], ys[k]])
        prev = e
    return next_var


def encode_ramsey(inst: RamseyInstance) -> tuple[EdgeVarMap, sat.CnfFormula]:
    """CNF whose models (projected on edge variables) are the labeled Ramsey
    colorings surviving the lex symmetry break.

    Constraints: adjacency rows pairwise lexicographically ordered (columns
    of the compared pair removed), at least one edge in every s-subset, at
    least one non-edge in every t-subset.
    """
    n, s, t = inst.n, inst.s, inst.t
    evm = EdgeVarMap.for_vertices(n)
    clauses: list[list[int]] = []
    next_var = evm.num_edge_vars
    for i in range(n):
        for j in range(i + 1, n):
            xs = [evm[(i, k)] for k in range(n) if k != i and k != j]
            ys = [evm[(j, k)] for k in range(n) if k != i and k != j]
            next_var = _lex_leq(xs, ys, next_var, clauses)
    for vs in itertools.combinations(range(n), s):
        clauses.append([evm[p] for p in itertools.combinations(vs, 2)])
    for vs in itertools.combinations(range(n), t):
        clauses.append([-evm[p] for p in itertools.combinations(vs, 2)])
    if any(not c for c in clauses):
        # a size-0 or size-1 forbidden subset is unavoidable; the formula
        # must be unsatisfiable, expressed with one throwaway variable
        next_var += 1
        clauses = [c for c in clauses if c] + [[next_var], [-next_var]]
    return evm, sat.CnfFormula.of(max(next_var, 1), clauses)


def decode_model(evm: EdgeVarMap, model: sat.Model) -> Graph:
    """Graph with edge {u,v} present iff its variable is true."""
    edges = [p for p, v in evm.var.items() if model[v]]
    return Graph.from_edges(evm.n, edges)


def gen_ramsey_cg(inst: RamseyInstance) -> list[Graph]:
    """Constrain-generate-reduce: encode, enumerate all models projected on
    the edge variables, decode, canonize, sort, dedup.  Agrees with
    gen_ramsey_gt as a set."""
    evm, formula = encode_ramsey(inst)
    models = sat.solve_all(formula, evm.var.values())
    out = {}
    for m in models:
        c = canonical_form(decode_model(evm, m))
        out[encode_graph6(c)] = c
    return [out[k] for k in sorted(out)]


def gen_ramsey_cg_trace(inst: RamseyInstance) -> PipelineStep:
    """One timed constrain-generate-reduce run."""
    t0 = time.perf_counter()
    evm, formula = encode_ramsey(inst)
    models = sat.solve_all(formula, evm.var.values())
    canon_time = 0.0
    out = {}
    for m in models:
        g = decode_model(evm, m)
        c0 = time.perf_counter()
        c = canonical_form(g)
        canon_time += time.perf_counter() - c0
        out[encode_graph6(c)] = c
    graphs = [out[k] for k in sorted(out)]
    return PipelineStep(inst.n, graphs, time.perf_counter() - t0, canon_time)
