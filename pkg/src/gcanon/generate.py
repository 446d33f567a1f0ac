"""Isomorph-free generation and canonical deduplication.

Native analogs of the gtools programs geng (all non-isomorphic graphs on n
vertices) and shortg (remove isomorphic duplicates), built on the
extend-and-reduce loop: extend every canonical graph by one vertex in all
2^n ways, filter, canonize, sort, dedup.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .canon import canonical_form
from .graph import Graph, GraphError, extensions
from .graph6 import encode_graph6

MAX_GENERATE_N = 9  # desk-scale limit; 274668 classes at n=9


def sort_canonical(graphs: Iterable[Graph]) -> list[Graph]:
    """Sort by graph6 encoding and drop exact duplicates."""
    seen = {}
    for g in graphs:
        seen[encode_graph6(g)] = g
    return [seen[k] for k in sorted(seen)]


def extend_and_reduce(graphs: Iterable[Graph],
                      keep: Optional[Callable[[Graph], bool]] = None,
                      strict: bool = True) -> list[Graph]:
    """One extend-test-reduce step: all one-vertex extensions of the given
    canonical graphs, filtered by keep, canonized, sorted, deduplicated.

    In strict mode the first input graph is spot-checked to be canonical.
    """
    out = {}
    checked = False
    for g in graphs:
        if strict and not checked:
            if canonical_form(g) != g:
                raise GraphError("input graph is not in canonical form")
            checked = True
        for h in extensions(g):
            if keep is not None and not keep(h):
                continue
            c = canonical_form(h)
            out[encode_graph6(c)] = c
    return [out[k] for k in sorted(out)]


def all_nonisomorphic(n: int) -> list[Graph]:
    """One representative per isomorphism class of n-vertex graphs, sorted
    by graph6 encoding."""
    if n < 0:
        raise GraphError("negative vertex count")
    if n > MAX_GENERATE_N:
        raise GraphError(
            f"n={n} beyond the practical generation limit {MAX_GENERATE_N}")
    acc = [Graph.empty(0)]
    for _ in range(n):
        acc = extend_and_reduce(acc, strict=False)
    return acc


def dedup_canonical(graphs: Iterable[Graph]) -> list[Graph]:
    """One canonical representative per isomorphism class in the input,
    sorted by graph6 encoding (shortg analog)."""
    out = {}
    n = None
    for g in graphs:
        if n is None:
            n = g.n
        elif g.n != n:
            raise GraphError("mixed vertex counts in dedup input")
        c = canonical_form(g)
        out[encode_graph6(c)] = c
    return [out[k] for k in sorted(out)]
