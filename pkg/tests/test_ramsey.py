import itertools

import pytest

from gcanon.canon import canonical_form
from gcanon.generate import dedup_canonical
from gcanon.graph import Graph, GraphError
from gcanon.ramsey import (
    EdgeVarMap,
    RamseyInstance,
    decode_model,
    encode_ramsey,
    gen_ramsey_cg,
    gen_ramsey_gt,
    gen_ramsey_gt_trace,
    is_ramsey,
)
from gcanon import sat

from .conftest import all_graphs
from .reference_graphs import CYCLE5_MATRIX, R35_CLASS_COUNTS

C5 = Graph.from_matrix(CYCLE5_MATRIX)


class TestIsRamsey:
    def test_c5_is_a_33_coloring(self):
        assert is_ramsey(RamseyInstance(3, 3, 5), C5)

    def test_triangle_fails_clique_side(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        assert not is_ramsey(RamseyInstance(3, 3, 3), g)

    def test_empty_triple_fails_independent_side(self):
        assert not is_ramsey(RamseyInstance(3, 3, 3), Graph.empty(3))

    def test_sides_are_asymmetric(self):
        # K3 has a 3-clique but no independent pair beyond size 1
        g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        assert is_ramsey(RamseyInstance(2, 4, 3), g)
        assert not is_ramsey(RamseyInstance(4, 2, 3), g)

    def test_size_mismatch(self):
        with pytest.raises(GraphError):
            is_ramsey(RamseyInstance(3, 3, 4), C5)

    def test_twelve_labeled_33_colorings_on_five(self):
        inst = RamseyInstance(3, 3, 5)
        sols = [g for g in all_graphs(5) if is_ramsey(inst, g)]
        assert len(sols) == 12
        assert len(dedup_canonical(sols)) == 1

    def test_hereditary_under_vertex_deletion(self):
        inst = RamseyInstance(3, 4, 6)
        sub = RamseyInstance(3, 4, 5)
        for g in gen_ramsey_gt(inst):
            for v in range(6):
                assert is_ramsey(sub, g.delete_vertex(v))


class TestGenerateTestReduce:
    def test_party_problem_boundary(self):
        assert len(gen_ramsey_gt(RamseyInstance(3, 3, 5))) == 1
        assert gen_ramsey_gt(RamseyInstance(3, 3, 6)) == []

    def test_unique_five_vertex_solution_is_c5(self):
        [g] = gen_ramsey_gt(RamseyInstance(3, 3, 5))
        assert g == canonical_form(C5)

    def test_flag_combinations_on_five_vertices(self):
        inst = RamseyInstance(3, 3, 5)
        assert len(gen_ramsey_gt(inst, canonize=False)) == 12
        assert len(gen_ramsey_gt(inst, ramsey_filter=False)) == 34
        assert len(gen_ramsey_gt(inst, canonize=False,
                                 ramsey_filter=False)) == 1024

    def test_brute_force_agreement_small(self):
        for n in range(1, 6):
            for s, t in [(3, 3), (3, 4), (2, 3)]:
                inst = RamseyInstance(s, t, n)
                expected = dedup_canonical(
                    [g for g in all_graphs(n) if is_ramsey(inst, g)])
                assert gen_ramsey_gt(inst) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_35_class_counts(self, n):
        assert len(gen_ramsey_gt(RamseyInstance(3, 5, n))) == \
            R35_CLASS_COUNTS[n - 1]

    def test_outputs_are_ramsey_and_canonical(self):
        inst = RamseyInstance(3, 5, 7)
        out = gen_ramsey_gt(inst)
        assert all(is_ramsey(inst, g) for g in out)
        assert all(canonical_form(g) == g for g in out)

    def test_trace_matches_direct_run(self):
        steps = list(gen_ramsey_gt_trace(RamseyInstance(3, 5, 6)))
        assert [s.n for s in steps] == [1, 2, 3, 4, 5, 6]
        assert [len(s.graphs) for s in steps] == R35_CLASS_COUNTS[:6]
        assert steps[-1].graphs == gen_ramsey_gt(RamseyInstance(3, 5, 6))


class TestEncoding:
    def test_edge_var_map_layout(self):
        evm = EdgeVarMap.for_vertices(5)
        assert evm[(0, 1)] == 1
        assert evm[(1, 0)] == 1
        assert evm[(0, 4)] == 4
        assert evm[(1, 2)] == 5
        assert evm[(3, 4)] == 10
        assert evm.num_edge_vars == 10

    def test_subset_clauses_present(self):
        evm, f = encode_ramsey(RamseyInstance(3, 3, 5))
        ints = [sorted(c.as_ints()) for c in f.clauses]
        a, b, e = evm[(0, 1)], evm[(0, 2)], evm[(1, 2)]
        # triple {0,1,2}: at least one edge, at least one non-edge
        assert sorted([a, b, e]) in ints
        assert sorted([-a, -b, -e]) in ints

    def test_lex_break_leading_clause(self):
        # rows 0 and 1 compared with columns 0,1 removed: first positions
        # are edge {0,2} vs edge {1,2}, giving the clause (not x) or y
        evm, f = encode_ramsey(RamseyInstance(3, 3, 5))
        ints = [c.as_ints() for c in f.clauses]
        assert [-evm[(0, 2)], evm[(1, 2)]] in ints

    def test_unsatisfiable_corner(self):
        # s = 1 forbids every single vertex: no coloring exists for n >= 1
        evm, f = encode_ramsey(RamseyInstance(1, 3, 2))
        assert sat.solve(f) is None

    def test_decode_model_round_trip(self):
        evm, f = encode_ramsey(RamseyInstance(3, 3, 5))
        models = sat.solve_all(f, evm.var.values())
        for m in models:
            g = decode_model(evm, m)
            assert all(m[evm[(u, v)]] == g.has_edge(u, v)
                       for u, v in itertools.combinations(range(5), 2))

    def test_symmetry_break_soundness(self):
        # dropping the lex constraints must not lose any canonical class
        for n in range(1, 6):
            inst = RamseyInstance(3, 4, n)
            evm, f = encode_ramsey(inst)
            graphs = [decode_model(evm, m)
                      for m in sat.solve_all(f, evm.var.values())]
            assert all(is_ramsey(inst, g) for g in graphs)
            assert dedup_canonical(graphs) == gen_ramsey_gt(inst)


class TestPipelineEquivalence:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_33_pipelines_agree(self, n):
        inst = RamseyInstance(3, 3, n)
        assert gen_ramsey_cg(inst) == gen_ramsey_gt(inst)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_35_pipelines_agree(self, n):
        inst = RamseyInstance(3, 5, n)
        assert gen_ramsey_cg(inst) == gen_ramsey_gt(inst)

    def test_34_pipelines_agree(self):
        inst = RamseyInstance(3, 4, 6)
        assert gen_ramsey_cg(inst) == gen_ramsey_gt(inst)
