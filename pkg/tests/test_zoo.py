import pytest

from matroidkit import (
    Binary,
    Explicit,
    Graphic,
    InputError,
    Multigraph,
    Partition,
    Sum,
    Uniform,
    build,
    check_axioms,
    graphic_components,
    identify_vertices,
    materialize,
)
from matroidkit.core import subsets_by_size
from matroidkit.graphs import connected_components, induced_subgraph, restrict_edges

from conftest import path3_graph, triangle_graph


def gf2_rank(matrix, columns):
    """Test-local Gaussian elimination over GF(2), independent of the zoo."""
    rows = [list(r) for r in matrix]
    cols = sorted(columns)
    vectors = [[rows[r][c] for r in range(len(rows))] for c in cols]
    rank = 0
    width = len(rows)
    pivot_rows = []
    for vec in vectors:
        vec = vec[:]
        for pr, pv in pivot_rows:
            if vec[pr]:
                vec = [(a + b) % 2 for a, b in zip(vec, pv)]
        lead = next((i for i in range(width) if vec[i]), None)
        if lead is not None:
            pivot_rows.append((lead, vec))
            rank += 1
    return rank


class TestBuild:
    def test_uniform(self):
        m = build(Uniform(4, 2))
        assert m.is_independent({0, 1})
        assert m.rank() == 2

    def test_graphic_triangle_circuits(self):
        m = build(Graphic(triangle_graph()))
        assert m.circuits() == [frozenset({0, 1, 2})]

    def test_single_loop_is_dependent(self):
        g = Multigraph.from_labels(["v"], [("e", "v", "v")])
        m = build(Graphic(g))
        assert not m.is_independent({0})

    def test_parallel_edges_dependent_together(self):
        g = Multigraph.from_labels(["u", "v"], [("e1", "u", "v"), ("e2", "u", "v")])
        m = build(Graphic(g))
        assert m.is_independent({0}) and m.is_independent({1})
        assert not m.is_independent({0, 1})

    def test_partition_zero_capacity_makes_loops(self):
        m = build(Partition((("a", "b"),), (0,)))
        assert not m.is_independent({0})
        assert m.rank() == 0

    def test_partition_ground_is_label_sorted(self):
        m = build(Partition((("d", "b"), ("a", "c")), (1, 1)))
        assert m.ground.labels == ("a", "b", "c", "d")

    def test_partition_overlapping_blocks_rejected(self):
        with pytest.raises(InputError):
            build(Partition((("a", "b"), ("b",)), (1, 1)))

    def test_binary_duplicate_columns_dependent(self):
        m = build(Binary(((1, 1),)))
        assert not m.is_independent({0, 1})

    def test_binary_zero_column_is_loop(self):
        m = build(Binary(((1, 0), (0, 0))))
        assert not m.is_independent({1})

    def test_binary_rank_matches_independent_elimination(self):
        matrices = [
            ((1, 0, 1), (0, 1, 1)),
            ((1, 1, 1, 0), (0, 1, 0, 1), (1, 0, 1, 1)),
            ((0, 0), (0, 0)),
        ]
        for matrix in matrices:
            m = build(Binary(matrix))
            for xs in subsets_by_size(m.elements()):
                assert m.rank(xs) == gf2_rank(matrix, xs)

    def test_sum_is_blockwise(self):
        m = build(Sum((Uniform(2, 1, labels=("a", "b")), Uniform(2, 2, labels=("c", "d")))))
        assert m.ground.labels == ("a", "b", "c", "d")
        assert m.is_independent({0, 2, 3})
        assert not m.is_independent({0, 1})
        for xs in subsets_by_size(range(4)):
            left = frozenset(e for e in xs if e < 2)
            right = frozenset(e - 2 for e in xs if e >= 2)
            expected = min(len(left), 1) + len(right)
            assert m.rank(xs) == expected

    def test_sum_label_clash_rejected(self):
        with pytest.raises(InputError):
            build(Sum((Uniform(1, 1, labels=("a",)), Uniform(1, 1, labels=("a",)))))

    def test_explicit_membership(self):
        m = build(Explicit(ground=("a", "b"), independent=((), ("a",))))
        assert m.is_independent(frozenset())
        assert m.is_independent({0})
        assert not m.is_independent({1})

    def test_dangling_edge_endpoint_rejected(self):
        with pytest.raises(InputError):
            Multigraph.from_labels(["a"], [("e", "a", "zz")])

    def test_every_family_passes_axioms_when_materialized(self):
        specs = [
            Uniform(4, 2),
            Partition((("a", "b"), ("c",)), (1, 1)),
            Graphic(triangle_graph()),
            Binary(((1, 0, 1), (0, 1, 1))),
            Explicit(ground=("a", "b"), independent=((), ("a",), ("b",))),
            Sum((Uniform(2, 1, labels=("a", "b")), Uniform(2, 1, labels=("c", "d")))),
        ]
        for spec in specs:
            assert check_axioms(materialize(build(spec))).ok, spec


class TestGraphicRankFormula:
    def test_rank_is_vertices_minus_components(self):
        graphs = [
            triangle_graph(),
            path3_graph(),
            Multigraph.from_labels(
                ["u", "v"], [("loop", "u", "u"), ("e1", "u", "v"), ("e2", "u", "v")]
            ),
        ]
        for g in graphs:
            m = build(Graphic(g))
            for xs in subsets_by_size(g.edges()):
                comps = graphic_components(g, xs)
                touched = set().union(*(c.vertices for c in comps)) if comps else set()
                assert m.rank(xs) == len(touched) - len(comps)


class TestGraphicComponents:
    def test_two_edges_of_triangle(self):
        comps = graphic_components(triangle_graph(), {0, 1})
        assert len(comps) == 1
        assert comps[0].vertices == frozenset({0, 1, 2})
        assert comps[0].is_tree

    def test_empty_edge_set(self):
        assert graphic_components(triangle_graph(), frozenset()) == []

    def test_two_disjoint_edges(self):
        g = Multigraph.from_labels(
            ["a", "b", "c", "d"], [("e0", "a", "b"), ("e1", "c", "d")]
        )
        comps = graphic_components(g, {0, 1})
        assert len(comps) == 2

    def test_loop_component_is_not_a_tree(self):
        g = Multigraph.from_labels(["v"], [("loop", "v", "v")])
        (comp,) = graphic_components(g, {0})
        assert not comp.is_tree


class TestIdentifyVertices:
    def test_path_endpoints_merge_into_parallel_pair(self):
        merged, vmap = identify_vertices(path3_graph(), {0, 2})
        assert merged.vertex_count == 2
        assert vmap[0] == vmap[2]
        ends = {frozenset(e) for e in merged.endpoints}
        assert ends == {frozenset({vmap[0], vmap[1]})}
        assert merged.edge_labels == ("e0", "e1")

    def test_singleton_merge_is_isomorphic(self):
        merged, vmap = identify_vertices(triangle_graph(), {1})
        assert merged.vertex_count == 3
        assert sorted(vmap.values()) == [0, 1, 2]

    def test_triangle_merge_makes_loop_and_parallels(self):
        merged, vmap = identify_vertices(triangle_graph(), {0, 1})
        loops = [e for e in merged.edges() if merged.is_loop(e)]
        assert loops == [0]  # the edge between the merged pair
        others = [frozenset(merged.endpoints[e]) for e in merged.edges() if e not in loops]
        assert others[0] == others[1]  # parallel pair to the outside vertex

    def test_empty_merge_rejected(self):
        with pytest.raises(InputError):
            identify_vertices(triangle_graph(), frozenset())


class TestGraphHelpers:
    def test_connected_components_include_isolated(self):
        g = Multigraph.from_labels(["a", "b", "c"], [("e", "a", "b")])
        assert connected_components(g) == [frozenset({0, 1}), frozenset({2})]

    def test_restrict_edges_preserves_labels(self):
        sub, emap = restrict_edges(triangle_graph(), {2, 0})
        assert sub.edge_labels == ("e1", "e3")
        assert emap == {0: 0, 2: 1}

    def test_induced_subgraph_maps(self):
        sub, vmap, emap = induced_subgraph(path3_graph(), {1, 2})
        assert sub.vertex_labels == ("b", "c")
        assert sub.edge_labels == ("e1",)
        assert vmap == {1: 0, 2: 1} and emap == {1: 0}
