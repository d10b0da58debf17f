import pytest

from matroidkit import (
    ConsistencyError,
    InputError,
    MengerCertificate,
    MengerInstance,
    Multigraph,
    solve,
)
from matroidkit.menger import (
    forest_structure,
    reduce as reduce_instance,
    separator_from_partition,
    verify,
)
from matroidkit.oracles import brute_max_disjoint_paths

from conftest import path3_graph

fs = frozenset


class TestReduce:
    def test_path_reduces_to_free_matroids(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        m_s, m_t, ground = reduce_instance(inst)
        assert ground == (0, 1)
        assert m_s.ground.labels == ("e0", "e1") == m_t.ground.labels
        assert m_s.circuits() == [] and m_t.circuits() == []

    def test_k22_side_contraction_creates_parallel_pairs(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        m_s, m_t, ground = reduce_instance(inst)
        assert ground == (0, 1, 2, 3)
        assert m_s.circuits() == [fs({0, 2}), fs({1, 3})]
        assert m_t.circuits() == [fs({0, 1}), fs({2, 3})]

    def test_identical_singleton_terminals_keep_the_graph(self, triangle):
        inst = MengerInstance.from_labels(triangle, ["v"], ["v"])
        m_s, m_t, ground = reduce_instance(inst)
        assert ground == (0, 1, 2)
        assert m_s.circuits() == [fs({0, 1, 2})] == m_t.circuits()

    def test_internal_edges_leave_the_ground_set(self):
        g = Multigraph.from_labels(
            ["a", "b", "c"], [("s_edge", "a", "b"), ("mid", "b", "c")]
        )
        inst = MengerInstance.from_labels(g, ["a", "b"], ["c"])
        _, _, ground = reduce_instance(inst)
        assert ground == (1,)  # the intra-S edge is gone

    def test_empty_terminals_rejected(self, path3):
        with pytest.raises(InputError):
            MengerInstance(path3, fs(), fs({0}))


class TestForestStructure:
    def test_path_component_carries_the_path(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        fp = forest_structure(inst, {0, 1}, {0, 1}, fs())
        (mc,) = fp.components
        assert mc.path == (0, 1, 2)
        assert mc.pivot == 2  # no K_T edge stops the initial segment
        assert fp.k_s == fs({0, 1}) and fp.k_t == fs()

    def test_pivot_stops_before_the_first_t_part_edge(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        fp = forest_structure(inst, {0, 1}, {0}, {1})
        (mc,) = fp.components
        assert mc.pivot == 1
        assert fp.k_s == fs({0}) and fp.k_t == fs({1})

    def test_s_only_component_goes_to_k_s(self):
        g = Multigraph.from_labels(
            ["a", "b", "c", "d"], [("e0", "a", "b"), ("e1", "c", "d")]
        )
        inst = MengerInstance.from_labels(g, ["a"], ["d"])
        fp = forest_structure(inst, {0, 1}, {0}, {1})
        assert fp.k_s == fs({0})  # component meeting only S
        assert fp.k_t == fs({1})  # component meeting only T

    def test_cycle_in_certificate_edges_is_inconsistent(self, triangle):
        inst = MengerInstance.from_labels(triangle, ["u"], ["w"])
        with pytest.raises(ConsistencyError):
            forest_structure(inst, {0, 1, 2}, {0, 1, 2}, fs())

    def test_two_terminal_vertices_in_one_component_is_inconsistent(self, path3):
        inst = MengerInstance.from_labels(path3, ["a", "c"], ["b"])
        with pytest.raises(ConsistencyError):
            forest_structure(inst, {0, 1}, {0, 1}, fs())

    def test_component_avoiding_terminals_is_inconsistent(self):
        g = Multigraph.from_labels(
            ["a", "b", "c", "d"], [("e0", "a", "b"), ("e1", "c", "d")]
        )
        inst = MengerInstance.from_labels(g, ["a"], ["b"])
        with pytest.raises(ConsistencyError):
            forest_structure(inst, {0, 1}, {0, 1}, fs())

    def test_overlapping_terminals_rejected_here(self, triangle):
        inst = MengerInstance.from_labels(triangle, ["u"], ["u", "w"])
        with pytest.raises(InputError):
            forest_structure(inst, fs(), fs(), fs())


class TestSeparatorFromPartition:
    def test_path_instance(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        fp = forest_structure(inst, {0, 1}, {0, 1}, fs())
        cert = separator_from_partition(inst, fp)
        assert cert.paths == ((0, 1, 2),)
        assert cert.separator == fs({2})
        assert verify(inst, cert)

    def test_k22_instance_has_two_paths(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        cert = solve(inst)
        assert cert.count == 2
        assert len(cert.separator) == 2
        assert all(len(cert.separator & fs(p)) == 1 for p in cert.paths)


class TestSolve:
    def test_path_graph(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        cert = solve(inst)
        assert cert.count == 1 and len(cert.separator) == 1
        assert verify(inst, cert)

    def test_single_shared_terminal(self, triangle):
        inst = MengerInstance.from_labels(triangle, ["v"], ["v"])
        cert = solve(inst)
        assert cert.paths == ((1,),)
        assert cert.separator == fs({1})

    def test_shared_vertex_cuts_everything(self):
        # b separates a from c, and b belongs to both terminal sets
        g = path3_graph()
        inst = MengerInstance.from_labels(g, ["a", "b"], ["b", "c"])
        cert = solve(inst)
        assert brute_max_disjoint_paths(g, inst.s, inst.t) == cert.count
        assert verify(inst, cert)

    def test_disconnected_graph_solved_per_component(self):
        g = Multigraph.from_labels(
            ["a", "b", "c", "d"], [("e0", "a", "b"), ("e1", "c", "d")]
        )
        inst = MengerInstance.from_labels(g, ["a", "c"], ["b", "d"])
        cert = solve(inst)
        assert cert.count == 2 == brute_max_disjoint_paths(g, inst.s, inst.t)
        assert verify(inst, cert)

    def test_unreachable_terminals_give_empty_certificate(self):
        g = Multigraph.from_labels(["a", "b", "c"], [("e0", "a", "b")])
        inst = MengerInstance.from_labels(g, ["a"], ["c"])
        cert = solve(inst)
        assert cert.count == 0 and cert.separator == fs()
        assert verify(inst, cert)

    def test_loops_and_parallels_are_harmless(self):
        g = Multigraph.from_labels(
            ["a", "b"],
            [("l", "a", "a"), ("e1", "a", "b"), ("e2", "a", "b")],
        )
        inst = MengerInstance.from_labels(g, ["a"], ["b"])
        cert = solve(inst)
        assert cert.count == 1 == brute_max_disjoint_paths(g, inst.s, inst.t)

    def test_deterministic(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        assert solve(inst) == solve(inst)


class TestVerify:
    def test_dropping_a_separator_vertex_fails(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        cert = solve(inst)
        smaller = MengerCertificate(cert.paths, cert.separator - {min(cert.separator)})
        verdict = verify(inst, smaller)
        assert not verdict

    def test_duplicated_path_fails(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        cert = solve(inst)
        doubled = MengerCertificate(cert.paths + cert.paths, cert.separator)
        verdict = verify(inst, doubled)
        assert not verdict and verdict.reason == "paths are not vertex-disjoint"

    def test_wrong_endpoints_fail(self, path3):
        inst = MengerInstance.from_labels(path3, ["a"], ["c"])
        bad = MengerCertificate(((1, 2),), fs({2}))
        verdict = verify(inst, bad)
        assert not verdict and verdict.reason == "path endpoints are not an S-T pair"

    def test_non_separating_set_fails(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        bad = MengerCertificate(((0, 2),), fs({2}))
        verdict = verify(inst, bad)
        assert not verdict and verdict.reason == "not separating"

    def test_broken_adjacency_fails(self, k22):
        inst = MengerInstance.from_labels(k22, ["u1", "u2"], ["w1", "w2"])
        bad = MengerCertificate(((0, 1, 2),), fs({2}))  # u1-u2 is not an edge
        verdict = verify(inst, bad)
        assert not verdict and verdict.reason == "path uses a missing edge"
