"""Vertex-disjoint path certificates via matroid intersection.

For vertex sets S and T in a finite graph, two graphic matroids are built
on the edges outside S-internal and T-internal edges: one contracts S to a
point, the other contracts T.  A covering-partition certificate for that
pair turns into a forest whose components thread S to T; repartitioning the
forest around one pivot vertex per through-component yields a separator
that picks exactly one vertex from each path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import CheckResult, Matroid
from .errors import ConsistencyError, InputError
from .graphs import (
    Component,
    Multigraph,
    connected_components,
    graphic_components,
    identify_vertices,
    induced_subgraph,
    restrict_edges,
)
from .intersection import certify
from .union import Observer
from .zoo import Graphic, build


@dataclass(frozen=True)
class MengerInstance:
    graph: Multigraph
    s: frozenset[int]
    t: frozenset[int]

    def __post_init__(self):
        if not self.s or not self.t:
            raise InputError("both terminal vertex sets must be nonempty")
        self.graph.vertex_subset(self.s)
        self.graph.vertex_subset(self.t)

    @classmethod
    def from_labels(
        cls, graph: Multigraph, s: Iterable[str], t: Iterable[str]
    ) -> "MengerInstance":
        return cls(
            graph,
            frozenset(graph.vertex_index(lbl) for lbl in s),
            frozenset(graph.vertex_index(lbl) for lbl in t),
        )


@dataclass(frozen=True)
class MengerCertificate:
    """Disjoint S-T paths and a separator meeting each path exactly once.

    A path may be a single vertex when that vertex lies in both S and T.
    """

    paths: tuple[tuple[int, ...], ...]
    separator: frozenset[int]

    @property
    def count(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class MarkedComponent:
    """A tree component of the certificate forest with its terminal data."""

    component: Component
    s_vertices: frozenset[int]
    t_vertices: frozenset[int]
    path: tuple[int, ...] | None
    pivot: int | None


@dataclass(frozen=True)
class ForestPartition:
    """The certificate edges split twice: the raw parts and the repartition
    that concentrates the separator onto one vertex per through-component."""

    i_edges: frozenset[int]
    j_s: frozenset[int]
    j_t: frozenset[int]
    k_s: frozenset[int]
    k_t: frozenset[int]
    components: tuple[MarkedComponent, ...]


def _internal_edges(g: Multigraph, vertices: frozenset[int]) -> frozenset[int]:
    return frozenset(
        e for e in g.edges() if set(g.endpoints[e]) <= vertices
    )


def reduce(inst: MengerInstance) -> tuple[Matroid, Matroid, tuple[int, ...]]:
    """Build the matroid pair (M_S, M_T) over the shared edge ground set.

    M_S is the graphic matroid of the graph with S identified to a single
    vertex, restricted to the edges that are internal to neither S nor T;
    M_T is symmetric.  The returned tuple maps ground ids back to edge ids
    of the instance graph.
    """
    g = inst.graph
    dropped = _internal_edges(g, inst.s) | _internal_edges(g, inst.t)
    keep = tuple(e for e in g.edges() if e not in dropped)

    def contracted(side: frozenset[int]) -> Matroid:
        merged, _ = identify_vertices(g, side)
        sub, emap = restrict_edges(merged, keep)
        assert [emap[e] for e in keep] == list(range(len(keep)))
        return build(Graphic(sub))

    return contracted(inst.s), contracted(inst.t), keep


def _tree_path(g: Multigraph, comp: Component, start: int, goal: int) -> tuple[int, ...]:
    """The unique path between two vertices of a tree component."""
    parent: dict[int, int] = {start: start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in sorted(frontier):
            for e in sorted(comp.edges):
                a, b = g.endpoints[e]
                for u, w in ((a, b), (b, a)):
                    if u == v and w not in parent:
                        parent[w] = v
                        nxt.append(w)
        frontier = nxt
    if goal not in parent:
        raise ConsistencyError("component is not connected between its terminals")
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def _edge_between(g: Multigraph, comp: Component, u: int, v: int) -> int:
    for e in sorted(comp.edges):
        if set(g.endpoints[e]) == {u, v}:
            return e
    raise ConsistencyError(f"no tree edge between vertices {u} and {v}")


def forest_structure(
    inst: MengerInstance,
    i_edges: Iterable[int],
    j_s: Iterable[int],
    j_t: Iterable[int],
) -> ForestPartition:
    """Check the certificate forest and repartition it around pivot vertices.

    The components of the edge set are computed in the original graph and
    must be trees touching S or T, with at most one vertex in each terminal
    set.  A component threading both carries the unique S-to-T path; its
    pivot is the last vertex reachable from the S-end before the first
    edge of the T-part, and each branch hanging off the pivot goes whole
    into K_S or K_T according to the part of its attaching edge.
    """
    g = inst.graph
    if inst.s & inst.t:
        raise InputError("terminal sets must be disjoint here; peel shared vertices first")
    i_set = g.edge_subset(i_edges)
    js = g.edge_subset(j_s)
    jt = g.edge_subset(j_t)
    if js & jt or js | jt != i_set:
        raise InputError("the two parts must partition the certificate edges")

    k_s: set[int] = set()
    k_t: set[int] = set()
    marked: list[MarkedComponent] = []
    for comp in graphic_components(g, i_set):
        if not comp.is_tree:
            raise ConsistencyError("certificate edges span a component with a cycle")
        s_hits = comp.vertices & inst.s
        t_hits = comp.vertices & inst.t
        if len(s_hits) > 1 or len(t_hits) > 1:
            raise ConsistencyError(
                "a certificate component meets a terminal set more than once"
            )
        if not s_hits and not t_hits:
            raise ConsistencyError("a certificate component avoids both terminal sets")
        path = None
        pivot = None
        if s_hits and t_hits:
            path = _tree_path(g, comp, min(s_hits), min(t_hits))
            pivot = path[0]
            for u, v in zip(path, path[1:]):
                if _edge_between(g, comp, u, v) in jt:
                    break
                pivot = v
            for branch, attach in _branches(g, comp, pivot):
                target = k_s if attach in js else k_t
                target.update(branch)
                target.add(attach)
        elif s_hits:
            k_s.update(comp.edges)
        else:
            k_t.update(comp.edges)
        marked.append(
            MarkedComponent(
                component=comp,
                s_vertices=frozenset(s_hits),
                t_vertices=frozenset(t_hits),
                path=path,
                pivot=pivot,
            )
        )

    fp = ForestPartition(
        i_edges=i_set,
        j_s=js,
        j_t=jt,
        k_s=frozenset(k_s),
        k_t=frozenset(k_t),
        components=tuple(marked),
    )
    _check_pivot_uniqueness(inst, fp)
    return fp


def _branches(g: Multigraph, comp: Component, pivot: int):
    """Branches hanging off the pivot: (edge set of the branch, attaching edge).

    Each branch of a tree is attached to the pivot by exactly one edge.
    """
    away = [e for e in sorted(comp.edges) if pivot not in g.endpoints[e]]
    attached = [e for e in sorted(comp.edges) if pivot in g.endpoints[e]]
    seen_vertices: set[int] = set()
    for root_edge in attached:
        a, b = g.endpoints[root_edge]
        root = b if a == pivot else a
        if root in seen_vertices:
            raise ConsistencyError("two attaching edges reach the same branch")
        branch_vertices = {root}
        branch_edges: set[int] = set()
        grew = True
        while grew:
            grew = False
            for e in away:
                if e in branch_edges:
                    continue
                u, v = g.endpoints[e]
                if u in branch_vertices or v in branch_vertices:
                    branch_edges.add(e)
                    branch_vertices.update((u, v))
                    grew = True
        seen_vertices.update(branch_vertices)
        yield frozenset(branch_edges), root_edge


def _check_pivot_uniqueness(inst: MengerInstance, fp: ForestPartition) -> None:
    """At most one vertex per through-component may touch both sides."""
    g = inst.graph
    s_touch = set(inst.s)
    t_touch = set(inst.t)
    for e in fp.k_s:
        s_touch.update(g.endpoints[e])
    for e in fp.k_t:
        t_touch.update(g.endpoints[e])
    for mc in fp.components:
        if mc.path is None:
            continue
        both = mc.component.vertices & frozenset(s_touch) & frozenset(t_touch)
        if len(both) > 1:
            raise ConsistencyError(
                "repartition left more than one two-sided vertex in a component"
            )


def separator_from_partition(inst: MengerInstance, fp: ForestPartition) -> MengerCertificate:
    """Read the certificate off the repartition and check its structure.

    V_S collects S plus the endpoints of K_S edges, V_T symmetrically; their
    intersection is the separator.  Everything asserted here holds whenever
    the repartition came from a genuine covering partition.
    """
    g = inst.graph
    v_s = set(inst.s)
    v_t = set(inst.t)
    for e in fp.k_s:
        v_s.update(g.endpoints[e])
    for e in fp.k_t:
        v_t.update(g.endpoints[e])
    if v_s | v_t != set(g.vertices()):
        raise ConsistencyError("the two vertex sides fail to cover the graph")
    for e in g.edges():
        ends = set(g.endpoints[e])
        if not (ends <= v_s or ends <= v_t):
            raise ConsistencyError("an edge crosses between the two vertex sides")
    separator = frozenset(v_s & v_t)
    paths = tuple(
        mc.path
        for mc in sorted(
            (mc for mc in fp.components if mc.path is not None),
            key=lambda mc: min(mc.component.vertices),
        )
    )
    path_vertices = frozenset(v for p in paths for v in p)
    if not separator <= path_vertices:
        raise ConsistencyError("separator vertex off every path")
    for p in paths:
        if len(separator & frozenset(p)) != 1:
            raise ConsistencyError("a path does not meet the separator exactly once")
    return MengerCertificate(paths=paths, separator=separator)


def solve(inst: MengerInstance, observer: Observer | None = None) -> MengerCertificate:
    """Full pipeline: peel shared terminals, reduce, certify, repartition.

    Vertices in both S and T are forced into any separator; they are taken
    as single-vertex paths and removed before the reduction.  The remaining
    graph is handled one connected component at a time, and only components
    touching both terminal sets can contribute paths.  An observer, when
    given, sees every augmentation step of the underlying union searches.
    """
    g = inst.graph
    shared = inst.s & inst.t
    paths: list[tuple[int, ...]] = [(v,) for v in sorted(shared)]
    separator = set(shared)

    remaining = [v for v in g.vertices() if v not in shared]
    sub, vmap, _ = induced_subgraph(g, remaining)
    back = {new: old for old, new in vmap.items()}
    s_rest = frozenset(vmap[v] for v in inst.s - shared if v in vmap)
    t_rest = frozenset(vmap[v] for v in inst.t - shared if v in vmap)

    for comp_vertices in connected_components(sub):
        s_local = comp_vertices & s_rest
        t_local = comp_vertices & t_rest
        if not s_local or not t_local:
            continue
        piece, pmap, emap_piece = induced_subgraph(sub, comp_vertices)
        piece_back = {new: back[old] for old, new in pmap.items()}
        local = MengerInstance(
            piece,
            frozenset(pmap[v] for v in s_local),
            frozenset(pmap[v] for v in t_local),
        )
        m_s, m_t, ground_edges = reduce(local)
        cert = certify(m_s, m_t, observer=observer)
        i_edges = frozenset(ground_edges[e] for e in cert.i)
        j_s = frozenset(ground_edges[e] for e in cert.j1)
        j_t = frozenset(ground_edges[e] for e in cert.j2)
        fp = forest_structure(local, i_edges, j_s, j_t)
        local_cert = separator_from_partition(local, fp)
        paths.extend(
            tuple(piece_back[v] for v in p) for p in local_cert.paths
        )
        separator.update(piece_back[v] for v in local_cert.separator)

    certificate = MengerCertificate(
        paths=tuple(sorted(paths, key=lambda p: p[0])), separator=frozenset(separator)
    )
    verdict = verify(inst, certificate)
    if not verdict:
        raise ConsistencyError(f"solver produced an invalid certificate: {verdict.reason}")
    return certificate


def verify(inst: MengerInstance, cert: MengerCertificate) -> CheckResult:
    """Check a path-and-separator certificate from scratch; pure."""
    g = inst.graph
    seen: set[int] = set()
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices()}
    for u, v in g.endpoints:
        adjacency[u].add(v)
        adjacency[v].add(u)
    for p in cert.paths:
        if not p:
            return CheckResult(False, "empty path")
        try:
            g.vertex_subset(p)
        except InputError:
            return CheckResult(False, "path references unknown vertices")
        if p[0] not in inst.s or p[-1] not in inst.t:
            return CheckResult(False, "path endpoints are not an S-T pair", (p,))
        if len(set(p)) != len(p):
            return CheckResult(False, "path revisits a vertex", (p,))
        for u, v in zip(p, p[1:]):
            if v not in adjacency[u]:
                return CheckResult(False, "path uses a missing edge", (u, v))
        if seen & set(p):
            return CheckResult(False, "paths are not vertex-disjoint", (p,))
        seen.update(p)
    try:
        separator = g.vertex_subset(cert.separator)
    except InputError:
        return CheckResult(False, "separator references unknown vertices")
    if not separator <= seen:
        return CheckResult(False, "separator vertex off every path")
    for p in cert.paths:
        if len(separator & frozenset(p)) != 1:
            return CheckResult(False, "a path does not meet the separator exactly once", (p,))
    # Separation by traversal: no S-T path may survive deleting the separator.
    frontier = sorted(inst.s - separator)
    reachable = set(frontier)
    while frontier:
        nxt = []
        for v in frontier:
            for w in adjacency[v]:
                if w not in separator and w not in reachable:
                    reachable.add(w)
                    nxt.append(w)
        frontier = sorted(nxt)
    if reachable & (inst.t - separator):
        return CheckResult(False, "not separating", tuple(sorted(reachable & inst.t)))
    return CheckResult(True)
