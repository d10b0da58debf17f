"""Finite labeled multigraphs: loops and parallel edges are first class."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError


class UnionFind:
    """Plain union-find with path compression; no ranks needed at this scale."""

    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False when already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Multigraph:
    """Vertices and edges carry dense ids; labels are for display and I/O."""

    vertex_labels: tuple[str, ...]
    endpoints: tuple[tuple[int, int], ...]
    edge_labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.vertex_labels)) != len(self.vertex_labels):
            raise InputError("vertex labels are not pairwise distinct")
        if len(set(self.edge_labels)) != len(self.edge_labels):
            raise InputError("edge labels are not pairwise distinct")
        if len(self.endpoints) != len(self.edge_labels):
            raise InputError("edge labels and endpoints disagree in length")
        n = len(self.vertex_labels)
        for u, v in self.endpoints:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge endpoint ({u}, {v}) references a missing vertex")

    @classmethod
    def from_labels(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]
    ) -> "Multigraph":
        """Build from (edge label, endpoint label, endpoint label) triples."""
        vlabels = tuple(vertices)
        index = {lbl: i for i, lbl in enumerate(vlabels)}
        if len(index) != len(vlabels):
            raise InputError("vertex labels are not pairwise distinct")
        elabels = []
        ends = []
        for name, u, v in edges:
            if u not in index or v not in index:
                raise InputError(f"edge {name!r} references missing vertex {u!r} or {v!r}")
            elabels.append(name)
            ends.append((index[u], index[v]))
        return cls(vlabels, tuple(ends), tuple(elabels))

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return len(self.edge_labels)

    def vertices(self) -> range:
        return range(len(self.vertex_labels))

    def edges(self) -> range:
        return range(len(self.edge_labels))

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertex_labels.index(label)
        except ValueError:
            raise InputError(f"unknown vertex label {label!r}") from None

    def vertex_subset(self, xs: Iterable[int]) -> frozenset[int]:
        s = frozenset(xs)
        for v in s:
            if not isinstance(v, int) or v < 0 or v >= len(self.vertex_labels):
                raise InputError(f"vertex {v!r} outside graph")
        return s

    def edge_subset(self, xs: Iterable[int]) -> frozenset[int]:
        s = frozenset(xs)
        for e in s:
            if not isinstance(e, int) or e < 0 or e >= len(self.edge_labels):
                raise InputError(f"edge {e!r} outside graph")
        return s

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints[e]
        return u == v


@dataclass(frozen=True)
class Component:
    """A connected piece of an edge-spanned subgraph."""

    vertices: frozenset[int]
    edges: frozenset[int]
    is_tree: bool


def graphic_components(g: Multigraph, edge_subset: Iterable[int]) -> list[Component]:
    """Connected components of the subgraph spanned by the given edges.

    Isolated vertices are omitted; a component is a tree exactly when its
    edge count is one less than its vertex count (loops therefore never
    appear in trees).
    """
    chosen = sorted(g.edge_subset(edge_subset))
    uf = UnionFind()
    touched: set[int] = set()
    for e in chosen:
        u, v = g.endpoints[e]
        touched.add(u)
        touched.add(v)
        uf.union(u, v)
    groups: dict[int, dict] = {}
    for v in sorted(touched):
        groups.setdefault(uf.find(v), {"vertices": set(), "edges": set()})["vertices"].add(v)
    for e in chosen:
        groups[uf.find(g.endpoints[e][0])]["edges"].add(e)
    out = []
    for root in sorted(groups, key=lambda r: min(groups[r]["vertices"])):
        vs = frozenset(groups[root]["vertices"])
        es = frozenset(groups[root]["edges"])
        out.append(Component(vs, es, is_tree=len(es) == len(vs) - 1))
    return out


def connected_components(g: Multigraph) -> list[frozenset[int]]:
    """Vertex partition into connected components, isolated vertices included."""
    uf = UnionFind()
    for v in g.vertices():
        uf.find(v)
    for u, v in g.endpoints:
        uf.union(u, v)
    groups: dict[int, set[int]] = {}
    for v in g.vertices():
        groups.setdefault(uf.find(v), set()).add(v)
    return [frozenset(groups[r]) for r in sorted(groups, key=lambda r: min(groups[r]))]


def identify_vertices(g: Multigraph, merge: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Merge the given vertices into one; edge ids and labels are preserved.

    Edges inside the merged set become loops.  The merged vertex sits at the
    position of the smallest merged id and keeps that vertex's label; the
    returned map sends old vertex ids to new ones.
    """
    s = g.vertex_subset(merge)
    if not s:
        raise InputError("cannot identify an empty vertex set")
    anchor = min(s)
    vmap: dict[int, int] = {}
    labels = []
    for v in g.vertices():
        if v in s and v != anchor:
            continue
        vmap[v] = len(labels)
        labels.append(g.vertex_labels[v])
    for v in s:
        vmap[v] = vmap[anchor]
    ends = tuple((vmap[u], vmap[v]) for u, v in g.endpoints)
    return Multigraph(tuple(labels), ends, g.edge_labels), vmap


def restrict_edges(g: Multigraph, keep: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Keep only the given edges (all vertices stay); returns old-to-new edge map."""
    kept = sorted(g.edge_subset(keep))
    emap = {old: new for new, old in enumerate(kept)}
    return (
        Multigraph(
            g.vertex_labels,
            tuple(g.endpoints[e] for e in kept),
            tuple(g.edge_labels[e] for e in kept),
        ),
        emap,
    )


def induced_subgraph(
    g: Multigraph, vertices: Iterable[int]
) -> tuple[Multigraph, dict[int, int], dict[int, int]]:
    """Subgraph on the given vertices with every edge joining two of them.

    Returns the subgraph plus old-to-new vertex and edge maps.
    """
    vs = sorted(g.vertex_subset(vertices))
    vmap = {old: new for new, old in enumerate(vs)}
    elabels = []
    ends = []
    emap: dict[int, int] = {}
    for e in g.edges():
        u, v = g.endpoints[e]
        if u in vmap and v in vmap:
            emap[e] = len(elabels)
            elabels.append(g.edge_labels[e])
            ends.append((vmap[u], vmap[v]))
    return (
        Multigraph(tuple(g.vertex_labels[v] for v in vs), tuple(ends), tuple(elabels)),
        vmap,
        emap,
    )
