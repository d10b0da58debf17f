"""Covering-partition certificates for matroid intersection.

The pipeline: maximize the union of the first matroid with the dual of the
second, read off the base pair (B1, B2*), and split the ground set into
I = B1 and B2, X = B1 and B2*, Y = B2 less I, Z = B2* less X.  A two-colored
exchange digraph on the non-I elements then yields the covering partition
I = J1 + J2 with cl_1(J1) together with cl_2(J2) covering everything.

The coloring invariants double as a bug detector: a forbidden blue-to-red
path can be rewound into an exchange chain that grows the supposedly
maximal union, and the reconstruction of that chain is implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CheckResult, Matroid, ENUMERATION_BOUND
from .errors import (
    CapacityError,
    InputError,
    InternalInvariantError,
)
from .union import (
    COMMON,
    EVEN,
    ODD,
    ExchangeChain,
    Observer,
    PairState,
    maximize_union,
    validate_chain,
)

BLUE = "blue"
RED = "red"


@dataclass(frozen=True)
class IntersectionState:
    """Base pair for the union of M1 with the dual of M2, with its four-way split."""

    b1: frozenset[int]
    b2star: frozenset[int]
    b2: frozenset[int]
    i: frozenset[int]
    x: frozenset[int]
    y: frozenset[int]
    z: frozenset[int]


@dataclass(frozen=True)
class ExchangeDigraph:
    """Arcs (u, v) whenever the fundamental circuits C1(u) and C2(v) share an
    element of I; each arc stores the least such witness.

    ``spanned_first``/``spanned_second`` record which nodes I spans in each
    matroid; they drive the coloring and cost nothing extra to compute here.
    """

    nodes: frozenset[int]
    arcs: tuple[tuple[int, int, int], ...]
    spanned_first: frozenset[int]
    spanned_second: frozenset[int]

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in sorted(self.nodes)}
        for tail, head, _ in self.arcs:
            out[tail].append(head)
        return out

    def predecessors(self) -> dict[int, list[int]]:
        inc: dict[int, list[int]] = {v: [] for v in sorted(self.nodes)}
        for tail, head, _ in self.arcs:
            inc[head].append(tail)
        return inc

    def witness(self, tail: int, head: int) -> int:
        for t, h, w in self.arcs:
            if t == tail and h == head:
                return w
        raise InputError(f"no arc ({tail}, {head}) in the exchange digraph")


@dataclass(frozen=True)
class DivisiveColoring:
    """Blue nodes are spanned by I in the first matroid, red in the second,
    and the circuits of same-colored nodes stay disjoint inside I."""

    blue: frozenset[int]
    red: frozenset[int]
    pre_blue: frozenset[int]
    pre_red: frozenset[int]


@dataclass(frozen=True)
class IntersectionCertificate:
    """A common independent set partitioned so the two closures cover E."""

    i: frozenset[int]
    j1: frozenset[int]
    j2: frozenset[int]


def state_from_bases(
    m1: Matroid, m2: Matroid, b1: frozenset[int], b2star: frozenset[int]
) -> IntersectionState:
    """Assemble the four-way split from explicit bases; no maximality implied.

    Exists so diagnostics and tests can feed deliberately bad base pairs;
    the regular pipeline goes through build_state.
    """
    if m1.ground != m2.ground:
        raise InputError("intersection needs a common ground set")
    ground = m1.ground
    b1 = ground.subset(b1)
    b2star = ground.subset(b2star)
    m2d = m2.dual()
    if m1.maximal_extension(b1) != b1:
        raise InputError("first set is not a base of the first matroid")
    if m2d.maximal_extension(b2star) != b2star:
        raise InputError("second set is not a base of the dual of the second matroid")
    b2 = ground.full() - b2star
    i = b1 & b2
    x = b1 & b2star
    return IntersectionState(
        b1=b1, b2star=b2star, b2=b2, i=i, x=x, y=b2 - i, z=b2star - x
    )


def span_report(m1: Matroid, m2: Matroid, st: IntersectionState) -> list[str]:
    """Containment checks the split must satisfy when the base pair is maximal:
    X inside cl_2(I), Y inside cl_1(I), Z inside their union."""
    cl1 = m1.closure(st.i)
    cl2 = m2.closure(st.i)
    problems = []
    if not st.x <= cl2:
        problems.append("X escapes cl_2(I)")
    if not st.y <= cl1:
        problems.append("Y escapes cl_1(I)")
    if not st.z <= cl1 | cl2:
        problems.append("Z escapes cl_1(I) plus cl_2(I)")
    return problems


def build_state(m1: Matroid, m2: Matroid, observer: Observer | None = None) -> IntersectionState:
    """Run the union construction against the dual and split the ground set."""
    if m1.ground != m2.ground:
        raise InputError("intersection needs a common ground set")
    pair = maximize_union(m1, m2.dual(), observer=observer)
    st = state_from_bases(m1, m2, pair.i1, pair.i2)
    problems = span_report(m1, m2, st)
    if problems:
        raise InternalInvariantError(
            "maximal base pair violates its span containments: " + "; ".join(problems),
            payload=st,
        )
    return st


def build_digraph(m1: Matroid, m2: Matroid, st: IntersectionState) -> ExchangeDigraph:
    """Exchange digraph on the non-I elements.

    Fundamental circuits are taken into B1 and B2; they do not exist for
    the members of B1 resp. B2, which is exactly why X-nodes are sinks and
    Y-nodes are sources.
    """
    nodes = m1.ground.full() - st.i
    c1: dict[int, frozenset[int] | None] = {}
    c2: dict[int, frozenset[int] | None] = {}
    for v in sorted(nodes):
        c1[v] = m1.fundamental_circuit(st.b1, v) if v not in st.b1 else None
        c2[v] = m2.fundamental_circuit(st.b2, v) if v not in st.b2 else None
    arcs = []
    for tail in sorted(nodes):
        if c1[tail] is None:
            continue
        for head in sorted(nodes):
            if head == tail or c2[head] is None:
                continue
            shared = c1[tail] & c2[head] & st.i
            if shared:
                arcs.append((tail, head, min(shared)))
    spanned_first = frozenset(v for v in nodes if not m1.is_independent(st.i | {v}))
    spanned_second = frozenset(v for v in nodes if not m2.is_independent(st.i | {v}))
    return ExchangeDigraph(
        nodes=frozenset(nodes),
        arcs=tuple(arcs),
        spanned_first=spanned_first,
        spanned_second=spanned_second,
    )


def _reach(starts: list[int], adjacency: dict[int, list[int]]) -> set[int]:
    seen = set(starts)
    stack = sorted(starts, reverse=True)
    while stack:
        node = stack.pop()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def divisive_coloring(dg: ExchangeDigraph, st: IntersectionState) -> DivisiveColoring:
    """Two-color the digraph so the coloring is divisive.

    Nodes spanned by I in only one matroid are pre-colored (first matroid:
    blue, second: red); blue then spreads forward along arcs, red spreads
    backward, and untouched nodes default to blue.  A maximal base pair
    admits no path from a pre-blue to a pre-red node; hitting one means an
    upstream bug, and the failure carries the offending path so it can be
    rewound into the chain that grows the union.
    """
    unspanned = dg.nodes - dg.spanned_first - dg.spanned_second
    if unspanned:
        raise InternalInvariantError(
            "elements spanned by I in neither matroid: "
            + str(sorted(unspanned)),
            payload=sorted(unspanned),
        )
    pre_blue = dg.spanned_first - dg.spanned_second
    pre_red = dg.spanned_second - dg.spanned_first
    forward = _reach(sorted(pre_blue), dg.successors())
    backward = _reach(sorted(pre_red), dg.predecessors())
    clash = forward & backward
    if clash:
        path = _blue_to_red_path(dg, pre_blue, pre_red)
        raise InternalInvariantError(
            "a blue node reaches a red node; the base pair cannot have been "
            "maximal (rewind the path with violation_chain for the witness)",
            payload=path,
        )
    blue = frozenset(forward | (dg.nodes - backward))
    red = frozenset(backward)
    return DivisiveColoring(blue=blue, red=red, pre_blue=pre_blue, pre_red=pre_red)


def _blue_to_red_path(
    dg: ExchangeDigraph, pre_blue: frozenset[int], pre_red: frozenset[int]
) -> list[int] | None:
    """Shortest path from a pre-blue node to a pre-red node, ids breaking ties."""
    adjacency = dg.successors()
    parents: dict[int, int | None] = {v: None for v in sorted(pre_blue)}
    frontier = sorted(pre_blue)
    while frontier:
        hits = [v for v in frontier if v in pre_red]
        if hits:
            node = min(hits)
            path = [node]
            while parents[path[-1]] is not None:
                path.append(parents[path[-1]])
            path.reverse()
            return path
        next_frontier = []
        for node in frontier:
            for nxt in adjacency[node]:
                if nxt not in parents:
                    parents[nxt] = node
                    next_frontier.append(nxt)
        frontier = sorted(next_frontier)
    return None


def violation_chain(
    m1: Matroid, m2: Matroid, st: IntersectionState, dg: ExchangeDigraph | None = None
) -> ExchangeChain | None:
    """Rewind a blue-to-red path into a chain on (B1, B2*) proving the base
    pair non-maximal, or None when no such path exists.

    The chain starts outside both bases, ends inside both, and alternates
    through the first matroid and the dual of the second; applying it grows
    the union by one, which is the strongest possible witness that the
    upstream search stopped early.
    """
    if dg is None:
        dg = build_digraph(m1, m2, st)
    pre_blue = dg.spanned_first - dg.spanned_second
    pre_red = dg.spanned_second - dg.spanned_first
    path = _blue_to_red_path(dg, pre_blue, pre_red)
    if path is None:
        return None
    m2d = m2.dual()

    elements: list[int] = []
    circuits: list[frozenset[int]] = []

    def dual_circuit(element: int) -> frozenset[int]:
        return m2d.fundamental_circuit(st.b2star, element)

    first_node = path[0]
    if first_node in st.y:
        parity = EVEN
        elements.append(first_node)
    else:
        # A blue start off Y is spanned only in the first matroid, so its
        # circuit into B2 must leave I and meet Y; enter through that element.
        start = min(m2.fundamental_circuit(st.b2, first_node) & st.y)
        parity = ODD
        elements.append(start)
        circuits.append(dual_circuit(start))
        elements.append(first_node)
    for tail, head in zip(path, path[1:]):
        witness = dg.witness(tail, head)
        circuits.append(m1.fundamental_circuit(st.b1, tail))
        elements.append(witness)
        circuits.append(dual_circuit(witness))
        elements.append(head)
    last_node = path[-1]
    if last_node in st.x:
        pass  # already ends inside both bases
    else:
        end = min(m1.fundamental_circuit(st.b1, last_node) & st.x)
        circuits.append(m1.fundamental_circuit(st.b1, last_node))
        elements.append(end)

    chain = ExchangeChain(tuple(elements), parity, tuple(circuits), COMMON)
    validate_chain(m1, m2d, PairState(st.b1, st.b2star), chain)
    return chain


def pipeline(
    m1: Matroid, m2: Matroid, observer: Observer | None = None
) -> tuple[IntersectionState, ExchangeDigraph, DivisiveColoring, IntersectionCertificate]:
    """Run the whole construction and expose the intermediate structures."""
    st = build_state(m1, m2, observer=observer)
    dg = build_digraph(m1, m2, st)
    coloring = divisive_coloring(dg, st)
    cert = _assemble(m1, m2, st, coloring)
    return st, dg, coloring, cert


def certify(m1: Matroid, m2: Matroid, observer: Observer | None = None) -> IntersectionCertificate:
    """Produce the covering-partition certificate for a matroid pair."""
    return pipeline(m1, m2, observer=observer)[3]


def _assemble(
    m1: Matroid, m2: Matroid, st: IntersectionState, coloring: DivisiveColoring
) -> IntersectionCertificate:
    j1 = set()
    for v in sorted(coloring.blue):
        j1.update(m1.fundamental_circuit(st.b1, v) & st.i)
    j2 = set()
    for v in sorted(coloring.red):
        j2.update(m2.fundamental_circuit(st.b2, v) & st.i)
    if j1 & j2:
        raise InternalInvariantError(
            "divisive coloring produced overlapping parts", payload=(j1, j2)
        )
    # Elements of I that no colored circuit touches go to the first part;
    # the closure cover only grows with its parts.
    j1.update(st.i - j1 - j2)
    cert = IntersectionCertificate(i=st.i, j1=frozenset(j1), j2=frozenset(j2))
    verdict = verify_certificate(m1, m2, cert)
    if not verdict:
        raise InternalInvariantError(
            f"freshly built certificate failed verification: {verdict.reason}",
            payload=cert,
        )
    return cert


def verify_certificate(
    m1: Matroid, m2: Matroid, cert: IntersectionCertificate
) -> CheckResult:
    """Check a covering-partition certificate from scratch; pure."""
    if m1.ground != m2.ground:
        return CheckResult(False, "matroids disagree on the ground set")
    ground = m1.ground
    try:
        i = ground.subset(cert.i)
        j1 = ground.subset(cert.j1)
        j2 = ground.subset(cert.j2)
    except InputError:
        return CheckResult(False, "certificate references unknown elements")
    if not m1.is_independent(i):
        return CheckResult(False, "I is dependent in the first matroid")
    if not m2.is_independent(i):
        return CheckResult(False, "I is dependent in the second matroid")
    if j1 & j2:
        return CheckResult(False, "parts overlap", tuple(sorted(j1 & j2)))
    if j1 | j2 != i:
        return CheckResult(False, "parts do not partition I")
    covered = m1.closure(j1) | m2.closure(j2)
    if covered != ground.full():
        return CheckResult(
            False, "closure cover misses elements", tuple(sorted(ground.full() - covered))
        )
    return CheckResult(True)


def min_rank_value(m1: Matroid, m2: Matroid, bound: int = ENUMERATION_BOUND) -> int:
    """Exact minimum of rank_1(X) + rank_2(E - X) over all X; brute force."""
    if m1.ground != m2.ground:
        raise InputError("intersection needs a common ground set")
    n = m1.ground.size
    if n > bound:
        raise CapacityError(f"min-rank sweep requires |E| <= {bound}, got {n}")
    full = m1.ground.full()
    best = None
    elements = sorted(full)
    for mask in range(1 << n):
        xs = frozenset(elements[i] for i in range(n) if mask >> i & 1)
        value = m1.rank(xs) + m2.rank(full - xs)
        if best is None or value < best:
            best = value
    return best
