"""Deliberately naive reference implementations for testing.

Nothing in here calls the algorithms under test: ranks are exhaustive
sweeps instead of greedy ones, the path counter is a tiny augmenting-path
flow, and every maximum is taken over an explicitly enumerated space.
Budgets turn oversized inputs into clean capacity errors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .core import Matroid
from .errors import CapacityError, InputError
from .graphs import Multigraph


@dataclass(frozen=True)
class OracleBudget:
    max_ground: int = 10
    max_vertices: int = 10
    time_cap: float = 30.0


DEFAULT_BUDGET = OracleBudget()


class _Clock:
    def __init__(self, cap: float):
        self.cap = cap
        self.start = time.monotonic()

    def check(self):
        if time.monotonic() - self.start > self.cap:
            raise CapacityError(f"oracle exceeded its time cap of {self.cap} s")


def _require_ground(m1: Matroid, m2: Matroid, budget: OracleBudget) -> list[int]:
    if m1.ground != m2.ground:
        raise InputError("oracle needs a common ground set")
    if m1.ground.size > budget.max_ground:
        raise CapacityError(
            f"oracle sweep requires |E| <= {budget.max_ground}, got {m1.ground.size}"
        )
    return sorted(m1.ground.elements())


def _subsets(elements: list[int]):
    for k in range(len(elements) + 1):
        yield from (frozenset(c) for c in combinations(elements, k))


def _exhaustive_rank(matroid: Matroid, xs: frozenset[int]) -> int:
    best = 0
    for candidate in _subsets(sorted(xs)):
        if len(candidate) > best and matroid.is_independent(candidate):
            best = len(candidate)
    return best


def brute_max_common_independent(
    m1: Matroid, m2: Matroid, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    """Maximum common independent set; ties resolved to the lexicographically
    least witness so golden outputs stay stable."""
    elements = _require_ground(m1, m2, budget)
    clock = _Clock(budget.time_cap)
    best_key = None
    best: frozenset[int] = frozenset()
    for candidate in _subsets(elements):
        clock.check()
        if m1.is_independent(candidate) and m2.is_independent(candidate):
            key = (-len(candidate), sorted(candidate))
            if best_key is None or key < best_key:
                best_key = key
                best = candidate
    return len(best), best


def brute_min_rank_formula(
    m1: Matroid, m2: Matroid, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    """Exhaustive minimum of rank_1(X) + rank_2(E - X), both ranks exhaustive."""
    elements = _require_ground(m1, m2, budget)
    clock = _Clock(budget.time_cap)
    full = frozenset(elements)
    best_value: int | None = None
    best: frozenset[int] = frozenset()
    for xs in _subsets(elements):
        clock.check()
        value = _exhaustive_rank(m1, xs) + _exhaustive_rank(m2, full - xs)
        if best_value is None or value < best_value or (
            value == best_value and sorted(xs) < sorted(best)
        ):
            best_value = value
            best = xs
    return best_value, best


def brute_union_max(
    m1: Matroid, m2: Matroid, budget: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Maximum size of a union of two independent sets, by full enumeration."""
    elements = _require_ground(m1, m2, budget)
    clock = _Clock(budget.time_cap)
    first = [s for s in _subsets(elements) if m1.is_independent(s)]
    second = [s for s in _subsets(elements) if m2.is_independent(s)]
    best = 0
    for a in first:
        clock.check()
        for b in second:
            size = len(a | b)
            if size > best:
                best = size
    return best


def brute_max_disjoint_paths(
    g: Multigraph,
    s: frozenset[int],
    t: frozenset[int],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> int:
    """Maximum number of vertex-disjoint S-T paths via vertex-split max flow.

    Every vertex is split into an in/out pair of capacity one, so shared
    vertices of S and T count as single-vertex paths.
    """
    if g.vertex_count > budget.max_vertices:
        raise CapacityError(
            f"path oracle requires |V| <= {budget.max_vertices}, got {g.vertex_count}"
        )
    s = g.vertex_subset(s)
    t = g.vertex_subset(t)
    if not s or not t:
        raise InputError("both terminal vertex sets must be nonempty")

    n = g.vertex_count
    source, sink = 2 * n, 2 * n + 1
    capacity: dict[tuple[int, int], int] = {}
    adjacency: dict[int, set[int]] = {i: set() for i in range(2 * n + 2)}

    def add_arc(u: int, v: int):
        capacity.setdefault((u, v), 0)
        capacity[(u, v)] += 1
        capacity.setdefault((v, u), 0)
        adjacency[u].add(v)
        adjacency[v].add(u)

    v_in = lambda v: 2 * v
    v_out = lambda v: 2 * v + 1

    for v in g.vertices():
        add_arc(v_in(v), v_out(v))
    for u, v in g.endpoints:
        if u == v:
            continue
        add_arc(v_out(u), v_in(v))
        add_arc(v_out(v), v_in(u))
    for v in sorted(s):
        add_arc(source, v_in(v))
    for v in sorted(t):
        add_arc(v_out(v), sink)

    flow = 0
    clock = _Clock(budget.time_cap)
    while True:
        clock.check()
        parent = {source: source}
        frontier = [source]
        while frontier and sink not in parent:
            nxt = []
            for u in frontier:
                for v in sorted(adjacency[u]):
                    if v not in parent and capacity.get((u, v), 0) > 0:
                        parent[v] = u
                        nxt.append(v)
            frontier = nxt
        if sink not in parent:
            return flow
        v = sink
        while v != source:
            u = parent[v]
            capacity[(u, v)] -= 1
            capacity[(v, u)] += 1
            v = u
        flow += 1
