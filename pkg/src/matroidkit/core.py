"""Independence-oracle matroids with derived rank, closure and circuit services.

A matroid is handled as a ground set plus a pure independence predicate.
Rank, closure, fundamental circuits, duals and minors are all derived
through oracle calls; composed matroids are lazy wrappers and nothing is
ever materialized unless an enumeration helper is asked for explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import CapacityError, InputError, NoFundamentalCircuit

# Hard cap for the exhaustive helpers (circuit listing, orthogonality,
# min-rank sweeps).  Exceeding it raises CapacityError, never truncates.
ENUMERATION_BOUND = 12


def default_labels(n: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


@dataclass(frozen=True)
class GroundSet:
    """Dense element ids ``0 .. size-1`` with pairwise-distinct labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise InputError(f"ground-set labels are not pairwise distinct: {self.labels!r}")

    @property
    def size(self) -> int:
        return len(self.labels)

    def elements(self) -> range:
        return range(len(self.labels))

    def label(self, e: int) -> str:
        return self.labels[e]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown element label {label!r}") from None

    def subset(self, xs: Iterable[int]) -> frozenset[int]:
        """Normalize ``xs`` to a frozenset, rejecting out-of-range ids."""
        s = frozenset(xs)
        for e in s:
            if not isinstance(e, int) or e < 0 or e >= len(self.labels):
                raise InputError(
                    f"element {e!r} outside ground set of size {len(self.labels)}"
                )
        return s

    def subset_from_labels(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(lbl) for lbl in labels)

    def labels_of(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[e] for e in sorted(xs)]

    def full(self) -> frozenset[int]:
        return frozenset(range(len(self.labels)))


@dataclass(frozen=True)
class CheckResult:
    """Verdict of a verification routine: truthiness mirrors ``ok``."""

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def subsets_by_size(elements: Iterable[int]) -> Iterator[frozenset[int]]:
    """All subsets in canonical order: by size, then lexicographically."""
    pool = sorted(elements)
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            yield frozenset(combo)


class Matroid:
    """Immutable matroid given by a pure independence predicate.

    The predicate receives a validated ``frozenset`` of element ids and must
    always return the same answer for the same subset.  Answers are memoized
    per handle; the cache is invisible to callers and safe to share across
    threads because entries are pure recomputable facts.
    """

    __slots__ = ("_ground", "_predicate", "provenance", "_memo")

    def __init__(
        self,
        ground: GroundSet,
        predicate: Callable[[frozenset[int]], bool],
        provenance: str = "oracle",
    ):
        self._ground = ground
        self._predicate = predicate
        self.provenance = provenance
        self._memo: dict[frozenset[int], bool] = {}

    def __repr__(self) -> str:
        return f"Matroid({self.provenance}, |E|={self._ground.size})"

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def size(self) -> int:
        return self._ground.size

    def elements(self) -> range:
        return self._ground.elements()

    # -- oracle ---------------------------------------------------------

    def is_independent(self, xs: Iterable[int]) -> bool:
        s = self._ground.subset(xs)
        cached = self._memo.get(s)
        if cached is None:
            cached = bool(self._predicate(s))
            self._memo[s] = cached
        return cached

    # -- derived services ------------------------------------------------

    def _greedy_extend(self, start: frozenset[int], within: frozenset[int]) -> frozenset[int]:
        current = set(start)
        for e in sorted(within - start):
            current.add(e)
            if not self.is_independent(current):
                current.remove(e)
        return frozenset(current)

    def rank(self, xs: Iterable[int] | None = None) -> int:
        """Size of a maximal independent subset of ``xs`` (default: all of E).

        Computed by a greedy sweep in increasing id order, which is exact on
        matroids and makes the answer deterministic.
        """
        target = self._ground.full() if xs is None else self._ground.subset(xs)
        return len(self._greedy_extend(frozenset(), target))

    def closure(self, xs: Iterable[int]) -> frozenset[int]:
        """``xs`` plus every element whose addition does not raise the rank."""
        base = self._ground.subset(xs)
        r = self.rank(base)
        spanned = set(base)
        for e in self._ground.elements():
            if e not in base and self.rank(base | {e}) == r:
                spanned.add(e)
        return frozenset(spanned)

    def fundamental_circuit(self, base: Iterable[int], x: int) -> frozenset[int]:
        """The unique circuit inside ``base + x`` for independent ``base``.

        Raises NoFundamentalCircuit when ``base + x`` is independent, which
        callers must treat as "the circuit does not exist".
        """
        b = self._ground.subset(base)
        if x not in self._ground.elements():
            raise InputError(f"element {x!r} outside ground set")
        if x in b:
            raise InputError(f"element {x} already belongs to the given independent set")
        if not self.is_independent(b):
            raise InputError("fundamental circuits are defined against independent sets only")
        extended = b | {x}
        if self.is_independent(extended):
            raise NoFundamentalCircuit(
                f"{self._ground.label(x)} extends the given set independently"
            )
        # b belongs to the circuit exactly when removing b breaks it: the
        # circuit is the unique one in base + x, so deletion leaves a forest.
        circuit = {x}
        for e in sorted(b):
            if self.is_independent(extended - {e}):
                circuit.add(e)
        return frozenset(circuit)

    def maximal_extension(
        self, inside: Iterable[int], within: Iterable[int] | None = None
    ) -> frozenset[int]:
        """Greedily extend independent ``inside`` to a maximal set within ``within``."""
        start = self._ground.subset(inside)
        target = self._ground.full() if within is None else self._ground.subset(within)
        if not start <= target:
            raise InputError("extension must take place inside the given superset")
        if not self.is_independent(start):
            raise InputError("cannot extend a dependent set")
        return self._greedy_extend(start, target)

    # -- composition ------------------------------------------------------

    def dual(self) -> "Matroid":
        """Lazy dual: a set is independent iff its complement spans."""
        parent = self
        full = self._ground.full()

        def indep(xs: frozenset[int]) -> bool:
            return parent.rank(full - xs) == parent.rank()

        return Matroid(self._ground, indep, provenance=f"dual({self.provenance})")

    def minor(self, contract: Iterable[int] = (), delete: Iterable[int] = ()) -> "Matroid":
        """Contract and delete, re-indexing the surviving elements densely.

        Survivors keep their labels, so elements stay identifiable across
        the re-indexing.  Independence is derived from the rank identity
        rank(X in minor) = rank(X + contract) - rank(contract).
        """
        parent = self
        c = self._ground.subset(contract)
        d = self._ground.subset(delete)
        if c & d:
            raise InputError("contract and delete sets overlap")
        kept = tuple(e for e in self._ground.elements() if e not in c and e not in d)
        ground = GroundSet(tuple(self._ground.labels[e] for e in kept))
        contracted_rank = self.rank(c)

        def indep(xs: frozenset[int]) -> bool:
            mapped = frozenset(kept[e] for e in xs)
            return parent.rank(mapped | c) - contracted_rank == len(xs)

        label = (
            f"minor({self.provenance}, contract={self._ground.labels_of(c)}, "
            f"delete={self._ground.labels_of(d)})"
        )
        return Matroid(ground, indep, provenance=label)

    # -- exhaustive helpers ------------------------------------------------

    def circuits(self, bound: int = ENUMERATION_BOUND) -> list[frozenset[int]]:
        """All minimal dependent sets, canonically ordered by (size, ids)."""
        n = self._ground.size
        if n > bound:
            raise CapacityError(f"circuit enumeration requires |E| <= {bound}, got {n}")
        found: list[frozenset[int]] = []
        for candidate in subsets_by_size(self._ground.elements()):
            if any(c <= candidate for c in found):
                continue
            if not self.is_independent(candidate):
                found.append(candidate)
        return found


def check_orthogonality(matroid: Matroid, bound: int = ENUMERATION_BOUND) -> CheckResult:
    """Every circuit meets every cocircuit in a number of elements != 1.

    Returns a falsy result carrying the offending (circuit, cocircuit) pair
    when the property fails; that can only happen for handles that are not
    actually matroids.
    """
    circuits = matroid.circuits(bound=bound)
    cocircuits = matroid.dual().circuits(bound=bound)
    for c in circuits:
        for c_star in cocircuits:
            if len(c & c_star) == 1:
                return CheckResult(False, "circuit meets cocircuit in exactly one element", (c, c_star))
    return CheckResult(True)
