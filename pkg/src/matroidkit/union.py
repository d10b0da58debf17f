"""Exchange chains and the augmenting construction for matroid union.

A chain (y0, ..., yn) threads alternating fundamental circuits through the
two parts of a pair state: consecutive elements share a circuit inside
"part + y_i" of the matroid owned by that link.  Applying the alternating
swaps along a chain absorbs y0 into the union of the two parts.

Searches are breadth-first, so returned chains are shortest; shortest
chains are exactly the ones whose swaps can be applied simultaneously
without re-checking intermediate states.  Every chain carries its witness
circuits and is re-verified before use, so a stale or forged chain fails
loudly instead of corrupting a state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import Matroid
from .errors import ConsistencyError, InputError, InternalInvariantError

EVEN = "even"
ODD = "odd"

# Terminal kinds: 'common' ends in an element of both parts (the union grows
# and nothing leaves), 'add' ends in an element the receiving part absorbs
# outright, 'swap' is the plain exchange where the last element leaves.
COMMON = "common"
ADD = "add"
SWAP = "swap"


@dataclass(frozen=True)
class PairState:
    """A pair of sets independent in their respective matroids."""

    i1: frozenset[int]
    i2: frozenset[int]
    union: frozenset[int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "union", self.i1 | self.i2)


@dataclass(frozen=True)
class ExchangeChain:
    """A tuple of elements plus the witness circuit certifying each link."""

    elements: tuple[int, ...]
    parity: str
    circuits: tuple[frozenset[int], ...]
    terminal: str

    def __post_init__(self):
        if self.parity not in (EVEN, ODD):
            raise InputError(f"chain parity must be 'even' or 'odd', got {self.parity!r}")
        if self.terminal not in (COMMON, ADD, SWAP):
            raise InputError(f"unknown chain terminal kind {self.terminal!r}")
        if len(self.circuits) != len(self.elements) - 1:
            raise InputError("a chain needs exactly one witness circuit per link")

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def link_uses_first(self, link: int) -> bool:
        """Whether link i exchanges inside the first matroid."""
        return (link % 2 == 0) == (self.parity == EVEN)

    def receiver_is_first(self) -> bool:
        """For an 'add' terminal: which part absorbs the last element."""
        return self.link_uses_first(self.length)

    def subchain(self, start: int, stop: int) -> "ExchangeChain":
        """The contiguous piece (y_start, ..., y_stop), itself a chain."""
        if not (0 <= start <= stop <= self.length):
            raise InputError("subchain bounds out of range")
        if start % 2 == 0:
            parity = self.parity
        else:
            parity = ODD if self.parity == EVEN else EVEN
        terminal = self.terminal if stop == self.length else SWAP
        return ExchangeChain(
            self.elements[start : stop + 1],
            parity,
            self.circuits[start:stop],
            terminal,
        )


def _is_circuit(matroid: Matroid, candidate: frozenset[int]) -> bool:
    if matroid.is_independent(candidate):
        return False
    return all(matroid.is_independent(candidate - {e}) for e in candidate)


def validate_chain(m1: Matroid, m2: Matroid, state: PairState, chain: ExchangeChain) -> None:
    """Re-verify a chain against the current state; raises ConsistencyError.

    Checks every witness circuit (membership, containment in part + y_i,
    genuine circuit-ness) plus the terminal condition and the alternation
    pattern of the interior elements.
    """
    els = chain.elements
    if not els:
        raise ConsistencyError("empty chain")
    start_set = state.i1 if chain.parity == EVEN else state.i2
    if els[0] in start_set:
        raise ConsistencyError("chain start already belongs to the part it would enter")
    for link in range(chain.length):
        matroid, part = (m1, state.i1) if chain.link_uses_first(link) else (m2, state.i2)
        circuit = chain.circuits[link]
        if els[link] not in circuit or els[link + 1] not in circuit:
            raise ConsistencyError(f"link {link} circuit misses its endpoints")
        if not circuit <= part | {els[link]}:
            raise ConsistencyError(f"link {link} circuit leaks outside part + y_{link}")
        if not _is_circuit(matroid, circuit):
            raise ConsistencyError(f"link {link} witness is not a circuit any more")
    # Interior elements alternate between the two parts and may not sit in
    # both; only the terminal element may.
    for i, e in enumerate(els[1:-1], start=1):
        in_first = (e in state.i1) and (e not in state.i2)
        in_second = (e in state.i2) and (e not in state.i1)
        expects_first = chain.link_uses_first(i - 1)
        if expects_first and not in_first:
            raise ConsistencyError(f"interior element y_{i} must lie in the first part only")
        if not expects_first and not in_second:
            raise ConsistencyError(f"interior element y_{i} must lie in the second part only")
    last = els[-1]
    if chain.terminal == COMMON:
        if not (last in state.i1 and last in state.i2):
            raise ConsistencyError("terminal marked 'common' is not in both parts")
    elif chain.terminal == ADD:
        matroid, part = (m1, state.i1) if chain.receiver_is_first() else (m2, state.i2)
        if last in part:
            raise ConsistencyError("terminal marked 'add' already sits in the receiving part")
        if not matroid.is_independent(part | {last}):
            raise ConsistencyError("terminal marked 'add' does not extend the receiver independently")
    else:  # SWAP: the last element leaves the part owned by the final link
        if chain.length == 0:
            raise ConsistencyError("a swap terminal needs at least one link")
        donor_first = chain.link_uses_first(chain.length - 1)
        donor, other = (state.i1, state.i2) if donor_first else (state.i2, state.i1)
        if last not in donor or last in other:
            raise ConsistencyError("swap terminal must lie in the donating part only")


def apply_chain(m1: Matroid, m2: Matroid, state: PairState, chain: ExchangeChain) -> PairState:
    """Perform the alternating swaps along a chain and return the new state."""
    validate_chain(m1, m2, state, chain)
    els = chain.elements
    i1, i2 = set(state.i1), set(state.i2)
    for link in range(chain.length):
        part = i1 if chain.link_uses_first(link) else i2
        part.remove(els[link + 1])
        part.add(els[link])
    if chain.terminal == ADD:
        (i1 if chain.receiver_is_first() else i2).add(els[-1])
    new_state = PairState(frozenset(i1), frozenset(i2))
    if not m1.is_independent(new_state.i1):
        raise ConsistencyError("first part lost independence after the swaps")
    if not m2.is_independent(new_state.i2):
        raise ConsistencyError("second part lost independence after the swaps")
    if chain.terminal in (COMMON, ADD):
        if new_state.union != state.union | {els[0]}:
            raise InternalInvariantError("augmenting chain did not grow the union by its start")
    return new_state


def _side_of(state: PairState, element: int) -> str:
    if element in state.i1 and element in state.i2:
        return "both"
    if element in state.i1:
        return "first"
    if element in state.i2:
        return "second"
    return "outside"


def _search(m1: Matroid, m2: Matroid, state: PairState, y: int, parity: str):
    """Breadth-first search for a shortest chain of the given parity.

    Nodes are elements; the matroid used out of a node is forced by which
    part the node lies in, so a BFS tree automatically alternates.  Parent
    links are assigned in increasing id order, which makes the returned
    chain the lexicographically least among the shortest ones.
    """
    start_matroid, start_part = (m1, state.i1) if parity == EVEN else (m2, state.i2)
    if start_matroid.is_independent(start_part | {y}):
        return ExchangeChain((y,), parity, (), ADD)

    def expand(node: int):
        """Terminal kind for the node, or its outgoing circuit."""
        side = _side_of(state, node)
        if side == "both":
            return COMMON, None
        if side == "outside":
            matroid, part = start_matroid, start_part
        elif side == "first":
            matroid, part = m2, state.i2
        else:
            matroid, part = m1, state.i1
        if matroid.is_independent(part | {node}):
            return ADD, None
        return None, matroid.fundamental_circuit(part, node)

    parents: dict[int, tuple[int, frozenset[int]]] = {}
    seen = {y}
    frontier = [y]
    while frontier:
        terminals = []
        next_frontier: list[int] = []
        for node in sorted(frontier):
            kind, circuit = expand(node)
            if kind is not None:
                terminals.append((node, kind))
                continue
            for target in sorted(circuit - {node}):
                if target not in seen:
                    seen.add(target)
                    parents[target] = (node, circuit)
                    next_frontier.append(target)
        if terminals:
            node, kind = min(terminals)
            path = [node]
            circuits = []
            while path[-1] != y:
                parent, circuit = parents[path[-1]]
                circuits.append(circuit)
                path.append(parent)
            path.reverse()
            circuits.reverse()
            return ExchangeChain(tuple(path), parity, tuple(circuits), kind)
        frontier = next_frontier
    return None


def find_chain(m1: Matroid, m2: Matroid, state: PairState, y: int) -> ExchangeChain | None:
    """Shortest chain absorbing y into the union, or None when impossible.

    Chains through the first matroid are preferred: the even parity is
    searched exhaustively before the odd one is tried.
    """
    if y not in m1.ground.elements():
        raise InputError(f"element {y!r} outside ground set")
    if y in state.union:
        raise InputError(f"element {m1.ground.label(y)} already belongs to the union")
    for parity in (EVEN, ODD):
        chain = _search(m1, m2, state, y, parity)
        if chain is not None:
            return chain
    return None


Observer = Callable[[PairState, ExchangeChain, PairState], None]


def maximize_union(m1: Matroid, m2: Matroid, observer: Observer | None = None) -> PairState:
    """Grow a pair state until no element can be absorbed, then extend to bases.

    Starting from two empty parts, candidates are scanned in increasing id
    each round and the first augmenting chain is applied.  Once no chain
    exists for any outside element the union is maximal, and extending the
    parts to bases cannot enlarge it: an outside element addable to a base
    extension would already have been a one-element chain.
    """
    if m1.ground != m2.ground:
        raise InputError("matroid union needs a common ground set")
    state = PairState(frozenset(), frozenset())
    candidates = list(m1.ground.elements())
    progress = True
    while progress:
        progress = False
        for y in candidates:
            if y in state.union:
                continue
            chain = find_chain(m1, m2, state, y)
            if chain is None:
                continue
            new_state = apply_chain(m1, m2, state, chain)
            if observer is not None:
                observer(state, chain, new_state)
            state = new_state
            progress = True
            break
    bases = PairState(m1.maximal_extension(state.i1), m2.maximal_extension(state.i2))
    if bases.union != state.union:
        raise InternalInvariantError(
            "extending the parts to bases escaped the maximal union", payload=(state, bases)
        )
    return bases
