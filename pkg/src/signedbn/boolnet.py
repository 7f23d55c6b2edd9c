"""Boolean networks: evaluation, interaction graphs, fixed points, dynamics.

A network is one local function per vertex 1..n.  Truth tables are indexed
with the FIRST declared input as the most significant bit: the row for an
assignment (x_{u_1}, ..., x_{u_k}) is sum_i x_{u_i} * 2^(k-i).  All state
tuples follow the same convention as the graphs module: position v-1 holds
the value of vertex v, and enumerations run in increasing binary order with
x_1 as the most significant bit.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .graphs import (
    DEFAULT_CYCLE_CAP,
    NEGATIVE,
    POSITIVE,
    Arc,
    SignedDigraph,
    as_arc,
    enumerate_cycles,
    is_strong,
    tarjan_components,
)

MAX_FIXED_POINT_SCAN = 24
MAX_ATTRACTOR_SCAN = 20
DEFAULT_MAX_INDEGREE = 4


class UnrealizableGraphError(Exception):
    """No local function produces the requested signed in-arcs.

    Happens for instance when a vertex's only in-neighbor carries both a
    positive and a negative arc: a one-input function cannot realize both
    signs.
    """


class LocalFunction:
    """Truth table over an ordered input list."""

    __slots__ = ("inputs", "table")

    def __init__(self, inputs: Sequence[int], table: Sequence[int]):
        self.inputs = tuple(int(u) for u in inputs)
        self.table = tuple(int(b) for b in table)
        if len(set(self.inputs)) != len(self.inputs):
            raise ValueError("duplicate input vertex")
        if len(self.table) != 1 << len(self.inputs):
            raise ValueError(
                f"table length {len(self.table)} does not match {len(self.inputs)} inputs"
            )
        if any(b not in (0, 1) for b in self.table):
            raise ValueError("table entries must be 0 or 1")

    @property
    def arity(self) -> int:
        return len(self.inputs)

    def row(self, x: Sequence[int]) -> int:
        """Table row index for the state x (first input most significant)."""
        idx = 0
        for u in self.inputs:
            idx = (idx << 1) | x[u - 1]
        return idx

    def __call__(self, x: Sequence[int]) -> int:
        return self.table[self.row(x)]

    def __eq__(self, other):
        if not isinstance(other, LocalFunction):
            return NotImplemented
        return self.inputs == other.inputs and self.table == other.table

    def __hash__(self):
        return hash((self.inputs, self.table))

    def __repr__(self):
        bits = "".join(str(b) for b in self.table)
        return f"LocalFunction(inputs={self.inputs}, table={bits})"


def constant(value: int) -> LocalFunction:
    return LocalFunction((), (value,))


def local_canalizes(lf: LocalFunction, arc) -> bool:
    """Whether one local function canalizes an in-coming signed arc.

    Canalization is a property of the head's local function alone, so
    sweeps can filter candidate tables before assembling whole networks.
    The arc's source must be a declared input; effectiveness is not
    checked here.
    """
    a = as_arc(arc)
    if a.source not in lf.inputs:
        raise ValueError(f"{a.source} is not an input of the local function")
    k = lf.arity
    step = 1 << (k - 1 - lf.inputs.index(a.source))
    for c in (0, 1):
        pinned = c if a.sign == POSITIVE else 1 - c
        rows = (
            j for j in range(1 << k)
            if ((j & step) != 0) == (pinned == 1)
        )
        if all(lf.table[j] == c for j in rows):
            return True
    return False


class BooleanNetwork:
    """A map {0,1}^n -> {0,1}^n given by per-vertex local functions."""

    __slots__ = ("locals", "n")

    def __init__(self, locals_: Sequence[LocalFunction]):
        self.locals = tuple(locals_)
        self.n = len(self.locals)
        for lf in self.locals:
            for u in lf.inputs:
                if not 1 <= u <= self.n:
                    raise ValueError(f"input vertex {u} outside 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, BooleanNetwork):
            return NotImplemented
        return self.locals == other.locals

    def __hash__(self):
        return hash(self.locals)

    def __repr__(self):
        return f"BooleanNetwork(n={self.n})"

    def _check_state(self, x: Sequence[int]):
        if len(x) != self.n:
            raise ValueError(f"state length {len(x)} != {self.n}")

    def evaluate(self, x: Sequence[int]) -> tuple[int, ...]:
        self._check_state(x)
        return tuple(lf(x) for lf in self.locals)

    def local(self, v: int) -> LocalFunction:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        return self.locals[v - 1]

    def derivative(self, v: int, u: int, x: Sequence[int]) -> int:
        """Discrete derivative of component v with respect to variable u at x."""
        self._check_state(x)
        lf = self.local(v)
        if not 1 <= u <= self.n:
            raise ValueError(f"vertex {u} outside 1..{self.n}")
        if u not in lf.inputs:
            return 0
        hi = list(x)
        hi[u - 1] = 1
        lo = list(x)
        lo[u - 1] = 0
        return lf(hi) - lf(lo)

    def _input_signs(self, v: int) -> list[tuple[int, bool, bool]]:
        """Per declared input of v: (vertex, attains +1, attains -1)."""
        lf = self.local(v)
        k = lf.arity
        out = []
        for i, u in enumerate(lf.inputs):
            step = 1 << (k - 1 - i)
            pos = neg = False
            for j in range(1 << k):
                if j & step:
                    continue
                d = lf.table[j | step] - lf.table[j]
                if d > 0:
                    pos = True
                elif d < 0:
                    neg = True
                if pos and neg:
                    break
            out.append((u, pos, neg))
        return out

    def interaction_graph(self) -> SignedDigraph:
        """Signed digraph of effective dependencies.

        An arc (u -> v, +) is present iff the derivative of v with respect
        to u is +1 somewhere; likewise for -, and both may coexist.
        Declared but ineffective inputs produce no arc.
        """
        arcs = []
        for v in range(1, self.n + 1):
            for u, pos, neg in self._input_signs(v):
                if pos:
                    arcs.append(Arc(u, v, POSITIVE))
                if neg:
                    arcs.append(Arc(u, v, NEGATIVE))
        return SignedDigraph(self.n, arcs)

    def fixed_points(self) -> list[tuple[int, ...]]:
        """All states x with f(x) = x, in increasing binary order."""
        if self.n > MAX_FIXED_POINT_SCAN:
            raise ValueError(f"n={self.n} exceeds the fixed-point scan limit")
        out = []
        locals_ = self.locals
        for x in itertools.product((0, 1), repeat=self.n):
            for i, lf in enumerate(locals_):
                idx = 0
                for u in lf.inputs:
                    idx = (idx << 1) | x[u - 1]
                if lf.table[idx] != x[i]:
                    break
            else:
                out.append(x)
        return out

    def is_canalized(self, arc) -> bool:
        """Whether the given interaction-graph arc is canalized.

        For a positive arc (u -> v): some c with x_u = c forcing f_v = c.
        For a negative arc: some c with x_u != c forcing f_v = c.
        """
        a = as_arc(arc)
        lf = self.local(a.target)
        signs = {u: (pos, neg) for u, pos, neg in self._input_signs(a.target)}
        if a.source not in signs:
            raise ValueError(f"{a!r} is not an arc of the interaction graph")
        pos, neg = signs[a.source]
        if (a.sign == POSITIVE and not pos) or (a.sign == NEGATIVE and not neg):
            raise ValueError(f"{a!r} is not an arc of the interaction graph")
        return local_canalizes(lf, a)

    def pin(self, values: Mapping[int, int]) -> "BooleanNetwork":
        """Freeze the given vertices to constants, keep the rest."""
        locals_ = list(self.locals)
        for v, bit in values.items():
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")
            locals_[v - 1] = constant(int(bit))
        return BooleanNetwork(locals_)

    def asynchronous_successors(self, x: Sequence[int]) -> list[tuple[int, ...]]:
        """States reachable by flipping one disagreeing coordinate toward f."""
        self._check_state(x)
        fx = self.evaluate(x)
        out = []
        for v in range(1, self.n + 1):
            if fx[v - 1] != x[v - 1]:
                y = list(x)
                y[v - 1] = fx[v - 1]
                out.append(tuple(y))
        return out

    def attractors(self) -> list[frozenset[tuple[int, ...]]]:
        """Terminal strong components of the asynchronous state graph.

        Singletons are exactly the fixed points; larger components are the
        cyclic attractors.  Ordered by their smallest state.
        """
        if self.n > MAX_ATTRACTOR_SCAN:
            raise ValueError(f"n={self.n} exceeds the attractor scan limit")
        n = self.n
        size = 1 << n
        locals_ = self.locals

        def succ(s: int) -> list[int]:
            out = []
            for i, lf in enumerate(locals_):
                idx = 0
                for u in lf.inputs:
                    idx = (idx << 1) | ((s >> (n - u)) & 1)
                if lf.table[idx] != (s >> (n - 1 - i)) & 1:
                    out.append(s ^ (1 << (n - 1 - i)))
            return out

        comps = tarjan_components(range(size), succ)
        attractors = []
        for comp in comps:
            members = set(comp)
            if all(t in members for s in comp for t in succ(s)):
                states = frozenset(int_to_state(s, n) for s in comp)
                attractors.append(states)
        attractors.sort(key=lambda states: min(state_to_int(x) for x in states))
        return attractors


# -- state conversions -------------------------------------------------------


def state_to_int(x: Sequence[int]) -> int:
    """Binary value of a state with x_1 as the most significant bit."""
    s = 0
    for b in x:
        s = (s << 1) | b
    return s


def int_to_state(s: int, n: int) -> tuple[int, ...]:
    return tuple((s >> (n - 1 - v)) & 1 for v in range(n))


def all_states(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((0, 1), repeat=n)


# -- the partial order behind monotonicity ----------------------------------


def leq_v(G: SignedDigraph, v: int, x: Sequence[int], y: Sequence[int]) -> bool:
    """x <= y on positive in-neighbors of v and >= on negative ones."""
    if len(x) != len(y):
        raise ValueError("states have different lengths")
    G._check_vertex(v)
    G._check_state(x)
    for u in G.in_neighbors(v, POSITIVE):
        if x[u - 1] > y[u - 1]:
            return False
    for u in G.in_neighbors(v, NEGATIVE):
        if x[u - 1] < y[u - 1]:
            return False
    return True


# -- networks consistent with a prescribed interaction graph -----------------

_NO_SIGN, _POS_ONLY, _NEG_ONLY, _BOTH = 0, 1, 2, 3


@lru_cache(maxsize=None)
def _signature_index(k: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """All k-input tables grouped by their per-input sign signature.

    The signature holds one code per input position: + only, - only, or
    both; tables with an ineffective input sit under code 0 for it.
    """
    rows = 1 << k
    masks = []
    for i in range(k):
        step = 1 << (k - 1 - i)
        lo = 0
        for j in range(rows):
            if not j & step:
                lo |= 1 << j
        masks.append((step, lo))
    index: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for t in range(1 << rows):
        sig = []
        for step, lo in masks:
            low_bits = t & lo
            high_bits = (t >> step) & lo
            pos = (high_bits & ~low_bits & lo) != 0
            neg = (low_bits & ~high_bits & lo) != 0
            sig.append((_POS_ONLY if pos else 0) | (_NEG_ONLY if neg else 0))
        table = tuple((t >> j) & 1 for j in range(rows))
        index.setdefault(tuple(sig), []).append(table)
    return {sig: tuple(tables) for sig, tables in index.items()}


def _required_signature(G: SignedDigraph, v: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    inputs = G.in_neighbors(v)
    sig = []
    for u in inputs:
        code = 0
        if G.has_arc(u, v, POSITIVE):
            code |= _POS_ONLY
        if G.has_arc(u, v, NEGATIVE):
            code |= _NEG_ONLY
        sig.append(code)
    return inputs, tuple(sig)


def consistent_local_functions(
    G: SignedDigraph, v: int, max_indegree: int = DEFAULT_MAX_INDEGREE
) -> list[LocalFunction]:
    """Local functions for v realizing exactly G's signed in-arcs of v.

    The in-degree cap counts distinct in-neighbors (the truth-table size
    driver).  The list may be empty: some sign patterns, such as a single
    in-neighbor carrying both signs, are unrealizable.
    """
    inputs, sig = _required_signature(G, v)
    k = len(inputs)
    if k > max_indegree:
        raise ValueError(f"vertex {v} has {k} inputs, cap is {max_indegree}")
    tables = _signature_index(k).get(sig, ())
    return [LocalFunction(inputs, t) for t in tables]


def enumerate_consistent(
    G: SignedDigraph, max_indegree: int = DEFAULT_MAX_INDEGREE
) -> Iterator[BooleanNetwork]:
    """All networks whose interaction graph is exactly G, arc- and sign-exact.

    Per-vertex candidates are filtered truth tables; the stream is their
    Cartesian product in deterministic order.  Empty when G is unrealizable.
    """
    _check_network_shaped(G)
    candidates = [
        consistent_local_functions(G, v, max_indegree) for v in G.vertices
    ]
    if any(not c for c in candidates):
        return
    for combo in itertools.product(*candidates):
        yield BooleanNetwork(combo)


def count_consistent(G: SignedDigraph, max_indegree: int = DEFAULT_MAX_INDEGREE) -> int:
    _check_network_shaped(G)
    total = 1
    for v in G.vertices:
        total *= len(consistent_local_functions(G, v, max_indegree))
    return total


def sample_consistent(
    G: SignedDigraph,
    seed=None,
    max_indegree: int = DEFAULT_MAX_INDEGREE,
    rng: random.Random | None = None,
) -> BooleanNetwork:
    """Uniform independent per-vertex choice among consistent tables."""
    _check_network_shaped(G)
    if rng is None:
        rng = random.Random(seed)
    chosen = []
    for v in G.vertices:
        options = consistent_local_functions(G, v, max_indegree)
        if not options:
            raise UnrealizableGraphError(
                f"no local function realizes the signed in-arcs of vertex {v}"
            )
        chosen.append(options[rng.randrange(len(options))])
    return BooleanNetwork(chosen)


def is_realizable(G: SignedDigraph, max_indegree: int = DEFAULT_MAX_INDEGREE) -> bool:
    _check_network_shaped(G)
    return all(
        consistent_local_functions(G, v, max_indegree) for v in G.vertices
    )


def max_fixed_points(G: SignedDigraph, max_indegree: int = DEFAULT_MAX_INDEGREE) -> int:
    """Largest fixed-point count over all networks consistent with G."""
    best = None
    for f in enumerate_consistent(G, max_indegree):
        count = len(f.fixed_points())
        if best is None or count > best:
            best = count
    if best is None:
        raise UnrealizableGraphError("no Boolean network has this interaction graph")
    return best


def _check_network_shaped(G: SignedDigraph):
    if G.vertex_set != frozenset(range(1, G.n + 1)):
        raise ValueError("graph vertices must be exactly 1..n for network operations")


# -- instance-level theorem verdicts -----------------------------------------

NOT_APPLICABLE = "not-applicable"
HOLDS = "conclusion-holds"
COUNTEREXAMPLE = "counterexample"


def verify_antipodal_fixed_points(G: SignedDigraph, f: BooleanNetwork, cap=None):
    """Check the antipodal-pair conclusion on one (G, f) instance.

    Premises: G strong with exactly one negative cycle and at least one
    positive cycle, and f canalizes no arc of the negative cycle.  Under
    them the network must have two fixed points at Hamming distance n.
    Returns (verdict, witness_pair_or_None).
    """
    if f.interaction_graph() != G:
        raise ValueError("network's interaction graph differs from G")
    cap = DEFAULT_CYCLE_CAP if cap is None else cap
    if not is_strong(G):
        return NOT_APPLICABLE, None
    cycles = enumerate_cycles(G, cap)
    negatives = [c for c in cycles if c.sign == NEGATIVE]
    if len(negatives) != 1 or not any(c.sign == POSITIVE for c in cycles):
        return NOT_APPLICABLE, None
    if any(f.is_canalized(a) for a in negatives[0].arcs):
        return NOT_APPLICABLE, None
    fixed = set(f.fixed_points())
    for x in sorted(fixed):
        y = tuple(1 - b for b in x)
        if y in fixed:
            return HOLDS, (x, y)
    return COUNTEREXAMPLE, None


def disagreement_cycles(f: BooleanNetwork, special_arc_free: bool = False, cap=None):
    """Positive disagreement cycles for every pair of distinct fixed points.

    For each pair the witness is a positive cycle on whose vertices the two
    fixed points all differ; with ``special_arc_free`` the cycle must also
    have no special arc.  Returns (verdict, {(x, y): cycle}); the verdict is
    a counterexample when some pair has no witness.
    """
    from .structure import find_special_arc

    cap = DEFAULT_CYCLE_CAP if cap is None else cap
    G = f.interaction_graph()
    cycles = [c for c in enumerate_cycles(G, cap) if c.sign == POSITIVE]
    if special_arc_free:
        cycles = [c for c in cycles if find_special_arc(G, c, cap) is None]
    fixed = f.fixed_points()
    witnesses = {}
    for x, y in itertools.combinations(fixed, 2):
        disagree = {v + 1 for v in range(f.n) if x[v] != y[v]}
        for c in cycles:
            if c.vertex_set <= disagree:
                witnesses[(x, y)] = c
                break
        else:
            return COUNTEREXAMPLE, {"pair": (x, y)}
    return HOLDS, witnesses
