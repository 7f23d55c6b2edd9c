"""Signed directed graphs: data model, subgraph calculus and cycle structure.

Vertices are positive integers.  A freshly built graph normally uses 1..n,
but subgraph operations (``induced``, ``delete``) keep the original vertex
ids, so a graph may live on any finite set of positive integers.

States (points of {0,1}^n) are plain tuples of 0/1 ints indexed by vertex
id: position v-1 holds the value of vertex v.  A state may cover a superset
of a subgraph's vertices; entries at positions of missing vertices are
ignored.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

POSITIVE = 1
NEGATIVE = -1

INF = float("inf")

DEFAULT_CYCLE_CAP = 10 ** 6

_SIGN_CHARS = {POSITIVE: "+", NEGATIVE: "-"}
_CHAR_SIGNS = {"+": POSITIVE, "-": NEGATIVE}


class CycleCapExceeded(Exception):
    """A cycle enumeration found more cycles than its cap allows."""


def sign_char(sign: int) -> str:
    return _SIGN_CHARS[sign]


class Arc(NamedTuple):
    source: int
    target: int
    sign: int

    def __repr__(self):
        return f"({self.source}->{self.target},{sign_char(self.sign)})"


def as_arc(value) -> Arc:
    """Coerce an Arc or (source, target, sign) triple; signs may be '+'/'-'."""
    if isinstance(value, Arc):
        return value
    u, v, s = value
    if isinstance(s, str):
        if s not in _CHAR_SIGNS:
            raise ValueError(f"bad sign {s!r}")
        s = _CHAR_SIGNS[s]
    if s not in (POSITIVE, NEGATIVE):
        raise ValueError(f"bad sign {s!r}")
    return Arc(int(u), int(v), s)


def _arc_sort_key(a: Arc):
    return (a.source, a.target, 0 if a.sign == POSITIVE else 1)


class SignedDigraph:
    """Immutable signed digraph.

    ``vertices`` may be an int n (meaning 1..n) or an iterable of vertex
    ids.  Parallel arcs of opposite signs between the same ordered pair are
    allowed; duplicate identical arcs collapse.
    """

    __slots__ = ("_vertices", "_arcs", "_in", "_out", "_hash", "_cycle_cache")

    def __init__(self, vertices, arcs: Iterable = ()):
        if isinstance(vertices, int):
            if vertices < 0:
                raise ValueError("vertex count must be non-negative")
            vertex_set = frozenset(range(1, vertices + 1))
        else:
            vertex_set = frozenset(int(v) for v in vertices)
            if any(v < 1 for v in vertex_set):
                raise ValueError("vertex ids must be positive integers")
        arc_set = frozenset(as_arc(a) for a in arcs)
        for a in arc_set:
            if a.source not in vertex_set or a.target not in vertex_set:
                raise ValueError(f"arc {a!r} has an endpoint outside the vertex set")
        self._vertices = vertex_set
        self._arcs = arc_set
        ins: dict[int, list[Arc]] = {v: [] for v in vertex_set}
        outs: dict[int, list[Arc]] = {v: [] for v in vertex_set}
        for a in sorted(arc_set, key=_arc_sort_key):
            outs[a.source].append(a)
            ins[a.target].append(a)
        self._in = {v: tuple(lst) for v, lst in ins.items()}
        self._out = {v: tuple(lst) for v, lst in outs.items()}
        self._hash = None
        self._cycle_cache = None

    # -- basic views ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self) -> frozenset[int]:
        return self._vertices

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self._arcs, key=_arc_sort_key))

    @property
    def arc_set(self) -> frozenset[Arc]:
        return self._arcs

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def has_arc(self, u: int, v: int, sign: int | None = None) -> bool:
        if sign is None:
            return Arc(u, v, POSITIVE) in self._arcs or Arc(u, v, NEGATIVE) in self._arcs
        return Arc(u, v, sign) in self._arcs

    def in_arcs(self, v: int) -> tuple[Arc, ...]:
        self._check_vertex(v)
        return self._in[v]

    def out_arcs(self, v: int) -> tuple[Arc, ...]:
        self._check_vertex(v)
        return self._out[v]

    def indegree(self, v: int) -> int:
        return len(self.in_arcs(v))

    def in_neighbors(self, v: int, sign: int | None = None) -> tuple[int, ...]:
        arcs = self.in_arcs(v)
        if sign is not None:
            arcs = [a for a in arcs if a.sign == sign]
        return tuple(sorted({a.source for a in arcs}))

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if not self._in[v])

    def _check_vertex(self, v: int):
        if v not in self._vertices:
            raise ValueError(f"vertex {v} is not in the graph")

    def _check_subset(self, I: Iterable[int]) -> frozenset[int]:
        s = frozenset(int(v) for v in I)
        bad = s - self._vertices
        if bad:
            raise ValueError(f"vertex ids {sorted(bad)} are not in the graph")
        return s

    def __eq__(self, other):
        if not isinstance(other, SignedDigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, self._arcs))
        return self._hash

    def __repr__(self):
        return f"SignedDigraph(n={self.n}, arcs={len(self._arcs)})"

    # -- subgraph calculus ----------------------------------------------

    def induced(self, I: Iterable[int]) -> "SignedDigraph":
        """Subgraph induced by the vertex set I; original ids are kept."""
        keep = self._check_subset(I)
        arcs = [a for a in self._arcs if a.source in keep and a.target in keep]
        return SignedDigraph(keep, arcs)

    def remove_incoming(self, I: Iterable[int]) -> "SignedDigraph":
        """Drop every arc whose terminal vertex lies in I; vertices kept."""
        drop = self._check_subset(I)
        arcs = [a for a in self._arcs if a.target not in drop]
        return SignedDigraph(self._vertices, arcs)

    def delete(self, x) -> "SignedDigraph":
        """Remove an arc (vertices kept) or a vertex (with attached arcs)."""
        if isinstance(x, (Arc, tuple)):
            a = as_arc(x)
            if a not in self._arcs:
                raise ValueError(f"arc {a!r} is not in the graph")
            return SignedDigraph(self._vertices, self._arcs - {a})
        v = int(x)
        self._check_vertex(v)
        arcs = [a for a in self._arcs if a.source != v and a.target != v]
        return SignedDigraph(self._vertices - {v}, arcs)

    def symmetrize(self) -> "SignedDigraph":
        """Close the arc set under sign-preserving reversal."""
        arcs = set(self._arcs)
        arcs.update(Arc(a.target, a.source, a.sign) for a in self._arcs)
        return SignedDigraph(self._vertices, arcs)

    def consistent_subgraph(self, x: Sequence[int]) -> "SignedDigraph":
        """Spanning subgraph of arcs consistent with the state x.

        Keeps positive arcs between equal-valued endpoints and negative
        arcs between unequal ones.
        """
        self._check_state(x)
        arcs = [
            a
            for a in self._arcs
            if (x[a.source - 1] == x[a.target - 1]) == (a.sign == POSITIVE)
        ]
        return SignedDigraph(self._vertices, arcs)

    def _check_state(self, x: Sequence[int]):
        if self._vertices and len(x) < max(self._vertices):
            raise ValueError(
                f"state of length {len(x)} does not cover vertex ids up to "
                f"{max(self._vertices)}"
            )


# -- states ---------------------------------------------------------------


def complement(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(1 - b for b in x)


def flip(x: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(1 - b if i == v - 1 else b for i, b in enumerate(x))


def hamming(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError("states have different lengths")
    return sum(a != b for a, b in zip(x, y))


# -- paths and cycles ------------------------------------------------------


def _check_chain(arcs: tuple[Arc, ...]):
    for a, b in zip(arcs, arcs[1:]):
        if a.target != b.source:
            raise ValueError(f"arcs {a!r} and {b!r} do not chain")


def _sign_product(arcs: Iterable[Arc]) -> int:
    sign = POSITIVE
    for a in arcs:
        sign *= a.sign
    return sign


class SignedPath:
    """Directed simple path given as a non-empty chained arc sequence."""

    __slots__ = ("arcs",)

    def __init__(self, arcs: Iterable):
        arcs = tuple(as_arc(a) for a in arcs)
        if not arcs:
            raise ValueError("a path needs at least one arc")
        _check_chain(arcs)
        verts = [arcs[0].source] + [a.target for a in arcs]
        if len(set(verts)) != len(verts):
            raise ValueError("path repeats a vertex")
        self.arcs = arcs

    @property
    def sign(self) -> int:
        return _sign_product(self.arcs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.arcs[0].source,) + tuple(a.target for a in self.arcs)

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, SignedPath):
            return NotImplemented
        return self.arcs == other.arcs

    def __hash__(self):
        return hash(("path", self.arcs))

    def __repr__(self):
        chain = "->".join(str(v) for v in self.vertices)
        return f"Path({chain},{sign_char(self.sign)})"


class SignedCycle:
    """Directed simple cycle stored in canonical rotation.

    The rotation starts at the minimal vertex, so equal cycles compare
    equal regardless of the rotation they were built from.  A loop is a
    cycle of length one.
    """

    __slots__ = ("arcs",)

    def __init__(self, arcs: Iterable):
        arcs = tuple(as_arc(a) for a in arcs)
        if not arcs:
            raise ValueError("a cycle needs at least one arc")
        _check_chain(arcs)
        if arcs[-1].target != arcs[0].source:
            raise ValueError("arc sequence does not close")
        sources = [a.source for a in arcs]
        if len(set(sources)) != len(sources):
            raise ValueError("cycle repeats a vertex")
        i = sources.index(min(sources))
        self.arcs = arcs[i:] + arcs[:i]

    @property
    def sign(self) -> int:
        return _sign_product(self.arcs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(a.source for a in self.arcs)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, SignedCycle):
            return NotImplemented
        return self.arcs == other.arcs

    def __hash__(self):
        return hash(("cycle", self.arcs))

    def __repr__(self):
        chain = "->".join(str(v) for v in self.vertices + (self.vertices[0],))
        return f"Cycle({chain},{sign_char(self.sign)})"


# -- strongly connected components ----------------------------------------


def tarjan_components(vertices: Iterable, successors: Callable) -> list[list]:
    """Iterative Tarjan over an implicit graph.

    Returns the strongly connected components in reverse topological
    order: every arc leaving an emitted component enters an earlier one.
    Deterministic for a fixed vertex order and successor order.
    """
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    counter = itertools.count()
    components: list[list] = []
    for root in vertices:
        if root in index:
            continue
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors(root)))]
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    pushed = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if pushed:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


@dataclass(frozen=True)
class ComponentDecomposition:
    """Strong components in topological order with per-component flags.

    ``initial``: no arc enters the component from outside.
    ``terminal``: no arc leaves it.
    ``nontrivial``: the induced subgraph contains at least one arc (a
    single vertex with a loop counts as non-trivial).
    """

    components: tuple[frozenset[int], ...]
    initial: tuple[bool, ...]
    terminal: tuple[bool, ...]
    nontrivial: tuple[bool, ...]

    def component_of(self, v: int) -> frozenset[int]:
        for comp in self.components:
            if v in comp:
                return comp
        raise ValueError(f"vertex {v} is not in any component")

    def index_of(self, v: int) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise ValueError(f"vertex {v} is not in any component")

    def initial_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c, f in zip(self.components, self.initial) if f)

    def terminal_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c, f in zip(self.components, self.terminal) if f)

    def __len__(self):
        return len(self.components)


def scc(G: SignedDigraph) -> ComponentDecomposition:
    """Strong components of G, topologically ordered (arcs go forward)."""

    def succ(v):
        seen = []
        last = None
        for a in G.out_arcs(v):
            if a.target != last:
                seen.append(a.target)
                last = a.target
        return seen

    comps = tarjan_components(G.vertices, succ)
    comps.reverse()
    components = tuple(frozenset(c) for c in comps)
    initial = []
    terminal = []
    nontrivial = []
    for comp in components:
        has_in = any(a.source not in comp for v in comp for a in G.in_arcs(v))
        has_out = any(a.target not in comp for v in comp for a in G.out_arcs(v))
        has_arc = any(a.target in comp for v in comp for a in G.out_arcs(v))
        initial.append(not has_in)
        terminal.append(not has_out)
        nontrivial.append(has_arc)
    return ComponentDecomposition(components, tuple(initial), tuple(terminal), tuple(nontrivial))


def is_strong(G: SignedDigraph) -> bool:
    return len(scc(G)) <= 1


# -- cycle enumeration -----------------------------------------------------


def iter_cycles(G: SignedDigraph) -> Iterator[SignedCycle]:
    """Yield every directed simple cycle of G exactly once.

    Cycles come out grouped by their minimal vertex in increasing order;
    within a group the order is lexicographic on the vertex sequence, with
    positive arcs tried before negative ones.  Parallel arcs of opposite
    signs give distinct cycles.
    """
    for s in G.vertices:
        path: list[Arc] = []
        on_path = {s}
        iters = [iter(G.out_arcs(s))]
        while iters:
            advanced = False
            for arc in iters[-1]:
                t = arc.target
                if t == s:
                    yield SignedCycle(path + [arc])
                elif t > s and t not in on_path:
                    path.append(arc)
                    on_path.add(t)
                    iters.append(iter(G.out_arcs(t)))
                    advanced = True
                    break
            if not advanced:
                iters.pop()
                if path:
                    on_path.discard(path.pop().target)


def enumerate_cycles(G: SignedDigraph, cap: int = DEFAULT_CYCLE_CAP) -> list[SignedCycle]:
    """All simple cycles of G in deterministic order.

    Raises CycleCapExceeded when the graph has more than ``cap`` cycles;
    truncation is never silent.  The complete list is cached on the graph.
    """
    cached = G._cycle_cache
    if cached is None:
        out = []
        over = False
        for c in iter_cycles(G):
            out.append(c)
            if len(out) > cap:
                over = True
                break
        if over:
            raise CycleCapExceeded(f"more than {cap} cycles")
        G._cycle_cache = out
        cached = out
    if len(cached) > cap:
        raise CycleCapExceeded(f"more than {cap} cycles")
    return list(cached)


def has_positive_cycle(G: SignedDigraph, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    return any(c.sign == POSITIVE for c in enumerate_cycles(G, cap))


def vertices_on_positive_cycles(G: SignedDigraph, cap: int = DEFAULT_CYCLE_CAP) -> frozenset[int]:
    verts: set[int] = set()
    for c in enumerate_cycles(G, cap):
        if c.sign == POSITIVE:
            verts.update(c.vertices)
    return frozenset(verts)


# -- negative-cycle detection (polynomial) ---------------------------------


def _component_parity(G: SignedDigraph, comp: frozenset[int]):
    """Parity labels from a directed BFS tree inside a strong component.

    Returns (parity, parent) where parent maps each non-root vertex to the
    tree arc that reached it.
    """
    root = min(comp)
    parity = {root: POSITIVE}
    parent: dict[int, Arc] = {}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in G.out_arcs(v):
            t = a.target
            if t in comp and t not in parity:
                parity[t] = parity[v] * a.sign
                parent[t] = a
                queue.append(t)
    return parity, parent


def _component_bad_arc(G: SignedDigraph, comp: frozenset[int], parity) -> Arc | None:
    for v in sorted(comp):
        for a in G.out_arcs(v):
            if a.target in comp and parity[a.target] != parity[v] * a.sign:
                return a
    return None


def has_negative_cycle(G: SignedDigraph) -> bool:
    """True iff some directed simple cycle of G is negative.

    Polynomial: inside each strong component a negative cycle exists iff
    the component admits no assignment x with all arcs consistent (the
    sign-parity labelling from any spanning tree already decides this).
    """
    decomposition = scc(G)
    for comp in decomposition.components:
        parity, _ = _component_parity(G, comp)
        if _component_bad_arc(G, comp, parity) is not None:
            return True
    return False


def _directed_path_arcs(G: SignedDigraph, comp: frozenset[int], start: int, goal: int) -> list[Arc]:
    """Arcs of some directed path start -> goal inside comp (must exist)."""
    if start == goal:
        return []
    parent: dict[int, Arc] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        v = queue.popleft()
        for a in G.out_arcs(v):
            t = a.target
            if t in comp and t not in seen:
                parent[t] = a
                seen.add(t)
                if t == goal:
                    queue.clear()
                    break
                queue.append(t)
    arcs = []
    v = goal
    while v != start:
        a = parent[v]
        arcs.append(a)
        v = a.source
    arcs.reverse()
    return arcs


def _tree_path_arcs(parent: dict[int, Arc], v: int) -> list[Arc]:
    arcs = []
    while v in parent:
        a = parent[v]
        arcs.append(a)
        v = a.source
    arcs.reverse()
    return arcs


def extract_negative_cycle(walk: Sequence[Arc]) -> SignedCycle:
    """Split a negative closed walk into simple cycles; return a negative one."""
    arcs = list(walk)
    stack_vertices = [arcs[0].source]
    stack_arcs: list[Arc] = []
    position = {arcs[0].source: 0}
    for arc in arcs:
        stack_arcs.append(arc)
        t = arc.target
        if t in position:
            i = position[t]
            piece = stack_arcs[i:]
            if _sign_product(piece) == NEGATIVE:
                return SignedCycle(piece)
            del stack_arcs[i:]
            for v in stack_vertices[i + 1:]:
                del position[v]
            del stack_vertices[i + 1:]
        else:
            stack_vertices.append(t)
            position[t] = len(stack_vertices) - 1
    raise AssertionError("walk was not negative and closed")


def find_negative_cycle(G: SignedDigraph) -> SignedCycle | None:
    """A negative simple cycle of G, or None when all cycles are positive."""
    decomposition = scc(G)
    for comp in decomposition.components:
        parity, parent = _component_parity(G, comp)
        bad = _component_bad_arc(G, comp, parity)
        if bad is None:
            continue
        root = min(comp)
        back = _directed_path_arcs(G, comp, bad.target, root)
        # One of the two closed walks below is negative: their signs
        # multiply to the parity defect of the bad arc.
        walk = _tree_path_arcs(parent, bad.source) + [bad] + back
        if _sign_product(walk) != NEGATIVE:
            walk = _tree_path_arcs(parent, bad.target) + back
        return extract_negative_cycle(walk)
    return None


# -- reachability -----------------------------------------------------------


def reachable(
    G: SignedDigraph,
    sources: Iterable[int],
    forbidden: Iterable[int],
    target: int,
) -> bool:
    """Directed path from some source to ``target`` avoiding ``forbidden``.

    Path endpoints are subject to the restriction too, so a source inside
    ``forbidden`` is unusable.  A trivial path counts when the target is
    itself a source.
    """
    blocked = G._check_subset(forbidden)
    G._check_vertex(target)
    if target in blocked:
        raise ValueError("target must not be forbidden")
    starts = [v for v in G._check_subset(sources) if v not in blocked]
    if target in starts:
        return True
    seen = set(starts)
    queue = list(starts)
    while queue:
        v = queue.pop()
        for a in G.out_arcs(v):
            t = a.target
            if t in blocked or t in seen:
                continue
            if t == target:
                return True
            seen.add(t)
            queue.append(t)
    return False
