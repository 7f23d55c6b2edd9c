"""Digraph kernels and their reading as Boolean-network fixed points.

A kernel is an independent vertex set K such that every vertex outside K
has an arc into K.  Encoding every arc as negative turns odd cycles into
negative cycles, so the no-odd-cycle existence theorem and its refinement
reuse the signed-graph machinery.
"""

from __future__ import annotations

from typing import Iterable

from .boolnet import BooleanNetwork, LocalFunction
from .graphs import NEGATIVE, SignedDigraph, has_negative_cycle
from .structure import existence_arc_rule

KERNEL_SCAN_LIMIT = 24


class Digraph:
    """Immutable unsigned digraph on vertices 1..n; loops allowed."""

    __slots__ = ("n", "_arcs", "_out")

    def __init__(self, n: int, arcs: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arc_set:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u},{v}) has an endpoint outside 1..{n}")
        self._arcs = arc_set
        outs: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        for u, v in arc_set:
            outs[u].add(v)
        self._out = {v: tuple(sorted(ts)) for v, ts in outs.items()}

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._arcs))

    @property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        return self._out[v]

    def reverse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self._arcs))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self.n, self._arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self._arcs)})"


def as_all_negative(D: Digraph) -> SignedDigraph:
    """Signed copy of D with every arc negative; odd cycles become negative."""
    return SignedDigraph(D.n, ((u, v, NEGATIVE) for u, v in D.arc_set))


def kernels(D: Digraph) -> list[frozenset[int]]:
    """All kernels of D by subset scan, in increasing bitmask order.

    This scan doubles as the brute-force oracle for the existence results.
    """
    if D.n > KERNEL_SCAN_LIMIT:
        raise ValueError(f"n={D.n} exceeds the subset scan limit {KERNEL_SCAN_LIMIT}")
    n = D.n
    out_mask = [0] * (n + 1)
    for u, v in D.arc_set:
        out_mask[u] |= 1 << (v - 1)
    found = []
    for mask in range(1 << n):
        ok = True
        for v in range(1, n + 1):
            inside = (mask >> (v - 1)) & 1
            hits = out_mask[v] & mask
            if inside and hits:
                ok = False
                break
            if not inside and not hits:
                ok = False
                break
        if ok:
            found.append(frozenset(v for v in range(1, n + 1) if (mask >> (v - 1)) & 1))
    return found


def richardson_condition(D: Digraph) -> bool:
    """No odd cycle (cycle parity = length parity); guarantees a kernel."""
    return not has_negative_cycle(as_all_negative(D))


def generalized_condition(D: Digraph) -> bool:
    """Every odd cycle can be cut so its tail keeps only even company.

    Precisely: every odd cycle of D has an arc (s -> t) such that D minus
    that arc has a non-trivial terminal strong component containing s and
    only even cycles.  Through the fixed-point correspondence (kernels are
    fixed points of a network wired along REVERSED arcs) this is exactly
    the at-least-one-fixed-point arc rule on the reversed, all-negative
    encoding, and it guarantees a kernel.
    """
    return existence_arc_rule(as_all_negative(D.reverse())).holds


def to_network(D: Digraph):
    """Network whose fixed points are exactly the kernel indicators.

    Component v is the conjunction of the negated OUT-neighbors of v
    (constant 1 when v has none): x is fixed iff x_v = 1 exactly when no
    out-neighbor is selected, which is the kernel condition pair.  The
    interaction graph is the reverse of D with all arcs negative.
    """
    locals_ = []
    for v in range(1, D.n + 1):
        inputs = D.out_neighbors(v)
        rows = 1 << len(inputs)
        table = tuple(1 if j == 0 else 0 for j in range(rows))
        locals_.append(LocalFunction(inputs, table))
    return BooleanNetwork(locals_)


def kernel_indicators(D: Digraph) -> set[frozenset[int]]:
    """Kernels decoded from the fixed points of the correspondence network."""
    f = to_network(D)
    return {
        frozenset(v for v in range(1, D.n + 1) if x[v - 1])
        for x in f.fixed_points()
    }
