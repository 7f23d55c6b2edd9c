"""Instance generators: the chained-triangle family, double cycles, random graphs."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graphs import NEGATIVE, POSITIVE, SignedDigraph
from .kernels import Digraph


def figure1(n: int) -> SignedDigraph:
    """Chain of positive triangles with a negative loop on every odd vertex >= 3.

    The first triangle sits on (1,2,3); triangle t >= 2 sits on
    (2(t-1), 2t, 2t+1) and shares its first vertex with the previous one.
    Requires odd n >= 3.  Despite holding positive cycles through every
    vertex, every triangle can be cut at its loop-carrying vertex, which
    keeps the number of consistent fixed points at one.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    arcs = [(1, 2, POSITIVE), (2, 3, POSITIVE), (3, 1, POSITIVE)]
    for t in range(2, (n - 1) // 2 + 1):
        a, b, c = 2 * (t - 1), 2 * t, 2 * t + 1
        arcs += [(a, b, POSITIVE), (b, c, POSITIVE), (c, a, POSITIVE)]
    arcs += [(v, v, NEGATIVE) for v in range(3, n + 1, 2)]
    return SignedDigraph(n, arcs)


def double_cycle(len1: int, sign1, len2: int, sign2) -> SignedDigraph:
    """Two cycles of the given lengths and signs sharing exactly vertex 1.

    Each cycle carries its sign on the closing arc back to vertex 1 and
    positive arcs elsewhere; a length-1 cycle is a loop at vertex 1.
    """
    if len1 < 1 or len2 < 1:
        raise ValueError("cycle lengths must be at least 1")
    arcs = []
    arcs += _cycle_arcs(1, range(2, len1 + 1), sign1)
    arcs += _cycle_arcs(1, range(len1 + 1, len1 + len2), sign2)
    n = len1 + len2 - 1
    return SignedDigraph(n, arcs)


def _cycle_arcs(anchor: int, others, closing_sign) -> list:
    others = list(others)
    if not others:
        return [(anchor, anchor, closing_sign)]
    arcs = []
    prev = anchor
    for v in others:
        arcs.append((prev, v, POSITIVE))
        prev = v
    arcs.append((prev, anchor, closing_sign))
    return arcs


def random_signed_digraph(
    n: int,
    arc_prob: float | None = None,
    neg_prob: float = 0.5,
    seed=None,
    rng: random.Random | None = None,
) -> SignedDigraph:
    """Draw each of the 2n^2 possible signed arcs independently.

    A positive arc appears with probability arc_prob * (1 - neg_prob) and a
    negative one with arc_prob * neg_prob, so arc_prob is the expected arc
    density per ordered vertex pair; it defaults to 2/n.
    """
    if rng is None:
        rng = random.Random(seed)
    if arc_prob is None:
        arc_prob = 2.0 / n
    arcs = []
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if rng.random() < arc_prob * (1.0 - neg_prob):
                arcs.append((u, v, POSITIVE))
            if rng.random() < arc_prob * neg_prob:
                arcs.append((u, v, NEGATIVE))
    return SignedDigraph(n, arcs)


def random_digraph(
    n: int,
    arc_prob: float | None = None,
    seed=None,
    rng: random.Random | None = None,
) -> Digraph:
    """Unsigned random digraph; each of the n^2 arcs drawn independently."""
    if rng is None:
        rng = random.Random(seed)
    if arc_prob is None:
        arc_prob = 2.0 / n
    arcs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if rng.random() < arc_prob
    ]
    return Digraph(n, arcs)


def iter_simple_signed_digraphs(n: int) -> Iterator[SignedDigraph]:
    """Every simple signed digraph on 1..n (loops allowed, no parallel pairs)."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    for combo in itertools.product((None, POSITIVE, NEGATIVE), repeat=len(pairs)):
        arcs = [(u, v, s) for (u, v), s in zip(pairs, combo) if s is not None]
        yield SignedDigraph(n, arcs)


def iter_digraphs(n: int) -> Iterator[Digraph]:
    """Every digraph on 1..n, loops allowed."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    for mask in range(1 << len(pairs)):
        arcs = [p for i, p in enumerate(pairs) if (mask >> i) & 1]
        yield Digraph(n, arcs)
