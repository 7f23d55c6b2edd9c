"""Shared test helpers: tiny builders and brute-force oracles.

The oracles here deliberately avoid the library's algorithms: cycles are
found by trying every vertex permutation, colorings by trying every state.
"""

import itertools

from signedbn.graphs import SignedDigraph


def g(n, *arcs):
    """Shorthand graph builder: g(3, (1, 2, '+'), (2, 1, '-'))."""
    return SignedDigraph(n, arcs)


def brute_cycles(G):
    """Every simple cycle as a canonical arc tuple, by exhaustive search."""
    by_pair = {}
    for a in G.arc_set:
        by_pair.setdefault((a.source, a.target), []).append(a)
    found = set()
    verts = G.vertices
    for size in range(1, len(verts) + 1):
        for subset in itertools.combinations(verts, size):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                order = (first,) + rest
                pairs = [
                    (order[i], order[(i + 1) % size]) for i in range(size)
                ]
                if not all(p in by_pair for p in pairs):
                    continue
                for choice in itertools.product(*(by_pair[p] for p in pairs)):
                    found.add(tuple(choice))
    return found


def cycle_key(cycle):
    return tuple(cycle.arcs)


def all_simple_signed_digraphs(n, loops=True):
    """Every simple signed digraph on 1..n (no parallel opposite arcs)."""
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if loops or u != v
    ]
    for combo in itertools.product((None, "+", "-"), repeat=len(pairs)):
        arcs = [
            (u, v, s) for (u, v), s in zip(pairs, combo) if s is not None
        ]
        yield SignedDigraph(n, arcs)


def all_signed_digraphs(n):
    """Every signed digraph on 1..n, parallel opposite-sign arcs included."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    options = ((), ("+",), ("-",), ("+", "-"))
    for combo in itertools.product(options, repeat=len(pairs)):
        arcs = [
            (u, v, s)
            for (u, v), signs in zip(pairs, combo)
            for s in signs
        ]
        yield SignedDigraph(n, arcs)
