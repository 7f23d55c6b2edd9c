"""Randomized falsification harness for the fixed-point statements.

Each registered property draws instances (a signed digraph, possibly with
a consistent network on top, or an unsigned digraph), evaluates the
statement's hypothesis and conclusion, and reports violations with the
serialized instance so counterexamples re-verify after a round trip.
Per-trial RNGs are derived from (seed, trial index), so reports do not
depend on execution order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import formats, structure
from .boolnet import (
    COUNTEREXAMPLE,
    disagreement_cycles,
    enumerate_consistent,
    is_realizable,
    sample_consistent,
    verify_antipodal_fixed_points,
)
from .codes import fixed_point_bound
from .generators import (
    iter_simple_signed_digraphs,
    random_digraph,
    random_signed_digraph,
)
from .graphs import (
    NEGATIVE,
    CycleCapExceeded,
    enumerate_cycles,
    has_negative_cycle,
    iter_cycles,
)
from .kernels import generalized_condition, kernel_indicators, kernels, richardson_condition
from .structure import existence_arc_rule, uniqueness_arc_rule, uniqueness_vertex_rule

FALSIFY_CYCLE_CAP = 10_000
SEARCH_TAU_LIMIT = 12


@dataclass(frozen=True)
class Counterexample:
    detail: str
    artifacts: dict[str, str] = field(default_factory=dict)


@dataclass
class FalsifyReport:
    theorem: str
    trials: int
    counterexamples: list[Counterexample]
    seconds: float

    @property
    def falsified(self) -> bool:
        return bool(self.counterexamples)

    def to_dict(self) -> dict:
        """Structured form; deterministic, so wall time stays out of it."""
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "counterexamples": [
                {"detail": c.detail, "artifacts": dict(sorted(c.artifacts.items()))}
                for c in self.counterexamples
            ],
        }


@dataclass(frozen=True)
class TheoremProperty:
    """One falsifiable statement: a generator plus a per-instance check.

    ``check`` returns None when the instance satisfies the statement
    (vacuously or not) and a Counterexample otherwise.
    """

    id: str
    description: str
    trial: Callable[[random.Random, int, int], Optional[Counterexample]]


def _graph_artifact(G) -> dict[str, str]:
    return {"graph": formats.format_signed_digraph(G)}


def _pair_artifact(G, f) -> dict[str, str]:
    return {
        "graph": formats.format_signed_digraph(G),
        "network": formats.format_boolean_network(f),
    }


def _digraph_artifact(D) -> dict[str, str]:
    return {"digraph": formats.format_digraph(D)}


def _random_realizable(rng: random.Random, max_n: int, max_indegree: int):
    """A random signed digraph with a non-empty consistent-network family."""
    while True:
        n = rng.randint(1, max_n)
        G = random_signed_digraph(n, rng=rng)
        if max(len(G.in_neighbors(v)) for v in G.vertices) > max_indegree:
            continue
        try:
            enumerate_cycles(G, FALSIFY_CYCLE_CAP)
        except CycleCapExceeded:
            continue
        if is_realizable(G, max_indegree):
            return G


def _random_pair(rng: random.Random, max_n: int, max_indegree: int):
    G = _random_realizable(rng, max_n, max_indegree)
    f = sample_consistent(G, rng=rng, max_indegree=max_indegree)
    return G, f


# -- per-theorem instance checks ----------------------------------------------


def _check_thm1(G, f) -> Optional[Counterexample]:
    verdict, info = disagreement_cycles(f, special_arc_free=False, cap=FALSIFY_CYCLE_CAP)
    if verdict == COUNTEREXAMPLE:
        return Counterexample(
            f"fixed points {info['pair']} share no positive disagreement cycle",
            _pair_artifact(G, f),
        )
    return None


def _check_thm2(G, f) -> Optional[Counterexample]:
    if has_negative_cycle(G):
        return None
    if not f.fixed_points():
        return Counterexample(
            "negative-cycle-free graph with a fixed-point-free network",
            _pair_artifact(G, f),
        )
    return None


def _condition_check(checker, conclusion, detail):
    def check(G, f) -> Optional[Counterexample]:
        if not checker(G):
            return None
        if conclusion(f):
            return None
        return Counterexample(detail, _pair_artifact(G, f))

    return check


def _check_thm6(G, f) -> Optional[Counterexample]:
    verdict, _ = verify_antipodal_fixed_points(G, f, cap=FALSIFY_CYCLE_CAP)
    if verdict == COUNTEREXAMPLE:
        return Counterexample(
            "premises hold but no antipodal fixed-point pair", _pair_artifact(G, f)
        )
    return None


def _check_thm7(G, f) -> Optional[Counterexample]:
    verdict, info = disagreement_cycles(f, special_arc_free=True, cap=FALSIFY_CYCLE_CAP)
    if verdict == COUNTEREXAMPLE:
        return Counterexample(
            f"fixed points {info['pair']} share no special-arc-free positive cycle",
            _pair_artifact(G, f),
        )
    return None


@lru_cache(maxsize=65536)
def _graph_fp_bound(G) -> int:
    return fixed_point_bound(
        G.n,
        structure.tau_tilde_plus(G, SEARCH_TAU_LIMIT, FALSIFY_CYCLE_CAP),
        structure.g_tilde_plus(G, FALSIFY_CYCLE_CAP),
    )


def _check_cor8(G, f) -> Optional[Counterexample]:
    if G.n > SEARCH_TAU_LIMIT:
        return None
    bound = _graph_fp_bound(G)
    count = len(f.fixed_points())
    if count > bound:
        return Counterexample(
            f"{count} fixed points exceed the bound {bound}", _pair_artifact(G, f)
        )
    return None


def _check_lemma9(G) -> Optional[Counterexample]:
    cycles = enumerate_cycles(G, FALSIFY_CYCLE_CAP)
    if sum(1 for c in cycles if c.sign == NEGATIVE) != 1:
        return None
    if structure.unique_negative_cycle_arc(G, FALSIFY_CYCLE_CAP) is None:
        return Counterexample(
            "unique negative cycle but every arc of it lies on a positive cycle",
            _graph_artifact(G),
        )
    return None


def _check_harary(G) -> Optional[Counterexample]:
    colors = structure.two_coloring(G)
    H = G.symmetrize()
    negative = any(c.sign == NEGATIVE for c in iter_cycles(H))
    if (colors is None) != negative:
        return Counterexample(
            "two-coloring existence disagrees with symmetrized negative cycles",
            _graph_artifact(G),
        )
    if colors is not None and G.consistent_subgraph(colors) != G:
        return Counterexample("returned coloring is not consistent", _graph_artifact(G))
    return None


def _check_richardson(D) -> Optional[Counterexample]:
    if richardson_condition(D) and not kernels(D):
        return Counterexample("no odd cycle but no kernel", _digraph_artifact(D))
    return None


def _check_richardson_gen(D) -> Optional[Counterexample]:
    if generalized_condition(D) and not kernels(D):
        return Counterexample("cut condition holds but no kernel", _digraph_artifact(D))
    return None


def _check_kernel_corr(D) -> Optional[Counterexample]:
    if set(kernels(D)) != kernel_indicators(D):
        return Counterexample(
            "kernels differ from decoded network fixed points", _digraph_artifact(D)
        )
    return None


# -- property construction -----------------------------------------------------


def _pair_property(theorem_id: str, description: str, check) -> TheoremProperty:
    def trial(rng: random.Random, max_n: int, max_indegree: int):
        G, f = _random_pair(rng, max_n, max_indegree)
        return check(G, f)

    return TheoremProperty(theorem_id, description, trial)


def _graph_property(theorem_id: str, description: str, check) -> TheoremProperty:
    def trial(rng: random.Random, max_n: int, max_indegree: int):
        G = random_signed_digraph(rng.randint(1, max_n), rng=rng)
        try:
            enumerate_cycles(G, FALSIFY_CYCLE_CAP)
        except CycleCapExceeded:
            return None
        return check(G)

    return TheoremProperty(theorem_id, description, trial)


def _digraph_property(theorem_id: str, description: str, check) -> TheoremProperty:
    def trial(rng: random.Random, max_n: int, max_indegree: int):
        D = random_digraph(rng.randint(1, max_n), rng=rng)
        return check(D)

    return TheoremProperty(theorem_id, description, trial)


def make_existence_rule_property(checker=existence_arc_rule) -> TheoremProperty:
    """The at-least-one-fixed-point arc rule, with an injectable checker.

    Tests inject a broken checker here to confirm the harness actually
    catches false statements.
    """
    check = _condition_check(
        lambda G: checker(G).holds,
        lambda f: bool(f.fixed_points()),
        "arc rule holds but the network has no fixed point",
    )
    return _pair_property("thm5", "existence arc rule implies a fixed point", check)


def _registry() -> dict[str, TheoremProperty]:
    thm3 = _condition_check(
        lambda G: uniqueness_arc_rule(G, FALSIFY_CYCLE_CAP).holds,
        lambda f: len(f.fixed_points()) <= 1,
        "uniqueness arc rule holds but the network has two fixed points",
    )
    thm4 = _condition_check(
        lambda G: uniqueness_vertex_rule(G, FALSIFY_CYCLE_CAP).holds,
        lambda f: len(f.fixed_points()) <= 1,
        "uniqueness vertex rule holds but the network has two fixed points",
    )
    props = [
        _pair_property("thm1", "distinct fixed points disagree on a positive cycle", _check_thm1),
        _pair_property("thm2", "no negative cycle implies a fixed point", _check_thm2),
        _pair_property("thm3", "uniqueness arc rule bounds fixed points by one", thm3),
        _pair_property("thm4", "uniqueness vertex rule bounds fixed points by one", thm4),
        make_existence_rule_property(),
        _pair_property("thm6", "antipodal pair under the unique-negative-cycle premises", _check_thm6),
        _pair_property("thm7", "disagreement cycle without special arc", _check_thm7),
        _pair_property("cor8", "fixed points within min(2^tau~+, A(n, g~+))", _check_cor8),
        _graph_property("lemma9", "unique negative cycle owns a positive-cycle-free arc", _check_lemma9),
        _graph_property("harary", "two-coloring iff balanced symmetrization", _check_harary),
        _digraph_property("richardson", "no odd cycle implies a kernel", _check_richardson),
        _digraph_property("richardson-gen", "odd-cycle cut condition implies a kernel", _check_richardson_gen),
        _digraph_property("kernel-corr", "kernels are the network's fixed points", _check_kernel_corr),
    ]
    return {p.id: p for p in props}


REGISTRY = _registry()

_EXHAUSTIVE_CHECKS = {
    "thm1": _check_thm1,
    "thm2": _check_thm2,
    "thm7": _check_thm7,
    "cor8": _check_cor8,
}


def run_falsification(
    prop: TheoremProperty,
    trials: int,
    seed: int,
    max_n: int = 5,
    exhaustive_n: Optional[int] = None,
    stop_after: Optional[int] = None,
    max_indegree: int = 4,
) -> FalsifyReport:
    """Drive one property for a number of independently seeded trials.

    With ``exhaustive_n`` (supported for instance-level statements) the
    harness sweeps every simple signed digraph up to that size and every
    consistent network instead of sampling.
    """
    start = time.perf_counter()
    found: list[Counterexample] = []
    ran = 0
    if exhaustive_n is not None:
        check = _EXHAUSTIVE_CHECKS.get(prop.id)
        if check is None:
            raise ValueError(f"theorem {prop.id!r} has no exhaustive mode")
        for n in range(1, exhaustive_n + 1):
            for G in iter_simple_signed_digraphs(n):
                for f in enumerate_consistent(G, max_indegree):
                    ran += 1
                    result = check(G, f)
                    if result is not None:
                        found.append(result)
                        if stop_after and len(found) >= stop_after:
                            return FalsifyReport(prop.id, ran, found, time.perf_counter() - start)
        return FalsifyReport(prop.id, ran, found, time.perf_counter() - start)
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        ran += 1
        result = prop.trial(rng, max_n, max_indegree)
        if result is not None:
            found.append(result)
            if stop_after and len(found) >= stop_after:
                break
    return FalsifyReport(prop.id, ran, found, time.perf_counter() - start)


def falsify(
    theorem: str,
    trials: int = 1000,
    seed: int = 0,
    max_n: int = 5,
    exhaustive_n: Optional[int] = None,
    stop_after: Optional[int] = None,
    max_indegree: int = 4,
) -> FalsifyReport:
    if theorem not in REGISTRY:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {sorted(REGISTRY)}")
    return run_falsification(
        REGISTRY[theorem], trials, seed, max_n, exhaustive_n, stop_after, max_indegree
    )
