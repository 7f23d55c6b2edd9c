"""The falsification harness: registry, determinism, sensitivity."""

import pytest

from signedbn.falsify import (
    REGISTRY,
    falsify,
    make_existence_rule_property,
    run_falsification,
)
from signedbn.formats import parse_boolean_network, parse_signed_digraph
from signedbn.structure import uniqueness_arc_rule


class TestRegistry:
    def test_all_ids_registered(self):
        assert set(REGISTRY) == {
            "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7",
            "cor8", "lemma9", "harary", "richardson", "richardson-gen",
            "kernel-corr",
        }

    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError, match="unknown theorem"):
            falsify("thm99", trials=1)


class TestProvenStatements:
    @pytest.mark.parametrize("theorem", sorted(REGISTRY))
    def test_no_counterexamples_on_small_samples(self, theorem):
        report = falsify(theorem, trials=150, seed=11, max_n=4)
        assert report.counterexamples == []
        assert report.trials == 150

    def test_thm2_ten_thousand_trials(self):
        report = falsify("thm2", trials=10_000, seed=1, max_n=5)
        assert not report.falsified

    def test_exhaustive_mode(self):
        report = falsify("thm2", trials=0, seed=0, exhaustive_n=2)
        assert not report.falsified
        assert report.trials == 200  # consistent networks over all simple n<=2 graphs

    def test_exhaustive_bound_check(self):
        report = falsify("cor8", trials=0, seed=0, exhaustive_n=2)
        assert not report.falsified and report.trials == 200

    def test_exhaustive_mode_only_for_instance_checks(self):
        with pytest.raises(ValueError, match="exhaustive"):
            falsify("harary", trials=0, exhaustive_n=2)


class TestDeterminism:
    def test_reports_are_reproducible(self):
        a = falsify("thm1", trials=60, seed=9, max_n=4)
        b = falsify("thm1", trials=60, seed=9, max_n=4)
        assert a.to_dict() == b.to_dict()

    def test_wall_time_not_in_structured_output(self):
        report = falsify("thm2", trials=5, seed=0)
        assert "seconds" not in report.to_dict()


class TestSensitivity:
    def test_sign_flipped_existence_checker_is_caught(self):
        mutant = make_existence_rule_property(checker=uniqueness_arc_rule)
        report = run_falsification(mutant, trials=10_000, seed=7, max_n=5, stop_after=1)
        assert report.falsified
        assert report.trials < 10_000

    def test_counterexamples_reload_and_reverify(self):
        mutant = make_existence_rule_property(checker=uniqueness_arc_rule)
        report = run_falsification(mutant, trials=10_000, seed=7, max_n=5, stop_after=1)
        artifact = report.counterexamples[0].artifacts
        G = parse_signed_digraph(artifact["graph"])
        f = parse_boolean_network(artifact["network"])
        assert f.interaction_graph() == G
        assert uniqueness_arc_rule(G).holds
        assert not f.fixed_points()
