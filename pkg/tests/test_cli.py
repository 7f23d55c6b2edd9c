"""The command-line surface: subcommands, output modes, exit codes."""

import json

import pytest

from signedbn.cli import main
from signedbn.formats import format_boolean_network, format_signed_digraph, format_digraph
from signedbn.boolnet import BooleanNetwork, LocalFunction
from signedbn.generators import figure1
from signedbn.kernels import Digraph


@pytest.fixture
def fig5(tmp_path):
    path = tmp_path / "fig5.sd"
    path.write_text(format_signed_digraph(figure1(5)))
    return str(path)


@pytest.fixture
def swap_net(tmp_path):
    f = BooleanNetwork([LocalFunction((2,), (0, 1)), LocalFunction((1,), (0, 1))])
    path = tmp_path / "swap.bn"
    path.write_text(format_boolean_network(f))
    return str(path)


@pytest.fixture
def two_cycle_digraph(tmp_path):
    path = tmp_path / "two.dg"
    path.write_text(format_digraph(Digraph(2, [(1, 2), (2, 1)])))
    return str(path)


class TestAnalyze:
    def test_human_output(self, fig5, capsys):
        assert main(["analyze", fig5]) == 0
        out = capsys.readouterr().out
        assert "tau_plus = 1" in out
        assert "g_tilde_plus = inf" in out
        assert len(out.strip().split("\n")) == 10

    def test_structured_output(self, fig5, capsys):
        assert main(["--format", "structured", "analyze", fig5]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema_version"] == 1
        assert payload["fp_upper_bound"] == 1
        assert payload["thm3"] is True

    def test_structured_output_is_deterministic(self, fig5, capsys):
        main(["--format", "structured", "analyze", fig5])
        first = capsys.readouterr().out
        main(["--format", "structured", "analyze", fig5])
        assert capsys.readouterr().out == first

    def test_parse_error_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.sd"
        bad.write_text("sdigraph 2\n1 2 +\n1 2 +\n")
        with pytest.raises(SystemExit) as err:
            main(["analyze", str(bad)])
        assert err.value.code == 2
        assert "duplicate arc" in capsys.readouterr().err

    def test_missing_file_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["analyze", "/nonexistent.sd"])
        assert err.value.code == 2


class TestNetworkCommands:
    def test_fixed_points(self, swap_net, capsys):
        assert main(["fixed-points", swap_net]) == 0
        out = capsys.readouterr().out
        assert "00" in out and "11" in out and "count = 2" in out

    def test_fixed_points_structured(self, swap_net, capsys):
        main(["--format", "structured", "fixed-points", swap_net])
        payload = json.loads(capsys.readouterr().out)
        assert payload["fixed_points"] == ["00", "11"]

    def test_attractors(self, swap_net, capsys):
        assert main(["attractors", swap_net]) == 0
        out = capsys.readouterr().out
        assert "count = 2" in out


class TestBoundsCommand:
    def test_bounds(self, fig5, capsys):
        assert main(["bounds", fig5]) == 0
        out = capsys.readouterr().out
        assert "fp_upper_bound" in out and "= 1" in out


class TestKernelsCommand:
    def test_kernels_found(self, two_cycle_digraph, capsys):
        assert main(["kernels", two_cycle_digraph]) == 0
        out = capsys.readouterr().out
        assert "{1}" in out and "{2}" in out

    def test_no_kernel_exit_code(self, tmp_path, capsys):
        path = tmp_path / "tri.dg"
        path.write_text(format_digraph(Digraph(3, [(1, 2), (2, 3), (3, 1)])))
        assert main(["kernels", str(path)]) == 1


class TestCheckCommand:
    def test_graph_condition_holds(self, fig5, capsys):
        assert main(["check", "--theorem", "thm3", fig5]) == 0
        assert "holds" in capsys.readouterr().out

    def test_graph_condition_fails(self, tmp_path, capsys):
        path = tmp_path / "loop.sd"
        path.write_text("sdigraph 1\n1 1 +\n")
        assert main(["check", "--theorem", "thm3", str(path)]) == 1
        assert "violated" in capsys.readouterr().out

    def test_instance_check(self, tmp_path, swap_net, capsys):
        graph = tmp_path / "pos2.sd"
        graph.write_text("sdigraph 2\n1 2 +\n2 1 +\n")
        assert main(["check", "--theorem", "thm1", str(graph), swap_net]) == 0

    def test_instance_check_needs_network(self, fig5):
        with pytest.raises(SystemExit) as err:
            main(["check", "--theorem", "thm1", fig5])
        assert err.value.code == 2

    def test_digraph_check(self, two_cycle_digraph):
        assert main(["check", "--theorem", "richardson", two_cycle_digraph]) == 0

    def test_unknown_theorem(self, fig5):
        with pytest.raises(SystemExit) as err:
            main(["check", "--theorem", "nope", fig5])
        assert err.value.code == 2


class TestGenerate:
    def test_figure1_to_file(self, tmp_path, capsys):
        out = tmp_path / "g.sd"
        assert main(["generate", "figure1", "--n", "7", "-o", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("sdigraph 7")
        assert text == format_signed_digraph(figure1(7))

    def test_double_cycle_stdout(self, capsys):
        assert main(["generate", "double_cycle", "--lengths", "2", "1",
                     "--signs", "+", "-"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("sdigraph 2")
        assert "1 1 -" in out

    def test_random_is_seeded(self, capsys):
        main(["generate", "random", "--n", "6", "--seed", "5"])
        first = capsys.readouterr().out
        main(["generate", "random", "--n", "6", "--seed", "5"])
        assert capsys.readouterr().out == first

    def test_bad_params_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["generate", "figure1", "--n", "4"])
        assert err.value.code == 2


class TestFalsifyCommand:
    def test_clean_run_exits_0(self, capsys):
        assert main(["falsify", "--theorem", "thm2", "--trials", "50",
                     "--seed", "3"]) == 0
        assert "0 counterexamples" in capsys.readouterr().out

    def test_structured_report_is_deterministic(self, capsys):
        args = ["--format", "structured", "falsify", "--theorem", "lemma9",
                "--trials", "40", "--seed", "2"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        assert capsys.readouterr().out == first
        payload = json.loads(first)
        assert payload["trials"] == 40
