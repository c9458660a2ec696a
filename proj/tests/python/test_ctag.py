import json
import pathlib

import pytest

import ctag
import mt_oracle

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


def test_clique_pattern_depth_and_coverage():
    for n in (4, 6, 10):
        c = ctag.clique_pattern(n)
        assert c.depth == 2 * n - 2
        report = ctag.verify(c, ctag.clique(n), ctag.architecture(f"linear:{n}"))
        assert report.ok
        assert report.missing == []


def test_random_graph_matches_oracle():
    for n, density, seed in [(10, 0.5, 1), (50, 0.3, 7), (17, 0.2, 3)]:
        g = ctag.random_graph(n, density, seed)
        assert sorted(g.edges) == sorted(mt_oracle.random_graph_edges(n, density, seed))


@pytest.mark.parametrize("name", sorted(p.name for p in GOLDEN.glob("*.graph")))
def test_golden_files(name):
    g = ctag.read_graph(str(GOLDEN / name))
    assert sorted(g.edges) == sorted(mt_oracle.read_graph(GOLDEN / name)[2])


@pytest.mark.parametrize("arch", ["linear:12", "grid:4x4", "ibm20", "ibm27"])
@pytest.mark.parametrize("strategy", ["ctag-r", "ctag-i", "ctag-h", "ctag"])
def test_schedule_verifies(arch, strategy):
    g = ctag.random_graph(12, 0.4, 5)
    a = ctag.architecture(arch)
    c = ctag.schedule(g, a, strategy=strategy, seed=5)
    report = ctag.verify(c, g, a)
    assert report.ok, report.to_json()
    m = ctag.metrics(c, a.num_qubits)
    assert m.cphase_count == g.num_edges
    assert m.abstract_depth == c.depth
    assert m.decomposed_depth == 3 * c.depth + 2


def test_json_round_trip_and_gate_tuples():
    g = ctag.random_graph(9, 0.5, 2)
    c = ctag.schedule(g, ctag.architecture("grid:3x3"))
    back = ctag.ScheduledCircuit.from_json(c.to_json())
    assert back.cycles == c.cycles
    assert back.init == c.init
    doc = json.loads(c.to_json())
    assert len(doc["cycles"]) == c.depth
    kinds = {gate[0] for cycle in c.cycles for gate in cycle}
    assert kinds <= {"CPHASE", "SWAP"}


def test_astar_beats_identity_on_worked_example():
    g = ctag.ProblemGraph(6, [(1, 3), (2, 4), (0, 1), (3, 4)])
    assert ctag.predicted_depth(g, list(range(6)), 6) == 9
    mapping, depth = ctag.astar_mapping(g)
    assert depth <= 5
    assert ctag.predicted_depth(g, mapping, 6) == depth


def test_meet_cycle_symmetry():
    assert ctag.meet_cycle(6, 1, 3) == ctag.meet_cycle(6, 3, 1) == 8


def test_errors_map_to_value_error(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("4 2\n0 1\n1 9\n")
    with pytest.raises(ctag.ParseError, match="line 3"):
        ctag.read_graph(str(bad))
    with pytest.raises(ValueError):
        ctag.ProblemGraph(3, [(0, 0)])
    with pytest.raises(ctag.ValidationError):
        ctag.architecture("moebius")
    with pytest.raises(ValueError):
        ctag.schedule(ctag.clique(3), ctag.architecture("linear:3"), strategy="nope")
