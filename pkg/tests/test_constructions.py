import pytest

from domino.constructions import (
    FAMILIES,
    FamilySpec,
    alternating_fan,
    bridge,
    disjoint_stars,
    fan,
    generate,
    ids_pendant_path,
    modular_bridge,
    path_standard,
    pendant_hosts,
    pendant_path,
    rotor,
    star,
    two_sided_fan,
)
from domino.domination import Variant
from domino.errors import ParameterError
from domino.graph import build_graph, classify
from domino.solvers import opt_inc, opt_off

DS, CDS, TDS, IDS = Variant.DS, Variant.CDS, Variant.TDS, Variant.IDS


def test_vertex_counts():
    assert alternating_fan(3, 4).n == 13
    assert modular_bridge(4, 5).n == 20
    assert rotor(8).n == 9
    assert two_sided_fan(10).n == 10
    assert pendant_path(8).n == 8 + 3 * 8
    assert disjoint_stars(2, 5).n == 12


def test_modular_bridge_chord_matching():
    g = build_graph(modular_bridge(4, 5))
    chords = range(17, 21)
    assert g.has_edge(17, 18) and g.has_edge(19, 20)
    assert not g.has_edge(18, 19)
    assert all(g.degree(u) == 5 for u in chords)


def test_bridge_links_consecutive_pairs():
    g = build_graph(bridge(4, 5))
    chords = list(range(13, 17))
    assert g.has_edge(chords[1], chords[2])
    assert g.max_degree() == 5


def test_rotor_order():
    seq = rotor(8)
    assert seq.arrivals[-1] == tuple(range(1, 9))
    assert all(seq.arrivals[i] == ((i,) if i % 2 else ()) for i in range(8))


def test_two_sided_fan_apexes():
    seq = two_sided_fan(10)
    assert seq.arrivals[8] == (2, 4, 6, 8)
    assert seq.arrivals[9] == (1, 3, 5, 7, 9)


def test_pendant_path_hosts():
    assert pendant_hosts(8) == [2, 5, 8]
    seq = pendant_path(8)
    assert seq.arrivals[8:16] == ((2,),) * 8


@pytest.mark.parametrize("seq", [fan(5), alternating_fan(3, 4), bridge(4, 4),
                                 two_sided_fan(8), modular_bridge(2, 4), ids_pendant_path(7, 4)])
def test_always_connected_families(seq):
    assert classify(seq).always_connected


def test_not_always_connected_families():
    assert not classify(disjoint_stars(2, 3)).always_connected
    assert not classify(rotor(6)).always_connected


def test_bipartite_classes():
    assert classify(two_sided_fan(12)).bipartite
    assert not classify(rotor(8)).bipartite
    # chords see two consecutive path vertices, which closes a triangle
    assert not classify(modular_bridge(2, 4)).bipartite


@pytest.mark.parametrize("seq,delta", [(fan(6), 6), (alternating_fan(3, 5), 5), (bridge(4, 5), 5),
                                       (rotor(8), 8), (ids_pendant_path(7, 4), 4)])
def test_declared_max_degree(seq, delta):
    assert build_graph(seq).max_degree() == delta


def test_golden_offline_values():
    f = fan(6)
    assert (opt_off(DS, f).size, opt_off(CDS, f).size, opt_off(TDS, f).size) == (1, 1, 2)
    for k, d in ((2, 4), (3, 4), (2, 5)):
        seq = alternating_fan(k, d)
        assert opt_off(DS, seq).size == k == (seq.n - 1) // d
    assert opt_off(TDS, modular_bridge(4, 3)).size <= 4
    assert opt_off(CDS, bridge(4, 4)).size <= 4
    for n in (6, 8, 10):
        assert {opt_off(v, two_sided_fan(n)).size for v in (DS, CDS, TDS)} == {2}


def test_disjoint_stars_incremental_value():
    seq = disjoint_stars(2, 5)
    assert opt_inc(DS, seq).size == seq.n * 5 // 6
    assert opt_off(DS, seq).size == 2


def test_ids_pendant_path_greedy_size():
    from domino.algorithms import run_online

    for n_path, delta in ((5, 3), (7, 4), (9, 3)):
        k = n_path // 2
        run = run_online("greedy-ids", IDS, ids_pendant_path(n_path, delta))
        assert run.size == k * delta - (k - 1)
    for n_path, delta in ((4, 3), (6, 4), (8, 3)):
        k = n_path // 2
        run = run_online("greedy-ids", IDS, ids_pendant_path(n_path, delta))
        assert run.size == k * delta - k


@pytest.mark.parametrize("call", [
    lambda: rotor(5), lambda: rotor(0), lambda: modular_bridge(3, 4), lambda: bridge(2, 2),
    lambda: alternating_fan(2, 3), lambda: pendant_path(7), lambda: star(3, "middle"),
    lambda: path_standard(0),
])
def test_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()


def test_family_spec_parsing():
    assert generate(FamilySpec.parse("rotor", "delta=8")) == rotor(8)
    assert generate(FamilySpec.parse("rotor:d=4")) == rotor(4)
    assert generate(FamilySpec.parse("disjoint-stars:i=2,d=3")) == disjoint_stars(2, 3)
    assert generate(FamilySpec.parse("star:n=5,center_pos=last")) == star(5, "last")
    with pytest.raises(ParameterError):
        generate(FamilySpec.parse("nope:n=3"))
    with pytest.raises(ParameterError):
        FamilySpec.parse("rotor:delta=x")
    with pytest.raises(ParameterError):
        generate(FamilySpec.parse("rotor:width=3"))


def test_generators_are_deterministic():
    for name, fn in FAMILIES.items():
        assert callable(fn), name
    assert modular_bridge(4, 5) == modular_bridge(4, 5)


@pytest.mark.parametrize("delta,expected", [(2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (7, 4), (8, 4), (9, 5)])
def test_fan_opt_inc_pinned(delta, expected):
    # solver value is ceil((n-1)/2); the n/2 figure is only asymptotic
    seq = fan(delta)
    assert opt_inc(DS, seq).size == expected == -(-(seq.n - 1) // 2)
