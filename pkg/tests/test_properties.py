"""Cross-module invariants checked on generated instances."""

from hypothesis import given

from domino.algorithms import run_online
from domino.domination import Variant, components_of
from domino.graph import ArrivalSequence, build_graph
from domino.solvers import enumerate_chains, opt_inc, opt_off

from strategies import arrival_sequences

DS, CDS, TDS, IDS = Variant.DS, Variant.CDS, Variant.TDS, Variant.IDS


@given(arrival_sequences(max_n=7, always_connected=True))
def test_every_tds_chain_is_connected_at_every_prefix(seq):
    graph = build_graph(seq)
    for i, d in enumerate_chains(TDS, seq, graph).states():
        assert components_of(graph.prefix(i), d) <= 1


@given(arrival_sequences(max_n=7))
def test_unique_ids_chain_is_greedy(seq):
    census = enumerate_chains(IDS, seq)
    assert census.count == 1
    greedy = run_online("greedy-ids", IDS, seq).chain
    assert census.some_chain() == greedy


@given(arrival_sequences(min_n=3, max_n=11, always_connected=True))
def test_incremental_variant_chain(seq):
    ds, tds, cds = (opt_inc(v, seq).size for v in (DS, TDS, CDS))
    assert ds <= tds <= cds + 1


def test_variant_chain_needs_always_connected():
    # three disjoint edges later joined through one vertex
    seq = ArrivalSequence(((), (1,), (), (3,), (), (5,), (1, 3, 5)))
    assert opt_inc(TDS, seq).size == 6 > opt_inc(CDS, seq).size + 1 == 5


@given(arrival_sequences(max_n=10))
def test_gamma_below_connected_gamma(seq):
    if len(build_graph(seq).components()) == 1:
        assert opt_off(DS, seq).size <= opt_off(CDS, seq).size


@given(arrival_sequences(max_n=10))
def test_algorithms_never_beat_incremental_optimum(seq):
    for variant, name in ((DS, "parent"), (CDS, "first-parent"), (TDS, "parent"),
                          (IDS, "greedy-ids")):
        assert opt_inc(variant, seq).size <= run_online(name, variant, seq).size
