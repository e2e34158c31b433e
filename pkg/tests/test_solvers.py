import math
import random
from itertools import combinations

import pytest
from hypothesis import given

from domino.constructions import fan, path_standard, rotor, star
from domino.domination import Variant, is_feasible, is_valid_chain
from domino.errors import CapExceededError
from domino.graph import build_graph, relabel
from domino.solvers import (
    CAP_ENV,
    degree_lower_bounds,
    enumerate_chains,
    opt_inc,
    opt_off,
    solve,
)

from strategies import arrival_sequences

DS, CDS, TDS, IDS = Variant.DS, Variant.CDS, Variant.TDS, Variant.IDS


def brute_off(variant, seq):
    """First minimum feasible set in combinations order, i.e. lexicographically smallest."""
    graph = build_graph(seq)
    for k in range(seq.n + 1):
        for combo in combinations(range(1, seq.n + 1), k):
            if is_feasible(variant, graph, combo):
                return frozenset(combo)
    raise AssertionError("unreachable")


@given(arrival_sequences(max_n=9))
def test_opt_off_matches_brute_force_including_witness(seq):
    for variant in Variant:
        assert opt_off(variant, seq).witness == brute_off(variant, seq)


@given(arrival_sequences(max_n=7))
def test_opt_inc_matches_chain_enumeration(seq):
    for variant in Variant:
        res = opt_inc(variant, seq)
        assert res.size == enumerate_chains(variant, seq).min_size
        assert is_valid_chain(variant, seq, res.witness)


def test_enumeration_agrees_on_n8_samples():
    rng = random.Random(8)
    for _ in range(6):
        entries = [()] + [tuple(u for u in range(1, i) if rng.random() < 0.35)
                          for i in range(2, 9)]
        from domino.graph import ArrivalSequence

        seq = ArrivalSequence(tuple(entries))
        for variant in Variant:
            assert opt_inc(variant, seq).size == enumerate_chains(variant, seq).min_size


@pytest.mark.parametrize("n", range(1, 13))
def test_path_incremental_optima(n):
    p = path_standard(n)
    assert opt_inc(DS, p).size == math.ceil(n / 2)
    if n >= 3:
        assert opt_inc(CDS, p).size == n - 1
        assert opt_inc(TDS, p).size == n - 1
        assert opt_off(CDS, p).size == n - 2


def test_offline_examples():
    assert opt_off(DS, path_standard(9)).size == 3
    assert opt_off(DS, path_standard(9)).witness == {2, 5, 8}
    assert opt_off(CDS, path_standard(9)).size == 7
    assert opt_off(CDS, rotor(8)).size == 1
    assert opt_off(TDS, rotor(8)).size == 2
    for centre in ("first", "second", "last"):
        assert opt_off(IDS, star(6, centre)).size == 1


def test_incremental_examples():
    assert opt_inc(TDS, rotor(4)).size == 4
    assert opt_inc(DS, fan(5)).size == 3


def test_rotor_incremental_cds_value():
    # per-component connectivity lets each K_2 prefix component keep one vertex
    assert [opt_inc(CDS, rotor(d)).size for d in (2, 4, 6, 8)] == [1, 3, 4, 5]


@given(arrival_sequences(max_n=9))
def test_sandwich_and_ids_uniqueness(seq):
    from domino.algorithms import run_online

    for variant in Variant:
        assert opt_off(variant, seq).size <= opt_inc(variant, seq).size
    assert opt_inc(IDS, seq).size == run_online("greedy-ids", IDS, seq).size


@given(arrival_sequences(max_n=9))
def test_witnesses_are_feasible(seq):
    graph = build_graph(seq)
    for variant in Variant:
        assert is_feasible(variant, graph, opt_off(variant, seq).witness)
        assert is_valid_chain(variant, seq, opt_inc(variant, seq).witness)


@given(arrival_sequences(max_n=9))
def test_opt_off_is_order_invariant(seq):
    order = list(range(1, seq.n + 1))
    random.Random(seq.n).shuffle(order)
    other = relabel(seq, order)
    for variant in Variant:
        assert opt_off(variant, seq).size == opt_off(variant, other).size


@given(arrival_sequences(max_n=9))
def test_degree_lower_bounds(seq):
    graph = build_graph(seq)
    bounds = degree_lower_bounds(graph)
    assert opt_off(DS, seq).size >= bounds["ds"]
    if "cds" in bounds and len(graph.components()) == 1:
        assert opt_off(CDS, seq).size >= bounds["cds"]


def test_cap_refusal_and_override(monkeypatch):
    with pytest.raises(CapExceededError, match="--cap-inc"):
        opt_inc(DS, path_standard(15))
    assert opt_inc(DS, path_standard(15), cap=15).size == 8
    monkeypatch.setenv(CAP_ENV, "10")
    with pytest.raises(CapExceededError):
        opt_off(DS, path_standard(11), cap=30)
    monkeypatch.setenv(CAP_ENV, "16")
    assert opt_inc(DS, path_standard(16)).size == 8


def test_solve_dispatch():
    assert solve("ds", path_standard(4), "off").baseline == "off"
    with pytest.raises(ValueError):
        solve("ds", path_standard(4), "mid")


def test_empty_sequence():
    from domino.graph import ArrivalSequence

    empty = ArrivalSequence(())
    assert opt_off(DS, empty).size == 0
    assert opt_inc(CDS, empty).size == 0
