import pytest
from hypothesis import given

from domino.constructions import path_standard, pendant_path
from domino.domination import SolutionChain, Variant, components_of, is_feasible, is_valid_chain
from domino.errors import PreconditionError
from domino.graph import ArrivalSequence, build_graph
from domino.solvers import opt_inc, opt_off
from domino.transforms import (
    component_founders,
    connectify,
    incremental_connectify,
    tree_incremental_from_set,
)

from strategies import arrival_sequences, connected_sequences

DS, CDS = Variant.DS, Variant.CDS


def test_connectify_tight_on_p9():
    cert = connectify(path_standard(9), {2, 5, 8})
    assert cert.output_size == 7 == cert.bound
    assert cert.input_components == 3
    assert cert.output == frozenset(range(2, 9))


def test_connectify_keeps_connected_sets():
    cert = connectify(path_standard(6), {2, 3, 4, 5})
    assert cert.output == {2, 3, 4, 5} and cert.added == ()


def test_connectify_prefers_single_connectors():
    # star centre 1 with leaves; S = two leaves plus ... connector is the centre
    seq = ArrivalSequence(((), (1,), (1,), (1,)))
    cert = connectify(seq, {2, 3, 4})
    assert cert.added == (1,)


def test_inc_connectify_on_p8():
    chain = SolutionChain.at_arrival({1, 3, 5, 7}, 8)
    cert = incremental_connectify(path_standard(8), chain)
    assert cert.output_size == 7 == cert.bound
    assert is_valid_chain(CDS, path_standard(8), cert.output)


def test_inc_connectify_identity_when_connected():
    chain = SolutionChain.at_arrival({1, 2, 3}, 4)
    cert = incremental_connectify(path_standard(4), chain)
    assert cert.output == chain and cert.input_components == 1


def test_founders_count_components_as_they_appear():
    # v7 later merges the three founders of {1,3,5}; the final graph shows one component
    seq = ArrivalSequence(((), (1,), (2,), (3,), (4,), (5,), (1, 3, 5)))
    chain = SolutionChain.at_arrival({1, 3, 5, 7}, 7)
    assert is_valid_chain(DS, seq, chain)
    assert component_founders(seq, chain) == [1, 3, 5]
    cert = incremental_connectify(seq, chain)
    assert cert.details["final_components"] == 1
    assert cert.bound == 6 and cert.bound_satisfied
    assert opt_inc(CDS, seq).size == 5  # above |R| + 1 - 1 = 4


def test_tree_greedy_tight_on_pendant_path():
    cert = tree_incremental_from_set(pendant_path(8), {2, 5, 8})
    assert cert.output_size == 6 == 2 * (8 + 1) // 3
    assert cert.tight


def test_tree_greedy_with_full_set():
    seq = path_standard(5)
    cert = tree_incremental_from_set(seq, range(1, 6))
    assert cert.output.final == frozenset(range(1, 6))
    assert cert.added == ()


def test_preconditions():
    with pytest.raises(PreconditionError):
        connectify(path_standard(5), {1})
    with pytest.raises(PreconditionError):
        connectify(ArrivalSequence(((), ())), {1, 2})
    with pytest.raises(PreconditionError):
        incremental_connectify(path_standard(4), SolutionChain({2: 2}, 4))
    with pytest.raises(PreconditionError):
        incremental_connectify(ArrivalSequence(((), ())), SolutionChain({1: 1, 2: 2}, 2))
    cycle = ArrivalSequence(((), (1,), (1, 2)))
    with pytest.raises(PreconditionError):
        tree_incremental_from_set(cycle, {1})


@given(connected_sequences(max_n=11))
def test_connectify_bound_on_random_connected(seq):
    graph = build_graph(seq)
    cert = connectify(seq, opt_off(DS, seq).witness)
    assert cert.bound_satisfied
    assert is_feasible(CDS, graph, cert.output) and components_of(graph, cert.output) == 1
    assert cert.details["rounds"] <= cert.input_components - 1


@given(arrival_sequences(max_n=11, always_connected=True))
def test_inc_connectify_bound_on_random_always_connected(seq):
    cert = incremental_connectify(seq, opt_inc(DS, seq).witness)
    assert cert.bound_satisfied
    assert is_valid_chain(CDS, seq, cert.output)


@given(arrival_sequences(max_n=14, always_connected=True))
def test_tree_greedy_on_random_trees(seq):
    tree = ArrivalSequence(tuple(e[:1] for e in seq.arrivals))
    cert = tree_incremental_from_set(tree, opt_off(DS, tree).witness)
    assert cert.bound_satisfied
    assert is_valid_chain(DS, tree, cert.output)
    assert cert.details["max_marks"] <= 1
