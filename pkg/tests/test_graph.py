import pytest
from hypothesis import given

from domino.constructions import disjoint_stars, fan, path_standard, rotor, star
from domino.errors import NotAlwaysConnectedError, SequenceError
from domino.graph import (
    ArrivalSequence,
    build_graph,
    classify,
    format_instance,
    is_always_connected,
    iter_prefixes,
    layers,
    parse_instance,
    relabel,
)

from strategies import arrival_sequences


def test_build_graph_edges_for_small_examples():
    assert set(build_graph(path_standard(3)).edges()) == {(1, 2), (2, 3)}
    assert set(build_graph(star(4, "first")).edges()) == {(1, 2), (1, 3), (1, 4)}


def test_forward_reference_names_the_entry():
    with pytest.raises(SequenceError, match="entry 2"):
        ArrivalSequence(((), (2,)))
    with pytest.raises(SequenceError, match="entry 3"):
        ArrivalSequence(((), (1,), (1, 1)))


def test_neighbours_are_stored_sorted():
    seq = ArrivalSequence(((), (1,), (2, 1)))
    assert seq.arrivals[2] == (1, 2)


def test_prefix_view_hides_later_vertices():
    g = build_graph(path_standard(4))
    assert g.neighbors(2) == {1, 3}
    assert g.prefix(2).neighbors(2) == {1}
    assert list(g.prefix(3).vertices()) == [1, 2, 3]


def test_classify_path():
    r = classify(path_standard(6))
    assert r.always_connected and r.is_tree and r.max_degree == 2 and r.bipartite


def test_classify_interleaved_stars_not_always_connected():
    assert not classify(disjoint_stars(2, 3)).always_connected


def test_classify_rotor_8():
    r = classify(rotor(8))
    assert (r.always_connected, r.bipartite, r.max_degree) == (False, False, 8)
    g = build_graph(rotor(8))
    for i in (2, 4, 6, 8):
        prefix = g.prefix(i)
        assert all(len(prefix.neighbors(v)) == 1 for v in prefix.vertices())


def test_layers_examples():
    assert layers(path_standard(4)).layer == (0, 1, 2, 3)
    assert layers(fan(4)).layer == (0, 1, 2, 3, 1)


def test_layers_rejects_non_always_connected():
    with pytest.raises(NotAlwaysConnectedError, match="not always-connected"):
        layers(disjoint_stars(2, 2))


@given(arrival_sequences(always_connected=True, max_n=12))
def test_layer_recurrence_and_sizes(seq):
    la = layers(seq)
    assert la.of(1) == 0
    for i, entry in enumerate(seq.arrivals[1:], start=2):
        assert la.of(i) == 1 + min(la.of(j) for j in entry)
    assert sum(la.layer_sizes) == seq.n


@given(arrival_sequences(always_connected=True, bipartite=True, max_n=12))
def test_bipartite_always_connected_has_no_intra_layer_edge(seq):
    assert classify(seq).bipartite
    la = layers(seq)
    assert all(la.of(a) != la.of(b) for a, b in seq.edges())


@given(arrival_sequences(max_n=10))
def test_class_report_invariants(seq):
    r = classify(seq)
    if r.always_connected:
        assert r.connected
    if r.is_tree:
        assert len(seq.edges()) == seq.n - 1 and r.connected
    if r.bipartite:
        assert all(r.coloring[a - 1] != r.coloring[b - 1] for a, b in seq.edges())


@given(arrival_sequences(max_n=9))
def test_classification_besides_order_is_order_free(seq):
    order = list(range(seq.n, 0, -1))
    a, b = classify(seq), classify(relabel(seq, order))
    assert (a.n, a.max_degree, a.bipartite, a.is_tree, a.connected) == \
           (b.n, b.max_degree, b.bipartite, b.is_tree, b.connected)


@given(arrival_sequences(max_n=10))
def test_instance_format_round_trip(seq):
    text = format_instance(seq.renamed("round-trip"))
    assert parse_instance(text) == seq.renamed("round-trip")


def test_parse_instance_comments_and_blank_vertices():
    text = "# name: tiny\n# a comment\nn 3\n\n1  # joined to v1\n"
    seq = parse_instance(text)
    assert seq.name == "tiny"
    assert seq.arrivals == ((), (1,), ())


@pytest.mark.parametrize("text", ["", "m 3\n", "n x\n", "n 1\n\n2\n", "n 2\n\n2\n"])
def test_parse_instance_rejects_bad_input(text):
    with pytest.raises(SequenceError):
        parse_instance(text)


def test_relabel_rejects_non_permutation():
    with pytest.raises(SequenceError):
        relabel(path_standard(3), [1, 1, 2])


def test_iter_prefixes_and_always_connected():
    seq = path_standard(5)
    assert [g.step for g in iter_prefixes(seq)] == [1, 2, 3, 4, 5]
    assert is_always_connected(seq)
    assert not is_always_connected(ArrivalSequence(((), ())))
