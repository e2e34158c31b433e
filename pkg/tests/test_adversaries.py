import pytest

from domino.adversaries import tree_adversary, two_layer_adversary
from domino.algorithms import OnlineAlgorithm, run_online
from domino.domination import Variant
from domino.errors import ParameterError
from domino.graph import classify, layers
from domino.solvers import opt_inc


@pytest.mark.parametrize("algorithm,variant", [("parent", "ds"), ("first-parent", "cds"),
                                               ("greedy-ids", "ids"), ("even-layer:0", "ds"),
                                               ("parent", "tds")])
def test_tree_adversary_forces_n_minus_one(algorithm, variant):
    for n in (1, 2, 10, 25):
        tr = tree_adversary(n, algorithm, variant)
        assert tr.size >= n - 1
        if n == 1 and variant != "tds":
            assert tr.size == 1
        assert classify(tr.sequence).is_tree
        chain = tr.chain
        assert all(i - len(chain.at(i)) <= 1 for i in range(1, n + 1))


def test_tree_adversary_tags():
    tr = tree_adversary(4, "parent")
    assert tr.tags[0] == "root"
    assert tr.tags[1] == "attach-lowest:1"


@pytest.mark.parametrize("delta", range(2, 8))
@pytest.mark.parametrize("algorithm", ["parent", "first-parent"])
def test_two_layer_adversary(delta, algorithm):
    tr = two_layer_adversary(delta, algorithm, "ds")
    assert tr.sequence.n == 2 * delta
    assert tr.size >= delta
    assert opt_inc(Variant.DS, tr.sequence, cap=16).size == 2
    report = classify(tr.sequence)
    assert report.always_connected and report.bipartite
    assert layers(tr.sequence).layer_sizes == (1, delta, delta - 1)
    nbhds = [set(e) for e in tr.sequence.arrivals[delta + 1:]]
    assert all(a > b for a, b in zip(nbhds, nbhds[1:]))


@pytest.mark.parametrize("algorithm", ["parent", "first-parent"])
@pytest.mark.parametrize("variant", ["ds", "cds", "tds"])
def test_two_layer_other_variants(variant, algorithm):
    # observed: no slack, every variant lands exactly on delta
    for delta in range(2, 9):
        assert two_layer_adversary(delta, algorithm, variant).size == delta


def test_replay_is_deterministic():
    a = two_layer_adversary(5, "first-parent", "ds")
    b = two_layer_adversary(5, "first-parent", "ds")
    assert a == b
    assert run_online("first-parent", "ds", a.sequence).chain == a.chain
    t = tree_adversary(12, "greedy-ids", "ids")
    assert run_online("greedy-ids", "ids", t.sequence).chain == t.chain


class _Coin(OnlineAlgorithm):
    name = "coin"
    deterministic = False

    def step(self, ctx):
        return {ctx.step}


def test_rejections():
    with pytest.raises(ParameterError):
        tree_adversary(3, _Coin())
    with pytest.raises(ParameterError):
        two_layer_adversary(4, "greedy-ids", "ids")
    with pytest.raises(ParameterError):
        two_layer_adversary(1, "parent")
    with pytest.raises(ParameterError):
        tree_adversary(0, "parent")
