"""Hypothesis strategies for arrival sequences."""

from __future__ import annotations

from hypothesis import strategies as st

from domino.graph import ArrivalSequence


@st.composite
def arrival_sequences(draw, min_n: int = 1, max_n: int = 8, always_connected: bool = False,
                      bipartite: bool = False):
    n = draw(st.integers(min_n, max_n))
    entries: list[tuple[int, ...]] = []
    side: dict[int, int] = {}
    for i in range(1, n + 1):
        earlier = list(range(1, i))
        if bipartite and earlier:
            my_side = draw(st.integers(0, 1))
            earlier = [u for u in earlier if side[u] != my_side] or earlier[:0]
        else:
            my_side = 0
        nbrs = draw(st.lists(st.sampled_from(earlier), unique=True)) if earlier else []
        if always_connected and i > 1 and not nbrs:
            if not earlier:
                # bipartite draw left no opposite-side vertex; flip sides
                my_side = 1 - my_side
                earlier = [u for u in range(1, i) if side[u] != my_side]
            nbrs = [draw(st.sampled_from(earlier))]
        side[i] = my_side
        entries.append(tuple(nbrs))
    return ArrivalSequence(tuple(entries), name="hyp")


def connected_sequences(**kwargs):
    from domino.graph import build_graph

    return arrival_sequences(**kwargs).filter(lambda s: len(build_graph(s).components()) == 1)
