"""Seeded random arrival sequences.

Every model draws from its own ``random.Random`` so results depend only on
the seed.  Trees and always-connected graphs are connected at every prefix
by construction.
"""

from __future__ import annotations

import random
from typing import Iterator

from ..graph import ArrivalSequence, relabel


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_tree(n: int, seed: int | random.Random) -> ArrivalSequence:
    """Uniform attachment: ``v_i`` joins one uniformly chosen earlier vertex."""
    rng = _rng(seed)
    entries = [()] + [(rng.randint(1, i - 1),) for i in range(2, n + 1)]
    return ArrivalSequence(tuple(entries[:n]), name=f"tree-n{n}")


def random_always_connected(n: int, seed: int | random.Random, p: float = 0.3) -> ArrivalSequence:
    """Each arrival keeps every earlier vertex with probability ``p``, at least one."""
    rng = _rng(seed)
    entries: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        if i == 1:
            entries.append(())
            continue
        nbrs = [u for u in range(1, i) if rng.random() < p]
        if not nbrs:
            nbrs = [rng.randint(1, i - 1)]
        entries.append(tuple(nbrs))
    return ArrivalSequence(tuple(entries), name=f"ac-n{n}")


def random_bipartite_ac(n: int, seed: int | random.Random, p: float = 0.3) -> ArrivalSequence:
    """Always-connected and bipartite: new edges only cross a maintained 2-colouring."""
    rng = _rng(seed)
    colour: dict[int, int] = {}
    entries: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        if i == 1:
            colour[1] = 0
            entries.append(())
            continue
        anchor = rng.randint(1, i - 1)
        side = 1 - colour[anchor]
        nbrs = {anchor}
        nbrs.update(u for u in range(1, i) if colour[u] != side and rng.random() < p)
        colour[i] = side
        entries.append(tuple(sorted(nbrs)))
    return ArrivalSequence(tuple(entries), name=f"bip-ac-n{n}")


def random_connected(n: int, seed: int | random.Random, p: float = 0.3) -> ArrivalSequence:
    """Connected final graph in a random arrival order (prefixes may be disconnected)."""
    rng = _rng(seed)
    base = random_always_connected(n, rng, p)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return relabel(base, order, name=f"conn-n{n}")


MODELS = {
    "tree": random_tree,
    "ac": random_always_connected,
    "bipartite": random_bipartite_ac,
    "connected": random_connected,
}


def sample(model: str, count: int, seed: int, n_min: int, n_max: int,
           **kwargs) -> Iterator[ArrivalSequence]:
    """``count`` instances with ``n`` uniform in ``[n_min, n_max]``, all from one seed."""
    try:
        builder = MODELS[model]
    except KeyError:
        raise ValueError(f"unknown random model {model!r}; choose from {', '.join(MODELS)}") from None
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(n_min, n_max)
        seq = builder(n, rng, **kwargs)
        yield ArrivalSequence(seq.arrivals, name=f"{model}-s{seed}-{idx}-n{n}")
