"""Adaptive adversaries that build the next arrival from the algorithm's selections."""

from __future__ import annotations

from dataclasses import dataclass

from .algorithms import OnlineAlgorithm, OnlineSession, make_algorithm
from .domination import SolutionChain, Variant
from .errors import ParameterError
from .graph import ArrivalSequence


@dataclass(frozen=True)
class AdversaryTranscript:
    sequence: ArrivalSequence
    chain: SolutionChain
    tags: tuple[str, ...]
    algorithm: str
    variant: Variant

    @property
    def size(self) -> int:
        return self.chain.size


def _start(algorithm: OnlineAlgorithm | str, variant: Variant | str) -> OnlineSession:
    if isinstance(algorithm, str):
        algorithm = make_algorithm(algorithm)
    if not getattr(algorithm, "deterministic", False):
        raise ParameterError(f"{algorithm.name}: adversaries accept deterministic policies only")
    return OnlineSession(algorithm, variant)


def tree_adversary(n: int, algorithm: OnlineAlgorithm | str,
                   variant: Variant | str = Variant.DS) -> AdversaryTranscript:
    """Grow a tree that keeps at most one arrived vertex unselected.

    Each new vertex hangs off the unique unselected vertex; when everything
    is selected it hangs off ``v_1``.  The final selection has at least
    ``n - 1`` vertices against any online algorithm.
    """
    if n < 1:
        raise ParameterError("tree_adversary: n >= 1")
    session = _start(algorithm, variant)
    tags = []
    for i in range(1, n + 1):
        if i == 1:
            session.feed(())
            tags.append("root")
            continue
        unselected = [v for v in range(1, i) if v not in session.selected]
        if unselected:
            target = unselected[0]
            tags.append(f"attach-unselected:{target}")
        else:
            target = 1
            tags.append("attach-lowest:1")
        session.feed((target,))
    name = f"tree-adversary-n{n}-{session.algorithm.name}-{session.variant.value}"
    return AdversaryTranscript(session.sequence(name), session.chain(), tuple(tags),
                               session.algorithm.name, session.variant)


def two_layer_adversary(delta: int, algorithm: OnlineAlgorithm | str,
                        variant: Variant | str = Variant.DS) -> AdversaryTranscript:
    """Root, ``delta`` first-layer vertices, then ``delta - 1`` nested second-layer vertices.

    ``w_i`` sees ``delta - i + 1`` first-layer vertices and
    ``N(w_1) ⊃ N(w_2) ⊃ ...``.  Each ``N(w_i)`` keeps as many currently
    unselected vertices of ``N(w_{i-1})`` as possible, lowest index first.
    """
    if delta < 2:
        raise ParameterError("two_layer_adversary: delta >= 2")
    variant = Variant.parse(variant)
    if variant is Variant.IDS:
        raise ParameterError("two_layer_adversary: variant must be ds, cds or tds")
    session = _start(algorithm, variant)
    tags = ["root"]
    session.feed(())
    first_layer = []
    for _ in range(delta):
        session.feed((1,))
        first_layer.append(session.step)
        tags.append("first-layer")
    current = list(first_layer)
    for i in range(1, delta):
        size = delta - i + 1
        ranked = sorted(current, key=lambda u: (u in session.selected, u))
        current = sorted(ranked[:size])
        free = sum(1 for u in current if u not in session.selected)
        tags.append(f"second-layer:w{i}:deg{size}:unselected{free}")
        session.feed(current)
    name = f"two-layer-d{delta}-{session.algorithm.name}-{variant.value}"
    return AdversaryTranscript(session.sequence(name), session.chain(), tuple(tags),
                               session.algorithm.name, variant)


ADVERSARIES = {"tree": tree_adversary, "two-layer": two_layer_adversary}
