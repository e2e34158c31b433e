"""Constructive transformations between dominating sets, with size certificates.

* :func:`connectify` turns a dominating set ``S`` of a connected graph into a
  connected one using at most ``2(c(S) - 1)`` extra vertices.
* :func:`incremental_connectify` turns an incremental dominating set ``R`` of
  an always-connected graph into an incremental connected one, paying one
  vertex per component founder after the first.
* :func:`tree_incremental_from_set` turns a dominating set ``S`` of a tree
  into an incremental dominating set of size at most ``|S| + c(S)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .domination import (
    SolutionChain,
    Variant,
    components_of,
    induced_components,
    is_feasible,
    is_valid_chain,
)
from .errors import PreconditionError
from .graph import ArrivalSequence, build_graph, classify, is_always_connected


@dataclass(frozen=True)
class TransformCertificate:
    kind: str
    input_size: int
    input_components: int
    output: Union[frozenset, SolutionChain]
    output_size: int
    bound: int
    added: tuple[int, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def bound_satisfied(self) -> bool:
        return self.output_size <= self.bound

    @property
    def tight(self) -> bool:
        return self.output_size == self.bound


def connectify(seq: ArrivalSequence, members: Iterable[int]) -> TransformCertificate:
    """Join the components of ``S`` through paths of at most two unselected vertices.

    Each round picks, among all one- and two-vertex connectors between
    distinct components, the shortest and then lexicographically smallest.
    """
    graph = build_graph(seq)
    start = frozenset(members)
    if seq.n == 0 or len(graph.components()) != 1:
        raise PreconditionError("connectify needs a connected graph")
    if not is_feasible(Variant.DS, graph, start):
        raise PreconditionError("connectify: S does not dominate the graph")
    current = set(start)
    added: list[int] = []
    rounds = 0
    while True:
        comps = induced_components(graph, current)
        if len(comps) <= 1:
            break
        owner = {v: idx for idx, comp in enumerate(comps) for v in comp}
        touching = {
            x: {owner[y] for y in graph.neighbors(x) if y in owner}
            for x in graph.vertices() if x not in current
        }
        best: tuple[int, ...] | None = None
        for x in sorted(touching):
            if len(touching[x]) >= 2:
                best = (x,)
                break
        if best is None:
            for x in sorted(touching):
                for y in sorted(graph.neighbors(x)):
                    if y in touching and x < y and any(
                        a != b for a in touching[x] for b in touching[y]
                    ):
                        best = (x, y)
                        break
                if best is not None:
                    break
        if best is None:
            raise AssertionError("no connector of length <= 2 between components")
        current.update(best)
        added.extend(best)
        rounds += 1
    c = components_of(graph, start)
    result = frozenset(current)
    return TransformCertificate(
        kind="connectify",
        input_size=len(start),
        input_components=c,
        output=result,
        output_size=len(result),
        bound=len(start) + 2 * (c - 1),
        added=tuple(added),
        details={"rounds": rounds},
    )


def component_founders(seq: ArrivalSequence, chain: SolutionChain) -> list[int]:
    """Vertices that start a new component of ``R`` when they are added.

    A member is a founder if, at the step it is added, it has no neighbour
    among members added before it (earlier steps, or the same step with a
    lower index).
    """
    graph = build_graph(seq)
    order = sorted(chain.added_at.items(), key=lambda kv: (kv[1], kv[0]))
    seen: set[int] = set()
    founders = []
    for v, t in order:
        if not (graph.prefix(t).neighbors(v) & seen):
            founders.append(v)
        seen.add(v)
    return founders


def incremental_connectify(seq: ArrivalSequence, chain: SolutionChain) -> TransformCertificate:
    """Replay ``R``; whenever a member founds a new component, also select a middle vertex.

    The middle vertex is the lowest-index neighbour of the founder that is
    adjacent to the current selection.  The bound is
    ``|R| + founders(R) - 1``; ``founders`` equals ``c(R)`` whenever the
    components of ``R`` never merge later.
    """
    if not is_always_connected(seq):
        raise PreconditionError("incremental_connectify needs an always-connected sequence")
    if not is_valid_chain(Variant.DS, seq, chain):
        raise PreconditionError("incremental_connectify: R is not a valid DS chain")
    graph = build_graph(seq)
    founders = set(component_founders(seq, chain))
    additions = chain.additions()
    current: set[int] = set()
    added_at: dict[int, int] = {}
    middles: list[int] = []
    for t in range(1, seq.n + 1):
        view = graph.prefix(t)
        for v in sorted(additions[t - 1]):
            if v in current:
                continue
            if current and not (view.neighbors(v) & current):
                candidates = sorted(w for w in view.neighbors(v) if view.neighbors(w) & current)
                if not candidates:
                    raise AssertionError(f"no length-2 connector for founder {v} at step {t}")
                middle = candidates[0]
                current.add(middle)
                added_at[middle] = t
                middles.append(middle)
            current.add(v)
            added_at.setdefault(v, t)
    out = SolutionChain(added_at, seq.n)
    n_founders = len(founders)
    return TransformCertificate(
        kind="inc-connectify",
        input_size=chain.size,
        input_components=n_founders,
        output=out,
        output_size=out.size,
        bound=chain.size + max(n_founders - 1, 0),
        added=tuple(middles),
        details={"final_components": components_of(graph, chain.final)},
    )


def tree_incremental_from_set(seq: ArrivalSequence, members: Iterable[int]) -> TransformCertificate:
    """Select ``v_1`` and ``S`` on arrival, plus any arrival nothing selected dominates.

    Those extra "bad" vertices each mark one component of ``S`` (the one
    holding their lowest-index ``S``-dominator); on a tree no component is
    marked twice, so ``|R''| <= |S| + c(S)``.
    """
    report = classify(seq)
    if not report.is_tree:
        raise PreconditionError("tree_incremental_from_set needs a tree")
    graph = build_graph(seq)
    s = frozenset(members)
    if not is_feasible(Variant.DS, graph, s):
        raise PreconditionError("tree_incremental_from_set: S does not dominate the tree")
    comps = induced_components(graph, s)
    owner = {v: idx for idx, comp in enumerate(comps) for v in comp}
    selected: set[int] = set()
    added_at: dict[int, int] = {}
    bad: list[int] = []
    marks: dict[int, list[int]] = {}
    for i in range(1, seq.n + 1):
        view = graph.prefix(i)
        if i == 1 or i in s:
            selected.add(i)
            added_at[i] = i
            if i not in s:
                bad.append(i)
        elif not (view.neighbors(i) & selected):
            selected.add(i)
            added_at[i] = i
            bad.append(i)
        else:
            continue
        if bad and bad[-1] == i:
            dominator = min(graph.neighbors(i) & s)
            marks.setdefault(owner[dominator], []).append(i)
    out = SolutionChain(added_at, seq.n)
    return TransformCertificate(
        kind="tree-greedy",
        input_size=len(s),
        input_components=len(comps),
        output=out,
        output_size=out.size,
        bound=len(s) + len(comps),
        added=tuple(bad),
        details={"marks": marks, "max_marks": max((len(m) for m in marks.values()), default=0)},
    )


TRANSFORMS = {
    "connectify": connectify,
    "inc-connectify": incremental_connectify,
    "tree-greedy": tree_incremental_from_set,
}
