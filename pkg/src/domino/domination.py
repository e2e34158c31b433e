"""Feasibility predicates for DS, CDS, TDS and IDS on prefix graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping, Protocol

from .graph import ArrivalGraph, ArrivalSequence, build_graph


class Variant(enum.Enum):
    DS = "ds"
    CDS = "cds"
    TDS = "tds"
    IDS = "ids"

    @classmethod
    def parse(cls, text: "str | Variant") -> "Variant":
        if isinstance(text, Variant):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown variant {text!r}; expected ds|cds|tds|ids") from None

    @property
    def code(self) -> int:
        """Integer code used by the search kernels."""
        return _CODES[self]

    def __str__(self) -> str:
        return self.name


_CODES = {Variant.DS: 0, Variant.CDS: 1, Variant.TDS: 2, Variant.IDS: 3}


class GraphView(Protocol):
    """What the predicates need from a graph: ``step`` and ``neighbors``."""

    step: int

    def neighbors(self, v: int) -> AbstractSet[int]: ...


VertexSet = frozenset  # members are 1-based vertex indices


def _closed_cover(graph: GraphView, members: AbstractSet[int]) -> set[int]:
    covered = set(members)
    for v in members:
        covered.update(graph.neighbors(v))
    return covered


def induced_components(graph: GraphView, members: Iterable[int]) -> list[set[int]]:
    pool = set(members)
    seen: set[int] = set()
    comps = []
    for s in sorted(pool):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in graph.neighbors(x):
                if y in pool and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def components_of(graph: GraphView, members: Iterable[int]) -> int:
    """Number of components of the subgraph induced by ``members`` (0 if empty)."""
    return len(induced_components(graph, members))


def is_feasible(variant: Variant, graph: GraphView, members: Iterable[int]) -> bool:
    """Whether ``members`` is a feasible solution of ``variant`` on ``graph``.

    ``graph`` is a prefix view ``G_i``; only vertices ``1..graph.step`` count.
    Isolated vertices are exempt under TDS.  CDS demands connectivity inside
    each component of ``G_i`` separately.
    """
    variant = Variant.parse(variant)
    d = set(members)
    n = graph.step
    if any(v < 1 or v > n for v in d):
        return False
    if variant is Variant.TDS:
        for v in range(1, n + 1):
            nbrs = graph.neighbors(v)
            if nbrs and not (nbrs & d):
                return False
        return True
    if len(_closed_cover(graph, d)) != n:
        return False
    if variant is Variant.IDS:
        return all(not (graph.neighbors(v) & d) for v in d)
    if variant is Variant.CDS:
        vertices = range(1, n + 1)
        return components_of(graph, d) == components_of(graph, vertices)
    return True


@dataclass(frozen=True)
class SolutionChain:
    """Monotone selection ``D_1 ⊆ ... ⊆ D_n`` given by addition timestamps.

    ``added_at[v]`` is the step at which ``v`` entered the solution.
    """

    added_at: Mapping[int, int]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "added_at", dict(sorted(self.added_at.items())))

    @classmethod
    def at_arrival(cls, members: Iterable[int], n: int) -> "SolutionChain":
        """Chain that selects every member at its own arrival step."""
        return cls({v: v for v in members}, n)

    @classmethod
    def from_additions(cls, additions: Iterable[Iterable[int]]) -> "SolutionChain":
        """Build from per-step addition lists (step 1 first)."""
        added: dict[int, int] = {}
        steps = 0
        for step, batch in enumerate(additions, start=1):
            steps = step
            for v in batch:
                added.setdefault(v, step)
        return cls(added, steps)

    def at(self, i: int) -> frozenset[int]:
        """``D_i``."""
        return frozenset(v for v, t in self.added_at.items() if t <= i)

    @property
    def final(self) -> frozenset[int]:
        return frozenset(self.added_at)

    @property
    def size(self) -> int:
        return len(self.added_at)

    def additions(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for v, t in self.added_at.items():
            if 1 <= t <= self.n:
                out[t - 1].append(v)
        return out

    def well_formed(self) -> bool:
        """Timestamps lie in ``[arrival(v), n]``."""
        return all(1 <= v <= t <= self.n for v, t in self.added_at.items())


def is_valid_chain(variant: Variant, seq: ArrivalSequence, chain: SolutionChain,
                   graph: ArrivalGraph | None = None) -> bool:
    """True iff every ``D_i`` is feasible for ``variant`` on ``G_i``."""
    if chain.n != seq.n or not chain.well_formed():
        return False
    graph = graph or build_graph(seq)
    current: set[int] = set()
    for i, batch in enumerate(chain.additions(), start=1):
        current.update(batch)
        if not is_feasible(variant, graph.prefix(i), current):
            return False
    return True


def first_infeasible_step(variant: Variant, seq: ArrivalSequence,
                          chain: SolutionChain) -> int | None:
    graph = build_graph(seq)
    current: set[int] = set()
    for i, batch in enumerate(chain.additions(), start=1):
        current.update(batch)
        if not is_feasible(variant, graph.prefix(i), current):
            return i
    return None
