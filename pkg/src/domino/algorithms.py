"""Online algorithms for the vertex-arrival model and the harness that runs them.

A policy sees one :class:`StepContext` per arrival and returns the vertices
it adds.  :class:`OnlineSession` feeds arrivals one at a time (the
adversaries drive it directly); :func:`run_online` replays a fixed
sequence.  Ties are always broken towards the lowest vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable

from .domination import SolutionChain, Variant, induced_components, is_feasible
from .errors import FeasibilityError, NotAlwaysConnectedError, PolicyContractError
from .graph import ArrivalSequence, is_always_connected, layers


class PrefixView:
    """Read-only view of ``G_i`` over a growing adjacency table."""

    __slots__ = ("step", "_adj")

    def __init__(self, adj: dict[int, set[int]], step: int):
        self._adj = adj
        self.step = step

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for u in self._adj[v] if u <= self.step)


@dataclass(frozen=True)
class StepContext:
    step: int
    neighbors: tuple[int, ...]
    graph: PrefixView
    selected: frozenset[int]
    variant: Variant

    @property
    def vertex(self) -> int:
        return self.step


class OnlineAlgorithm:
    """Base class for step policies.

    Subclasses override :meth:`step`; :meth:`reset` is called once before
    the first arrival of every run.
    """

    name = "abstract"
    deterministic = True

    def reset(self, variant: Variant) -> None:
        self.variant = variant

    def step(self, ctx: StepContext) -> Iterable[int]:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


def _dominated(ctx: StepContext, v: int, chosen: AbstractSet[int]) -> bool:
    nbrs = ctx.graph.neighbors(v)
    if ctx.variant is Variant.TDS:
        return bool(nbrs & chosen)
    return v in chosen or bool(nbrs & chosen)


class Parent(OnlineAlgorithm):
    """Select ``v_1``; an undominated arrival makes its lowest-index neighbour selected.

    On inputs that are not always-connected an undominated vertex without
    earlier neighbours selects itself.  For TDS an isolated vertex is left
    out, and when ``v_i`` completes a two-vertex component both ends are
    selected.  Two repairs keep general inputs feasible and never fire on
    always-connected inputs: under TDS, any vertex left without a selected
    neighbour gets one; under CDS, pieces joined by ``v_i`` are reconnected
    through ``v_i``.
    """

    name = "parent"

    def reset(self, variant: Variant) -> None:
        super().reset(variant)
        self.layer: dict[int, int] = {}

    def parent_of(self, candidates: Iterable[int]) -> int:
        return min(candidates)

    def _record_layer(self, ctx: StepContext) -> None:
        if ctx.neighbors:
            self.layer[ctx.step] = 1 + min(self.layer[u] for u in ctx.neighbors)
        else:
            self.layer[ctx.step] = 0

    def step(self, ctx: StepContext) -> set[int]:
        self._record_layer(ctx)
        i = ctx.step
        tds = ctx.variant is Variant.TDS
        if i == 1:
            return set() if tds else {1}
        add: set[int] = set()
        if not _dominated(ctx, i, ctx.selected):
            if ctx.neighbors:
                parent = self.parent_of(ctx.neighbors)
                add.add(parent)
                if tds and len(ctx.neighbors) == 1 and ctx.graph.neighbors(parent) == {i}:
                    add.add(i)
            elif not tds:
                add.add(i)
        if tds:
            add |= self._repair_total(ctx, ctx.selected | add)
        elif ctx.variant is Variant.CDS:
            add |= self._repair_connected(ctx, ctx.selected | add)
        return add

    def _repair_total(self, ctx: StepContext, chosen: set[int]) -> set[int]:
        extra: set[int] = set()
        while True:
            lacking = [v for v in range(1, ctx.step + 1)
                       if ctx.graph.neighbors(v) and not _dominated(ctx, v, chosen | extra)]
            if not lacking:
                return extra
            extra.add(self.parent_of(ctx.graph.neighbors(lacking[0])))

    def _repair_connected(self, ctx: StepContext, chosen: set[int]) -> set[int]:
        i = ctx.step
        component = next(c for c in induced_components(ctx.graph, range(1, i + 1)) if i in c)
        pieces = induced_components(ctx.graph, chosen & component)
        if len(pieces) <= 1:
            return set()
        extra = {i}
        nbrs = ctx.graph.neighbors(i)
        for piece in pieces:
            if i in piece or nbrs & piece:
                continue
            bridges = [w for w in nbrs if ctx.graph.neighbors(w) & piece]
            extra.add(self.parent_of(bridges))
        return extra


class FirstParent(Parent):
    """:class:`Parent` that picks the neighbour with the smallest layer number."""

    name = "first-parent"

    def parent_of(self, candidates: Iterable[int]) -> int:
        return min(candidates, key=lambda u: (self.layer[u], u))


class GreedyIDS(OnlineAlgorithm):
    """Select ``v_i`` exactly when nothing selected dominates it."""

    name = "greedy-ids"

    def step(self, ctx: StepContext) -> set[int]:
        i = ctx.step
        if ctx.graph.neighbors(i) & ctx.selected:
            return set()
        return {i}


class EvenLayer(OnlineAlgorithm):
    """Select the vertices whose layer has the given parity (plus ``v_1`` for odd)."""

    def __init__(self, parity: int):
        if parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        self.parity = parity
        self.name = f"even-layer:{parity}"

    def reset(self, variant: Variant) -> None:
        super().reset(variant)
        self.layer: dict[int, int] = {}

    def step(self, ctx: StepContext) -> set[int]:
        i = ctx.step
        if i == 1:
            self.layer[1] = 0
            return {1}
        if not ctx.neighbors:
            raise NotAlwaysConnectedError(
                f"not always-connected: v_{i} has no earlier neighbour"
            )
        self.layer[i] = 1 + min(self.layer[u] for u in ctx.neighbors)
        return {i} if self.layer[i] % 2 == self.parity else set()


ALGORITHM_NAMES = ("parent", "first-parent", "greedy-ids", "even-layer:0", "even-layer:1")


def make_algorithm(name: str) -> OnlineAlgorithm:
    if name == "parent":
        return Parent()
    if name == "first-parent":
        return FirstParent()
    if name == "greedy-ids":
        return GreedyIDS()
    if name.startswith("even-layer:"):
        suffix = name.split(":", 1)[1]
        if suffix in ("0", "1"):
            return EvenLayer(int(suffix))
    raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHM_NAMES)}")


class OnlineSession:
    """One algorithm run, fed one arrival at a time.

    With ``check=True`` every step is validated: returned vertices must have
    arrived and ``D_i`` must be feasible on ``G_i``.
    """

    def __init__(self, algorithm: OnlineAlgorithm, variant: Variant | str, check: bool = True):
        self.algorithm = algorithm
        self.variant = Variant.parse(variant)
        self.check = check
        self._adj: dict[int, set[int]] = {}
        self._arrivals: list[tuple[int, ...]] = []
        self._added_at: dict[int, int] = {}
        algorithm.reset(self.variant)

    @property
    def step(self) -> int:
        return len(self._arrivals)

    @property
    def selected(self) -> frozenset[int]:
        return frozenset(self._added_at)

    def view(self) -> PrefixView:
        return PrefixView(self._adj, self.step)

    def feed(self, neighbors: Iterable[int]) -> frozenset[int]:
        i = self.step + 1
        nbrs = tuple(sorted(set(neighbors)))
        if any(u < 1 or u >= i for u in nbrs):
            raise ValueError(f"arrival {i}: neighbours must lie in 1..{i - 1}")
        self._adj[i] = set(nbrs)
        for u in nbrs:
            self._adj[u].add(i)
        self._arrivals.append(nbrs)
        before = self.selected
        ctx = StepContext(i, nbrs, PrefixView(self._adj, i), before, self.variant)
        response = set(self.algorithm.step(ctx))
        bad = sorted(v for v in response if not 1 <= v <= i)
        if bad:
            raise PolicyContractError(
                f"{self.algorithm.name} returned unarrived vertices {bad} at step {i}"
            )
        added = frozenset(response - before)
        for v in sorted(added):
            self._added_at[v] = i
        if self.check and not is_feasible(self.variant, ctx.graph, self.selected):
            raise FeasibilityError(
                f"{self.algorithm.name} left D_{i} infeasible for {self.variant} on G_{i}", i
            )
        return added

    def sequence(self, name: str = "") -> ArrivalSequence:
        return ArrivalSequence(tuple(self._arrivals), name=name)

    def chain(self) -> SolutionChain:
        return SolutionChain(dict(self._added_at), self.step)


@dataclass(frozen=True)
class AlgorithmRun:
    chain: SolutionChain
    per_layer_selected: tuple[int, ...] | None
    algorithm: str
    variant: Variant

    @property
    def size(self) -> int:
        return self.chain.size


def per_layer_counts(seq: ArrivalSequence, members: Iterable[int]) -> tuple[int, ...] | None:
    """``s_i``: selected vertices per layer, or ``None`` when layers are undefined."""
    if not is_always_connected(seq) or seq.n == 0:
        return None
    assignment = layers(seq)
    counts = [0] * assignment.count
    for v in members:
        counts[assignment.of(v)] += 1
    return tuple(counts)


def run_online(algorithm: OnlineAlgorithm | str, variant: Variant | str,
               seq: ArrivalSequence) -> AlgorithmRun:
    if isinstance(algorithm, str):
        algorithm = make_algorithm(algorithm)
    session = OnlineSession(algorithm, variant)
    for entry in seq.arrivals:
        session.feed(entry)
    chain = session.chain()
    return AlgorithmRun(chain, per_layer_counts(seq, chain.final), algorithm.name,
                        session.variant)
