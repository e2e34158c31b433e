"""Vertex-arrival sequences, prefix graphs, layers and graph-class checks.

Vertices are numbered 1..n in arrival order.  Entry ``i`` of an
:class:`ArrivalSequence` lists the neighbours of ``v_i`` among
``v_1 .. v_{i-1}``; the prefix graph ``G_i`` is the subgraph induced by the
first ``i`` vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import NotAlwaysConnectedError, SequenceError


@dataclass(frozen=True)
class ArrivalSequence:
    """Ordered vertex-arrival stream.

    ``arrivals[i - 1]`` holds the earlier neighbours of ``v_i``.  Neighbour
    lists are stored sorted; construction rejects forward references and
    duplicates.
    """

    arrivals: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self) -> None:
        normalized = []
        for i, entry in enumerate(self.arrivals, start=1):
            entry = tuple(entry)
            for j in entry:
                if not isinstance(j, int) or isinstance(j, bool):
                    raise SequenceError(f"entry {i}: neighbour {j!r} is not an integer")
                if j < 1 or j >= i:
                    raise SequenceError(
                        f"entry {i}: neighbour {j} must satisfy 1 <= j < {i}"
                    )
            if len(set(entry)) != len(entry):
                raise SequenceError(f"entry {i}: duplicate neighbour in {list(entry)}")
            normalized.append(tuple(sorted(entry)))
        object.__setattr__(self, "arrivals", tuple(normalized))

    @property
    def n(self) -> int:
        return len(self.arrivals)

    def __len__(self) -> int:
        return len(self.arrivals)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(j, i)`` with ``j < i``, in arrival order."""
        return [(j, i) for i, entry in enumerate(self.arrivals, start=1) for j in entry]

    def prefix(self, i: int) -> "ArrivalSequence":
        return ArrivalSequence(self.arrivals[:i], name=self.name)

    def renamed(self, name: str) -> "ArrivalSequence":
        return ArrivalSequence(self.arrivals, name=name)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], name: str = ""
    ) -> "ArrivalSequence":
        """Build a sequence on ``v_1..v_n`` from an undirected edge list."""
        lists: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise SequenceError(f"self-loop at vertex {a}")
            lo, hi = min(a, b), max(a, b)
            if lo < 1 or hi > n:
                raise SequenceError(f"edge {a}-{b} outside 1..{n}")
            lists[hi - 1].add(lo)
        return cls(tuple(tuple(sorted(s)) for s in lists), name=name)


class ArrivalGraph:
    """Adjacency for the final graph, queryable at any prefix.

    ``graph.prefix(i)`` returns a view of ``G_i`` that shares the adjacency
    table; prefix queries filter neighbours by index.
    """

    __slots__ = ("sequence", "step", "_adj", "_masks")

    def __init__(self, sequence: ArrivalSequence, step: int | None = None,
                 _adj: tuple[frozenset[int], ...] | None = None):
        self.sequence = sequence
        self.step = sequence.n if step is None else step
        if not 0 <= self.step <= sequence.n:
            raise ValueError(f"prefix {self.step} outside 0..{sequence.n}")
        if _adj is None:
            adj: list[set[int]] = [set() for _ in range(sequence.n + 1)]
            for j, i in sequence.edges():
                adj[i].add(j)
                adj[j].add(i)
            _adj = tuple(frozenset(s) for s in adj)
        self._adj = _adj
        self._masks: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        """Number of vertices in this prefix view."""
        return self.step

    def prefix(self, i: int) -> "ArrivalGraph":
        return ArrivalGraph(self.sequence, i, self._adj)

    def vertices(self) -> range:
        return range(1, self.step + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        nbrs = self._adj[v]
        if self.step == self.sequence.n:
            return nbrs
        return frozenset(u for u in nbrs if u <= self.step)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] and u <= self.step and v <= self.step

    def edges(self) -> list[tuple[int, int]]:
        return [(j, i) for i in self.vertices() for j in self.sequence.arrivals[i - 1]]

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices()), default=0)

    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods of the *final* graph as bitmasks (bit ``v-1``)."""
        if self._masks is None:
            self._masks = tuple(
                sum(1 << (u - 1) for u in self._adj[v]) for v in range(1, self.sequence.n + 1)
            )
        return self._masks

    def components(self, members: Iterable[int] | None = None) -> list[set[int]]:
        """Connected components of the subgraph induced by ``members`` (default all)."""
        pool = set(self.vertices()) if members is None else set(members)
        seen: set[int] = set()
        comps = []
        for s in sorted(pool):
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.neighbors(x):
                    if y in pool and y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            comps.append(comp)
        return comps

    def __repr__(self) -> str:
        return f"ArrivalGraph({self.sequence.name!r}, step={self.step}/{self.sequence.n})"


def build_graph(seq: ArrivalSequence) -> ArrivalGraph:
    return ArrivalGraph(seq)


@dataclass(frozen=True)
class GraphClassReport:
    n: int
    max_degree: int
    always_connected: bool
    bipartite: bool
    coloring: tuple[int, ...] | None
    is_tree: bool
    connected: bool = field(default=False)


def is_always_connected(seq: ArrivalSequence) -> bool:
    """True iff every prefix graph ``G_i`` is connected."""
    return all(entry for entry in seq.arrivals[1:])


def two_coloring(graph: ArrivalGraph) -> tuple[int, ...] | None:
    """BFS 2-colouring from ``v_1`` (lowest index first); ``None`` if odd cycle.

    Entry ``v - 1`` holds the colour of ``v``.
    """
    color = [-1] * (graph.n + 1)
    for s in graph.vertices():
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(graph.neighbors(x)):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return tuple(color[1:])


def classify(seq: ArrivalSequence) -> GraphClassReport:
    graph = build_graph(seq)
    n = seq.n
    connected = len(graph.components()) <= 1
    coloring = two_coloring(graph)
    m = len(seq.edges())
    return GraphClassReport(
        n=n,
        max_degree=graph.max_degree(),
        always_connected=is_always_connected(seq),
        bipartite=coloring is not None,
        coloring=coloring,
        is_tree=n > 0 and connected and m == n - 1,
        connected=connected,
    )


@dataclass(frozen=True)
class LayerAssignment:
    layer: tuple[int, ...]
    layer_sizes: tuple[int, ...]

    def of(self, v: int) -> int:
        return self.layer[v - 1]

    @property
    def count(self) -> int:
        return len(self.layer_sizes)


def layers(seq: ArrivalSequence) -> LayerAssignment:
    """Layer numbers: ``L(v_1) = 0``, ``L(v_i) = 1 + min`` over earlier neighbours."""
    out: list[int] = []
    for i, entry in enumerate(seq.arrivals, start=1):
        if i == 1:
            out.append(0)
            continue
        if not entry:
            raise NotAlwaysConnectedError(
                f"not always-connected: v_{i} has no earlier neighbour"
            )
        out.append(1 + min(out[j - 1] for j in entry))
    sizes = [0] * (max(out) + 1 if out else 0)
    for value in out:
        sizes[value] += 1
    return LayerAssignment(tuple(out), tuple(sizes))


def relabel(seq: ArrivalSequence, order: Sequence[int], name: str | None = None) -> ArrivalSequence:
    """Re-present the final graph of ``seq`` in a new arrival order.

    ``order[k]`` is the old index of the vertex that arrives ``k+1``-th.
    """
    if sorted(order) != list(range(1, seq.n + 1)):
        raise SequenceError("order must be a permutation of 1..n")
    new_index = {old: new for new, old in enumerate(order, start=1)}
    edges = [(new_index[a], new_index[b]) for a, b in seq.edges()]
    return ArrivalSequence.from_edges(seq.n, edges, name=seq.name if name is None else name)


# ---------------------------------------------------------------------------
# instance file format


def parse_instance(text: str, name: str = "") -> ArrivalSequence:
    """Parse the ``n <count>`` text format.

    Lines consisting only of a comment are skipped; ``# name: X`` before the
    header sets the instance name.  Empty lines after the header are vertices
    without earlier neighbours.
    """
    lines = text.splitlines()
    header_seen = False
    count = 0
    entries: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if not header_seen and body.startswith("name:"):
                name = body[len("name:"):].strip()
            continue
        content = raw.split("#", 1)[0].strip()
        if not header_seen:
            if not content:
                continue
            parts = content.split()
            if len(parts) != 2 or parts[0] != "n":
                raise SequenceError(f"line {lineno}: expected header 'n <count>'")
            try:
                count = int(parts[1])
            except ValueError:
                raise SequenceError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if count < 0:
                raise SequenceError(f"line {lineno}: negative vertex count")
            header_seen = True
            continue
        if len(entries) == count:
            if content:
                raise SequenceError(f"line {lineno}: more than {count} vertex lines")
            continue
        try:
            entries.append(tuple(int(tok) for tok in content.split()))
        except ValueError:
            raise SequenceError(f"line {lineno}: non-integer neighbour index") from None
    if not header_seen:
        raise SequenceError("missing header 'n <count>'")
    while len(entries) < count:
        entries.append(())
    try:
        return ArrivalSequence(tuple(entries), name=name)
    except SequenceError as exc:
        raise SequenceError(f"vertex {exc}") from None


def format_instance(seq: ArrivalSequence) -> str:
    """Canonical text form: optional name comment, header, one line per vertex."""
    out = []
    if seq.name:
        out.append(f"# name: {seq.name}")
    out.append(f"n {seq.n}")
    out.extend(" ".join(map(str, entry)) for entry in seq.arrivals)
    return "\n".join(out) + "\n"


def iter_prefixes(seq: ArrivalSequence) -> Iterator[ArrivalGraph]:
    graph = build_graph(seq)
    for i in range(1, seq.n + 1):
        yield graph.prefix(i)
