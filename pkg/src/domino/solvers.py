"""Exact offline and incremental optima.

``opt_off`` minimises over sets of the final graph; ``opt_inc`` minimises
``|D_n|`` over valid chains.  For the incremental problem it is enough to
search final sets ``F`` whose every prefix ``F ∩ V_i`` is feasible on
``G_i``: every variant's feasibility survives adding dominated vertices, so
if any chain ends in ``F`` then the chain selecting each member of ``F`` at
arrival is valid too.  Both searches run in the bitmask kernels picked by
:mod:`domino._backend`.

:func:`enumerate_chains` is a slow, independent oracle that walks all
monotone chains explicitly; tests use it to cross-check the fast path.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Union

from ._backend import kernels
from .domination import SolutionChain, Variant, is_feasible
from .errors import CapExceededError
from .graph import ArrivalGraph, ArrivalSequence, build_graph

DEFAULT_CAP_OFF = 20
DEFAULT_CAP_INC = 14
MAX_SOLVER_N = 64
CAP_ENV = "DOMINO_CAP_OVERRIDE"


def cap_override() -> int | None:
    raw = os.environ.get(CAP_ENV, "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    return min(value, MAX_SOLVER_N)


def resolve_cap(cap: int | None, default: int) -> int:
    override = cap_override()
    if override is not None:
        return override
    if cap is None:
        return default
    return min(cap, MAX_SOLVER_N)


@dataclass(frozen=True)
class SolveResult:
    size: int
    witness: Union[frozenset, SolutionChain]
    nodes_explored: int
    variant: Variant
    baseline: str  # "off" | "inc"


def _bit_members(mask: int) -> frozenset[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _cover_masks(adj: tuple[int, ...], variant: Variant) -> list[int]:
    if variant is Variant.TDS:
        return list(adj)
    return [a | (1 << v) for v, a in enumerate(adj)]


def _check_cap(n: int, cap: int, which: str) -> None:
    if n > cap:
        flag = "--cap-off" if which == "off" else "--cap-inc"
        raise CapExceededError(
            f"n={n} exceeds the {which} solver cap {cap}; raise {flag} "
            f"or set {CAP_ENV} (hard limit {MAX_SOLVER_N})"
        )


def opt_off(variant: Variant | str, seq: ArrivalSequence, cap: int | None = None) -> SolveResult:
    """Minimum feasible set of the final graph (``γ``, ``γ_C``, ``γ_T``, ``γ_I``)."""
    variant = Variant.parse(variant)
    cap = resolve_cap(cap, DEFAULT_CAP_OFF)
    n = seq.n
    _check_cap(n, cap, "off")
    graph = build_graph(seq)
    adj = graph.masks()
    cover = _cover_masks(adj, variant)

    full = 0
    last = []
    for v, a in enumerate(adj):
        if variant is Variant.TDS:
            if not a:
                last.append(-1)
                continue
            last.append(a.bit_length() - 1)
        else:
            last.append(max(v, a.bit_length() - 1))
        full |= 1 << v
    deadline = [0] * (n + 1)
    for u, t in enumerate(last):
        if t >= 0:
            deadline[t + 1] |= 1 << u
    for v in range(1, n + 1):
        deadline[v] |= deadline[v - 1]
    ncomp = len(graph.components())

    nodes = 0
    for k in range(0, n + 1):
        mask, explored = kernels.offline_search(adj, cover, deadline, variant.code, ncomp, full, k)
        nodes += explored
        if mask >= 0:
            return SolveResult(k, _bit_members(mask), nodes, variant, "off")
    raise AssertionError("no feasible set found; the full vertex set is always feasible")


def opt_inc(variant: Variant | str, seq: ArrivalSequence, cap: int | None = None) -> SolveResult:
    """Minimum ``|D_n|`` over valid chains; witness selects members at arrival."""
    variant = Variant.parse(variant)
    cap = resolve_cap(cap, DEFAULT_CAP_INC)
    n = seq.n
    _check_cap(n, cap, "inc")
    graph = build_graph(seq)
    adj = graph.masks()
    cover = _cover_masks(adj, variant)

    need = [0] * (n + 1)
    ncomp_prefix = [0] * (n + 1)
    for m in range(1, n + 1):
        prefix = (1 << m) - 1
        if variant is Variant.TDS:
            need[m] = sum(1 << u for u in range(m) if adj[u] & prefix)
        else:
            need[m] = prefix
        ncomp_prefix[m] = len(graph.prefix(m).components())

    nodes = 0
    for k in range(0, n + 1):
        mask, explored = kernels.incremental_search(adj, cover, need, ncomp_prefix, variant.code, k)
        nodes += explored
        if mask >= 0:
            chain = SolutionChain.at_arrival(_bit_members(mask), n)
            return SolveResult(k, chain, nodes, variant, "inc")
    raise AssertionError("no valid chain found; selecting everything at arrival is valid")


def solve(variant: Variant | str, seq: ArrivalSequence, baseline: str,
          cap: int | None = None) -> SolveResult:
    if baseline == "off":
        return opt_off(variant, seq, cap)
    if baseline == "inc":
        return opt_inc(variant, seq, cap)
    raise ValueError(f"unknown baseline {baseline!r}; expected off|inc")


# ---------------------------------------------------------------------------
# independent oracle


@dataclass
class ChainCensus:
    """All valid chains of a small instance, as a layered state graph.

    ``layers[i]`` maps each feasible ``D_{i+1}`` lying on at least one
    complete valid chain to the number of chain prefixes reaching it.
    """

    variant: Variant
    n: int
    layers: list[dict[frozenset, int]]
    parents: list[dict[frozenset, list[frozenset]]] = field(repr=False)

    @property
    def count(self) -> int:
        if self.n == 0:
            return 1
        return sum(self.layers[-1].values())

    @property
    def min_size(self) -> int:
        if self.n == 0:
            return 0
        return min(len(d) for d in self.layers[-1])

    def states(self):
        for i, layer in enumerate(self.layers, start=1):
            for d in layer:
                yield i, d

    def some_chain(self, final: frozenset | None = None) -> SolutionChain:
        """Reconstruct one chain ending in ``final`` (default: a smallest one)."""
        if final is None:
            final = min(self.layers[-1], key=lambda d: (len(d), sorted(d)))
        sets = [final]
        for i in range(self.n - 1, 0, -1):
            sets.append(self.parents[i][sets[-1]][0])
        sets.reverse()
        added: dict[int, int] = {}
        for step, d in enumerate(sets, start=1):
            for v in d:
                added.setdefault(v, step)
        return SolutionChain(added, self.n)


def enumerate_chains(variant: Variant | str, seq: ArrivalSequence,
                     graph: ArrivalGraph | None = None) -> ChainCensus:
    """Enumerate every valid monotone chain by brute force (small n only).

    From each feasible ``D_{i-1}`` every superset ``D_i ⊆ {v_1..v_i}`` is
    tried; no normalisation of timestamps is assumed.
    """
    variant = Variant.parse(variant)
    graph = graph or build_graph(seq)
    n = seq.n
    forward: list[dict[frozenset, int]] = []
    parents: list[dict[frozenset, list[frozenset]]] = []
    previous: dict[frozenset, int] = {frozenset(): 1}
    for i in range(1, n + 1):
        view = graph.prefix(i)
        layer: dict[frozenset, int] = defaultdict(int)
        back: dict[frozenset, list[frozenset]] = defaultdict(list)
        for d, ways in previous.items():
            free = [v for v in range(1, i + 1) if v not in d]
            for r in range(len(free) + 1):
                for extra in combinations(free, r):
                    nxt = d.union(extra)
                    if is_feasible(variant, view, nxt):
                        layer[nxt] += ways
                        back[nxt].append(d)
        forward.append(dict(layer))
        parents.append(dict(back))
        previous = layer

    # drop states that lie on no complete chain
    alive: list[set[frozenset]] = [set() for _ in range(n)]
    if n:
        alive[-1] = set(forward[-1])
        for i in range(n - 1, 0, -1):
            for d in alive[i]:
                alive[i - 1].update(parents[i][d])
    layers = [{d: c for d, c in forward[i].items() if d in alive[i]} for i in range(n)]
    trimmed = [{d: [p for p in ps if i == 0 or p in alive[i - 1]]
                for d, ps in parents[i].items() if d in alive[i]} for i in range(n)]
    return ChainCensus(variant, n, layers, trimmed)


def degree_lower_bounds(graph: ArrivalGraph) -> dict[str, float]:
    """``n/(Δ+1)`` for γ, ``n/Δ`` for γ_T and ``(n-2)/(Δ-1)`` for γ_C."""
    n = graph.n
    delta = graph.max_degree()
    out = {"ds": n / (delta + 1)}
    if delta >= 1:
        out["tds"] = n / delta
    if delta >= 2:
        out["cds"] = (n - 2) / (delta - 1)
    return out


__all__ = [
    "ChainCensus",
    "SolveResult",
    "degree_lower_bounds",
    "enumerate_chains",
    "opt_inc",
    "opt_off",
    "solve",
]
