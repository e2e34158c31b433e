"""Named invariant suites and the numbered acceptance criteria.

Every suite returns a :class:`SuiteResult`; a non-empty failure list means
the CLI exits with status 1.  Instance pools are drawn from string-seeded
``random.Random`` objects so each suite is reproducible on its own.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..adversaries import tree_adversary, two_layer_adversary
from ..algorithms import AlgorithmRun, run_online
from ..constructions import (
    alternating_fan,
    bridge,
    disjoint_stars,
    fan,
    ids_pendant_path,
    modular_bridge,
    path_standard,
    pendant_path,
    rotor,
    star,
    two_sided_fan,
)
from ..domination import (
    SolutionChain,
    Variant,
    components_of,
    is_feasible,
    is_valid_chain,
)
from ..graph import (
    ArrivalSequence,
    build_graph,
    classify,
    is_always_connected,
    layers,
    relabel,
)
from ..solvers import enumerate_chains
from ..transforms import connectify, incremental_connectify, tree_incremental_from_set
from .experiment import SolveCache
from .random_models import (
    random_always_connected,
    random_bipartite_ac,
    random_connected,
    random_tree,
)

DS, CDS, TDS, IDS = Variant.DS, Variant.CDS, Variant.TDS, Variant.IDS


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures"


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, message: str | Callable[[], str]) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(message() if callable(message) else message)
        return ok

    def equal(self, got, want, label: str) -> bool:
        return self.check(got == want, lambda: f"{label}: got {got}, want {want}")

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checks, tuple(self.failures))


@dataclass
class SuiteContext:
    """Shared state across suites: the solve log and every algorithm run."""

    seed: int = 0
    cache: SolveCache = field(default_factory=lambda: SolveCache(cap_off=24, cap_inc=16))
    runs: list[tuple[ArrivalSequence, Variant, str, int]] = field(default_factory=list)

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}:{tag}")

    def off(self, variant: Variant, seq: ArrivalSequence) -> int:
        res = self.cache.get(seq, variant, "off")
        if res is None:
            raise RuntimeError(f"{seq.name}: n={seq.n} above the suite's offline cap")
        return res.size

    def inc(self, variant: Variant, seq: ArrivalSequence) -> int:
        res = self.cache.get(seq, variant, "inc")
        if res is None:
            raise RuntimeError(f"{seq.name}: n={seq.n} above the suite's incremental cap")
        return res.size

    def run(self, algorithm: str, variant: Variant, seq: ArrivalSequence) -> AlgorithmRun:
        out = run_online(algorithm, variant, seq)
        self.runs.append((seq, variant, algorithm, out.size))
        return out


def _pool(rng: random.Random, count: int, n_lo: int, n_hi: int, builder) -> list[ArrivalSequence]:
    out = []
    for idx in range(count):
        n = rng.randint(n_lo, n_hi)
        seq = builder(n, rng)
        out.append(seq.renamed(f"{seq.name}-{idx}"))
    return out


def _ac_builder(n: int, rng: random.Random) -> ArrivalSequence:
    return random_always_connected(n, rng, p=rng.choice((0.15, 0.3, 0.5)))


def _bip_builder(n: int, rng: random.Random) -> ArrivalSequence:
    return random_bipartite_ac(n, rng, p=rng.choice((0.1, 0.25, 0.4)))


# ---------------------------------------------------------------------------
# acceptance criteria


def criterion_1(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-1 path optima")
    for n in range(1, 13):
        p = path_standard(n)
        t.equal(ctx.inc(DS, p), math.ceil(n / 2), f"opt_inc(DS, P_{n})")
        if n >= 3:
            t.equal(ctx.inc(CDS, p), n - 1, f"opt_inc(CDS, P_{n})")
            t.equal(ctx.inc(TDS, p), n - 1, f"opt_inc(TDS, P_{n})")
            t.equal(ctx.off(CDS, p), n - 2, f"opt_off(CDS, P_{n})")
    return t.result()


def criterion_2(ctx: SuiteContext, count: int = 200) -> SuiteResult:
    t = _Tally("criterion-2 Parent on trees")
    for seq in _pool(ctx.rng("c2"), count, 3, 14, random_tree):
        graph = build_graph(seq)
        gamma_c = ctx.off(CDS, seq)
        want = gamma_c + 1 if graph.degree(1) == 1 else gamma_c
        t.equal(ctx.run("parent", CDS, seq).size, want, f"{seq.name} {seq.arrivals}")
    return t.result()


def criterion_3(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-3 rotor")
    for delta in (2, 4, 6, 8):
        r = rotor(delta)
        t.equal(ctx.inc(CDS, r), delta + 1, f"opt_inc(CDS, rotor Δ={delta})")
        t.equal(ctx.inc(TDS, r), delta, f"opt_inc(TDS, rotor Δ={delta})")
        t.equal(ctx.off(CDS, r), 1, f"opt_off(CDS, rotor Δ={delta})")
        t.equal(ctx.off(TDS, r), 2, f"opt_off(TDS, rotor Δ={delta})")
    return t.result()


def criterion_4(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-4 two-sided fan")
    for n in (6, 8, 10, 12):
        g = two_sided_fan(n)
        t.equal(ctx.inc(CDS, g), n - 3, f"opt_inc(CDS, two-sided fan n={n})")
        t.equal(ctx.inc(TDS, g), n - 3, f"opt_inc(TDS, two-sided fan n={n})")
        for v in (DS, CDS, TDS):
            t.equal(ctx.off(v, g), 2, f"opt_off({v}, two-sided fan n={n})")
    return t.result()


def criterion_5(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-5 bridges")
    mb = modular_bridge(2, 4)
    got = ctx.inc(TDS, mb)
    t.check(got >= 5, f"opt_inc(TDS, modular bridge k=2 Δ=4) = {got} < 5")
    got = ctx.off(TDS, mb)
    t.check(got <= 2, f"opt_off(TDS, modular bridge k=2 Δ=4) = {got} > 2")
    b = bridge(2, 5)
    got = ctx.inc(CDS, b)
    t.check(got >= 5, f"opt_inc(CDS, bridge k=2 Δ=5) = {got} < 5")
    got = ctx.off(CDS, b)
    t.check(got <= 2, f"opt_off(CDS, bridge k=2 Δ=5) = {got} > 2")
    return t.result()


TREE_DUELS = (("parent", DS), ("first-parent", DS), ("greedy-ids", IDS), ("even-layer:0", DS))


def _unselected_counts(chain: SolutionChain) -> list[int]:
    return [i - len(chain.at(i)) for i in range(1, chain.n + 1)]


def criterion_6(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-6 tree adversary")
    for algorithm, variant in TREE_DUELS:
        for n in (10, 25, 50):
            tr = tree_adversary(n, algorithm, variant)
            label = f"tree adversary n={n} vs {algorithm}"
            t.check(tr.size >= n - 1, f"{label}: size {tr.size} < {n - 1}")
            t.check(classify(tr.sequence).is_tree, f"{label}: output is not a tree")
            t.check(max(_unselected_counts(tr.chain)) <= 1,
                    f"{label}: more than one unselected vertex at some step")
            t.check(is_valid_chain(variant, tr.sequence, tr.chain), f"{label}: invalid chain")
    return t.result()


def criterion_7(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("criterion-7 two-layer adversary")
    for delta in range(3, 9):
        for algorithm in ("parent", "first-parent"):
            tr = two_layer_adversary(delta, algorithm, DS)
            label = f"two-layer Δ={delta} vs {algorithm}"
            t.check(tr.size >= delta, f"{label}: size {tr.size} < {delta}")
            t.equal(ctx.inc(DS, tr.sequence), 2, f"{label}: opt_inc(DS)")
            t.equal(layers(tr.sequence).layer_sizes, (1, delta, delta - 1), f"{label}: layers")
    return t.result()


def _transform_instance(t: _Tally, ctx: SuiteContext, seq: ArrivalSequence, tree: bool) -> None:
    graph = build_graph(seq)
    s = ctx.cache.get(seq, DS, "off").witness
    cert = connectify(seq, s)
    t.check(cert.bound_satisfied, f"{seq.name}: connectify {cert.output_size} > {cert.bound}")
    t.check(is_feasible(CDS, graph, cert.output) and components_of(graph, cert.output) == 1,
            f"{seq.name}: connectify output is not a connected dominating set")
    t.check(cert.details["rounds"] <= max(cert.input_components - 1, 0),
            f"{seq.name}: connectify used too many merge rounds")
    if seq.n <= ctx.cache.caps["inc"]:
        r = ctx.cache.get(seq, DS, "inc").witness
        cert = incremental_connectify(seq, r)
        t.check(cert.bound_satisfied, f"{seq.name}: inc-connectify {cert.output_size} > {cert.bound}")
        t.check(is_valid_chain(CDS, seq, cert.output), f"{seq.name}: inc-connectify chain invalid")
    if tree:
        cert = tree_incremental_from_set(seq, s)
        t.check(cert.bound_satisfied, f"{seq.name}: tree-greedy {cert.output_size} > {cert.bound}")
        t.check(is_valid_chain(DS, seq, cert.output), f"{seq.name}: tree-greedy chain invalid")
        t.check(cert.details["max_marks"] <= 1, f"{seq.name}: a component was marked twice")


def _transform_tightness(t: _Tally) -> None:
    for n in (3, 6, 9, 12):
        s = set(range(2, n + 1, 3))
        cert = connectify(path_standard(n), s)
        t.check(cert.tight, f"connectify P_{n}: {cert.output_size} != bound {cert.bound}")
    for n in (4, 6, 8, 10):
        chain = SolutionChain.at_arrival(range(1, n, 2), n)
        cert = incremental_connectify(path_standard(n), chain)
        t.check(cert.tight and cert.output_size == n - 1,
                f"inc-connectify P_{n}: {cert.output_size} vs bound {cert.bound}")
    for m in (2, 8, 14):
        hosts = range(2, m + 1, 3)
        cert = tree_incremental_from_set(pendant_path(m), hosts)
        want = 2 * (m + 1) // 3
        t.check(cert.tight and cert.output_size == want,
                f"tree-greedy pendant path m={m}: {cert.output_size} vs {want}")


def criterion_8(ctx: SuiteContext, count: int = 500) -> SuiteResult:
    t = _Tally("criterion-8 transformation bounds")
    for seq in _pool(ctx.rng("c8-ac"), count, 2, 12, _ac_builder):
        _transform_instance(t, ctx, seq, tree=False)
    for seq in _pool(ctx.rng("c8-tree"), count, 2, 14, random_tree):
        _transform_instance(t, ctx, seq, tree=True)
    _transform_tightness(t)
    return t.result()


def ids_pool(seed: int, count: int = 1000) -> list[ArrivalSequence]:
    rng = random.Random(f"{seed}:c9")
    pool = _pool(rng, count, 1, 7,
                 lambda n, r: random_connected(n, r, p=r.choice((0.2, 0.35, 0.5, 0.7))))
    for n in range(1, 8):
        pool.append(path_standard(n))
    for n in range(2, 8):
        for centre in ("first", "second", "last"):
            pool.append(star(n, centre))
    for n in range(3, 6):
        perm_rng = random.Random(f"{seed}:c9-path{n}")
        for idx in range(10):
            order = list(range(1, n + 1))
            perm_rng.shuffle(order)
            pool.append(relabel(path_standard(n), order, name=f"path-n{n}-order{idx}"))
    return pool


def check_ids_uniqueness(t: _Tally, seq: ArrivalSequence) -> None:
    census = enumerate_chains(IDS, seq)
    if not t.equal(census.count, 1, f"{seq.name} {seq.arrivals}: IDS chain count"):
        return
    greedy = run_online("greedy-ids", IDS, seq).chain
    states = [set(layer) for layer in census.layers]
    t.check(all(states[i - 1] == {greedy.at(i)} for i in range(1, seq.n + 1)),
            f"{seq.name}: unique IDS chain differs from GreedyIDS")


def criterion_9(ctx: SuiteContext, count: int = 1000) -> SuiteResult:
    t = _Tally("criterion-9 IDS uniqueness")
    for seq in ids_pool(ctx.seed, count):
        check_ids_uniqueness(t, seq)
    return t.result()


def check_bounds(t: _Tally, ctx: SuiteContext, seq: ArrivalSequence) -> None:
    """Degree lower bounds, the baseline sandwich, and the DS/TDS/CDS incremental chain."""
    graph = build_graph(seq)
    n, delta = seq.n, graph.max_degree()
    if n == 0:
        return
    label = f"{seq.name} {seq.arrivals}"
    off = {v: ctx.cache.get(seq, v, "off") for v in (DS, CDS, TDS)}
    inc = {v: ctx.cache.get(seq, v, "inc") for v in (DS, CDS, TDS)}
    if off[DS] is not None:
        t.check(off[DS].size * (delta + 1) >= n, f"{label}: γ < n/(Δ+1)")
    non_isolated = sum(1 for v in graph.vertices() if graph.degree(v))
    if off[TDS] is not None and delta >= 1:
        t.check(off[TDS].size * delta >= non_isolated, f"{label}: γ_T < n/Δ")
    if off[CDS] is not None and delta >= 2 and len(graph.components()) == 1:
        t.check(off[CDS].size * (delta - 1) >= n - 2, f"{label}: γ_C < (n-2)/(Δ-1)")
    for v in (DS, CDS, TDS):
        if off[v] is not None and inc[v] is not None:
            t.check(off[v].size <= inc[v].size, f"{label}: opt_off({v}) > opt_inc({v})")
    if n >= 3 and is_always_connected(seq) and all(inc[v] is not None for v in inc):
        t.check(inc[DS].size <= inc[TDS].size <= inc[CDS].size + 1,
                f"{label}: opt_inc DS/TDS/CDS chain broken "
                f"({inc[DS].size}, {inc[TDS].size}, {inc[CDS].size})")


def _check_runs(t: _Tally, ctx: SuiteContext, runs: Iterable) -> None:
    for seq, variant, algorithm, size in runs:
        res = ctx.cache.get(seq, variant, "inc")
        if res is not None:
            t.check(res.size <= size,
                    f"{seq.name}: opt_inc({variant}) {res.size} > {algorithm} {size}")


def criterion_10(ctx: SuiteContext) -> SuiteResult:
    """Bounds over every instance criteria 1 to 9 solved (run them first on ``ctx``)."""
    t = _Tally("criterion-10 bound suite")
    seen: dict[tuple, ArrivalSequence] = {}
    for seq, _, _, _ in list(ctx.cache.entries()):
        seen.setdefault(seq.arrivals, seq)
    for seq in seen.values():
        check_bounds(t, ctx, seq)
    _check_runs(t, ctx, [r for r in ctx.runs if r[0].arrivals in seen])
    return t.result()


def check_layer_inequalities(t: _Tally, ctx: SuiteContext, seq: ArrivalSequence,
                             inc_cap: int = 14) -> None:
    run = ctx.run("first-parent", DS, seq)
    sizes = layers(seq).layer_sizes
    counts = run.per_layer_selected
    for i, (s_i, l_i) in enumerate(zip(counts, sizes)):
        t.check(s_i <= l_i, f"{seq.name}: s_{i}={s_i} > l_{i}={l_i}")
        if i + 1 < len(sizes):
            t.check(s_i <= sizes[i + 1], f"{seq.name}: s_{i}={s_i} > l_{i + 1}={sizes[i + 1]}")
        elif len(sizes) > 1:
            t.check(s_i == 0, f"{seq.name}: last layer has {s_i} selected vertices")
    if seq.n <= inc_cap and ctx.inc(DS, seq) <= 3:
        t.check(len(sizes) <= 6, f"{seq.name}: opt_inc(DS) <= 3 but {len(sizes)} layers")


def criterion_11(ctx: SuiteContext, count: int = 200) -> SuiteResult:
    t = _Tally("criterion-11 FirstParent layer inequalities")
    for seq in _pool(ctx.rng("c11"), count, 2, 24, _bip_builder):
        report = classify(seq)
        t.check(report.always_connected and report.bipartite, f"{seq.name}: generator broke its class")
        check_layer_inequalities(t, ctx, seq)
    return t.result()


CRITERIA: dict[int, Callable[[SuiteContext], SuiteResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11,
}


def run_acceptance(seed: int = 0) -> list[SuiteResult]:
    """All eleven criteria in order; criterion 10 audits what 1 to 9 solved."""
    ctx = SuiteContext(seed)
    return [CRITERIA[k](ctx) for k in sorted(CRITERIA)]


# ---------------------------------------------------------------------------
# invariant suites


POLICIES = {
    DS: ("parent", "first-parent", "greedy-ids", "even-layer:0", "even-layer:1"),
    CDS: ("parent", "first-parent"),
    TDS: ("parent", "first-parent"),
    IDS: ("greedy-ids",),
}


def suite_chain_validity(ctx: SuiteContext, count: int = 150) -> SuiteResult:
    t = _Tally("chain-validity")
    rng = ctx.rng("chain-validity")
    pool = (_pool(rng, count, 1, 12, _ac_builder)
            + _pool(rng, count, 1, 12, lambda n, r: random_connected(n, r)))
    for seq in pool:
        graph = build_graph(seq)
        ac = is_always_connected(seq)
        for variant, names in POLICIES.items():
            for name in names:
                if name.startswith("even-layer") and not ac:
                    continue
                run = ctx.run(name, variant, seq)
                t.check(is_valid_chain(variant, seq, run.chain), f"{seq.name}: {name}/{variant} invalid")
                if ac and name in ("parent", "first-parent") and variant is not TDS:
                    t.check(all(is_feasible(CDS, graph.prefix(i), run.chain.at(i))
                                for i in range(1, seq.n + 1)),
                            f"{seq.name}: {name} is not connected at every prefix")
        for variant in Variant:
            inc = ctx.cache.get(seq, variant, "inc")
            off = ctx.cache.get(seq, variant, "off")
            t.check(is_valid_chain(variant, seq, inc.witness), f"{seq.name}: opt_inc witness invalid")
            t.check(is_feasible(variant, graph, off.witness), f"{seq.name}: opt_off witness infeasible")
        coloring = classify(seq).coloring
        if ac and coloring is not None and seq.n >= 2:
            sides = [frozenset(v for v in graph.vertices() if coloring[v - 1] == c) for c in (0, 1)]
            smaller = min(sides, key=len) | {1}
            chain = SolutionChain.at_arrival(smaller, seq.n)
            t.check(is_valid_chain(DS, seq, chain), f"{seq.name}: smaller partite set is not incremental")
    return t.result()


FAMILY_POOL: tuple[Callable[[], ArrivalSequence], ...] = tuple(
    [lambda n=n: path_standard(n) for n in range(1, 13)]
    + [lambda n=n, c=c: star(n, c) for n in (2, 4, 7) for c in ("first", "second", "last")]
    + [lambda: disjoint_stars(2, 3), lambda: disjoint_stars(2, 5), lambda: disjoint_stars(3, 3)]
    + [lambda d=d: fan(d) for d in range(2, 9)]
    + [lambda: alternating_fan(2, 4), lambda: alternating_fan(3, 4), lambda: alternating_fan(2, 5)]
    + [lambda: modular_bridge(2, 3), lambda: modular_bridge(2, 4), lambda: modular_bridge(4, 3)]
    + [lambda: bridge(2, 4), lambda: bridge(2, 5), lambda: bridge(4, 4)]
    + [lambda d=d: rotor(d) for d in (2, 4, 6, 8)]
    + [lambda n=n: two_sided_fan(n) for n in range(4, 13)]
    + [lambda: pendant_path(2), lambda: ids_pendant_path(5, 3), lambda: ids_pendant_path(7, 4)]
)


def suite_degree_bounds(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("degree-bounds")
    for build in FAMILY_POOL:
        check_bounds(t, ctx, build())
    return t.result()


def suite_tds_prefix_connected(ctx: SuiteContext, count: int = 150) -> SuiteResult:
    t = _Tally("tds-prefix-connected")
    for seq in _pool(ctx.rng("tds-prefix"), count, 1, 8, _ac_builder):
        graph = build_graph(seq)
        census = enumerate_chains(TDS, seq, graph)
        for i, d in census.states():
            t.check(components_of(graph.prefix(i), d) <= 1,
                    f"{seq.name}: D_{i}={sorted(d)} is disconnected")
    return t.result()


def suite_ids_uniqueness(ctx: SuiteContext) -> SuiteResult:
    t = _Tally("ids-uniqueness")
    for seq in ids_pool(ctx.seed):
        check_ids_uniqueness(t, seq)
    return t.result()


def suite_transform_bounds(ctx: SuiteContext) -> SuiteResult:
    return _renamed(criterion_8(ctx, count=200), "transform-bounds")


def suite_layer_inequalities(ctx: SuiteContext) -> SuiteResult:
    return _renamed(criterion_11(ctx), "layer-inequalities")


def _renamed(result: SuiteResult, name: str) -> SuiteResult:
    return SuiteResult(name, result.checks, result.failures)


SUITES: dict[str, Callable[[SuiteContext], SuiteResult]] = {
    "chain-validity": suite_chain_validity,
    "degree-bounds": suite_degree_bounds,
    "tds-prefix-connected": suite_tds_prefix_connected,
    "ids-uniqueness": suite_ids_uniqueness,
    "transform-bounds": suite_transform_bounds,
    "layer-inequalities": suite_layer_inequalities,
}
SUITES.update({f"criterion-{k}": fn for k, fn in CRITERIA.items() if k != 10})


def suite_names() -> list[str]:
    return [*SUITES, "criterion-10", "acceptance", "all"]


def verify_suite(name: str, seed: int = 0) -> list[SuiteResult]:
    """Run one suite (or ``acceptance`` / ``all``) and return its results."""
    if name == "acceptance":
        return run_acceptance(seed)
    if name == "criterion-10":
        return run_acceptance(seed)[9:10]
    if name == "all":
        ctx = SuiteContext(seed)
        return [fn(ctx) for fn in SUITES.values() if not fn.__name__.startswith("criterion")] \
            + run_acceptance(seed)
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}") from None
    return [fn(SuiteContext(seed))]
