"""Run (instance x variant x algorithm) grids and compare against exact baselines."""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from ..adversaries import ADVERSARIES
from ..algorithms import make_algorithm, run_online
from ..constructions import FamilySpec, generate
from ..domination import Variant
from ..errors import (
    CapExceededError,
    ConfigError,
    FeasibilityError,
    NotAlwaysConnectedError,
    PolicyContractError,
)
from ..graph import ArrivalSequence, build_graph, parse_instance
from ..solvers import MAX_SOLVER_N, SolveResult, solve
from . import random_models

OPT_INC_ALGORITHM = "opt-inc"
_DIGITS = re.compile(r"(\d+)")
SOURCE_KINDS = ("family", "file", "duel", "random")


def natural_key(name: str) -> tuple:
    """Sort ``path-n4`` before ``path-n10``."""
    return tuple((0, int(part)) if part.isdigit() else (1, part)
                 for part in _DIGITS.split(name) if part)


@dataclass(frozen=True)
class InstanceSource:
    """Where instances come from.

    ``family``: ``rotor:delta=8``.  ``file``: a path in the instance format.
    ``duel``: ``tree:n=10`` or ``two-layer:delta=4``, optionally with
    ``algorithm=`` and ``variant=``; without them the adversary plays each
    configured algorithm under the first configured variant.  ``random``:
    ``tree:count=20,n_min=4,n_max=10[,p=0.3]`` drawn from the config seed.
    """

    kind: str
    spec: str

    def __post_init__(self) -> None:
        if self.kind not in SOURCE_KINDS:
            raise ConfigError(f"unknown source kind {self.kind!r}; choose from {', '.join(SOURCE_KINDS)}")


def _split_spec(spec: str) -> tuple[str, dict[str, str]]:
    head, _, rest = spec.partition(":")
    params: dict[str, str] = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"bad parameter {item!r} in {spec!r}; expected key=value")
        params[key.strip()] = value.strip()
    return head.strip(), params


def _int_param(params: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise ConfigError(f"missing parameter {key}")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise ConfigError(f"parameter {key} must be an integer") from None


@dataclass
class ExperimentConfig:
    sources: list[InstanceSource] = field(default_factory=list)
    variants: list[Variant] = field(default_factory=lambda: [Variant.DS])
    algorithms: list[str] = field(default_factory=lambda: ["parent"])
    baselines: list[str] = field(default_factory=lambda: ["inc", "off"])
    cap_off: int | None = None
    cap_inc: int | None = None
    seed: int = 0
    out: Path | None = None
    format: str = "csv"
    jobs: int = 1

    def validate(self) -> None:
        if not self.sources:
            raise ConfigError("config lists no instance source")
        for b in self.baselines:
            if b not in ("off", "inc"):
                raise ConfigError(f"unknown baseline {b!r}; expected off|inc")
        for cap in (self.cap_off, self.cap_inc):
            if cap is not None and not 0 <= cap <= MAX_SOLVER_N:
                raise ConfigError(f"solver caps must lie in 0..{MAX_SOLVER_N}")
        if self.format not in ("csv", "md"):
            raise ConfigError("format must be csv or md")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        for name in self.algorithms:
            if name != OPT_INC_ALGORITHM:
                try:
                    make_algorithm(name)
                except ValueError as exc:
                    raise ConfigError(str(exc)) from None


@dataclass(frozen=True)
class RatioReport:
    instance: str
    variant: Variant
    algorithm: str
    alg_size: int | None
    opt_inc: int | None
    opt_off: int | None
    n: int
    delta: int
    notes: tuple[str, ...] = ()

    @staticmethod
    def _ratio(num: int | None, den: int | None) -> Fraction | None:
        if num is None or not den:
            return None
        return Fraction(num, den)

    @property
    def ratio_inc(self) -> Fraction | None:
        return self._ratio(self.alg_size, self.opt_inc)

    @property
    def ratio_off(self) -> Fraction | None:
        return self._ratio(self.alg_size, self.opt_off)

    def sandwich_ok(self) -> bool:
        """``opt_off <= opt_inc <= alg_size`` over whichever values are known."""
        chain = [x for x in (self.opt_off, self.opt_inc, self.alg_size) if x is not None]
        return all(a <= b for a, b in zip(chain, chain[1:]))

    def sort_key(self) -> tuple:
        return (natural_key(self.instance), self.variant.value, self.algorithm)


class SolveCache:
    """Memoised exact optima; also a log of everything solved, for bound checks."""

    def __init__(self, cap_off: int | None = None, cap_inc: int | None = None):
        self.caps = {"off": cap_off, "inc": cap_inc}
        self._results: dict[tuple, tuple[ArrivalSequence, SolveResult | None]] = {}

    def get(self, seq: ArrivalSequence, variant: Variant | str, baseline: str) -> SolveResult | None:
        """Exact optimum, or ``None`` when the instance exceeds the cap."""
        variant = Variant.parse(variant)
        key = (seq.arrivals, variant, baseline)
        if key not in self._results:
            try:
                result = solve(variant, seq, baseline, self.caps[baseline])
            except CapExceededError:
                result = None
            self._results[key] = (seq, result)
        return self._results[key][1]

    def entries(self) -> Iterator[tuple[ArrivalSequence, Variant, str, SolveResult]]:
        for (_, variant, baseline), (seq, result) in self._results.items():
            if result is not None:
                yield seq, variant, baseline, result

    def __len__(self) -> int:
        return len(self._results)


@dataclass(frozen=True)
class Instance:
    sequence: ArrivalSequence
    notes: tuple[str, ...] = ()


def build_instances(cfg: ExperimentConfig) -> list[Instance]:
    out: list[Instance] = []
    for src in cfg.sources:
        if src.kind == "family":
            try:
                out.append(Instance(generate(FamilySpec.parse(src.spec))))
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        elif src.kind == "file":
            path = Path(src.spec)
            try:
                text = path.read_text()
            except OSError as exc:
                raise ConfigError(f"cannot read instance {path}: {exc.strerror}") from None
            try:
                out.append(Instance(parse_instance(text, name=path.stem)))
            except ValueError as exc:
                raise ConfigError(f"{path}: {exc}") from None
        elif src.kind == "duel":
            out.extend(_duel_instances(src.spec, cfg))
        else:
            model, params = _split_spec(src.spec)
            kwargs = {}
            if "p" in params:
                try:
                    kwargs["p"] = float(params["p"])
                except ValueError:
                    raise ConfigError("parameter p must be a number") from None
            count = _int_param(params, "count", 1)
            n_min = _int_param(params, "n_min", _int_param(params, "n", 8))
            n_max = _int_param(params, "n_max", n_min)
            if not 1 <= n_min <= n_max:
                raise ConfigError("random source needs 1 <= n_min <= n_max")
            try:
                pool = random_models.sample(model, count, cfg.seed, n_min, n_max, **kwargs)
                out.extend(Instance(seq, (f"seed={cfg.seed}",)) for seq in pool)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
    return out


def _duel_instances(spec: str, cfg: ExperimentConfig) -> list[Instance]:
    adversary, params = _split_spec(spec)
    if adversary not in ADVERSARIES:
        raise ConfigError(f"unknown adversary {adversary!r}; choose from {', '.join(ADVERSARIES)}")
    variant = params.get("variant", cfg.variants[0].value)
    if "algorithm" in params:
        opponents = [params["algorithm"]]
    else:
        opponents = [a for a in cfg.algorithms if a != OPT_INC_ALGORITHM]
    size_key = "n" if adversary == "tree" else "delta"
    size = _int_param(params, size_key)
    out = []
    for name in opponents:
        try:
            transcript = ADVERSARIES[adversary](size, name, variant)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        out.append(Instance(transcript.sequence, (f"adversary={adversary}",)))
    return out


def rows_for(inst: Instance, cfg: ExperimentConfig, cache: SolveCache) -> list[RatioReport]:
    seq = inst.sequence
    graph = build_graph(seq)
    delta = graph.max_degree()
    rows = []
    for variant in cfg.variants:
        base = {}
        base_notes: list[str] = []
        for b in ("inc", "off"):
            if b in cfg.baselines:
                res = cache.get(seq, variant, b)
                base[b] = None if res is None else res.size
                if res is None and "cap" not in base_notes:
                    base_notes.append("cap")
            else:
                base[b] = None
        for name in cfg.algorithms:
            notes = list(inst.notes) + base_notes
            size: int | None
            if name == OPT_INC_ALGORITHM:
                res = cache.get(seq, variant, "inc")
                size = None if res is None else res.size
                if res is None and "cap" not in notes:
                    notes.append("cap")
            else:
                try:
                    size = run_online(name, variant, seq).size
                except FeasibilityError as exc:
                    size = None
                    notes.append(f"infeasible@{exc.step}")
                except NotAlwaysConnectedError:
                    size = None
                    notes.append("not-always-connected")
                except PolicyContractError:
                    size = None
                    notes.append("contract-violation")
            for b in ("inc", "off"):
                if base[b] == 0 and size is not None:
                    notes.append(f"zero-opt:{b}")
            rows.append(RatioReport(seq.name, variant, name, size, base["inc"], base["off"],
                                    seq.n, delta, tuple(notes)))
    return rows


def _worker(args: tuple[Instance, ExperimentConfig]) -> list[RatioReport]:
    inst, cfg = args
    return rows_for(inst, cfg, SolveCache(cfg.cap_off, cfg.cap_inc))


def run_experiment(cfg: ExperimentConfig, cache: SolveCache | None = None) -> list[RatioReport]:
    """One row per (instance, variant, algorithm), sorted by those three keys.

    With ``cfg.jobs > 1`` instances are spread over worker processes; the
    output is identical to a serial run.
    """
    cfg.validate()
    instances = build_instances(cfg)
    if cfg.jobs > 1 and cache is None:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_worker, [(inst, cfg) for inst in instances]))
        rows = [r for chunk in chunks for r in chunk]
    else:
        cache = cache if cache is not None else SolveCache(cfg.cap_off, cfg.cap_inc)
        rows = [r for inst in instances for r in rows_for(inst, cfg, cache)]
    return sorted(rows, key=RatioReport.sort_key)


def expand_sweep(family: str, params: str) -> list[str]:
    """Expand ``n=4..12`` or ``delta=4..8:2`` (ranges) and ``a|b|c`` (lists) into family specs.

    >>> expand_sweep("rotor", "delta=4..8:2")
    ['rotor:delta=4', 'rotor:delta=6', 'rotor:delta=8']
    """
    axes: list[tuple[str, list[str]]] = []
    for item in filter(None, (p.strip() for p in params.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"bad sweep parameter {item!r}")
        if ".." in value:
            lo, _, rest = value.partition("..")
            hi, _, step = rest.partition(":")
            try:
                values = [str(v) for v in range(int(lo), int(hi) + 1, int(step or 1))]
            except ValueError:
                raise ConfigError(f"bad range {value!r}") from None
        else:
            values = value.split("|")
        axes.append((key.strip(), values))
    specs = [""]
    for key, values in axes:
        specs = [f"{s},{key}={v}" if s else f"{key}={v}" for s in specs for v in values]
    return [f"{family}:{s}" if s else family for s in specs]


__all__ = [
    "ExperimentConfig",
    "Instance",
    "InstanceSource",
    "OPT_INC_ALGORITHM",
    "RatioReport",
    "SolveCache",
    "build_instances",
    "rows_for",
    "expand_sweep",
    "run_experiment",
]
