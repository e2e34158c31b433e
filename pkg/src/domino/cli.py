"""Command-line entry point: ``domino <subcommand> ...``.

Exit status: 0 on success, 1 when an invariant or bound check fails, 2 on
configuration or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from ._backend import BACKEND
from .adversaries import ADVERSARIES
from .algorithms import ALGORITHM_NAMES
from .constructions import FAMILIES, FamilySpec, generate
from .domination import SolutionChain, Variant
from .errors import DominoError
from .graph import ArrivalSequence, format_instance, parse_instance
from .harness import random_models
from .harness.config import load_config
from .harness.experiment import (
    OPT_INC_ALGORITHM,
    ExperimentConfig,
    Instance,
    InstanceSource,
    SolveCache,
    expand_sweep,
    rows_for,
    run_experiment,
)
from .harness.report import emit_table
from .harness.suites import suite_names, verify_suite
from .solvers import solve
from .transforms import TRANSFORMS

EXIT_OK, EXIT_INVARIANT, EXIT_CONFIG = 0, 1, 2


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _common(parser: argparse.ArgumentParser, *, caps: bool = True, table: bool = False) -> None:
    if caps:
        parser.add_argument("--cap-off", type=int, default=None, help="offline solver cap on n")
        parser.add_argument("--cap-inc", type=int, default=None, help="incremental solver cap on n")
    parser.add_argument("--seed", type=int, default=None, help="default 0")
    parser.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    if table:
        parser.add_argument("--format", choices=("csv", "md"), default=None, help="default csv")


def _instance_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--instance", help="instance file ('-' reads stdin)")
    group.add_argument("--family", help="family spec such as rotor:delta=8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domino", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit an instance file")
    p.add_argument("family", nargs="?", help=f"one of {', '.join(FAMILIES)} (with :key=value,...)")
    p.add_argument("--params", default="", help="key=value,... for the family")
    p.add_argument("--random", choices=sorted(random_models.MODELS), help="random model instead of a family")
    p.add_argument("--n", type=int, default=10, help="size for --random")
    _common(p, caps=False)

    p = sub.add_parser("run", help="run an experiment grid")
    p.add_argument("--config", type=Path, help="flat key=value config file")
    p.add_argument("--instance", action="append", default=[], help="instance file (repeatable)")
    p.add_argument("--family", action="append", default=[], help="family spec (repeatable)")
    p.add_argument("--random", action="append", default=[],
                   help="random source, e.g. tree:count=20,n_min=4,n_max=10")
    _grid_args(p)
    _common(p, table=True)

    p = sub.add_parser("sweep", help="run one family over a parameter range")
    p.add_argument("--family", required=True)
    p.add_argument("--param", required=True, help="e.g. n=4..12 or delta=4..8:2 or n=5|9")
    _grid_args(p)
    _common(p, table=True)

    p = sub.add_parser("solve", help="exact optimum of one instance")
    _instance_args(p)
    p.add_argument("--variant", default="ds", choices=[v.value for v in Variant])
    p.add_argument("--baseline", default="off", choices=("off", "inc"))
    _common(p)

    p = sub.add_parser("duel", help="play an adaptive adversary against an algorithm")
    p.add_argument("--adversary", required=True, choices=sorted(ADVERSARIES))
    p.add_argument("--algorithm", required=True, choices=ALGORITHM_NAMES)
    p.add_argument("--variant", default="ds", choices=[v.value for v in Variant])
    p.add_argument("--n", type=int, help="tree adversary size")
    p.add_argument("--delta", type=int, help="two-layer adversary degree")
    _common(p, table=True)

    p = sub.add_parser("transform", help="apply a set-to-chain transformation with a size certificate")
    p.add_argument("--kind", required=True, choices=sorted(TRANSFORMS))
    _instance_args(p)
    p.add_argument("--set", dest="members", default=None,
                   help="comma-separated vertices; defaults to a minimum DS witness")
    _common(p)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", default="acceptance", choices=suite_names())
    _common(p, caps=False)
    return parser


def _grid_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", action="append", choices=[v.value for v in Variant],
                   help="repeatable; default ds")
    p.add_argument("--algorithm", action="append",
                   help=f"repeatable; one of {', '.join(ALGORITHM_NAMES + (OPT_INC_ALGORITHM,))}")
    p.add_argument("--baseline", action="append", choices=("off", "inc"),
                   help="repeatable; default both")
    p.add_argument("--jobs", type=int, default=1)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load_instance(args: argparse.Namespace) -> ArrivalSequence:
    if args.family:
        return generate(FamilySpec.parse(args.family))
    if args.instance == "-":
        return parse_instance(sys.stdin.read(), name="stdin")
    path = Path(args.instance)
    try:
        text = path.read_text()
    except OSError as exc:
        raise _Fail(EXIT_CONFIG, f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text, name=path.stem)


def _parse_members(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise _Fail(EXIT_CONFIG, f"--set expects comma-separated integers, got {text!r}") from None


def _apply_grid(cfg: ExperimentConfig, args: argparse.Namespace) -> ExperimentConfig:
    if args.variant:
        cfg.variants = [Variant.parse(v) for v in args.variant]
    if args.algorithm:
        cfg.algorithms = list(args.algorithm)
    if args.baseline:
        cfg.baselines = list(args.baseline)
    if args.cap_off is not None:
        cfg.cap_off = args.cap_off
    if args.cap_inc is not None:
        cfg.cap_inc = args.cap_inc
    if args.jobs != 1:
        cfg.jobs = args.jobs
    if args.format is not None:
        cfg.format = args.format
    if args.out is not None:
        cfg.out = args.out
    return cfg


def _report(cfg: ExperimentConfig) -> int:
    rows = run_experiment(cfg)
    _emit(emit_table(rows, cfg.format), cfg.out)
    broken = [r for r in rows if not r.sandwich_ok()]
    for r in broken:
        print(f"sandwich violated: {r.instance} {r.variant.value} {r.algorithm}", file=sys.stderr)
    return EXIT_INVARIANT if broken else EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.random:
        seed = args.seed or 0
        seq = random_models.MODELS[args.random](args.n, seed)
        seq = seq.renamed(f"{seq.name}-seed{seed}")
    elif args.family:
        seq = generate(FamilySpec.parse(args.family, args.params))
    else:
        raise _Fail(EXIT_CONFIG, "generate needs a family or --random")
    _emit(format_instance(seq), args.out)
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    if args.seed is not None:
        cfg.seed = args.seed
    cfg.sources += [InstanceSource("file", p) for p in args.instance]
    cfg.sources += [InstanceSource("family", s) for s in args.family]
    cfg.sources += [InstanceSource("random", s) for s in args.random]
    return _report(_apply_grid(cfg, args))


def cmd_sweep(args: argparse.Namespace) -> int:
    specs = expand_sweep(args.family, args.param)
    cfg = ExperimentConfig(sources=[InstanceSource("family", s) for s in specs], seed=args.seed or 0)
    return _report(_apply_grid(cfg, args))


def cmd_solve(args: argparse.Namespace) -> int:
    seq = _load_instance(args)
    cap = args.cap_off if args.baseline == "off" else args.cap_inc
    res = solve(args.variant, seq, args.baseline, cap)
    if isinstance(res.witness, SolutionChain):
        witness = " ".join(f"{v}@{t}" for v, t in res.witness.added_at.items())
    else:
        witness = " ".join(map(str, sorted(res.witness)))
    lines = [
        f"instance: {seq.name or '-'}",
        f"n: {seq.n}",
        f"variant: {res.variant.value}",
        f"baseline: {res.baseline}",
        f"size: {res.size}",
        f"witness: {witness}",
        f"nodes: {res.nodes_explored}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_duel(args: argparse.Namespace) -> int:
    if args.adversary == "tree":
        if args.n is None:
            raise _Fail(EXIT_CONFIG, "duel --adversary tree needs --n")
        transcript = ADVERSARIES["tree"](args.n, args.algorithm, args.variant)
    else:
        if args.delta is None:
            raise _Fail(EXIT_CONFIG, "duel --adversary two-layer needs --delta")
        transcript = ADVERSARIES["two-layer"](args.delta, args.algorithm, args.variant)
    seq = transcript.sequence
    out = [f"# duel {args.adversary} vs {transcript.algorithm} ({transcript.variant.value})"]
    for i, (nbrs, tag) in enumerate(zip(seq.arrivals, transcript.tags), start=1):
        added = sorted(v for v, t in transcript.chain.added_at.items() if t == i)
        out.append(f"# v{i} <- {list(nbrs)} [{tag}] selects {added}")
    cfg = ExperimentConfig(sources=[], variants=[transcript.variant],
                           algorithms=[transcript.algorithm],
                           cap_off=args.cap_off, cap_inc=args.cap_inc)
    rows = rows_for(Instance(seq), cfg, SolveCache(args.cap_off, args.cap_inc))
    _emit("\n".join(out) + "\n" + emit_table(rows, args.format or "csv"), args.out)
    return EXIT_OK if all(r.sandwich_ok() for r in rows) else EXIT_INVARIANT


def cmd_transform(args: argparse.Namespace) -> int:
    seq = _load_instance(args)
    if args.members is not None:
        members = _parse_members(args.members)
    else:
        members = sorted(solve(Variant.DS, seq, "off", args.cap_off).witness)
    if args.kind == "inc-connectify":
        if args.members is None:
            source = solve(Variant.DS, seq, "inc", args.cap_inc).witness
        else:
            source = SolutionChain.at_arrival(members, seq.n)
        cert = TRANSFORMS[args.kind](seq, source)
    else:
        cert = TRANSFORMS[args.kind](seq, members)
    if isinstance(cert.output, SolutionChain):
        output = " ".join(f"{v}@{t}" for v, t in cert.output.added_at.items())
    else:
        output = " ".join(map(str, sorted(cert.output)))
    lines = [
        f"kind: {cert.kind}",
        f"input_size: {cert.input_size}",
        f"input_components: {cert.input_components}",
        f"output_size: {cert.output_size}",
        f"bound: {cert.bound}",
        f"bound_satisfied: {str(cert.bound_satisfied).lower()}",
        f"added: {' '.join(map(str, cert.added))}",
        f"output: {output}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if cert.bound_satisfied else EXIT_INVARIANT


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify_suite(args.suite, seed=args.seed or 0)
    text = "\n".join(r.line() for r in results) + "\n"
    for r in results:
        for msg in r.failures[:20]:
            text += f"  {r.name}: {msg}\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


COMMANDS = {
    "generate": cmd_generate,
    "run": cmd_run,
    "sweep": cmd_sweep,
    "solve": cmd_solve,
    "duel": cmd_duel,
    "transform": cmd_transform,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except _Fail as exc:
        print(f"domino: {exc}", file=sys.stderr)
        return exc.code
    except (DominoError, ValueError) as exc:
        print(f"domino: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
