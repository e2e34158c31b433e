"""Compare the compiled and pure-Python search kernels on the exact solvers.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each row times one (instance, variant, baseline) solve under both backends
and checks that they agree on the optimum and the search-node count.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time
from types import ModuleType

from domino import _pykernels, solvers
from domino._backend import compiled_available
from domino.constructions import bridge, rotor, two_sided_fan
from domino.harness.random_models import random_always_connected, random_tree

CASES = [
    ("rotor-d8", lambda: rotor(8), "cds", "inc"),
    ("two-sided-fan-n12", lambda: two_sided_fan(12), "tds", "inc"),
    ("bridge-k4-d4", lambda: bridge(4, 4), "cds", "off"),
    ("tree-n20", lambda: random_tree(20, 11), "ds", "off"),
    ("tree-n14", lambda: random_tree(14, 12), "cds", "inc"),
    ("ac-n18", lambda: random_always_connected(18, 13, p=0.2), "cds", "off"),
    ("ac-n14", lambda: random_always_connected(14, 14, p=0.2), "ds", "inc"),
    ("ac-n22", lambda: random_always_connected(22, 15, p=0.15), "tds", "off"),
    ("ac-n26", lambda: random_always_connected(26, 26, p=0.15), "cds", "inc"),
    ("ac-n30", lambda: random_always_connected(30, 30, p=0.12), "cds", "off"),
    ("ac-n30-sparse", lambda: random_always_connected(30, 30, p=0.08), "ds", "off"),
    ("ac-n36", lambda: random_always_connected(36, 36, p=0.12), "ds", "off"),
]


@contextlib.contextmanager
def using(module: ModuleType):
    saved = solvers.kernels
    solvers.kernels = module
    try:
        yield
    finally:
        solvers.kernels = saved


def time_solve(module: ModuleType, seq, variant: str, baseline: str, repeat: int):
    best = float("inf")
    with using(module):
        for _ in range(repeat):
            start = time.perf_counter()
            res = solvers.solve(variant, seq, baseline, cap=64)
            best = min(best, time.perf_counter() - start)
    return best, res


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1)
    parser.add_argument("--quick", action="store_true", help="only the first three cases")
    args = parser.parse_args(argv)
    if not compiled_available():
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1
    from domino import _ckernels

    cases = CASES[:3] if args.quick else CASES
    print(f"{'case':<20} {'var':<4} {'base':<4} {'opt':>4} {'nodes':>9} "
          f"{'python s':>10} {'cython s':>10} {'speedup':>8}")
    mismatches = 0
    for name, build, variant, baseline in cases:
        seq = build()
        t_py, r_py = time_solve(_pykernels, seq, variant, baseline, args.repeat)
        t_c, r_c = time_solve(_ckernels, seq, variant, baseline, args.repeat)
        agree = (r_py.size, r_py.nodes_explored) == (r_c.size, r_c.nodes_explored)
        mismatches += not agree
        print(f"{name:<20} {variant:<4} {baseline:<4} {r_c.size:>4} {r_c.nodes_explored:>9} "
              f"{t_py:>10.4f} {t_c:>10.4f} {t_py / max(t_c, 1e-9):>7.1f}x"
              + ("" if agree else "  MISMATCH"))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
