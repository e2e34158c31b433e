"""The compiled and pure-Python kernels must agree node-for-node."""

import os
import subprocess
import sys

import pytest
from hypothesis import given

from domino import _pykernels, solvers
from domino._backend import BACKEND, compiled_available
from domino.domination import Variant

from strategies import arrival_sequences

pytestmark = pytest.mark.skipif(not compiled_available(), reason="compiled kernels not built")


def _solve_with(module, variant, seq, baseline):
    saved = solvers.kernels
    solvers.kernels = module
    try:
        return solvers.solve(variant, seq, baseline, cap=64)
    finally:
        solvers.kernels = saved


@given(arrival_sequences(max_n=11))
def test_backends_agree(seq):
    from domino import _ckernels

    for variant in Variant:
        for baseline in ("off", "inc"):
            a = _solve_with(_pykernels, variant, seq, baseline)
            b = _solve_with(_ckernels, variant, seq, baseline)
            assert (a.size, a.witness, a.nodes_explored) == (b.size, b.witness, b.nodes_explored)


def test_component_count_agrees():
    from domino import _ckernels

    adj = (0b0010, 0b0101, 0b0010, 0b0000)
    for mask in range(16):
        assert _ckernels.induced_component_count(mask, adj) == \
            _pykernels.induced_component_count(mask, adj)


def test_compiled_backend_is_default():
    assert BACKEND == "cython"


def test_env_forces_pure_python():
    env = dict(os.environ, DOMINO_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import domino; print(domino.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
