import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from schurkit import _backend, _pykernels

try:
    from schurkit import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")

small = st.integers(0, 6).flatmap(lambda r: st.integers(0, 6).flatmap(
    lambda c: st.tuples(st.just(r), st.just(c), st.lists(
        st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r))))


def copy(A):
    return [row[:] for row in A]


@needs_compiled
@given(small, st.booleans(), st.booleans())
@settings(max_examples=300, deadline=None)
def test_snf_identical(args, track, track_v):
    r, c, A = args
    assert _kernels.snf(copy(A), r, c, track, track_v) == \
        _pykernels.snf(copy(A), r, c, track, track_v)


@needs_compiled
@given(small)
@settings(max_examples=300, deadline=None)
def test_rank_identical(args):
    r, c, A = args
    assert _kernels.bareiss_rank(copy(A), r, c) == _pykernels.bareiss_rank(copy(A), r, c)


@needs_compiled
def test_overflow_falls_back():
    rng = random.Random(0)
    n = 24
    A = [[rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)] for _ in range(n)]
    assert _kernels.snf(copy(A), n, n) == _pykernels.snf(copy(A), n, n)
    assert _kernels.bareiss_rank(copy(A), n, n) == _pykernels.bareiss_rank(copy(A), n, n)
    big = [[2 ** 70, 3], [5, 7]]
    assert _kernels.snf(copy(big), 2, 2) == _pykernels.snf(copy(big), 2, 2)


def test_backend_name():
    assert _backend.NAME in ("cython", "python")
    if _kernels is not None and not os.environ.get("SCHURKIT_PURE_PYTHON"):
        assert _backend.NAME == "cython"


def test_pure_python_switch():
    env = dict(os.environ, SCHURKIT_PURE_PYTHON="1")
    code = "import schurkit; print(schurkit.KERNEL_BACKEND)"
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert res.stdout.strip() == "python"
