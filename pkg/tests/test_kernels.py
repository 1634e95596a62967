import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pythapair import _kernels_py as pure
from pythapair import kernels

try:
    from pythapair import _ckernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("value, backend", [("1", "python"), ("", None)])
def test_env_var_selects_backend(value, backend):
    env = dict(os.environ, PYTHAPAIR_PURE=value)
    got = subprocess.run(
        [sys.executable, "-c", "from pythapair import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.strip()
    expected = backend or ("cython" if compiled else "python")
    assert got == expected


def test_pure_witness_scan_known():
    assert (99, 20) in pure.witness_scan(7, 24, 20)
    assert pure.witness_scan(3, 4, 1) == []


@needs_compiled
@pytest.mark.parametrize("ae, be", [(3, 4), (7, 24), (225, 64), (441, 400), (11, 60), (4225, 3136)])
def test_witness_scan_agrees(ae, be):
    assert compiled.witness_scan(ae, be, 120) == pure.witness_scan(ae, be, 120)


@needs_compiled
@pytest.mark.parametrize("A, B", [(25, 144), (337, 20736), (289, 3600 * 16), (10**12 + 7, 10**20)])
@pytest.mark.parametrize("d", [1, -1, 2, -3, 6])
def test_curve_search_agrees(A, B, d):
    assert compiled.curve_search(A, B, d, 25) == pure.curve_search(A, B, d, 25)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(2, 30))
def test_witness_scan_agrees_random(ae, be, bound):
    assert compiled.witness_scan(ae, be, bound) == pure.witness_scan(ae, be, bound)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(-50, 50), st.integers(1, 15))
def test_curve_search_agrees_random(A, B, d, h):
    if d == 0:
        d = 1
    assert compiled.curve_search(A, B, d, h) == pure.curve_search(A, B, d, h)
