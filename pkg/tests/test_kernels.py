import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onevar import _pykernels, kernels

try:
    from onevar import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


@needs_ext
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 9), max_size=300))
def test_suffix_array_backends_agree(text):
    sa = _pykernels.suffix_array(text)
    assert _ckernels.suffix_array(text) == sa
    if text:
        assert _ckernels.rank_and_lcp(text, sa) == _pykernels.rank_and_lcp(text, sa)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 20), st.integers(0, 20)), max_size=200))
def test_radix_sort_backends_agree(keys):
    assert _ckernels.radix_sort_keys(keys, 2) == _pykernels.radix_sort_keys(keys, 2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=100))
def test_radix_sort_is_stable_sort(keys):
    order = kernels.radix_sort_keys(keys, 2)
    assert order == sorted(range(len(keys)), key=lambda i: keys[i])


def test_sparse_table_levels():
    vals = [random.Random(3).randint(0, 50) for _ in range(37)]
    levels = kernels.sparse_table(vals)
    for k, level in enumerate(levels):
        span = 1 << k
        assert list(level) == [min(vals[i : i + span]) for i in range(len(vals) - span + 1)]


def test_pure_python_switch_by_environment():
    env = dict(os.environ, ONEVAR_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import onevar.kernels as k; print(k.BACKEND)"], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
