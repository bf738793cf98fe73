"""Kernel selection: compiled extension when importable, Python fallback otherwise.

Set ``ONEVAR_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("ONEVAR_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build
        _impl = _pykernels

suffix_array = _impl.suffix_array
rank_and_lcp = _impl.rank_and_lcp
sparse_table = _impl.sparse_table
radix_sort_keys = _impl.radix_sort_keys


def use_backend(name):
    """Switch kernels at runtime (``"python"`` or ``"cython"``); used by benchmarks."""
    global BACKEND, _impl, suffix_array, rank_and_lcp, sparse_table, radix_sort_keys
    if name == "python":
        _impl = _pykernels
    elif name == "cython":
        from . import _ckernels

        _impl = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    suffix_array = _impl.suffix_array
    rank_and_lcp = _impl.rank_and_lcp
    sparse_table = _impl.sparse_table
    radix_sort_keys = _impl.radix_sort_keys


def compiled_available():
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True
