"""Suffix array, LCP array and sparse-table RMQ with O(1) lcp queries."""
from dataclasses import dataclass

from . import kernels


@dataclass(frozen=True)
class StringIndex:
    text: tuple
    sa: list
    rank: list
    lcp: list
    rmq: list  # sparse-table levels over lcp

    def __len__(self):
        return len(self.text)


def build_index(text):
    """Build a :class:`StringIndex` over a sequence of non-negative ints."""
    text = tuple(text)
    if not text:
        raise ValueError("empty text")
    sa = kernels.suffix_array(list(text))
    rank, lcp = kernels.rank_and_lcp(list(text), sa)
    rmq = kernels.sparse_table(lcp) if lcp else []
    return StringIndex(text, list(sa), list(rank), list(lcp), rmq)


def _range_min(index, lo, hi):
    # minimum of lcp[lo..hi-1], lo < hi
    k = (hi - lo).bit_length() - 1
    level = index.rmq[k]
    a = level[lo]
    b = level[hi - (1 << k)]
    return int(a if a < b else b)


def lcp_query(index, i, j):
    """Length of the longest common prefix of the suffixes starting at ``i`` and ``j``."""
    n = len(index.text)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"position out of range: ({i}, {j}) for text of length {n}")
    if i == j:
        return n - i
    ri, rj = index.rank[i], index.rank[j]
    if ri > rj:
        ri, rj = rj, ri
    return _range_min(index, ri, rj)


def sa_naive(text):
    """Suffix array by direct comparison sort (test oracle)."""
    text = tuple(text)
    return sorted(range(len(text)), key=lambda p: text[p:])


def lcp_naive(text, i, j):
    n = len(text)
    h = 0
    while i + h < n and j + h < n and text[i + h] == text[j + h]:
        h += 1
    return h
