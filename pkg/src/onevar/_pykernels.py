"""Pure-Python (numpy-assisted) implementations of the hot kernels.

Used when the compiled ``_ckernels`` extension is not available.
"""
import numpy as np


def suffix_array(text):
    """Suffix array by prefix doubling; ``text`` holds non-negative ints."""
    n = len(text)
    if n == 0:
        return []
    rank = np.asarray(text, dtype=np.int64)
    # compress symbols to 0..sigma-1
    _, rank = np.unique(rank, return_inverse=True)
    rank = rank.astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:] if k < n else second[:0]
        sa = np.lexsort((second, rank))
        r1 = rank[sa]
        r2 = second[sa]
        diff = np.empty(n, dtype=np.int64)
        diff[0] = 0
        diff[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(diff)
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            break
        k *= 2
    return sa.tolist()


def rank_and_lcp(text, sa):
    """Inverse suffix array and Kasai LCP (``lcp[i]`` for ``sa[i]``, ``sa[i+1]``)."""
    n = len(text)
    rank = [0] * n
    for i, p in enumerate(sa):
        rank[p] = i
    lcp = [0] * max(n - 1, 0)
    h = 0
    for i in range(n):
        r = rank[i]
        if r == n - 1:
            h = 0
            continue
        j = sa[r + 1]
        while i + h < n and j + h < n and text[i + h] == text[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return rank, lcp


def sparse_table(values):
    """Levels of a range-minimum sparse table as numpy arrays."""
    levels = [np.asarray(values, dtype=np.int64)]
    step = 1
    while 2 * step <= len(values):
        prev = levels[-1]
        levels.append(np.minimum(prev[:-step], prev[step:]))
        step *= 2
    return levels


def radix_sort_keys(keys, width):
    """Stable LSD counting sort; returns the permutation ordering ``keys``.

    ``keys`` are tuples of ``width`` non-negative ints.
    """
    order = list(range(len(keys)))
    for pos in range(width - 1, -1, -1):
        top = max((k[pos] for k in keys), default=0)
        buckets = [[] for _ in range(top + 1)]
        for idx in order:
            buckets[keys[idx][pos]].append(idx)
        order = [idx for b in buckets for idx in b]
    return order
