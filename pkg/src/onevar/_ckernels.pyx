# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; same interface as ``_pykernels``."""
import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc

cnp.import_array()

# numpy already vectorises the range-minimum levels
from ._pykernels import sparse_table  # noqa: F401


cdef void _counting_pass(long *src, long *dst, long *key, long n, long top, long *cnt):
    cdef long i, s = 0, c
    for i in range(top + 1):
        cnt[i] = 0
    for i in range(n):
        cnt[key[src[i]]] += 1
    for i in range(top + 1):
        c = cnt[i]
        cnt[i] = s
        s += c
    for i in range(n):
        c = key[src[i]]
        dst[cnt[c]] = src[i]
        cnt[c] += 1


def suffix_array(text):
    """Suffix array by prefix doubling with two counting-sort passes per round."""
    cdef long n = len(text)
    if n == 0:
        return []
    codes = np.unique(np.asarray(text, dtype=np.int64), return_inverse=True)[1].astype(np.int64)
    cdef long cap = n + 2
    cdef long *rank = <long *>malloc(n * sizeof(long))
    cdef long *second = <long *>malloc(n * sizeof(long))
    cdef long *sa = <long *>malloc(n * sizeof(long))
    cdef long *tmp = <long *>malloc(n * sizeof(long))
    cdef long *nr = <long *>malloc(n * sizeof(long))
    cdef long *cnt = <long *>malloc(cap * sizeof(long))
    cdef long i, k = 1, top, r
    cdef cnp.int64_t[:] cv = codes
    try:
        top = 0
        for i in range(n):
            rank[i] = cv[i] + 1
            if rank[i] > top:
                top = rank[i]
            sa[i] = i
        while True:
            for i in range(n):
                second[i] = rank[i + k] if i + k < n else 0
            _counting_pass(sa, tmp, second, n, top, cnt)
            _counting_pass(tmp, sa, rank, n, top, cnt)
            r = 1
            nr[sa[0]] = 1
            for i in range(1, n):
                if rank[sa[i]] != rank[sa[i - 1]] or second[sa[i]] != second[sa[i - 1]]:
                    r += 1
                nr[sa[i]] = r
            for i in range(n):
                rank[i] = nr[i]
            top = r
            if r == n:
                break
            k *= 2
        return [sa[i] for i in range(n)]
    finally:
        free(rank)
        free(second)
        free(sa)
        free(tmp)
        free(nr)
        free(cnt)


def rank_and_lcp(text, sa):
    """Inverse suffix array and Kasai LCP (``lcp[i]`` for ``sa[i]``, ``sa[i+1]``)."""
    cdef long n = len(text)
    cdef cnp.int64_t[:] t = np.asarray(text, dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
    cdef cnp.int64_t[:] s = np.asarray(sa, dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
    rank_arr = np.zeros(n, dtype=np.int64)
    lcp_arr = np.zeros(max(n - 1, 0), dtype=np.int64)
    cdef cnp.int64_t[:] rk = rank_arr
    cdef cnp.int64_t[:] lc = lcp_arr
    cdef long i, j, h = 0, r
    for i in range(n):
        rk[s[i]] = i
    for i in range(n):
        r = rk[i]
        if r == n - 1:
            h = 0
            continue
        j = s[r + 1]
        while i + h < n and j + h < n and t[i + h] == t[j + h]:
            h += 1
        lc[r] = h
        if h:
            h -= 1
    return rank_arr.tolist(), lcp_arr.tolist()


def radix_sort_keys(keys, width):
    """Stable LSD counting sort; returns the permutation ordering ``keys``."""
    cdef long n = len(keys)
    if n == 0:
        return []
    arr = np.asarray(keys, dtype=np.int64).reshape(n, width)
    cdef long *order = <long *>malloc(n * sizeof(long))
    cdef long *tmp = <long *>malloc(n * sizeof(long))
    cdef long *col = <long *>malloc(n * sizeof(long))
    cdef long *cnt = NULL
    cdef long i, pos, top
    cdef cnp.int64_t[:, :] a = arr
    try:
        for i in range(n):
            order[i] = i
        for pos in range(width - 1, -1, -1):
            top = 0
            for i in range(n):
                col[i] = a[i, pos]
                if col[i] > top:
                    top = col[i]
            cnt = <long *>malloc((top + 1) * sizeof(long))
            _counting_pass(order, tmp, col, n, top, cnt)
            free(cnt)
            cnt = NULL
            for i in range(n):
                order[i] = tmp[i]
        return [order[i] for i in range(n)]
    finally:
        free(order)
        free(tmp)
        free(col)
