# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_purepy``; same signatures and results."""

from libc.stdlib cimport malloc, calloc, free, qsort


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef long long *_to_array(parts, Py_ssize_t extra) except NULL:
    cdef Py_ssize_t n = len(parts), i
    cdef long long *buf = <long long *> calloc(n + extra + 1, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = parts[i]
    return buf


def content_sum(parts):
    cdef Py_ssize_t n = len(parts), row
    cdef long long part, total = 0
    for row in range(n):
        part = parts[row]
        total += part * (part - 1) // 2 - row * part
    return total


def hook_v2_sum(parts):
    cdef Py_ssize_t n = len(parts), i, j
    if n == 0:
        return 0
    cdef long long *rows = _to_array(parts, 0)
    cdef long long width = rows[0]
    cdef long long *cols = <long long *> calloc(width, sizeof(long long))
    cdef long long h, total = 0
    if cols == NULL:
        free(rows)
        raise MemoryError()
    with nogil:
        for i in range(n):
            for j in range(rows[i]):
                cols[j] += 1
        for i in range(n):
            for j in range(rows[i]):
                h = rows[i] - j + cols[j] - i - 1
                total += __builtin_ctzll(<unsigned long long> h)
    free(cols)
    free(rows)
    return total


cdef tuple _parts_from_sorted_beta(long long *beta, Py_ssize_t length):
    # beta must be strictly decreasing
    cdef Py_ssize_t t, last = length
    while last > 0 and beta[last - 1] - (length - last) == 0:
        last -= 1
    return tuple([beta[t] - (length - 1 - t) for t in range(last)])


cdef int _cmp_desc(const void *a, const void *b) noexcept nogil:
    cdef long long x = (<const long long *> a)[0], y = (<const long long *> b)[0]
    return (x < y) - (x > y)


cdef inline void _sort_desc(long long *a, Py_ssize_t n) noexcept nogil:
    qsort(a, n, sizeof(long long), _cmp_desc)


def core_quotient(parts, long p):
    cdef Py_ssize_t n = len(parts), length, i, r, c, t, k
    length = n + (p - n % p) % p
    cdef long long *beta = _to_array(parts, length - n)
    cdef long long *counts = <long long *> calloc(p, sizeof(long long))
    cdef long long *core = <long long *> malloc(length * sizeof(long long) + 1)
    if counts == NULL or core == NULL:
        free(beta); free(counts); free(core)
        raise MemoryError()
    for i in range(length):
        beta[i] = beta[i] - i + length - 1
        counts[beta[i] % p] += 1
    quotient = []
    cdef long long level
    for r in range(p):
        c = counts[r]
        mu = []
        t = 0
        for i in range(length):
            if beta[i] % p == r:
                level = beta[i] // p - (c - 1 - t)
                if level > 0:
                    mu.append(level)
                t += 1
        quotient.append(tuple(mu))
    k = 0
    for r in range(p):
        for i in range(counts[r]):
            core[k] = r + p * i
            k += 1
    _sort_desc(core, length)
    result = _parts_from_sorted_beta(core, length)
    free(beta); free(counts); free(core)
    return result, quotient


def assemble(core, quotient, long p):
    cdef Py_ssize_t n = len(core), length, i, r, c, t, k, total
    length = n + (p - n % p) % p
    cdef long long *counts = <long long *> calloc(p, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    cdef long long b
    for i in range(length):
        b = (core[i] if i < n else 0) - i + length - 1
        counts[b % p] += 1
    cdef long long shift = 0
    for r in range(p):
        if len(quotient[r]) - counts[r] > shift:
            shift = len(quotient[r]) - counts[r]
    total = length + p * shift
    cdef long long *beads = <long long *> malloc(total * sizeof(long long) + 1)
    if beads == NULL:
        free(counts)
        raise MemoryError()
    k = 0
    for r in range(p):
        mu = quotient[r]
        c = counts[r] + shift
        for t in range(c):
            beads[k] = r + p * ((mu[t] if t < len(mu) else 0) + c - 1 - t)
            k += 1
    _sort_desc(beads, total)
    result = _parts_from_sorted_beta(beads, total)
    free(counts); free(beads)
    return result
