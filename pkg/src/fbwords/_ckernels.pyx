# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels over binary words packed into integers.

A word of length ``n`` is an integer whose most significant of ``n`` bits is
the first letter.  Rotation point ``m`` is a left rotation by ``m`` bits.
"""

from libc.stdint cimport uint8_t, uint64_t

import numpy as np

MAX_LENGTH = 63


cdef inline uint64_t _unbordered_mask(uint64_t x, int n) noexcept nogil:
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t out = 0
    cdef uint64_t rot
    cdef int m, l
    cdef bint bordered
    for m in range(n):
        if m == 0:
            rot = x
        else:
            rot = ((x << m) | (x >> (n - m))) & full
        bordered = False
        # a bordered word has a border of length at most n // 2
        for l in range(1, n // 2 + 1):
            if (rot >> (n - l)) == (rot & (((<uint64_t>1) << l) - 1)):
                bordered = True
                break
        if not bordered:
            out |= (<uint64_t>1) << m
    return out


cdef inline int _popcount(uint64_t x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def unbordered_mask(x, int n):
    """Bit ``m`` of the result is set iff the conjugate at point ``m`` is unbordered."""
    if n < 1 or n > MAX_LENGTH:
        raise ValueError(f"length {n} outside 1..{MAX_LENGTH}")
    return _unbordered_mask(<uint64_t>x, n)


def unbordered_counts(int n, lo, hi):
    """Number of unbordered conjugates for every word ``x`` with ``lo <= x < hi``."""
    if n < 1 or n > MAX_LENGTH:
        raise ValueError(f"length {n} outside 1..{MAX_LENGTH}")
    cdef uint64_t start = lo, stop = hi, i
    counts = np.zeros(stop - start, dtype=np.uint8)
    cdef uint8_t[::1] view = counts
    with nogil:
        for i in range(stop - start):
            view[i] = <uint8_t>_popcount(_unbordered_mask(start + i, n))
    return counts
