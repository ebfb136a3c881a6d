"""Fallback kernels used when the compiled extension is unavailable.

Same contract as ``_ckernels``: words are integers, first letter in the most
significant of ``n`` bits, rotation point ``m`` is a left rotation by ``m``.
"""

import numpy as np

MAX_LENGTH = 63


def unbordered_mask(x, n):
    if n < 1:
        raise ValueError(f"length {n} must be positive")
    full = (1 << n) - 1
    out = 0
    for m in range(n):
        rot = ((x << m) | (x >> (n - m))) & full if m else x
        for l in range(1, n // 2 + 1):
            if rot >> (n - l) == rot & ((1 << l) - 1):
                break
        else:
            out |= 1 << m
    return out


def unbordered_counts(n, lo, hi):
    if n < 1 or n > MAX_LENGTH:
        raise ValueError(f"length {n} outside 1..{MAX_LENGTH}")
    x = np.arange(lo, hi, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    counts = np.zeros(len(x), dtype=np.uint8)
    for m in range(n):
        if m:
            rot = ((x << np.uint64(m)) | (x >> np.uint64(n - m))) & full
        else:
            rot = x
        bordered = np.zeros(len(x), dtype=bool)
        for l in range(1, n // 2 + 1):
            bordered |= (rot >> np.uint64(n - l)) == (rot & np.uint64((1 << l) - 1))
        counts += ~bordered
    return counts
