"""Backend selection for the scan kernels.

The compiled extension is used when it imports; set ``FBWORDS_PURE_PYTHON=1``
to force the fallback.
"""

import os

from fbwords import _pykernels

if os.environ.get("FBWORDS_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from fbwords import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"
MAX_LENGTH = _impl.MAX_LENGTH


def word_to_int(w: str) -> int:
    return int(w, 2)


def int_to_word(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def unbordered_mask(x: int, n: int) -> int:
    if n > MAX_LENGTH:
        return _pykernels.unbordered_mask(x, n)
    return _impl.unbordered_mask(x, n)


def unbordered_counts(n: int, lo: int, hi: int):
    """uint8 array of unbordered-conjugate counts for words ``lo <= x < hi`` of length ``n``."""
    return _impl.unbordered_counts(n, lo, hi)
