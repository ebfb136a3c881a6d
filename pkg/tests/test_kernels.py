import importlib
import random

import numpy as np
import pytest

from fbwords import _pykernels, kernels
from fbwords.harness import naive_unbordered_points

BACKENDS = [_pykernels]
try:
    from fbwords import _ckernels
except ImportError:
    _ckernels = None
else:
    BACKENDS.append(_ckernels)


def mask_from_naive(w):
    return sum(1 << m for m in naive_unbordered_points(w))


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


def test_word_int_roundtrip():
    assert kernels.word_to_int("0011") == 3
    assert kernels.int_to_word(3, 4) == "0011"


def test_unbordered_mask_exhaustive(backend):
    for n in range(1, 11):
        for x in range(1 << n):
            w = kernels.int_to_word(x, n)
            assert backend.unbordered_mask(x, n) == mask_from_naive(w), w


def test_unbordered_mask_random_long(backend):
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(11, 63)
        x = rng.getrandbits(n)
        assert backend.unbordered_mask(x, n) == mask_from_naive(kernels.int_to_word(x, n))


def test_unbordered_counts_matches_mask(backend):
    for n in range(1, 13):
        counts = backend.unbordered_counts(n, 0, 1 << n)
        expected = [bin(mask_from_naive(kernels.int_to_word(x, n))).count("1") for x in range(1 << n)]
        assert counts.tolist() == expected


def test_unbordered_counts_shard(backend):
    whole = backend.unbordered_counts(14, 0, 1 << 14)
    assert np.array_equal(backend.unbordered_counts(14, 4096, 8192), whole[4096:8192])


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree_at_18():
    assert np.array_equal(_ckernels.unbordered_counts(18, 0, 1 << 18), _pykernels.unbordered_counts(18, 0, 1 << 18))


def test_dispatch_beyond_compiled_range():
    w = "0" * 40 + "1" + "0" * 39 + "11"
    assert kernels.unbordered_mask(kernels.word_to_int(w), len(w)) == mask_from_naive(w)


def test_force_pure_python(monkeypatch):
    monkeypatch.setenv("FBWORDS_PURE_PYTHON", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
    finally:
        monkeypatch.delenv("FBWORDS_PURE_PYTHON")
        importlib.reload(kernels)
