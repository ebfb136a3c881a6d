"""Binary words: borders, periods, conjugates, Lyndon words and local roots.

Words are plain ``str`` values over the characters ``'0'`` and ``'1'``.
They are immutable and compared by value, so every operation here is a pure
function.  Use :func:`parse_word` at I/O boundaries.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional

ZERO, ONE = "0", "1"

_SWAP_LETTERS = str.maketrans("01", "10")


class WordError(ValueError):
    """Raised for malformed words or violated preconditions."""


class Order(enum.Enum):
    """The two lexicographic orders on binary words."""

    ZERO_FIRST = "zero-first"  # 0 < 1
    ONE_FIRST = "one-first"  # 1 < 0

    @property
    def other(self) -> "Order":
        return Order.ONE_FIRST if self is Order.ZERO_FIRST else Order.ZERO_FIRST


class RootDecomposition(NamedTuple):
    """``w == (s + t) * k + s`` with ``s + t`` the periodic root and ``s`` nonempty."""

    s: str
    t: str
    k: int

    @property
    def root(self) -> str:
        return self.s + self.t

    def assemble(self) -> str:
        return (self.s + self.t) * self.k + self.s


class LocalRoot(NamedTuple):
    point: int
    root: str
    trivial: bool


def parse_word(text: str) -> str:
    """Validate ``text`` as a binary word; the empty string is the empty word."""
    if not isinstance(text, str):
        raise WordError(f"expected a string, got {type(text).__name__}")
    bad = text.strip("01")
    if bad:
        raise WordError(f"invalid letter {bad[0]!r} in word {text!r}; only '0' and '1' allowed")
    return text


def _nonempty(w: str) -> str:
    if not w:
        raise WordError("operation requires a nonempty word")
    if w.strip("01"):
        parse_word(w)
    return w


def reverse(w: str) -> str:
    return w[::-1]


def swap_letters(w: str) -> str:
    return w.translate(_SWAP_LETTERS)


def order_key(w: str, order: Order) -> str:
    """Sort key that compares words lexicographically under ``order``."""
    return w if order is Order.ZERO_FIRST else w.translate(_SWAP_LETTERS)


def failure_function(w: str) -> list[int]:
    """Length of the longest border of each prefix ``w[:i + 1]``."""
    fail = [0] * len(w)
    j = 0
    for i in range(1, len(w)):
        while j and w[i] != w[j]:
            j = fail[j - 1]
        if w[i] == w[j]:
            j += 1
        fail[i] = j
    return fail


def borders(w: str) -> list[str]:
    """All borders of ``w`` (nonempty proper prefixes that are also suffixes), shortest first."""
    _nonempty(w)
    fail = failure_function(w)
    out = []
    j = fail[-1]
    while j:
        out.append(w[:j])
        j = fail[j - 1]
    out.reverse()
    return out


def shortest_border(w: str) -> Optional[str]:
    _nonempty(w)
    fail = failure_function(w)
    j = fail[-1]
    if not j:
        return None
    while fail[j - 1]:
        j = fail[j - 1]
    return w[:j]


def is_unbordered(w: str) -> bool:
    _nonempty(w)
    return failure_function(w)[-1] == 0


def period(w: str) -> int:
    """Smallest period of ``w``."""
    _nonempty(w)
    return len(w) - failure_function(w)[-1]


def periodic_root(w: str) -> str:
    return w[: period(w)]


def root_decomposition(w: str) -> RootDecomposition:
    """Split ``w`` as ``(st)^k s`` where ``st`` is the periodic root and ``s`` is nonempty.

    When ``w`` is an exact power ``z^j`` of its root, ``s = z``, ``t`` is empty
    and ``k = j - 1``; in particular ``k == 0`` iff ``w`` is unbordered.

    >>> root_decomposition("0010")
    RootDecomposition(s='0', t='01', k=1)
    >>> root_decomposition("010010")
    RootDecomposition(s='010', t='', k=1)
    """
    p = period(w)
    k, rem = divmod(len(w), p)
    if rem == 0:
        return RootDecomposition(w[:p], "", k - 1)
    return RootDecomposition(w[k * p :], w[rem:p], k)


def is_primitive(w: str) -> bool:
    _nonempty(w)
    n = len(w)
    p = period(w)
    return n % p != 0 or p == n


def conjugate_at(w: str, m: int) -> str:
    """The conjugate obtained by moving the prefix of length ``m`` to the end."""
    if not 0 <= m < len(w):
        raise WordError(f"rotation point {m} out of range for word of length {len(w)}")
    return w[m:] + w[:m]


def conjugates(w: str) -> list[str]:
    return [w[m:] + w[:m] for m in range(len(w))]


def is_lyndon(w: str, order: Order) -> bool:
    """Whether ``w`` is strictly smaller under ``order`` than each of its other conjugates.

    Strict minimality already forces primitivity.
    """
    _nonempty(w)
    key = order_key(w, order)
    return all(key < key[m:] + key[:m] for m in range(1, len(key)))


def lyndon_conjugate(w: str, order: Order) -> str:
    if not is_primitive(w):
        raise WordError(f"{w!r} is not primitive and has no Lyndon conjugate")
    key = order_key(w, order)
    best = min(key[m:] + key[:m] for m in range(len(key)))
    return order_key(best, order)


def local_root(w: str, m: int) -> LocalRoot:
    """Local periodic root of ``w`` at point ``m``, with ``w`` read cyclically."""
    c = conjugate_at(w, m)
    r = shortest_border(c)
    if r is None:
        return LocalRoot(m, c, True)
    return LocalRoot(m, r, False)


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def cyclic_occurrences(u: str, w: str) -> list[int]:
    _nonempty(u)
    if len(u) > len(w):
        raise WordError(f"pattern of length {len(u)} longer than word of length {len(w)}")
    ww = w + w
    return [m for m in range(len(w)) if ww.startswith(u, m)]


def two_palindrome_splits(w: str) -> list[int]:
    """Indices ``i`` such that ``w[:i]`` and ``w[i:]`` are both palindromes."""
    return [i for i in range(len(w) + 1) if is_palindrome(w[:i]) and is_palindrome(w[i:])]
