"""Fully bordered words, the inductive family F and the descent step.

A word of length at least two is *fully bordered* when exactly two of its
conjugates are unbordered.  If ``uv`` and ``vu`` are those two conjugates,
``(u, v)`` is a fully bordered pair.  Pairs are plain ``(u, v)`` tuples.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from fbwords import kernels
from fbwords.words import (
    WordError,
    _nonempty,
    borders,
    root_decomposition,
)

Pair = tuple[str, str]

BASE_PAIRS: tuple[Pair, Pair] = (("0", "1"), ("1", "0"))


class ConjugateCensus(NamedTuple):
    word: str
    unbordered_points: tuple[int, ...]


class FBPair(NamedTuple):
    u: str
    v: str


def census(w: str) -> ConjugateCensus:
    """Rotation points of ``w`` whose conjugates are unbordered."""
    _nonempty(w)
    mask = kernels.unbordered_mask(kernels.word_to_int(w), len(w))
    return ConjugateCensus(w, tuple(m for m in range(len(w)) if mask >> m & 1))


def is_fully_bordered(w: str) -> bool:
    return len(w) > 1 and len(census(w).unbordered_points) == 2


def fb_pair_of(w: str) -> Optional[FBPair]:
    points = census(w).unbordered_points
    if len(w) < 2 or len(points) != 2:
        return None
    m1, m2 = points
    uv = w[m1:] + w[:m1]
    return FBPair(uv[: m2 - m1], uv[m2 - m1 :])


def is_fb_pair(u: str, v: str) -> bool:
    if not u or not v:
        raise WordError("pair components must be nonempty")
    return census(u + v).unbordered_points == (0, len(u))


def f_membership(u: str, v: str, max_oracle_length: int) -> bool:
    """Membership of ``(u, v)`` in F, decided by the conjugate census."""
    if len(u) + len(v) > max_oracle_length:
        raise WordError(f"pair length {len(u) + len(v)} exceeds oracle bound {max_oracle_length}")
    return is_fb_pair(u, v)


# -- closure rules ---------------------------------------------------------


class Rule(enum.Enum):
    SWAP = "swap"
    EXTEND_U = "extend-u"
    EXTEND_V = "extend-v"


class Step(NamedTuple):
    rule: Rule
    y: Optional[str] = None

    def __str__(self) -> str:
        return f"{self.rule.value}({self.y})" if self.rule is Rule.EXTEND_V else self.rule.value


SWAP = Step(Rule.SWAP)
EXTEND_U = Step(Rule.EXTEND_U)


def swap(p: Pair) -> Pair:
    return p[1], p[0]


def extend_u(u: str, v: str) -> Pair:
    """``(u, v) -> (s_u t_u u, v)``: prepend the periodic root of ``u``."""
    _nonempty(u)
    _nonempty(v)
    dec = root_decomposition(u)
    return dec.s + dec.t + u, v


def extend_v(u: str, v: str, y: str) -> Pair:
    """``(u, v) -> (u, v y v)`` for a border ``y`` of ``u`` longer than ``t_v``."""
    _nonempty(u)
    _nonempty(v)
    if not y or len(y) >= len(u) or not (u.startswith(y) and u.endswith(y)):
        raise WordError(f"{y!r} is not a border of {u!r}")
    t_v = root_decomposition(v).t
    if len(y) <= len(t_v):
        raise WordError(f"border {y!r} is not longer than t_v = {t_v!r}")
    return u, v + y + v


def apply_step(p: Pair, step: Step) -> Pair:
    if step.rule is Rule.SWAP:
        return swap(p)
    if step.rule is Rule.EXTEND_U:
        return extend_u(*p)
    return extend_v(p[0], p[1], step.y)


@dataclass(frozen=True)
class DerivationTrace:
    start: Pair
    steps: tuple[Step, ...]
    end: Pair

    def replay(self) -> Pair:
        p = self.start
        for step in self.steps:
            p = apply_step(p, step)
        return p

    def __str__(self) -> str:
        return " ".join(["base" + str(self.start)] + [str(s) for s in self.steps])


def _successors(p: Pair, bound: int):
    u, v = p
    yield swap(p), SWAP
    dec = root_decomposition(u)
    if len(dec.s) + len(dec.t) + len(u) + len(v) <= bound:
        yield (dec.s + dec.t + u, v), EXTEND_U
    t_v = root_decomposition(v).t
    for y in borders(u):
        if len(y) > len(t_v) and len(u) + 2 * len(v) + len(y) <= bound:
            yield (u, v + y + v), Step(Rule.EXTEND_V, y)


def _pair_key(p: Pair):
    uv = p[0] + p[1]
    return len(uv), uv, p[0]


def generate_f(max_total_length: int) -> dict[Pair, DerivationTrace]:
    """All members ``(u, v)`` of F with ``|uv| <= max_total_length``, each with a trace.

    Pairs are expanded in order of (total length, ``uv``, ``u``), so the trace
    kept for each pair is the first one found in that order.  The result is
    returned in the same order.
    """
    if max_total_length < 2:
        raise WordError("generation bound must be at least 2")
    found: dict[Pair, DerivationTrace] = {}
    heap = []
    for p in BASE_PAIRS:
        found[p] = DerivationTrace(p, (), p)
        heapq.heappush(heap, (_pair_key(p), p))
    while heap:
        _, p = heapq.heappop(heap)
        trace = found[p]
        for child, step in _successors(p, max_total_length):
            if child not in found:
                found[child] = DerivationTrace(trace.start, trace.steps + (step,), child)
                heapq.heappush(heap, (_pair_key(child), child))
    return {p: found[p] for p in sorted(found, key=_pair_key)}


# -- descent ---------------------------------------------------------------


class DescentCase(enum.Enum):
    SHRINK_U = "shrink-u"
    SHRINK_V = "shrink-v"


@dataclass(frozen=True)
class DescentResult:
    case: DescentCase
    next: Pair
    witness: Optional[tuple[str, str, str]] = field(default=None)


def _require_fb_pair(u: str, v: str) -> None:
    if not is_fb_pair(u, v):
        points = census(u + v).unbordered_points
        raise WordError(
            f"({u!r}, {v!r}) is not a fully bordered pair; "
            f"unbordered conjugates of {u + v!r} at points {list(points)}"
        )


def descend(u: str, v: str) -> DescentResult:
    """Map a fully bordered pair with ``|v| <= |u|`` to a strictly shorter one.

    With ``u' = (s_u t_u)^-1 u``: if ``(s_u t_u)^k_u`` does not occur in ``v``
    the result is ``(u', v)``; otherwise ``v = v' u' v'`` and the result is
    ``(u, v')``.
    """
    _require_fb_pair(u, v)
    if len(v) > len(u):
        raise WordError("descent needs |v| <= |u|; swap the pair first")
    if len(u) + len(v) <= 2:
        raise WordError("descent needs |uv| > 2")
    dec = root_decomposition(u)
    root = dec.s + dec.t
    if dec.k < 1:
        raise WordError(f"internal contradiction: k_u = 0 for fully bordered ({u!r}, {v!r})")
    u1 = u[len(root) :]
    if root * dec.k not in v:
        return DescentResult(DescentCase.SHRINK_U, (u1, v))
    half, odd = divmod(len(v) - len(u1), 2)
    v1 = v[:half]
    if odd or half <= 0 or v != v1 + u1 + v1:
        raise WordError(f"internal contradiction: {v!r} does not split as v' {u1!r} v'")
    return DescentResult(DescentCase.SHRINK_V, (u, v1), (v1, u1, v1))


def descent_chain(u: str, v: str) -> list[tuple[Pair, Optional[DescentResult]]]:
    """Descend from ``(u, v)`` to a base pair, swapping whenever ``|v| > |u|``.

    Each entry is the pair before the step and the descent applied to it,
    or ``None`` for a swap.
    """
    _require_fb_pair(u, v)
    chain = []
    p = (u, v)
    while len(p[0]) + len(p[1]) > 2:
        if len(p[1]) > len(p[0]):
            chain.append((p, None))
            p = swap(p)
            continue
        res = descend(*p)
        chain.append((p, res))
        p = res.next
    return chain


def derive_trace(u: str, v: str) -> DerivationTrace:
    """Rebuild a derivation of ``(u, v)`` in F by inverting the descent."""
    _require_fb_pair(u, v)
    return DerivationTrace(*_derive(u, v), (u, v))


def _derive(u: str, v: str) -> tuple[Pair, tuple[Step, ...]]:
    if len(u) + len(v) == 2:
        return (u, v), ()
    if len(v) > len(u):
        start, steps = _derive(v, u)
        return start, _then_swap(steps)
    res = descend(u, v)
    if res.case is DescentCase.SHRINK_V:
        start, steps = _derive(*res.next)
        return start, steps + (Step(Rule.EXTEND_V, res.witness[1]),)
    u1 = res.next[0]
    dec = root_decomposition(u)
    if dec.k > 1 or not dec.t:
        # root of u' equals root of u, so prepending it rebuilds u
        start, steps = _derive(u1, v)
        return start, steps + (EXTEND_U,)
    # k_u == 1: u = s_u t_u s_u is (v, s_u) extended by y = t_u, then swapped
    start, steps = _derive(v, u1)
    return start, _then_swap(steps + (Step(Rule.EXTEND_V, dec.t),))


def _then_swap(steps: tuple[Step, ...]) -> tuple[Step, ...]:
    # two consecutive swaps cancel
    if steps and steps[-1] == SWAP:
        return steps[:-1]
    return steps + (SWAP,)
