"""Lyndon words: predicates, Duval factorization, standard factorization
and significant suffixes.

All functions work on any indexable sequence of mutually comparable
symbols (``bytes``, ``str``, lists of integer ranks).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

SENTINEL = 0

log = logging.getLogger(__name__)


def to_ranks(data: bytes) -> List[int]:
    """Map raw bytes to symbol ranks ``b + 1``; rank 0 is the sentinel."""
    return [b + 1 for b in data]


def from_ranks(ranks: Sequence[int]) -> bytes:
    """Inverse of :func:`to_ranks`. The sentinel is dropped."""
    return bytes(r - 1 for r in ranks if r != SENTINEL)


def is_lyndon(s: Sequence) -> bool:
    """True iff ``s`` is strictly smaller than each of its proper suffixes."""
    n = len(s)
    if n == 0:
        raise ValueError("empty string has no Lyndon status")
    # Duval scan: s is Lyndon iff the first Lyndon factor covers all of s.
    i, j = 0, 1
    while j < n:
        if s[i] < s[j]:
            i = 0
        elif s[i] == s[j]:
            i += 1
        else:
            return False
        j += 1
    return i == 0


def longest_lyndon_prefix(s: Sequence, start: int = 0) -> int:
    """Length of the longest Lyndon prefix of ``s[start:]``."""
    n = len(s)
    if start >= n:
        raise ValueError("empty string has no Lyndon prefix")
    i, j = start, start + 1
    while j < n and s[i] <= s[j]:
        i = start if s[i] < s[j] else i + 1
        j += 1
    return j - i


def standard_factorization(w: Sequence) -> Tuple[Sequence, Sequence]:
    """Split the Lyndon word ``w`` into ``(u, v)`` where ``v`` is its longest
    proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("standard factorization needs a Lyndon word of length >= 2")
    if not is_lyndon(w):
        raise ValueError("standard factorization is only defined for Lyndon words")
    # The longest proper Lyndon suffix starts at the leftmost k > 0 whose
    # suffix is Lyndon; scanning from the left finds it first.
    for k in range(1, len(w)):
        if is_lyndon(w[k:]):
            return w[:k], w[k:]
    raise AssertionError("unreachable: last symbol is always Lyndon")


@dataclass(frozen=True)
class Factor:
    start: int  # 0-based offset into the factorized sequence
    length: int
    exponent: int

    @property
    def end(self) -> int:
        """Offset one past the last copy of this factor."""
        return self.start + self.length * self.exponent


@dataclass(frozen=True)
class LyndonFactorization:
    """Composed Lyndon factorization ``P_1^t1 ... P_p^tp``.

    ``lam`` is the 1-based index of the first significant suffix.
    """

    factors: Tuple[Factor, ...]
    lam: int
    size: int

    def __len__(self) -> int:
        return len(self.factors)

    def lfs_start(self, x: int) -> int:
        """0-based start of the suffix beginning with the ``x``-th factor."""
        return self.factors[x - 1].start

    def strings(self, s: Sequence) -> List[Tuple[Sequence, int]]:
        return [(s[f.start:f.start + f.length], f.exponent) for f in self.factors]


def duval_factorize(s: Sequence) -> LyndonFactorization:
    """Composed Lyndon factorization of ``s`` in linear time."""
    n = len(s)
    if n == 0:
        raise ValueError("cannot factorize an empty string")
    merged: List[Factor] = []
    k = 0
    while k < n:
        i, j = k, k + 1
        while j < n and s[i] <= s[j]:
            i = k if s[i] < s[j] else i + 1
            j += 1
        period = j - i
        # All copies emitted by one round are equal; a later round always
        # starts a strictly smaller factor.
        copies = (i - k) // period + 1
        merged.append(Factor(k, period, copies))
        k += copies * period
    factors = tuple(merged)
    return LyndonFactorization(factors, _first_significant(s, factors), n)


def _first_significant(s: Sequence, factors: Sequence[Factor]) -> int:
    p = len(factors)
    x = p - 1
    while x >= 1:
        f = factors[x - 1]
        tail = factors[x].start
        tail_len = len(s) - tail
        if tail_len > f.length or not _prefix_of(s, tail, tail_len, f.start):
            break
        x -= 1
    return x + 1


def _prefix_of(s: Sequence, a: int, length: int, b: int) -> bool:
    for k in range(length):
        if s[a + k] != s[b + k]:
            return False
    return True


def significant_suffixes(f: LyndonFactorization) -> List[int]:
    """1-based start offsets of the significant suffixes, in factor order."""
    out = [f.lfs_start(x) + 1 for x in range(f.lam, len(f) + 1)]
    if f.size >= 2 and len(out) > 2 * math.ceil(math.log2(f.size)) + 2:
        log.info("%d significant suffixes for length %d", len(out), f.size)
    return out
