"""Random access, Karp-Rabin fingerprints and Lyndon-array entries on a
Lyndon SLP, answered by descending the derivation tree."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Sequence

from lyndex import kernels
from lyndex.grammar import LyndonSlp

MODULUS = (1 << 61) - 1


@dataclass
class FingerprintTable:
    base: int
    seed: int
    fp: List[int]  # fingerprint of val(X)
    pw: List[int]  # base ** |val(X)| mod MODULUS
    modulus: int = MODULUS


def draw_base(seed: int) -> int:
    return random.Random(seed).randrange(2, MODULUS - 1)


def build_fingerprints(slp: LyndonSlp, seed: int = 0) -> FingerprintTable:
    base = draw_base(seed)
    fp, pw = kernels.fingerprints(slp.left, slp.right, slp.char, slp.length, base)
    return FingerprintTable(base, seed, fp, pw)


def sequence_fingerprint(fpt: FingerprintTable, seq: Sequence[int]) -> int:
    """Fingerprint of an explicit symbol sequence (Horner evaluation)."""
    h = 0
    b = fpt.base
    for c in seq:
        h = (h * b + c) % MODULUS
    return h


def _check_range(slp: LyndonSlp, i: int, j: int) -> None:
    if not 1 <= i <= j <= slp.n:
        raise IndexError(f"range [{i}, {j}] outside [1, {slp.n}]")


def extract(slp: LyndonSlp, i: int, j: int, x: int = 0) -> List[int]:
    """Symbols ``i..j`` (1-based, inclusive) of ``val(x)``; ``x`` defaults to
    the start symbol."""
    x = x or slp.start
    if not 1 <= i <= j <= slp.length[x]:
        raise IndexError(f"range [{i}, {j}] outside [1, {slp.length[x]}]")
    left, right, char, length = slp.left, slp.right, slp.char, slp.length
    out: List[int] = []
    stack = [(x, 1)]
    while stack:
        y, s = stack.pop()
        if s > j or s + length[y] <= i:
            continue
        c = char[y]
        if c >= 0:
            out.append(c)
        else:
            l = left[y]
            stack.append((right[y], s + length[l]))
            stack.append((l, s))
    return out


def char_at(slp: LyndonSlp, x: int, k: int) -> int:
    """Symbol ``k`` (1-based) of ``val(x)``."""
    left, right, char, length = slp.left, slp.right, slp.char, slp.length
    while char[x] < 0:
        l = left[x]
        if k <= length[l]:
            x = l
        else:
            k -= length[l]
            x = right[x]
    return char[x]


def prefix_fingerprint(slp: LyndonSlp, fpt: FingerprintTable, x: int, ell: int) -> int:
    """Fingerprint of the first ``ell`` symbols of ``val(x)``."""
    left, right, char, length = slp.left, slp.right, slp.char, slp.length
    fp, pw = fpt.fp, fpt.pw
    acc = 0
    while ell > 0:
        if ell == length[x]:
            return (acc * pw[x] + fp[x]) % MODULUS
        # ell < length[x], so x is binary
        l = left[x]
        if ell >= length[l]:
            acc = (acc * pw[l] + fp[l]) % MODULUS
            ell -= length[l]
            x = right[x]
        else:
            x = l
    return acc


def suffix_fingerprint(slp: LyndonSlp, fpt: FingerprintTable, x: int, ell: int) -> int:
    """Fingerprint of the last ``ell`` symbols of ``val(x)``."""
    left, right, length = slp.left, slp.right, slp.length
    fp, pw = fpt.fp, fpt.pw
    # result = inner * shift + acc, inner being the part still to descend
    acc, shift = 0, 1
    while ell > 0:
        if ell == length[x]:
            return (fp[x] * shift + acc) % MODULUS
        r = right[x]
        if ell >= length[r]:
            acc = (fp[r] * shift + acc) % MODULUS
            shift = shift * pw[r] % MODULUS
            ell -= length[r]
            x = left[x]
        else:
            x = r
    return acc


def fingerprint(slp: LyndonSlp, fpt: FingerprintTable, i: int, j: int) -> int:
    """Fingerprint of ``val(start)[i..j]`` via two prefix descents."""
    _check_range(slp, i, j)
    hi = prefix_fingerprint(slp, fpt, slp.start, j)
    lo = prefix_fingerprint(slp, fpt, slp.start, i - 1)
    return (hi - lo * pow(fpt.base, j - i + 1, MODULUS)) % MODULUS


def lyndon_array_entry(slp: LyndonSlp, i: int) -> int:
    """Length of the longest Lyndon word starting at position ``i``.

    It is the span of the highest derivation-tree node whose leftmost leaf
    is ``i``.
    """
    _check_range(slp, i, i)
    left, right, length = slp.left, slp.right, slp.length
    x, s = slp.start, 1
    while s != i:
        l = left[x]
        if i < s + length[l]:
            x = l
        else:
            s += length[l]
            x = right[x]
    return length[x]
