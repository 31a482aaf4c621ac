"""Brute-force reference implementations.

Nothing here imports the optimized modules; every answer is computed
directly from definitions so it can serve as an independent check.
"""

from __future__ import annotations

from typing import List, Sequence, Set, Tuple

MAX_N = 10_000


def _guard(n: int) -> None:
    if n > MAX_N:
        raise ValueError(f"oracle input too large ({n} > {MAX_N})")


def _freeze(s: Sequence):
    """Hashable, slice-cheap copy of ``s`` (bytes when every symbol fits)."""
    if isinstance(s, (bytes, str)):
        return s
    s = tuple(s)
    if all(0 <= c < 256 for c in s):
        return bytes(s)
    return s


def naive_is_lyndon(s: Sequence) -> bool:
    s = _freeze(s)
    return len(s) > 0 and all(s < s[k:] for k in range(1, len(s)))


def naive_locate(text: Sequence, pattern: Sequence) -> List[int]:
    """1-based starts of ``pattern`` in ``text`` by sliding window."""
    _guard(len(text))
    t, p = _freeze(text), _freeze(pattern)
    m = len(p)
    if m == 0:
        return []
    return [i + 1 for i in range(len(t) - m + 1) if t[i:i + m] == p]


def naive_lyndon_factorization(text: Sequence) -> List[Tuple[Sequence, int]]:
    """Composed Lyndon factorization as ``[(factor, exponent), ...]``.

    The last Lyndon factor of a string is its lexicographically smallest
    suffix, so factors are peeled from the right by direct suffix comparison.
    """
    _guard(len(text))
    t = _freeze(text)
    if len(t) == 0:
        raise ValueError("cannot factorize an empty string")
    rev: List[Sequence] = []
    end = len(t)
    while end > 0:
        start = min(range(end), key=lambda i: t[i:end])
        rev.append(t[start:end])
        end = start
    out: List[Tuple[Sequence, int]] = []
    for f in reversed(rev):
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + 1)
        else:
            out.append((f, 1))
    return out


def naive_standard_factorization(w: Sequence) -> Tuple[Sequence, Sequence]:
    w = _freeze(w)
    best = None
    for k in range(1, len(w)):
        if naive_is_lyndon(w[k:]):
            best = k
            break
    if best is None or not naive_is_lyndon(w):
        raise ValueError("not a Lyndon word of length >= 2")
    return w[:best], w[best:]


def naive_lyndon_tree(w: Sequence, offset: int = 1):
    """Nested ``(start, end, left, right)`` spans, 1-based; leaves have
    ``left = right = None``."""
    if offset == 1:
        _guard(len(w))
        if not naive_is_lyndon(w):
            raise ValueError("input must be a Lyndon word")
    w = _freeze(w)
    end = offset + len(w) - 1
    if len(w) == 1:
        return (offset, end, None, None)
    u, v = naive_standard_factorization(w)
    return (offset, end, naive_lyndon_tree(u, offset),
            naive_lyndon_tree(v, offset + len(u)))


def naive_lyndon_array(text: Sequence) -> List[int]:
    """Length of the longest Lyndon word starting at each position.

    Uses the classical characterization: the longest Lyndon word at ``i``
    ends just before the next suffix that is smaller than suffix ``i``.
    Suffixes are ranked by sorting explicit slices.
    """
    _guard(len(text))
    t = _freeze(text)
    n = len(t)
    order = sorted(range(n), key=lambda i: t[i:])
    rank = [0] * n
    for r, i in enumerate(order):
        rank[i] = r
    out = [0] * n
    for i in range(n):
        j = i + 1
        while j < n and rank[j] > rank[i]:
            j += 1
        out[i] = j - i
    return out


def _expand(slp, x: int, memo: dict) -> tuple:
    got = memo.get(x)
    if got is None:
        if slp.char[x] >= 0:
            got = (slp.char[x],)
        else:
            got = _expand(slp, slp.left[x], memo) + _expand(slp, slp.right[x], memo)
        memo[x] = got
    return got


def naive_expansions(slp) -> List[tuple]:
    """``val`` of every variable (index 0 is padding)."""
    memo: dict = {}
    return [()] + [_expand(slp, x, memo) for x in range(1, len(slp.left))]


def naive_primary_occurrences(slp, pattern: Sequence[int]) -> Set[Tuple[int, int]]:
    """All ``(variable, 1-based offset)`` where ``pattern`` occurs in the
    variable's expansion crossing the split of its rule."""
    _guard(slp.n)
    p = tuple(pattern)
    m = len(p)
    vals = naive_expansions(slp)
    out = set()
    for x in range(1, len(slp.left)):
        if slp.char[x] >= 0:
            continue
        val = vals[x]
        split = len(vals[slp.left[x]])
        for o in range(max(0, split - m + 1), min(split, len(val) - m + 1)):
            if val[o:o + m] == p:
                out.add((x, o + 1))
    return out
