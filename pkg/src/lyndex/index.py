"""Self-index over a Lyndon SLP: sorted variable orders, prefix/suffix range
search, the rule grid, partition pairs and ``locate``."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Iterable, List, Optional, Sequence, Tuple

from lyndex.access import (
    MODULUS,
    FingerprintTable,
    build_fingerprints,
    char_at,
    extract,
    lyndon_array_entry,
    prefix_fingerprint,
    suffix_fingerprint,
)
from lyndex.grammar import (
    AdmissibleGrammar,
    LyndonSlp,
    ParentMap,
    build_lyndon_slp,
    reduce_r1,
)
from lyndex.lyndon import duval_factorize, significant_suffixes, to_ranks
from lyndex.wavelet import OccurrenceGrid

log = logging.getLogger(__name__)


# --- variable orders -------------------------------------------------------


@dataclass
class VariableOrders:
    """``L`` sorts variables by ``val``, ``Lrev`` by reversed ``val``.

    Both lists hold variable ids; ``rank``/``rank_rev`` map an id to its
    1-based position (index 0 unused).
    """

    L: List[int]
    Lrev: List[int]
    rank: List[int] = field(default_factory=list)
    rank_rev: List[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.rank:
            self.rank = _inverse(self.L)
        if not self.rank_rev:
            self.rank_rev = _inverse(self.Lrev)


def _inverse(perm: Sequence[int]) -> List[int]:
    inv = [0] * (len(perm) + 1)
    for k, x in enumerate(perm, 1):
        inv[x] = k
    return inv


def _first_symbols(slp: LyndonSlp) -> Tuple[List[int], List[int]]:
    first = list(slp.char)
    last = list(slp.char)
    for x, l, r in slp.binary_rules():
        first[x] = first[l]
        last[x] = last[r]
    return first, last


def _gallop(equal, known: int, limit: int) -> int:
    """Largest ``k`` in ``[known, limit]`` with ``equal(k)``, given
    ``equal(known)`` and monotonicity."""
    lo = known
    step = max(1, known)
    while lo < limit:
        probe = min(limit, lo + step)
        if equal(probe):
            lo = probe
            step *= 2
        else:
            hi = probe - 1
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if equal(mid):
                    lo = mid
                else:
                    hi = mid - 1
            return lo
    return lo


def build_orders(slp: LyndonSlp, fpt: FingerprintTable) -> VariableOrders:
    """Sort all variables by their derived strings and by the reverses."""
    length = slp.length
    first, last = _first_symbols(slp)

    def cmp_forward(x: int, y: int) -> int:
        if first[x] != first[y]:
            return -1 if first[x] < first[y] else 1
        limit = min(length[x], length[y])
        lcp = _gallop(lambda k: prefix_fingerprint(slp, fpt, x, k)
                      == prefix_fingerprint(slp, fpt, y, k), 1, limit)
        if lcp == limit:
            return (length[x] > length[y]) - (length[x] < length[y]) or (x > y) - (x < y)
        a, b = char_at(slp, x, lcp + 1), char_at(slp, y, lcp + 1)
        return -1 if a < b else 1

    def cmp_reverse(x: int, y: int) -> int:
        if last[x] != last[y]:
            return -1 if last[x] < last[y] else 1
        limit = min(length[x], length[y])
        lcs = _gallop(lambda k: suffix_fingerprint(slp, fpt, x, k)
                      == suffix_fingerprint(slp, fpt, y, k), 1, limit)
        if lcs == limit:
            return (length[x] > length[y]) - (length[x] < length[y]) or (x > y) - (x < y)
        a = char_at(slp, x, length[x] - lcs)
        b = char_at(slp, y, length[y] - lcs)
        return -1 if a < b else 1

    ids = list(range(1, slp.g + 1))
    L = sorted(ids, key=cmp_to_key(cmp_forward))
    Lrev = sorted(ids, key=cmp_to_key(cmp_reverse))
    return VariableOrders(L, Lrev)


# --- pattern-side fingerprints and range search ----------------------------


class Pattern:
    """Pattern ranks with O(1) substring fingerprints."""

    def __init__(self, ranks: Sequence[int], fpt: FingerprintTable) -> None:
        self.ranks = list(ranks)
        b = fpt.base
        pre = [0]
        pw = [1]
        for c in self.ranks:
            pre.append((pre[-1] * b + c) % MODULUS)
            pw.append(pw[-1] * b % MODULUS)
        self._pre = pre
        self._pw = pw

    def __len__(self) -> int:
        return len(self.ranks)

    def fingerprint(self, a: int, b: int) -> int:
        """Fingerprint of ``P[a..b]`` (1-based, inclusive)."""
        return (self._pre[b] - self._pre[a - 1] * self._pw[b - a + 1]) % MODULUS


@dataclass
class RangeSearcher:
    slp: LyndonSlp
    fpt: FingerprintTable
    orders: VariableOrders

    def __post_init__(self) -> None:
        self.first, self.last = _first_symbols(self.slp)

    # Comparisons return <0, 0, >0 for val(x) before, prefixed by (resp.
    # suffixed by), or after the pattern segment P[a..b].

    def _cmp_prefix(self, x: int, pat: Pattern, a: int, b: int, exact: bool) -> int:
        slp = self.slp
        P = pat.ranks
        q = b - a + 1
        lx = slp.length[x]
        if self.first[x] != P[a - 1]:
            return -1 if self.first[x] < P[a - 1] else 1
        limit = min(lx, q)
        if exact:
            got = extract(slp, 1, limit, x)
            lcp = next((k for k in range(limit) if got[k] != P[a - 1 + k]), limit)
        else:
            lcp = _gallop(lambda k: prefix_fingerprint(slp, self.fpt, x, k)
                          == pat.fingerprint(a, a + k - 1), 1, limit)
        if lcp == q:
            return 0
        if lcp == lx:
            return -1
        return -1 if char_at(slp, x, lcp + 1) < P[a - 1 + lcp] else 1

    def _cmp_suffix(self, x: int, pat: Pattern, a: int, b: int, exact: bool) -> int:
        slp = self.slp
        P = pat.ranks
        q = b - a + 1
        lx = slp.length[x]
        if self.last[x] != P[b - 1]:
            return -1 if self.last[x] < P[b - 1] else 1
        limit = min(lx, q)
        if exact:
            got = extract(slp, lx - limit + 1, lx, x)
            lcs = next((k for k in range(limit) if got[-1 - k] != P[b - 1 - k]), limit)
        else:
            lcs = _gallop(lambda k: suffix_fingerprint(slp, self.fpt, x, k)
                          == pat.fingerprint(b - k + 1, b), 1, limit)
        if lcs == q:
            return 0
        if lcs == lx:
            return -1
        return -1 if char_at(slp, x, lx - lcs) < P[b - 1 - lcs] else 1

    def _interval(self, order: List[int], cmp, pat: Pattern, a: int, b: int,
                  exact: bool) -> Tuple[int, int]:
        lo, hi = 0, len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            if cmp(order[mid], pat, a, b, exact) < 0:
                lo = mid + 1
            else:
                hi = mid
        start = lo
        hi = len(order)
        while lo < hi:
            mid = (lo + hi) // 2
            if cmp(order[mid], pat, a, b, exact) <= 0:
                lo = mid + 1
            else:
                hi = mid
        return start, lo

    def suffix_range(self, pat: Pattern, a: int, b: int) -> Tuple[int, int]:
        """1-based inclusive interval of ``L`` whose strings start with
        ``P[a..b]``; ``(k, k - 1)`` when empty."""
        order = self.orders.L
        s, e = self._interval(order, self._cmp_prefix, pat, a, b, False)
        if not self._certified(order, s, e, lambda x: self._cmp_prefix(x, pat, a, b, True)):
            log.warning("fingerprint collision during prefix search; retrying exactly")
            s, e = self._interval(order, self._cmp_prefix, pat, a, b, True)
        return s + 1, e

    def prefix_range(self, pat: Pattern, a: int, b: int) -> Tuple[int, int]:
        """1-based inclusive interval of ``Lrev`` whose strings end with
        ``P[a..b]``."""
        order = self.orders.Lrev
        s, e = self._interval(order, self._cmp_suffix, pat, a, b, False)
        if not self._certified(order, s, e, lambda x: self._cmp_suffix(x, pat, a, b, True)):
            log.warning("fingerprint collision during suffix search; retrying exactly")
            s, e = self._interval(order, self._cmp_suffix, pat, a, b, True)
        return s + 1, e

    @staticmethod
    def _certified(order: List[int], s: int, e: int, cmp) -> bool:
        """Exact check that ``[s, e)`` is the whole block of entries
        comparing equal: its ends match and its outside neighbours sort
        strictly before and after."""
        if s < e and (cmp(order[s]) != 0 or cmp(order[e - 1]) != 0):
            return False
        return ((s == 0 or cmp(order[s - 1]) < 0)
                and (e == len(order) or cmp(order[e]) > 0))


# --- partition pairs -------------------------------------------------------

SIGNIFICANT = "significant-suffix"
SINGLE_HEAD = "single-head"
HEAD_PREPENDED = "head-prepended"
LAST_FACTOR_COPY = "last-factor-copy"


@dataclass(frozen=True)
class PartitionPair:
    """Candidate split ``P_L = P[1..split]``, ``P_R = P[split+1..m]``.

    ``provenance`` lists every candidate source that produced this split.
    """

    split: int
    provenance: Tuple[str, ...]


def partition_pair_bound(m: int) -> int:
    return 4 * math.ceil(math.log2(m)) + 4


def enumerate_partition_pairs(P: Sequence[int]) -> List[PartitionPair]:
    """All splits of ``P`` that can align with a rule's split point."""
    m = len(P)
    if m < 2:
        raise ValueError("partition pairs need a pattern of length >= 2")
    found: dict = {}

    def add(split: int, source: str) -> None:
        found.setdefault(split, []).append(source)

    fact = duval_factorize(P)
    for s in significant_suffixes(fact):
        if s > 1:
            add(s - 1, SIGNIFICANT)
    # A rule's right side may be exactly one copy of a repeated last factor
    # with nothing following it (e.g. "$aababbbba" | "a" for P = "babbbbaa").
    last = fact.factors[-1]
    if last.exponent >= 2:
        add(m - last.length, LAST_FACTOR_COPY)
    add(1, SINGLE_HEAD)
    if m >= 3:
        tail = duval_factorize(P[1:])
        for s in significant_suffixes(tail):
            if s > 1:
                add(s, HEAD_PREPENDED)
        last = tail.factors[-1]
        if last.exponent >= 2:
            add(m - last.length, HEAD_PREPENDED)
    pairs = [PartitionPair(k, tuple(v)) for k, v in sorted(found.items())]
    if len(pairs) > partition_pair_bound(m):
        log.info("pattern of length %d has %d partition pairs (bound %d)",
                 m, len(pairs), partition_pair_bound(m))
    return pairs


# --- occurrences -----------------------------------------------------------


@dataclass(frozen=True)
class PrimaryOccurrence:
    """``P`` occurs at ``offset`` (1-based) in ``val(variable)`` and crosses
    the split of the variable's rule."""

    variable: int
    offset: int
    split: int = 0

    def context(self, slp: LyndonSlp, m: int) -> Tuple[int, int]:
        """Lengths of the associated-tuple contexts ``(|alpha|, |beta|)``."""
        alpha = self.offset - 1
        return alpha, slp.length[self.variable] - alpha - m


def build_grid(slp: LyndonSlp, orders: VariableOrders) -> OccurrenceGrid:
    return OccurrenceGrid([(orders.rank_rev[l], orders.rank[r], x)
                           for x, l, r in slp.binary_rules()])


def primary_occurrences(slp: LyndonSlp, fpt: FingerprintTable, orders: VariableOrders,
                        grid: OccurrenceGrid, P: Sequence[int],
                        searcher: Optional[RangeSearcher] = None) -> List[PrimaryOccurrence]:
    """Occurrences of ``P`` (``len(P) >= 2``) crossing some rule's split."""
    m = len(P)
    searcher = searcher or RangeSearcher(slp, fpt, orders)
    pat = Pattern(P, fpt)
    seen = set()
    out: List[PrimaryOccurrence] = []
    for pair in enumerate_partition_pairs(P):
        i = pair.split
        y1, y2 = searcher.suffix_range(pat, i + 1, m)
        if y1 > y2:
            continue
        x1, x2 = searcher.prefix_range(pat, 1, i)
        if x1 > x2:
            continue
        for _, _, x in grid.report(x1, x2, y1, y2):
            offset = slp.length[slp.left[x]] - i + 1
            if (x, offset) in seen:
                continue
            seen.add((x, offset))
            if extract(slp, offset, offset + m - 1, x) != list(P):
                log.warning("discarding unverified primary occurrence in X%d", x)
                continue
            out.append(PrimaryOccurrence(x, offset, i))
    return out


def secondary_expand(slp: LyndonSlp, ag: AdmissibleGrammar, parents: ParentMap,
                     primaries: Iterable[Tuple[int, int]]) -> List[int]:
    """Every text position reached by following each seed ``(variable,
    offset)`` up through all of its uses to the start symbol.

    Positions are 1-based in the original text (the sentinel is removed).
    """
    start = ag.start
    rules = ag.rules
    absorbed = ag.absorbed
    out = set()
    stack = list(primaries)
    while stack:
        y, off = stack.pop()
        if y == start:
            out.add(off - slp.shift)
            continue
        if slp.char[y] < 0 and y not in rules:
            host, o = absorbed[y]
            stack.append((host, off + o))
            continue
        for p, o, _ in parents.get(y, ()):
            stack.append((p, off + o))
    return sorted(p for p in out if p >= 1)


# --- the index -------------------------------------------------------------


@dataclass
class LyndonIndex:
    slp: LyndonSlp
    fpt: FingerprintTable
    orders: VariableOrders
    grid: OccurrenceGrid
    ag: AdmissibleGrammar
    parents: ParentMap

    def __post_init__(self) -> None:
        self.searcher = RangeSearcher(self.slp, self.fpt, self.orders)

    @property
    def n(self) -> int:
        """Length of the original text."""
        return self.slp.n - self.slp.shift

    @property
    def seed(self) -> int:
        return self.fpt.seed

    @classmethod
    def build(cls, data: bytes, seed: int = 0) -> "LyndonIndex":
        return cls.from_slp(build_lyndon_slp(to_ranks(data)), seed)

    @classmethod
    def from_slp(cls, slp: LyndonSlp, seed: int = 0) -> "LyndonIndex":
        fpt = build_fingerprints(slp, seed)
        orders = build_orders(slp, fpt)
        grid = build_grid(slp, orders)
        ag, parents = reduce_r1(slp)
        return cls(slp, fpt, orders, grid, ag, parents)

    def locate(self, pattern: bytes) -> List[int]:
        return locate(self, pattern)

    def extract(self, i: int, j: int) -> bytes:
        """Original-text bytes ``i..j`` (1-based, inclusive)."""
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"range [{i}, {j}] outside [1, {self.n}]")
        s = self.slp.shift
        return bytes(c - 1 for c in extract(self.slp, i + s, j + s))

    def lyndon_array(self, i: int) -> int:
        """Longest Lyndon word starting at original position ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return lyndon_array_entry(self.slp, i + self.slp.shift)

    def stats(self) -> dict:
        slp = self.slp
        terminals = sum(1 for c in slp.char[1:] if c >= 0)
        histogram: dict = {}
        for expr in self.ag.rules.values():
            histogram[len(expr)] = histogram.get(len(expr), 0) + 1
        return {
            "n": self.n,
            "sentinel": bool(slp.shift),
            "g": slp.g,
            "terminal_rules": terminals,
            "binary_rules": slp.g - terminals,
            "slp_rhs_size": slp.size,
            "ag_rules": len(self.ag.rules),
            "ag_size": self.ag.size,
            "ag_expression_histogram": dict(sorted(histogram.items())),
            "grid_points": len(self.grid),
            "grid_dimensions": (slp.g, slp.g),
            "height": slp.height(),
            "seed": self.seed,
        }


def locate(index: LyndonIndex, pattern: bytes) -> List[int]:
    """Sorted 1-based starting positions of ``pattern`` in the text."""
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    P = to_ranks(pattern)
    slp = index.slp
    if len(P) > slp.n:
        return []
    if len(P) == 1:
        x = slp.terminal_of(P[0])
        seeds = [] if x is None else [(x, 1)]
    else:
        prim = primary_occurrences(slp, index.fpt, index.orders, index.grid, P,
                                   index.searcher)
        seeds = [(p.variable, p.offset) for p in prim]
    return secondary_expand(slp, index.ag, index.parents, seeds)
