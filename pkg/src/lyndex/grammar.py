"""Lyndon SLP construction, validation and R-1 reduction to an admissible
grammar."""

from __future__ import annotations

import hashlib
from array import array
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from lyndex import kernels
from lyndex.lyndon import SENTINEL, duval_factorize, is_lyndon
from lyndex.tree import LyndonTree


@dataclass
class LyndonSlp:
    """Straight-line program with 1-based variable ids in topological order.

    ``char[x]`` is the symbol rank of a terminal rule and ``-1`` for binary
    rules; ``left``/``right`` are ``0`` for terminals. Index 0 of every
    array is padding.
    """

    left: List[int]
    right: List[int]
    char: List[int]
    length: List[int]
    start: int
    shift: int = 0  # 1 when a sentinel was prepended to the input
    _terminal_of: Dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._terminal_of:
            self._terminal_of = {c: x for x, c in enumerate(self.char) if c >= 0}

    @property
    def g(self) -> int:
        return len(self.left) - 1

    @property
    def size(self) -> int:
        """Total right-hand-side length: 2 per binary rule, 1 per terminal."""
        return sum(1 if c >= 0 else 2 for c in self.char[1:])

    @property
    def n(self) -> int:
        """Length of the derived (possibly sentinel-prefixed) string."""
        return self.length[self.start]

    def is_terminal(self, x: int) -> bool:
        return self.char[x] >= 0

    def terminal_of(self, rank: int) -> Optional[int]:
        return self._terminal_of.get(rank)

    def binary_rules(self):
        """Yield ``(x, left, right)`` for every binary rule."""
        for x in range(1, len(self.left)):
            if self.char[x] < 0:
                yield x, self.left[x], self.right[x]

    def height(self) -> int:
        """Height of the derivation tree (a single terminal has height 0)."""
        h = [0] * len(self.left)
        for x, l, r in self.binary_rules():
            h[x] = 1 + max(h[l], h[r])
        return h[self.start]

    @classmethod
    def from_rules(cls, rules: Sequence, shift: int = 0) -> "LyndonSlp":
        """Build from ``rules[k]`` describing variable ``k + 1``: an ``int``
        rank for a terminal or a ``(left, right)`` pair of ids."""
        left, right, char, length = [0], [0], [-1], [0]
        for r in rules:
            if isinstance(r, tuple):
                l, rr = r
                left.append(l)
                right.append(rr)
                char.append(-1)
                length.append(length[l] + length[rr])
            else:
                left.append(0)
                right.append(0)
                char.append(r)
                length.append(1)
        return cls(left, right, char, length, len(rules), shift)


def build_lyndon_slp(t: Sequence[int]) -> LyndonSlp:
    """Build the Lyndon SLP of the symbol ranks ``t`` (all ranks >= 1).

    A sentinel of rank 0 is prepended when ``t`` is not a Lyndon word.
    """
    if len(t) == 0:
        raise ValueError("cannot build a grammar for an empty text")
    if min(t) <= SENTINEL:
        raise ValueError("symbol rank 0 is reserved for the sentinel")
    shift = 0
    if not is_lyndon(t):
        t = [SENTINEL, *t]
        shift = 1
    left, right, char, length, roots = kernels.lyndon_slp(t)
    if len(roots) != 1:
        raise AssertionError("construction did not end in a single root")
    return LyndonSlp(left, right, char, length, roots[0], shift)


def expand(slp: LyndonSlp, x: int) -> List[int]:
    """The string derived by variable ``x``."""
    if not 1 <= x <= slp.g:
        raise IndexError(f"invalid variable id {x}")
    out: List[int] = []
    stack = [x]
    left, right, char = slp.left, slp.right, slp.char
    while stack:
        y = stack.pop()
        c = char[y]
        if c >= 0:
            out.append(c)
        else:
            stack.append(right[y])
            stack.append(left[y])
    return out


def validate(slp: LyndonSlp) -> List[str]:
    """List every violated Lyndon-SLP property; empty when the grammar is
    valid. Expands every variable, so only meant for moderate sizes."""
    problems: List[str] = []
    seen: Dict[Tuple[int, bytes], int] = {}
    for x in range(1, slp.g + 1):
        if slp.char[x] < 0:
            l, r = slp.left[x], slp.right[x]
            if not (1 <= l < x and 1 <= r < x):
                problems.append(f"X{x}: children ({l}, {r}) break topological order")
                continue
            if slp.length[x] != slp.length[l] + slp.length[r]:
                problems.append(f"X{x}: stored length disagrees with children")
        val = expand(slp, x)
        if not is_lyndon(val):
            problems.append(f"X{x}: derived string is not a Lyndon word")
        elif slp.char[x] < 0 and not _is_standard_split(val, slp.length[slp.right[x]]):
            problems.append(f"X{x}: split is not the standard factorization")
        key = (len(val), hashlib.blake2b(array("q", val).tobytes()).digest())
        if key in seen:
            problems.append(f"X{x}: duplicate derived string (also X{seen[key]})")
        else:
            seen[key] = x
    return problems


def _is_standard_split(w: Sequence[int], right_len: int) -> bool:
    # The longest Lyndon suffix of w[1:] is the last Lyndon factor of w[1:].
    tail = w[1:]
    last = duval_factorize(tail).factors[-1]
    return last.length == right_len


def canonical_rules(slp: LyndonSlp) -> List[tuple]:
    """Rules relabeled by sorting variables on ``(length, expansion)``.

    Two grammars derive the same rule multiset up to renaming iff their
    canonical rule lists are equal.
    """
    vals = {x: tuple(expand(slp, x)) for x in range(1, slp.g + 1)}
    order = sorted(vals, key=lambda x: (len(vals[x]), vals[x]))
    new_id = {x: k + 1 for k, x in enumerate(order)}
    out = []
    for x in order:
        if slp.char[x] >= 0:
            out.append(("T", slp.char[x]))
        else:
            out.append(("B", new_id[slp.left[x]], new_id[slp.right[x]]))
    return out


def matches_tree(slp: LyndonSlp, tree: LyndonTree) -> bool:
    """True iff the derivation tree of ``slp`` has the same shape and spans
    as ``tree``."""
    if slp.n != len(tree.leaves()):
        return False
    stack = [(slp.start, tree.root)]
    while stack:
        x, v = stack.pop()
        node = tree.nodes[v]
        if slp.length[x] != node.end - node.start + 1:
            return False
        if slp.char[x] >= 0:
            if node.left >= 0:
                return False
            continue
        if node.left < 0:
            return False
        stack.append((slp.left[x], node.left))
        stack.append((slp.right[x], node.right))
    return True


@dataclass
class AdmissibleGrammar:
    """R-1 reduced grammar sharing variable ids with its source SLP.

    ``rules`` maps each kept variable to its expression. Expression symbols
    are SLP variable ids; terminal variables stand for their characters and
    have no rule of their own. ``absorbed`` maps every inlined SLP variable
    to ``(host rule, 0-based offset of its expansion inside the host)``.
    """

    rules: Dict[int, List[int]]
    start: int
    absorbed: Dict[int, Tuple[int, int]]

    @property
    def size(self) -> int:
        """Total expression length."""
        return sum(len(e) for e in self.rules.values())


# symbol id -> [(parent rule, 0-based offset in val(parent), index in expression)]
ParentMap = Dict[int, List[Tuple[int, int, int]]]


def occurrence_counts(slp: LyndonSlp) -> List[int]:
    counts = [0] * (slp.g + 1)
    for _, l, r in slp.binary_rules():
        counts[l] += 1
        counts[r] += 1
    return counts


def reduce_r1(slp: LyndonSlp) -> Tuple[AdmissibleGrammar, ParentMap]:
    """Inline every binary variable used once on right-hand sides.

    Terminal rules are folded into their characters first. Inlining never
    changes another variable's occurrence count, so one pass reaches the
    fixpoint.
    """
    counts = occurrence_counts(slp)
    start = slp.start
    kept = [x for x in range(1, slp.g + 1)
            if slp.char[x] < 0 and (x == start or counts[x] >= 2)]
    kept_set = set(kept)
    rules: Dict[int, List[int]] = {}
    absorbed: Dict[int, Tuple[int, int]] = {}
    parents: ParentMap = {}
    length = slp.length
    if slp.char[start] >= 0:
        rules[start] = [start]
        return AdmissibleGrammar(rules, start, absorbed), parents
    for host in kept:
        expr: List[int] = []
        offset = 0
        stack = [slp.right[host], slp.left[host]]
        while stack:
            y = stack.pop()
            if slp.char[y] >= 0 or y in kept_set:
                parents.setdefault(y, []).append((host, offset, len(expr)))
                expr.append(y)
                offset += length[y]
            else:
                absorbed[y] = (host, offset)
                stack.append(slp.right[y])
                stack.append(slp.left[y])
        rules[host] = expr
    return AdmissibleGrammar(rules, start, absorbed), parents


def ag_expand(ag: AdmissibleGrammar, slp: LyndonSlp, x: Optional[int] = None) -> List[int]:
    """Expansion of rule ``x`` (default: start) of the admissible grammar."""
    out: List[int] = []
    stack = [ag.start if x is None else x]
    while stack:
        y = stack.pop()
        if slp.char[y] >= 0:
            out.append(slp.char[y])
        else:
            stack.extend(reversed(ag.rules[y]))
    return out
