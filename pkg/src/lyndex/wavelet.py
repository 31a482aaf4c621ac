"""Static 2D grid of labeled points with orthogonal range reporting.

Points are sorted by x; a wavelet matrix over their y values answers
"all points in [x1, x2] x [y1, y2]" in O((1 + k) log g) time.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import List, Sequence, Tuple


class WaveletMatrix:
    def __init__(self, values: Sequence[int], bits: int) -> None:
        self.bits = bits
        self.size = len(values)
        self.rank1: List[List[int]] = []  # prefix counts of 1-bits per level
        self.zeros: List[int] = []
        self.pos0: List[List[int]] = []  # select tables
        self.pos1: List[List[int]] = []
        cur = list(values)
        for level in range(bits - 1, -1, -1):
            ranks = [0]
            p0: List[int] = []
            p1: List[int] = []
            lo: List[int] = []
            hi: List[int] = []
            for k, v in enumerate(cur):
                if (v >> level) & 1:
                    p1.append(k)
                    hi.append(v)
                    ranks.append(ranks[-1] + 1)
                else:
                    p0.append(k)
                    lo.append(v)
                    ranks.append(ranks[-1])
            self.rank1.append(ranks)
            self.zeros.append(len(p0))
            self.pos0.append(p0)
            self.pos1.append(p1)
            cur = lo + hi

    def _origin(self, depth: int, k: int) -> int:
        """Map position ``k`` at ``depth`` back to its index in the input."""
        for d in range(depth - 1, -1, -1):
            z = self.zeros[d]
            k = self.pos0[d][k] if k < z else self.pos1[d][k - z]
        return k

    def report(self, s: int, e: int, lo: int, hi: int) -> List[int]:
        """Input indices ``k`` in ``[s, e)`` whose value lies in ``[lo, hi]``."""
        out: List[int] = []
        if s >= e or lo > hi:
            return out
        stack = [(0, s, e, 0)]
        while stack:
            depth, s, e, prefix = stack.pop()
            span = 1 << (self.bits - depth)
            vmin, vmax = prefix, prefix + span - 1
            if vmax < lo or vmin > hi or s >= e:
                continue
            if lo <= vmin and vmax <= hi:
                out.extend(self._origin(depth, k) for k in range(s, e))
                continue
            ranks = self.rank1[depth]
            z = self.zeros[depth]
            s1, e1 = ranks[s], ranks[e]
            half = span >> 1
            stack.append((depth + 1, s - s1, e - e1, prefix))
            stack.append((depth + 1, z + s1, z + e1, prefix + half))
        return out


class OccurrenceGrid:
    """One labeled point per binary rule ``X -> L R`` at
    ``(rank of L in Lrev, rank of R in L)``."""

    def __init__(self, points: Sequence[Tuple[int, int, int]]) -> None:
        pts = sorted(points)
        self.xs = [p[0] for p in pts]
        self.ys = [p[1] for p in pts]
        self.labels = [p[2] for p in pts]
        top = max(self.ys, default=0)
        self.wavelet = WaveletMatrix(self.ys, max(1, top.bit_length()))

    def __len__(self) -> int:
        return len(self.xs)

    def report(self, x1: int, x2: int, y1: int, y2: int) -> List[Tuple[int, int, int]]:
        """All ``(x, y, label)`` with ``x1 <= x <= x2`` and ``y1 <= y <= y2``."""
        s = bisect_left(self.xs, x1)
        e = bisect_right(self.xs, x2)
        idx = self.wavelet.report(s, e, y1, y2)
        return [(self.xs[k], self.ys[k], self.labels[k]) for k in idx]

    def points(self) -> List[Tuple[int, int, int]]:
        return list(zip(self.xs, self.ys, self.labels))
