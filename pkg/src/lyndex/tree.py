"""Lyndon tree of a Lyndon word, built online from right to left."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Sequence

from lyndex import kernels


class Node(NamedTuple):
    start: int  # 1-based, inclusive
    end: int  # 1-based, inclusive
    left: int  # node id, -1 for leaves
    right: int


@dataclass(frozen=True)
class LyndonTree:
    nodes: List[Node]
    root: int

    def __len__(self) -> int:
        return len(self.nodes)

    def is_leaf(self, v: int) -> bool:
        return self.nodes[v].left < 0

    def leaves(self) -> List[int]:
        """Leaf ids in left-to-right order."""
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            node = self.nodes[v]
            if node.left < 0:
                out.append(v)
            else:
                stack.append(node.right)
                stack.append(node.left)
        return out

    def height(self) -> int:
        depth = {self.root: 0}
        best = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            node = self.nodes[v]
            if node.left >= 0:
                for c in (node.left, node.right):
                    depth[c] = depth[v] + 1
                    best = max(best, depth[c])
                    stack.append(c)
        return best


def build_lyndon_tree(t: Sequence[int]) -> LyndonTree:
    """Build the Lyndon tree of ``t``; ``t`` must itself be a Lyndon word."""
    if len(t) == 0:
        raise ValueError("input must be a Lyndon word (prepend sentinel)")
    start, length, left, right, roots = kernels.lyndon_tree(t)
    if len(roots) != 1:
        raise ValueError("input must be a Lyndon word (prepend sentinel)")
    nodes = [Node(s + 1, s + ln, l, r) for s, ln, l, r in zip(start, length, left, right)]
    return LyndonTree(nodes, roots[0])
