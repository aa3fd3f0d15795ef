"""
Binary search trees built by sequential insertion of a permutation word.

Keys are the word values 1..n; no balancing, no deletion. Depths are
cached at insertion time. Three equivalent ways to get (height, top-left
edge, top-right edge) are provided:

- ``build_bst`` -> explicit node-array tree (parents, children, depths),
- ``summary`` -> O(n) scan without building the tree,
- ``batch_summaries`` -> the same scan vectorized across many words.

The O(n) scan uses the insertion-neighbour identity: the parent of a
newly inserted key is whichever of its current predecessor/successor was
inserted later, so depth(v) = 1 + max(depth(pred), depth(succ)) with
sentinel depths -1. Predecessor/successor pairs at insertion time are
recovered by deleting keys from a doubly linked list in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perms import check_word


@dataclass(frozen=True)
class BstSummary:
    """Height, top-left edge length, top-right edge length, node count."""

    h: int
    l: int
    r: int
    size: int


class Bst:
    """BST over keys 1..n stored in arrays indexed by key (index 0 unused)."""

    def __init__(self, word: Sequence[int]):
        w = check_word(word)
        n = len(w)
        self.size = n
        self.root = w[0]
        self.left = [0] * (n + 1)
        self.right = [0] * (n + 1)
        self.parent = [0] * (n + 1)
        self._depth = [0] * (n + 1)
        for v in w[1:]:
            cur = self.root
            d = 0
            while True:
                d += 1
                if v < cur:
                    if self.left[cur]:
                        cur = self.left[cur]
                    else:
                        self.left[cur] = v
                        break
                else:
                    if self.right[cur]:
                        cur = self.right[cur]
                    else:
                        self.right[cur] = v
                        break
            self.parent[v] = cur
            self._depth[v] = d

    def depth(self, key: int) -> int:
        """Edge count from the root to ``key``."""
        if not 1 <= key <= self.size:
            raise ValueError(f"key {key} outside 1..{self.size}")
        return self._depth[key]

    def height(self) -> int:
        return max(self._depth[1:])

    def summary(self) -> BstSummary:
        return BstSummary(self.height(), self._depth[1], self._depth[self.size], self.size)

    def dump(self) -> str:
        """One line per key: "key,parent,side" with side in {L,R,root}, ordered by key."""
        lines = []
        for k in range(1, self.size + 1):
            p = self.parent[k]
            if p == 0:
                lines.append(f"{k},,root")
            else:
                side = "L" if self.left[p] == k else "R"
                lines.append(f"{k},{p},{side}")
        return "\n".join(lines)


def build_bst(word: Sequence[int]) -> Bst:
    """Insert the word values in order into an initially empty tree."""
    return Bst(word)


def summary(word: Sequence[int]) -> BstSummary:
    """(h, l, r, size) of the BST of ``word``, computed in O(n) without the tree."""
    w = check_word(word)
    n = len(w)
    nxt = list(range(1, n + 3))
    prv = list(range(-1, n + 1))
    preds = [0] * n
    succs = [0] * n
    for i in range(n - 1, -1, -1):
        v = w[i]
        p = prv[v]
        s = nxt[v]
        preds[i] = p
        succs[i] = s
        nxt[p] = s
        prv[s] = p
    depth = [-1] * (n + 2)
    for i in range(n):
        v = w[i]
        dp = depth[preds[i]]
        ds = depth[succs[i]]
        depth[v] = (dp if dp > ds else ds) + 1
    return BstSummary(max(depth[1 : n + 1]), depth[1], depth[n], n)


def batch_summaries(words: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(h, l, r) arrays for a (B, n) matrix of 1-based words, one tree per row."""
    W = np.asarray(words)
    if W.ndim != 2:
        raise ValueError("expected a 2-d array of words")
    B, n = W.shape
    rows = np.arange(B)
    nxt = np.tile(np.arange(1, n + 3, dtype=np.int64), (B, 1))
    prv = np.tile(np.arange(-1, n + 1, dtype=np.int64), (B, 1))
    preds = np.empty((B, n), dtype=np.int64)
    succs = np.empty((B, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        v = W[:, i]
        p = prv[rows, v]
        s = nxt[rows, v]
        preds[:, i] = p
        succs[:, i] = s
        nxt[rows, p] = s
        prv[rows, s] = p
    depth = np.full((B, n + 2), -1, dtype=np.int64)
    for i in range(n):
        v = W[:, i]
        depth[rows, v] = 1 + np.maximum(depth[rows, preds[:, i]], depth[rows, succs[:, i]])
    h = depth[:, 1 : n + 1].max(axis=1)
    return h, depth[:, 1].copy(), depth[:, n].copy()
