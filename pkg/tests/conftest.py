"""Shared independent oracles for the test suite.

These deliberately re-derive quantities with implementations unrelated to
the package internals: plain pointer-chasing BST insertion, exhaustive
subsequence enumeration for LIS/LDS, and depth recomputation by traversal.
"""

from __future__ import annotations

import itertools

import numpy as np


def all_words(n: int):
    """All words of S_n as tuples."""
    return itertools.permutations(range(1, n + 1))


def naive_summary(word) -> tuple[int, int, int]:
    """(h, l, r) by literal sequential insertion with child arrays."""
    n = len(word)
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    depth = [0] * (n + 1)
    root = word[0]
    for v in word[1:]:
        cur = root
        d = 0
        while True:
            d += 1
            if v < cur:
                if left[cur]:
                    cur = left[cur]
                else:
                    left[cur] = v
                    break
            else:
                if right[cur]:
                    cur = right[cur]
                else:
                    right[cur] = v
                    break
        depth[v] = d
    return max(depth[1:]), depth[1], depth[n]


def naive_depths(word) -> list[int]:
    """Depth of every key by literal insertion; index 0 unused."""
    n = len(word)
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    depth = [0] * (n + 1)
    root = word[0]
    for v in word[1:]:
        cur = root
        d = 0
        while True:
            d += 1
            if v < cur:
                if left[cur]:
                    cur = left[cur]
                else:
                    left[cur] = v
                    break
            else:
                if right[cur]:
                    cur = right[cur]
                else:
                    right[cur] = v
                    break
        depth[v] = d
    return depth


def traversal_depths(tree) -> list[int]:
    """Recompute per-key depths of a built Bst by walking the child links."""
    depth = [0] * (tree.size + 1)
    stack = [(tree.root, 0)]
    while stack:
        key, d = stack.pop()
        depth[key] = d
        if tree.left[key]:
            stack.append((tree.left[key], d + 1))
        if tree.right[key]:
            stack.append((tree.right[key], d + 1))
    return depth


def lis_brute(word) -> int:
    """LIS by enumerating every subsequence mask (exponential)."""
    n = len(word)
    best = 1
    for mask in range(1, 1 << n):
        picked = [word[i] for i in range(n) if (mask >> i) & 1]
        if all(a < b for a, b in zip(picked, picked[1:])):
            best = max(best, len(picked))
    return best


def lds_brute(word) -> int:
    return lis_brute([len(word) + 1 - x for x in word])


def lis_brute_all(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(words, lis) for all of S_n, with the mask enumeration vectorized.

    Rows of ``words`` follow itertools.permutations order.
    """
    words = np.array(list(all_words(n)), dtype=np.int64)
    flat_i, flat_j, seg_start, seg_len = [], [], [], []
    for mask in range(1, 1 << n):
        idxs = [i for i in range(n) if (mask >> i) & 1]
        if len(idxs) < 2:
            continue
        seg_start.append(len(flat_i))
        seg_len.append(len(idxs))
        for a, b in zip(idxs, idxs[1:]):
            flat_i.append(a)
            flat_j.append(b)
    ok = words[:, flat_i] < words[:, flat_j]
    ok_all = np.logical_and.reduceat(ok, np.array(seg_start), axis=1)
    lens = np.where(ok_all, np.array(seg_len)[None, :], 0)
    return words, np.maximum(1, lens.max(axis=1))
