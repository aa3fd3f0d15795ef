"""
Depth decomposition of block BSTs.

A block BST is the tree of ``assemble_wreath(rho, blocks)``: an external
tree over the m block keys with an internal tree substituted at every
node. The depth of any node splits into its depth inside its own block
plus, for every external edge on the path from the external root to its
block, a full top-left or top-right edge of the parent block plus the
connecting edge. Only the (h, l, r) summaries of the blocks matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, TypeVar

from .bst import Bst, BstSummary, build_bst, summary
from .perms import check_word

T = TypeVar("T")


def g_select(x: int, y: int, u: T, v: T) -> T:
    """u if x > y, v if x < y; undefined (raises) when x == y."""
    if x == y:
        raise ValueError("selector undefined for x == y")
    return u if x > y else v


@dataclass(frozen=True)
class BlockDecomposition:
    """External word, per-external-key internal summaries, external tree."""

    rho: tuple[int, ...]
    internal: tuple[BstSummary, ...]
    external_tree: Bst


def block_decomposition(rho: Sequence[int], blocks: Sequence[Sequence[int]]) -> BlockDecomposition:
    """Summaries indexed by external key j (block j owns values (j-1)n+1..jn)."""
    r = check_word(rho)
    if len(blocks) != len(r):
        raise ValueError(f"need {len(r)} blocks, got {len(blocks)}")
    summaries = tuple(summary(b) for b in blocks)
    if any(s.size != summaries[0].size for s in summaries):
        raise ValueError("all blocks must have equal size")
    return BlockDecomposition(r, summaries, build_bst(r))


def external_path(d: BlockDecomposition, j: int) -> list[int]:
    """External keys on the path from the external root to key j, inclusive."""
    if not 1 <= j <= len(d.rho):
        raise ValueError(f"external key {j} outside 1..{len(d.rho)}")
    path = [j]
    while d.external_tree.parent[path[-1]] != 0:
        path.append(d.external_tree.parent[path[-1]])
    path.reverse()
    return path


def block_node_depth(d: BlockDecomposition, j: int, internal_depth: int) -> int:
    """Depth in the full block tree of a node at ``internal_depth`` inside block j.

    Adds l(parent)+1 for every left external step and r(parent)+1 for
    every right external step on the root-to-j external path.
    """
    if not 1 <= j <= len(d.rho):
        raise ValueError(f"external key {j} outside 1..{len(d.rho)}")
    if internal_depth < 0 or internal_depth > d.internal[j - 1].h:
        raise ValueError("internal depth outside the block's tree")
    path = external_path(d, j)
    total = internal_depth
    for a, b in zip(path, path[1:]):
        s = d.internal[a - 1]
        total += g_select(a, b, s.l + 1, s.r + 1)
    return total


def block_height(d: BlockDecomposition) -> int:
    """Height of the block tree: max over blocks of the deepest node's depth."""
    return max(block_node_depth(d, j, d.internal[j - 1].h) for j in range(1, len(d.rho) + 1))
