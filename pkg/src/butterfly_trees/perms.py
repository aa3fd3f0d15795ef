"""
Permutations of {1..n} in one-line word notation, with the product
constructions used throughout this package.

Conventions
-----------
- A permutation sigma is stored as the word ``(sigma(1), ..., sigma(n))``,
  i.e. ``word[j-1] == sigma(j)``. Words are tuples of 1-based ints.
- The associated 0/1 matrix P has ``P e_i = e_{sigma(i)}``, so column i
  carries a single 1 in row ``sigma(i)``. Every product below is specified
  by an explicit position formula consistent with that matrix convention:

  * ``compose(f, g)`` is the matrix product P_f P_g, i.e. ``j -> f(g(j))``.
  * ``kron(p, q)`` has matrix ``P_p (x) P_q`` (Kronecker product).
  * ``direct_sum(p, q)`` has block-diagonal matrix ``P_p (+) P_q``.
  * ``skew_sum(p, q)`` has P_p in the bottom-left block and P_q in the
    top-right block; on words this is ``(p shifted up | q)``.
  * ``assemble_wreath(rho, blocks)`` places shifted copies of the block
    words according to the outer word rho.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

Word = tuple[int, ...]


def check_word(word: Sequence[int]) -> Word:
    """Validate that ``word`` is a permutation of {1..n}, n >= 1; return it as a tuple.

    >>> check_word([2, 1, 3])
    (2, 1, 3)
    """
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("empty word: permutations here have length >= 1")
    mask = 0
    for x in w:
        if not 1 <= x <= n:
            raise ValueError(f"word entry {x} outside 1..{n}")
        mask |= 1 << x
    if mask != ((1 << (n + 1)) - 2):
        raise ValueError("word is not a bijection of {1..%d}" % n)
    return w


def identity(n: int) -> Word:
    """The identity word (1, 2, ..., n).

    >>> identity(3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(range(1, n + 1))


def inverse(word: Sequence[int]) -> Word:
    """The inverse permutation: inverse(w)[w[j]-1] == j+1."""
    w = check_word(word)
    inv = [0] * len(w)
    for j, x in enumerate(w):
        inv[x - 1] = j + 1
    return tuple(inv)


def compose(outer: Sequence[int], inner: Sequence[int]) -> Word:
    """Compose two equal-length words as maps: result(j) = outer(inner(j)).

    This matches the matrix product of the two permutation matrices.

    >>> compose((1, 3, 2), (3, 1, 2))
    (2, 1, 3)
    """
    f = check_word(outer)
    g = check_word(inner)
    if len(f) != len(g):
        raise ValueError(f"length mismatch: {len(f)} vs {len(g)}")
    return tuple(f[x - 1] for x in g)


def kron(pi: Sequence[int], sigma: Sequence[int]) -> Word:
    """Kronecker product of permutations, matrix convention P_p (x) P_q.

    Position formula: result((i-1)*m + j) = (pi(i)-1)*m + sigma(j).

    >>> kron((1, 2), (2, 1))
    (2, 1, 4, 3)
    >>> kron((2, 1), (1, 2))
    (3, 4, 1, 2)
    """
    p = check_word(pi)
    q = check_word(sigma)
    m = len(q)
    out = []
    for x in p:
        base = (x - 1) * m
        out.extend(base + y for y in q)
    return tuple(out)


def direct_sum(p1: Sequence[int], p2: Sequence[int]) -> Word:
    """Block-diagonal sum: word (p1 | p2 shifted by +len(p1)).

    >>> direct_sum((2, 1), (1, 2))
    (2, 1, 3, 4)
    """
    a = check_word(p1)
    b = check_word(p2)
    n1 = len(a)
    return a + tuple(y + n1 for y in b)


def skew_sum(p1: Sequence[int], p2: Sequence[int]) -> Word:
    """Skew sum: P_p1 in the bottom-left block, P_p2 top-right.

    On words this is (p1 shifted by +len(p2) | p2).

    >>> skew_sum((2, 1), (1, 2))
    (4, 3, 1, 2)
    >>> skew_sum((1,), (1,))
    (2, 1)
    """
    a = check_word(p1)
    b = check_word(p2)
    n2 = len(b)
    return tuple(x + n2 for x in a) + b


def assemble_wreath(rho: Sequence[int], blocks: Sequence[Sequence[int]]) -> Word:
    """Assemble a block permutation from an outer word and inner blocks.

    ``blocks[j-1]`` is the inner word owning the value range
    (j-1)*n+1 .. j*n; position-block i of the result holds
    ``blocks[rho(i)-1]`` shifted by +(rho(i)-1)*n.

    >>> assemble_wreath((1, 3, 2), [(2, 1), (1, 2), (2, 1)])
    (2, 1, 6, 5, 3, 4)
    """
    r = check_word(rho)
    bs = [check_word(b) for b in blocks]
    if len(bs) != len(r):
        raise ValueError(f"need {len(r)} blocks, got {len(bs)}")
    n = len(bs[0])
    if any(len(b) != n for b in bs):
        raise ValueError("all blocks must have equal size")
    out = []
    for i in r:
        shift = (i - 1) * n
        out.extend(x + shift for x in bs[i - 1])
    return tuple(out)


def lis(word: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience piles).

    >>> lis((3, 5, 2, 4, 1, 6))
    3
    """
    w = check_word(word)
    return _lis_values(w)


def lds(word: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence.

    Computed as the LIS of the value-reversed word.
    """
    w = check_word(word)
    n = len(w)
    return _lis_values([n + 1 - x for x in w])


def _lis_values(vals: Iterable[int]) -> int:
    tails: list[int] = []
    for x in vals:
        i = bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
    return len(tails)


def cycle_count(word: Sequence[int]) -> int:
    """Number of orbits of the map j -> word[j-1].

    >>> cycle_count((2, 3, 1))
    1
    >>> cycle_count((2, 1, 4, 3))
    2
    """
    w = check_word(word)
    n = len(w)
    seen = [False] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j - 1]
    return count


def ltr_maxima_len(word: Sequence[int]) -> int:
    """Number of prefix maxima (left-to-right maxima) of the word.

    >>> ltr_maxima_len((2, 1, 6, 5, 3, 4))
    2
    """
    w = check_word(word)
    best = 0
    count = 0
    for x in w:
        if x > best:
            best = x
            count += 1
    return count


def ltr_minima_len(word: Sequence[int]) -> int:
    """Number of prefix minima (left-to-right minima) of the word."""
    w = check_word(word)
    best = len(w) + 1
    count = 0
    for x in w:
        if x < best:
            best = x
            count += 1
    return count


def parse_word(text: str) -> Word:
    """Parse a comma-separated 1-based word, e.g. "2,1,6,5,3,4"."""
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation {text!r}") from exc
    return check_word(entries)


def format_word(word: Sequence[int]) -> str:
    """Serialize a word as comma-separated 1-based values."""
    return ",".join(str(x) for x in check_word(word))
