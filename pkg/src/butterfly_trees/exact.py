"""
Exact combinatorics backing the height/edge/cycle laws.

Everything distributional here is exact: Stirling numbers and harmonic
numbers are arbitrary-precision integers/rationals, butterfly-tree pmfs
carry dyadic weights (integer numerators over a power-of-two denominator),
and the bound sequences/constants are double precision with documented
defining formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

LAMBDA = Fraction(3, 2)


# ---------------------------------------------------------------------------
# Stirling numbers of the first kind and the prefix-record law
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling1_row(n: int) -> tuple[int, ...]:
    """Unsigned Stirling-1 row (|s(n,0)|, ..., |s(n,n)|)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (1,)
    prev = stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (n - 1) * prev[k] if k <= n - 1 else 0
        row[k] += prev[k - 1]
    return tuple(row)


def stirling1_unsigned(n: int, k: int) -> int:
    """|s(n, k)| via the recursion |s(n+1,k)| = n|s(n,k)| + |s(n,k-1)|."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return stirling1_row(n)[k]


def stirling1_pmf(n: int) -> tuple[Fraction, ...]:
    """pmf (|s(n,k)| / n! for k = 1..n) of the cycle/prefix-record law on S_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    fact = math.factorial(n)
    row = stirling1_row(n)
    return tuple(Fraction(row[k], fact) for k in range(1, n + 1))


def harmonic(n: int, power: int = 1) -> Fraction:
    """Generalized harmonic number sum_{j<=n} 1/j^power as an exact rational."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((Fraction(1, j**power) for j in range(1, n + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Simple butterfly height law
# ---------------------------------------------------------------------------


def simple_height_counts(n: int) -> dict[int, int]:
    """Height -> count over all 2^n simple butterfly permutations of length 2^n.

    The height with k inner ascents is 2^k + 2^(n-k) - 2, hit by
    C(n, k) + C(n, n-k) bit patterns (folded at k = n/2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}
    for k in range(n // 2 + 1):
        height = (1 << k) + (1 << (n - k)) - 2
        c = math.comb(n, k)
        if k != n - k:
            c += math.comb(n, n - k)
        counts[height] = c
    return counts


def simple_height_pmf(n: int) -> dict[int, Fraction]:
    """Exact height pmf of a uniform simple butterfly tree with 2^n nodes."""
    denom = 1 << n
    return {h: Fraction(c, denom) for h, c in simple_height_counts(n).items()}


def simple_height_mean(n: int) -> Fraction:
    """Mean height 2*(3/2)^n - 2 of a uniform simple butterfly tree."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 * LAMBDA**n - 2


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------


def devroye_constant(tol: float = 1e-10) -> float:
    """Unique x >= 2 with x*log(2e/x) = 1, by bisection on [2, 10].

    g(x) = x*log(2e/x) - 1 satisfies g(2) = 1 > 0 and is strictly
    decreasing for x > 2, so bisection converges unconditionally.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    g = lambda x: x * math.log(2 * math.e / x) - 1
    lo, hi = 2.0, 10.0
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        v = g(mid)
        if abs(v) <= tol:
            return mid
        if v > 0:
            lo = mid
        else:
            hi = mid
    return mid


@dataclass(frozen=True)
class Constants:
    """Growth constants of the butterfly height laws.

    cstar : unique x >= 2 with x log(2e/x) = 1 (uniform-BST height rate)
    alpha : log2(3/2), simple-case growth exponent
    Cstar : 1 + sqrt(8 sqrt(2) - 11), variance-vs-mean^2 ratio bound
    xi    : 1 + sqrt(2 Cstar)/2 = (1 + sqrt(2) + sqrt(2 sqrt(2) - 1))/2
    beta  : log2(xi), nonsimple upper growth exponent
    d     : 2 / (sqrt(2 Cstar) - 1) = 1 / (xi - 3/2)
    """

    cstar: float
    alpha: float
    beta: float
    xi: float
    Cstar: float
    d: float


def constants(tol: float = 1e-12) -> Constants:
    Cstar = 1 + math.sqrt(8 * math.sqrt(2) - 11)
    xi = (1 + math.sqrt(2) + math.sqrt(2 * math.sqrt(2) - 1)) / 2
    return Constants(
        cstar=devroye_constant(tol),
        alpha=math.log2(1.5),
        beta=math.log2(xi),
        xi=xi,
        Cstar=Cstar,
        d=2 / (math.sqrt(2 * Cstar) - 1),
    )


# ---------------------------------------------------------------------------
# Edge and cycle moments, bound sequences
# ---------------------------------------------------------------------------


def edge_moments(n: int) -> tuple[Fraction, Fraction]:
    """(E L_n, E L_n^2) for the top-edge length of a nonsimple butterfly tree.

    E L_n = (3/2)^n - 1 and E L_n^2 = (4/3)(3/2)^(2n) - (7/3)(3/2)^n + 1;
    by symmetry the same moments hold for R_n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    first = LAMBDA**n - 1
    second = Fraction(4, 3) * LAMBDA ** (2 * n) - Fraction(7, 3) * LAMBDA**n + 1
    return first, second


@lru_cache(maxsize=None)
def cycle_moment(k: int) -> Fraction:
    """k-th moment of the scaled cycle-law limit.

    m_0 = m_1 = 1 and, for k >= 2,
    m_k = (lambda - 1)/(lambda^k - 1) * sum_{j=1}^{k-1} C(k, j) m_j m_{k-j}
    with lambda = 3/2.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k <= 1:
        return Fraction(1)
    s = sum(math.comb(k, j) * cycle_moment(j) * cycle_moment(k - j) for j in range(1, k))
    return (LAMBDA - 1) / (LAMBDA**k - 1) * s


@dataclass(frozen=True)
class BoundSequences:
    """Companion sequences (a_n, b_n) dominating mean and variance of the height."""

    a: tuple[float, ...]
    b: tuple[float, ...]


def bound_sequences(n_max: int) -> BoundSequences:
    """Evaluate the displayed (a_n, b_n) recursions from a_0 = b_0 = 0.

    a_{n+1} = lam^n + a_n + sqrt(2 b_n)/2
    b_{n+1} = b_n + (13/12) lam^{2n} + lam^n + (lam^n + 1) a_n / 2
              + sqrt(1/3) lam^n sqrt(b_n + a_n^2)
              + sqrt(2 b_n (b_n + a_n^2))
              + (sqrt(1/3) lam^n + 1/2) sqrt(2 b_n)
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    lam = 1.5
    a = [0.0]
    b = [0.0]
    for n in range(n_max):
        ln = lam**n
        an, bn = a[-1], b[-1]
        a.append(ln + an + 0.5 * math.sqrt(2 * bn))
        b.append(
            bn
            + (13 / 12) * ln * ln
            + ln
            + 0.5 * (ln + 1) * an
            + math.sqrt(1 / 3) * ln * math.sqrt(bn + an * an)
            + math.sqrt((bn + an * an) * 2 * bn)
            + (math.sqrt(1 / 3) * ln + 0.5) * math.sqrt(2 * bn)
        )
    return BoundSequences(tuple(a), tuple(b))


def nonsimple_mean_bounds(n: int) -> tuple[float, float]:
    """(lower, upper) bounds on the mean nonsimple butterfly tree height.

    lower = 2*(3/2)^n - 2, upper = (xi^n - (3/2)^n)/(xi - 3/2).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = constants()
    lam = 1.5
    lower = 2 * lam**n - 2
    upper = (c.xi**n - lam**n) / (c.xi - lam)
    return lower, upper


# ---------------------------------------------------------------------------
# Exact joint (H, L, R) law of nonsimple butterfly trees
# ---------------------------------------------------------------------------


class SupportCapExceeded(RuntimeError):
    def __init__(self, level: int, attained: int, cap: int):
        super().__init__(f"joint-law support {attained} at level {level} exceeds cap {cap}")
        self.level = level
        self.attained = attained
        self.cap = cap


@dataclass(frozen=True)
class TripleDistribution:
    """Exact law of (height, left edge, right edge) with dyadic weights.

    ``weights[(h, l, r)]`` is an integer count and the total mass is
    sum(weights) / 2^denom_exp == 1 exactly.
    """

    level: int
    weights: dict[tuple[int, int, int], int]
    denom_exp: int

    def __post_init__(self):
        total = sum(self.weights.values())
        if total != 1 << self.denom_exp:
            raise ValueError(f"weights sum to {total}, expected 2^{self.denom_exp}")

    def prob(self, triple: tuple[int, int, int]) -> Fraction:
        return Fraction(self.weights.get(triple, 0), 1 << self.denom_exp)

    def support(self) -> int:
        return len(self.weights)

    def marginal_counts(self, coord: int) -> dict[int, int]:
        """Weight counts of one coordinate (0 = H, 1 = L, 2 = R)."""
        out: dict[int, int] = {}
        for t, w in self.weights.items():
            out[t[coord]] = out.get(t[coord], 0) + w
        return out

    def moment(self, coord: int, power: int = 1) -> Fraction:
        num = sum(t[coord] ** power * w for t, w in self.weights.items())
        return Fraction(num, 1 << self.denom_exp)

    def mean_height(self) -> Fraction:
        return self.moment(0)


def triple_dist_nonsimple(n: int, support_cap: int = 5_000_000) -> TripleDistribution:
    """Exact joint (H, L, R) law at level n by convolving two iid level-(n-1)
    copies through the deterministic edge recursion with a fair outer bit."""
    if n < 1:
        raise ValueError("n must be >= 1")
    weights = {(1, 0, 1): 1, (1, 1, 0): 1}
    exp = 1
    for level in range(2, n + 1):
        new: dict[tuple[int, int, int], int] = {}
        items = list(weights.items())
        for (H1, L1, R1), w1 in items:
            for (H2, L2, R2), w2 in items:
                w = w1 * w2
                t0 = (max(H1, R1 + 1 + H2), L1, R1 + 1 + R2)
                t1 = (max(H1, L1 + 1 + H2), L1 + 1 + L2, R1)
                new[t0] = new.get(t0, 0) + w
                new[t1] = new.get(t1, 0) + w
        if len(new) > support_cap:
            raise SupportCapExceeded(level, len(new), support_cap)
        weights = new
        exp = 2 * exp + 1
    return TripleDistribution(n, weights, exp)


def exact_mean_height(n: int, support_cap: int = 5_000_000) -> Fraction:
    """Exact mean height of a uniform nonsimple butterfly tree with 2^n nodes."""
    return triple_dist_nonsimple(n, support_cap).mean_height()


def _law_counts(n: int, combine) -> tuple[dict[int, int], int]:
    if n < 0:
        raise ValueError("n must be >= 0")
    counts = {1: 1}
    exp = 0
    for _ in range(n):
        new: dict[int, int] = {}
        items = list(counts.items())
        for a, wa in items:
            for b, wb in items:
                w = wa * wb
                for v in combine(a, b):
                    new[v] = new.get(v, 0) + w
        counts = new
        exp = 2 * exp + 1
    return counts, exp


def lis_law_counts(n: int) -> tuple[dict[int, int], int]:
    """Exact level-n LIS law as (value -> weight, denominator exponent).

    One step maps iid copies (X1, X2) with a fair bit to X1 + X2 or
    max(X1, X2); level 0 is the constant 1.
    """
    return _law_counts(n, lambda a, b: (a + b, max(a, b)))


def cycle_law_counts(n: int) -> tuple[dict[int, int], int]:
    """Exact level-n cycle law: one step maps (Y1, Y2) to Y1 + Y2 or Y1."""
    return _law_counts(n, lambda a, b: (a + b, a))
