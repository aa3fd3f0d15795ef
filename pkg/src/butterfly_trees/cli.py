"""
Experiment harness: seeded, deterministic reproductions of the height-law
checks, emitted as CSV or JSON.

Every artifact embeds the subcommand, its parameters, and the seed in its
meta header (``# key=value`` lines in CSV, a "meta" object in JSON), and
statistical subcommands carry their acceptance band beside the observed
value. Re-running a subcommand with identical configuration reproduces
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import stats

from . import bst, butterfly, exact, lattice, sampling
from .gepp import gepp_factorization, nonsimple_matrices, simple_matrices, uniformity_check

DEFAULT_SEED = 1024
_CHUNK = 250


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def render_csv(meta: dict, columns: dict[str, list]) -> str:
    lines = [f"# {k}={_fmt(v)}" for k, v in meta.items()]
    names = list(columns)
    lines.append(",".join(names))
    if names:
        length = len(columns[names[0]])
        for i in range(length):
            lines.append(",".join(_fmt(columns[name][i]) for name in names))
    return "\n".join(lines) + "\n"


def render_json(meta: dict, columns: dict[str, list]) -> str:
    def default(o):
        if isinstance(o, Fraction):
            return f"{o.numerator}/{o.denominator}"
        raise TypeError(f"not serializable: {o!r}")

    return json.dumps({"meta": meta, "columns": columns}, indent=2, default=default) + "\n"


def _emit(meta: dict, columns: dict[str, list], out: str | None, fmt: str) -> str:
    text = render_json(meta, columns) if fmt == "json" else render_csv(meta, columns)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return text


# ---------------------------------------------------------------------------
# experiment data builders (pure; used directly by the test suite)
# ---------------------------------------------------------------------------


def table1_data() -> tuple[dict, dict]:
    """Height counts of the 1024 depth-10 simple butterfly trees, law vs enumeration."""
    n = 10
    law = exact.simple_height_counts(n)
    h, _, _ = bst.batch_summaries(butterfly.all_simple_words(n))
    values, freqs = np.unique(h, return_counts=True)
    enum = {int(v): int(c) for v, c in zip(values, freqs)}
    heights = sorted(law, reverse=True)
    meta = {"subcommand": "table1", "n": n, "total": 1 << n}
    cols = {
        "k": list(range(len(heights))),
        "height": heights,
        "count_law": [law[x] for x in heights],
        "count_enum": [enum.get(x, 0) for x in heights],
        "equal": [int(law[x] == enum.get(x, 0)) for x in heights],
    }
    return meta, cols


def fig8_data(n: int, trials: int, seed: int) -> tuple[dict, dict]:
    """Height histogram of seeded uniform nonsimple butterfly trees."""
    heights = []
    done = 0
    chunk_id = 0
    while done < trials:
        b = min(_CHUNK, trials - done)
        words = sampling.nonsimple_butterfly_words(n, b, sampling.RngState(seed, chunk_id))
        h, _, _ = bst.batch_summaries(words)
        heights.append(h)
        done += b
        chunk_id += 1
    h = np.concatenate(heights)
    lower, upper = exact.nonsimple_mean_bounds(n)
    meta = {
        "subcommand": "fig8",
        "n": n,
        "trials": trials,
        "seed": seed,
        "mean": float(h.mean()),
        "min": int(h.min()),
        "max": int(h.max()),
        "mean_lower_bound": lower,
        "mean_upper_bound": upper,
        "band": "n=10: mean in [113,126], min >= 62" if n == 10 else "mean in [lower, upper]",
    }
    values, freqs = np.unique(h, return_counts=True)
    cols = {"height": [int(v) for v in values], "count": [int(c) for c in freqs]}
    return meta, cols


def theorem2_diff_data(n: int, m: int, trials: int, seed: int) -> tuple[dict, dict]:
    """Paired scaled mean-height difference: S_n wr S_m sample vs uniform S_{nm}."""
    scale = math.log(n * m)
    diffs = []
    done = 0
    chunk_id = 0
    while done < trials:
        b = min(_CHUNK, trials - done)
        ww = sampling.wreath_words(n, m, b, sampling.RngState(seed, chunk_id))
        uw = sampling.uniform_words(n * m, b, sampling.RngState(seed, 100_000 + chunk_id))
        hw, _, _ = bst.batch_summaries(ww)
        hu, _, _ = bst.batch_summaries(uw)
        diffs.append((hw - hu) / scale)
        done += b
        chunk_id += 1
    d = np.concatenate(diffs)
    band = (0.6, 1.4) if m == 2 else (float("nan"), float("nan"))
    meta = {
        "subcommand": "theorem2-diff",
        "n": n,
        "m": m,
        "trials": trials,
        "seed": seed,
        "band": f"m=2: scaled difference in [{band[0]}, {band[1]}]" if m == 2 else "exploratory",
    }
    cols = {
        "n": [n],
        "m": [m],
        "trials": [trials],
        "scaled_diff_mean": [float(d.mean())],
        "scaled_diff_sem": [float(d.std(ddof=1) / math.sqrt(len(d)))],
        "band_lo": [band[0]],
        "band_hi": [band[1]],
    }
    return meta, cols


def clt_simple_data(n: int, samples: int, seed: int) -> tuple[dict, dict]:
    """KS distance of the standardized log-height (exact binomial law) to |N(0,1)|."""
    g = sampling.RngState(seed).generator()
    x = g.binomial(n, 0.5, size=samples).astype(np.int64)
    a = np.maximum(x, n - x).astype(float)
    b = np.minimum(x, n - x).astype(float)
    log2h = a + np.log1p(np.exp2(b - a) - np.exp2(1.0 - a)) / math.log(2)
    stat = (log2h - n / 2) / (math.sqrt(n) / 2)
    ks = stats.kstest(stat, stats.halfnorm.cdf)
    meta = {
        "subcommand": "clt-simple",
        "n": n,
        "samples": samples,
        "seed": seed,
        "band": "ks_distance <= 0.05 for n >= 100",
    }
    cols = {
        "n": [n],
        "samples": [samples],
        "ks_distance": [float(ks.statistic)],
        "threshold": [0.05],
        "passed": [int(ks.statistic <= 0.05)],
    }
    return meta, cols


def bounds_data(n_max: int, exact_max: int = 4, support_cap: int = 5_000_000) -> tuple[dict, dict]:
    """Mean-height bounds table with exact means where the joint law is computed."""
    rows_n = list(range(1, n_max + 1))
    lowers, exacts, uppers = [], [], []
    for n in rows_n:
        lo, up = exact.nonsimple_mean_bounds(n)
        lowers.append(f"{lo:.2f}")
        uppers.append(f"{up:.2f}")
        if n <= exact_max:
            try:
                exacts.append(repr(float(exact.exact_mean_height(n, support_cap))))
            except exact.SupportCapExceeded:
                exacts.append("")
        else:
            exacts.append("")
    meta = {"subcommand": "bounds", "n_max": n_max, "exact_max": exact_max}
    cols = {"n": rows_n, "lower": lowers, "exact_mean": exacts, "upper": uppers}
    return meta, cols


def explore_conjecture_data(grid: Sequence[tuple[int, int]], trials: int, seed: int) -> tuple[dict, dict]:
    """Exploratory h/(log n log m) ratios and threshold-exceedance frequencies.

    No acceptance band is attached; the n = 1 and m = 1 columns degenerate
    (log 1 = 0) and are emitted as NaN with a flag.
    """
    cstar = exact.constants().cstar
    out = {k: [] for k in ("n", "m", "trials", "ratio_mean", "degenerate", "threshold", "exceed_freq")}
    for idx, (n, m) in enumerate(grid):
        words = sampling.wreath_words(n, m, trials, sampling.RngState(seed, idx))
        h, _, _ = bst.batch_summaries(words)
        thresh = cstar * float(exact.harmonic(n)) * math.log(m) if m > 1 else float("nan")
        out["n"].append(n)
        out["m"].append(m)
        out["trials"].append(trials)
        if n == 1 or m == 1:
            out["ratio_mean"].append(float("nan"))
            out["degenerate"].append(1)
        else:
            out["ratio_mean"].append(float(h.mean()) / (math.log(n) * math.log(m)))
            out["degenerate"].append(0)
        out["threshold"].append(thresh)
        out["exceed_freq"].append(float((h >= thresh).mean()) if m > 1 else float("nan"))
    meta = {"subcommand": "explore-conjecture", "trials": trials, "seed": seed, "band": "exploratory (none)"}
    return meta, out


def gepp_check_data(n: int, trials: int, seed: int, family: str) -> tuple[dict, dict]:
    """GEPP membership + uniformity + reconstruction check for one butterfly family."""
    rng = sampling.RngState(seed)
    report = uniformity_check(n, trials, rng, family=family)
    g = sampling.RngState(seed, 777).generator()
    n_angles = n if family == "simple" else (1 << n) - 1
    make = simple_matrices if family == "simple" else nonsimple_matrices
    mats = make(n, g.uniform(0, 2 * np.pi, size=(50, n_angles)))
    max_err = 0.0
    for M in mats:
        word, L, U = gepp_factorization(M)
        P = np.zeros_like(M)
        for j, wj in enumerate(word):
            P[wj - 1, j] = 1.0
        max_err = max(max_err, float(np.abs(P @ M - L @ U).max()))
    meta = {
        "subcommand": "gepp-check",
        "family": family,
        "n": n,
        "trials": trials,
        "seed": seed,
        "band": "pvalue > 0.001, plu_error <= 1e-9, all members",
    }
    cols = {
        "family": [family],
        "n": [n],
        "trials": [trials],
        "classes": [report.classes],
        "chi2": [report.statistic],
        "pvalue": [report.pvalue],
        "max_plu_error": [max_err],
    }
    return meta, cols


def lattice_degrees_data(n: int) -> tuple[dict, dict]:
    """Comparability-graph degree multiset next to the simple height counts."""
    degs = lattice.degree_multiset(n)
    heights = exact.simple_height_counts(n)
    keys = sorted(degs)
    meta = {"subcommand": "lattice-degrees", "n": n}
    cols = {
        "degree": keys,
        "count": [degs[k] for k in keys],
        "height_count": [heights.get(k, 0) for k in keys],
        "equal": [int(degs[k] == heights.get(k, 0)) for k in keys],
    }
    return meta, cols


def pmf_data(which: str, n: int) -> tuple[dict, dict]:
    """Exact pmf/moment export: value, numerator, denominator, probability."""
    if which == "stirling":
        fracs = {k: p for k, p in zip(range(1, n + 1), exact.stirling1_pmf(n))}
    elif which == "simple-height":
        fracs = dict(sorted(exact.simple_height_pmf(n).items()))
    elif which == "cycle-moments":
        fracs = {k: exact.cycle_moment(k) for k in range(n + 1)}
    else:
        raise ValueError(f"unknown pmf kind {which!r}")
    meta = {"subcommand": "pmf", "which": which, "n": n}
    cols = {
        "value": list(fracs),
        "numerator": [f.numerator for f in fracs.values()],
        "denominator": [f.denominator for f in fracs.values()],
        "probability": [float(f) for f in fracs.values()],
    }
    return meta, cols


def law_hist_data(law: str, n: int, trials: int, seed: int) -> tuple[dict, dict]:
    """Histogram of a recursion-law sampler next to its exact dyadic law."""
    if law == "lis":
        sampler, law_counts = sampling.lis_law_samples, exact.lis_law_counts
    elif law == "cycle":
        sampler, law_counts = sampling.cycle_law_samples, exact.cycle_law_counts
    else:
        raise ValueError(f"unknown law {law!r}")
    chunk = max(1, _CHUNK * 1024 // (1 << n))
    parts = []
    done = 0
    chunk_id = 0
    while done < trials:
        b = min(chunk, trials - done)
        parts.append(sampler(n, b, sampling.RngState(seed, chunk_id)))
        done += b
        chunk_id += 1
    x = np.concatenate(parts)
    values, freqs = np.unique(x, return_counts=True)
    observed = {int(v): int(c) for v, c in zip(values, freqs)}
    meta = {"subcommand": "law-hist", "law": law, "n": n, "trials": trials, "seed": seed}
    if n <= 12:
        counts, denom_exp = law_counts(n)
        support = sorted(set(observed) | set(counts))
        expected = [trials * counts.get(v, 0) / 2.0**denom_exp for v in support]
        obs = [observed.get(v, 0) for v in support]
        res = stats.chisquare(obs, f_exp=expected)
        meta["pvalue"] = float(res.pvalue)
        meta["band"] = "pvalue > 0.001"
        cols = {"value": support, "observed": obs, "expected": expected}
    else:
        meta["band"] = "exploratory (law too large for exact columns)"
        cols = {"value": list(observed), "observed": list(observed.values())}
    return meta, cols


# ---------------------------------------------------------------------------
# argparse wiring
# ---------------------------------------------------------------------------


def _parse_grid(text: str) -> list[tuple[int, int]]:
    grid = []
    for part in text.split(","):
        a, _, b = part.partition("x")
        grid.append((int(a), int(b)))
    return grid


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="butterfly-trees", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="64-bit experiment seed")
    common.add_argument("--trials", type=int, default=None, help="Monte Carlo trial count")
    common.add_argument("--out", type=str, default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sub.add_parser("table1", parents=[common])
    p = sub.add_parser("fig8", parents=[common])
    p.add_argument("--n", type=int, default=10)
    p = sub.add_parser("theorem2-diff", parents=[common])
    p.add_argument("--n", type=int, default=10_000)
    p.add_argument("--m", type=int, default=2)
    p = sub.add_parser("clt-simple", parents=[common])
    p.add_argument("--n", type=int, default=400)
    p.add_argument("--samples", type=int, default=100_000)
    p = sub.add_parser("bounds", parents=[common])
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--exact-max", type=int, default=4)
    p = sub.add_parser("explore-conjecture", parents=[common])
    p.add_argument("--grid", type=_parse_grid, default=[(50, 50)], help="pairs like 50x50,100x20")
    p = sub.add_parser("gepp-check", parents=[common])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--family", choices=("simple", "nonsimple"), default="nonsimple")
    p = sub.add_parser("lattice-degrees", parents=[common])
    p.add_argument("--n", type=int, default=10)
    p = sub.add_parser("pmf", parents=[common])
    p.add_argument("--which", choices=("stirling", "simple-height", "cycle-moments"), default="stirling")
    p.add_argument("--n", type=int, default=10)
    p = sub.add_parser("law-hist", parents=[common])
    p.add_argument("--law", choices=("lis", "cycle"), default="cycle")
    p.add_argument("--n", type=int, default=4)

    args = parser.parse_args(argv)
    trials = args.trials

    if args.cmd == "table1":
        meta, cols = table1_data()
    elif args.cmd == "fig8":
        meta, cols = fig8_data(args.n, trials or 10_000, args.seed)
    elif args.cmd == "theorem2-diff":
        meta, cols = theorem2_diff_data(args.n, args.m, trials or 2000, args.seed)
    elif args.cmd == "clt-simple":
        meta, cols = clt_simple_data(args.n, args.samples, args.seed)
    elif args.cmd == "bounds":
        meta, cols = bounds_data(args.n_max, args.exact_max)
    elif args.cmd == "explore-conjecture":
        meta, cols = explore_conjecture_data(args.grid, trials or 500, args.seed)
    elif args.cmd == "gepp-check":
        meta, cols = gepp_check_data(args.n, trials or 80_000, args.seed, args.family)
    elif args.cmd == "lattice-degrees":
        meta, cols = lattice_degrees_data(args.n)
    elif args.cmd == "pmf":
        meta, cols = pmf_data(args.which, args.n)
    elif args.cmd == "law-hist":
        meta, cols = law_hist_data(args.law, args.n, trials or 100_000, args.seed)
    else:  # pragma: no cover
        parser.error(f"unhandled subcommand {args.cmd}")
    meta.setdefault("seed", args.seed)
    meta["format"] = args.format
    _emit(meta, cols, args.out, args.format)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
