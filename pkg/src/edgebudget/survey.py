"""Range-scale experiments built on the witness strategies.

``survey_range`` sweeps every n in [ceil(x/2), x], hands each one to the
enabled witness strategies, and reports per-n certificates, the exceptional
set (n where every strategy came up empty), and the empirical exponents
beta(n) = log(score)/log(n). ``rset_density`` measures how common rough
shifted primes are, ``bs_max_pdiff`` runs the largest-prime-factor-of-
differences experiment, and ``exponent_stats`` summarizes beta.
"""

import json
import math
import statistics
from dataclasses import dataclass, field

import numpy as np

from . import factor
from .util import fmt9, pmap, round9
from .witness import RSet, Witness, build_rset, strategy_bv, strategy_smooth

SURVEY_CSV_HEADER = "n,strategy,k,p,q,r,score,beta,exceptional"


@dataclass(frozen=True)
class SurveyConfig:
    """Knobs for a survey run: thresholds, interval constant, strategies."""

    alpha: float = 0.677
    gamma: float = 0.677
    c0: float = 0.05
    eps: float = 0.05
    use_smooth: bool = True
    use_bv: bool = False

    def check(self) -> None:
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        if not 0 < self.gamma <= 1:
            raise ValueError("gamma must lie in (0, 1]")
        if not 0 < self.c0 < 0.25:
            raise ValueError("c0 must lie in (0, 1/4)")
        if not 0 <= self.eps < 0.25:
            raise ValueError("eps must lie in [0, 1/4)")
        if not (self.use_smooth or self.use_bv):
            raise ValueError("at least one strategy must be enabled")

    @property
    def strategies(self) -> tuple[str, ...]:
        out = []
        if self.use_smooth:
            out.append("smooth")
        if self.use_bv:
            out.append("bv")
        return tuple(out)


# gamma presets matching the two headline parameter choices
PRESETS = {
    "corollary-1": SurveyConfig(alpha=0.677, gamma=0.677),
    "corollary-2": SurveyConfig(alpha=0.677, gamma=0.5),
}


@dataclass(frozen=True)
class SurveyRecord:
    """Outcome for a single n: a tagged witness, or exceptional."""

    n: int
    strategy: str | None
    witness: Witness | None
    beta: float | None

    @property
    def exceptional(self) -> bool:
        return self.witness is None


@dataclass(eq=False)
class SurveyReport:
    """Everything a survey produced, in ascending n."""

    x: int
    config: SurveyConfig
    records: list[SurveyRecord]
    exceptional_count: int = field(init=False)
    beta_stats: tuple[float, float, float] | None = field(init=False)

    def __post_init__(self):
        self.exceptional_count = sum(1 for rec in self.records if rec.exceptional)
        betas = [rec.beta for rec in self.records if rec.beta is not None]
        if betas:
            self.beta_stats = (min(betas), statistics.median(betas), statistics.fmean(betas))
        else:
            self.beta_stats = None

    def to_json(self) -> str:
        cfg = {
            "alpha": self.config.alpha,
            "gamma": self.config.gamma,
            "c0": self.config.c0,
            "eps": self.config.eps,
            "strategies": list(self.config.strategies),
        }
        stats = None
        if self.beta_stats is not None:
            stats = {
                "min": round9(self.beta_stats[0]),
                "median": round9(self.beta_stats[1]),
                "mean": round9(self.beta_stats[2]),
            }
        rows = []
        for rec in self.records:
            if rec.witness is None:
                rows.append({"n": rec.n, "exceptional": True})
            else:
                w = rec.witness
                rows.append(
                    {
                        "n": rec.n,
                        "strategy": rec.strategy,
                        "k": w.k,
                        "p": w.p,
                        "q": w.q,
                        "r": w.r,
                        "score": w.score,
                        "beta": round9(rec.beta),
                        "exceptional": False,
                    }
                )
        doc = {
            "x": self.x,
            "config": cfg,
            "exceptional_count": self.exceptional_count,
            "beta_stats": stats,
            "records": rows,
        }
        return json.dumps(doc, separators=(",", ":"))

    def to_csv(self) -> str:
        lines = [SURVEY_CSV_HEADER]
        for rec in self.records:
            if rec.witness is None:
                lines.append(f"{rec.n},,,,,,,,1")
            else:
                w = rec.witness
                lines.append(
                    f"{rec.n},{rec.strategy},{w.k},{w.p},{w.q},{w.r},{w.score},{fmt9(rec.beta)},0"
                )
        return "\n".join(lines) + "\n"


def _examine(n: int, rset: RSet, config: SurveyConfig, lpf: factor.FactorTable | None) -> SurveyRecord:
    w = None
    tag = None
    if config.use_smooth:
        w = strategy_smooth(n, rset, config.gamma, lpf=lpf)
        if w is not None:
            tag = "smooth"
    if w is None and config.use_bv:
        w = strategy_bv(n, config.eps)
        if w is not None:
            tag = "bv"
    beta = math.log(w.score) / math.log(n) if w is not None else None
    return SurveyRecord(n, tag, w, beta)


def _survey_chunk(args) -> list[SurveyRecord]:
    n_lo, n_hi, rset, config, lpf = args
    return [_examine(n, rset, config, lpf) for n in range(n_lo, n_hi + 1)]


def survey_range(x: int, config: SurveyConfig | None = None, workers: int = 1) -> SurveyReport:
    """Survey every n in [ceil(x/2), x] with the configured strategies.

    Builds the RSet over [ceil(c0 x), floor(x/4)] once, a largest-prime-
    factor table covering every difference n - r once, and then examines
    each n. Deterministic for a given config; the worker count only shards
    the n-range and never changes the report.

    Raises:
        ValueError: if x < 8 or the config is out of range.
    """
    if x < 8:
        raise ValueError("survey_range requires x >= 8")
    if config is None:
        config = SurveyConfig()
    config.check()

    r_lo = max(1, math.ceil(config.c0 * x))
    r_hi = x // 4
    rset = build_rset(r_lo, r_hi, config.alpha)
    n_lo = -(-x // 2)
    n_hi = x
    lpf = None
    if config.use_smooth and rset.members:
        lpf = factor.lpf_table(max(1, n_lo - rset.members[-1]), n_hi - rset.members[0])

    if workers > 1:
        span = n_hi - n_lo + 1
        step = -(-span // workers)
        chunks = [
            (lo, min(lo + step - 1, n_hi), rset, config, lpf)
            for lo in range(n_lo, n_hi + 1, step)
        ]
        parts = pmap(_survey_chunk, chunks, workers)
        records = [rec for part in parts for rec in part]
    else:
        records = _survey_chunk((n_lo, n_hi, rset, config, lpf))
    return SurveyReport(x, config, records)


def exponent_stats(report: SurveyReport) -> tuple[float, float, float]:
    """(min, median, mean) of beta over the report's successful n.

    Raises:
        ValueError: if the report holds no successes.
    """
    if report.beta_stats is None:
        raise ValueError("no successful records to summarize")
    return report.beta_stats


def rset_density(z: int, alpha: float) -> tuple[int, float]:
    """How many primes r <= z have P(r-1) > r**alpha, and the z/log z ratio.

    Raises:
        ValueError: if z < 2 or alpha is outside (0, 1].
    """
    if z < 2:
        raise ValueError("rset_density requires z >= 2")
    count = len(build_rset(1, z, alpha).members)
    return count, count / (z / math.log(z))


def _distinct_abs_diffs(a_vals: np.ndarray, b_vals: np.ndarray) -> np.ndarray:
    """Sorted distinct nonzero |a - b| over the cross product, chunked."""
    pieces = []
    chunk = max(1, (1 << 22) // max(1, b_vals.size))
    for i in range(0, a_vals.size, chunk):
        block = np.abs(a_vals[i : i + chunk, None] - b_vals[None, :]).ravel()
        pieces.append(np.unique(block))
    diffs = np.unique(np.concatenate(pieces))
    return diffs[diffs > 0]


def bs_max_pdiff(a_set, b_set) -> tuple[int, tuple[int, int]]:
    """Maximum P(|a - b|) over pairs a in A, b in B with a != b.

    Only the prime content of the difference matters, hence the absolute
    value. Returns the maximum together with one attaining pair, chosen
    deterministically: among maximizing differences the smallest, then the
    smallest a with a - d in B, then the smallest a with a + d in B.

    Raises:
        ValueError: if either set is empty, holds non-positive values, or
            every pair has a = b.
    """
    a_sorted = sorted(set(int(v) for v in a_set))
    b_sorted = sorted(set(int(v) for v in b_set))
    if not a_sorted or not b_sorted:
        raise ValueError("both sets must be nonempty")
    if a_sorted[0] < 1 or b_sorted[0] < 1:
        raise ValueError("set elements must be positive integers")
    a_vals = np.asarray(a_sorted, dtype=np.int64)
    b_vals = np.asarray(b_sorted, dtype=np.int64)
    diffs = _distinct_abs_diffs(a_vals, b_vals)
    if diffs.size == 0:
        raise ValueError("no pair with a != b exists")
    table = factor.lpf_table(1, int(diffs[-1]))
    pvals = table.lpf[diffs - 1]
    idx = int(np.argmax(pvals))
    best_d = int(diffs[idx])
    max_p = int(pvals[idx])
    b_members = set(b_sorted)
    for a in a_sorted:
        if a - best_d in b_members:
            return max_p, (a, a - best_d)
    for a in a_sorted:
        if a + best_d in b_members:
            return max_p, (a, a + best_d)
    raise AssertionError("unreachable: attained difference lost")
