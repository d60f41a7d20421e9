"""Monte Carlo cross-check of the analytic attack and economics formulas.

Each trial samples a victim password from the corpus distribution and
replays an attack against it, producing empirical success rates, realized
guessing costs, and realized gains whose expectations are the closed-form
values elsewhere in the package.

Sampling runs on the run-compressed lists: a binary search over the
cumulative run masses locates the run, integer arithmetic the rank within
it; construction is O(number of runs).  Per-trial randomness is keyed by
(seed, trial index) through counter-based Philox blocks, so results are
bit-identical for any worker count or chunking of the trial range.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, PrefixIndex
from .econ import optimal_budget
from .errors import EmptyCorpus
from .rng import trial_uniforms

__all__ = ["SimConfig", "SimOutcome", "sample_rank", "simulate_fixed", "simulate_rational"]

MODES = ("fixed_budget", "rational", "rational_with_length")


@dataclass(frozen=True)
class SimConfig:
    """Trial count, seed, simulation mode, and worker count."""

    trials: int
    seed: int
    mode: str = "fixed_budget"
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("at least one trial required")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.workers < 1:
            raise ValueError("at least one worker required")


@dataclass(frozen=True)
class SimOutcome:
    """Empirical estimates with their standard errors.

    ``std_error`` tracks the headline estimate: the mean gain for rational
    modes, the success rate for fixed-budget runs (where ``mean_gain``
    stays 0).  Realized cost is reported in units of the per-guess cost.
    """

    success_rate: float
    mean_gain: float
    std_error: float
    trials: int
    success_se: float
    mean_cost: float
    cost_se: float


def _sample_ranks(idx: PrefixIndex, u: np.ndarray) -> np.ndarray:
    """Vectorized rank draws, rank i with probability f_i / N."""
    runs = idx.runs
    nonzero = int(np.count_nonzero(runs.values))
    if nonzero == 0:
        raise EmptyCorpus("empty frequency list")
    target = u * idx.total
    j = np.searchsorted(idx.cum_mass, target, side="right")
    j = np.minimum(j, nonzero - 1)
    prev_mass = np.where(j > 0, idx.cum_mass[np.maximum(j - 1, 0)], 0)
    prev_rank = np.where(j > 0, idx.run_ends[np.maximum(j - 1, 0)], 0)
    offset = np.floor((target - prev_mass) / runs.values[j]).astype(np.int64)
    offset = np.clip(offset, 0, runs.mults[j] - 1)
    return prev_rank + offset + 1


def _length_layout(corpus: Corpus) -> tuple[list[int], np.ndarray]:
    lengths = [n for n in corpus.lengths if corpus.by_length[n].total > 0]
    if not lengths:
        raise EmptyCorpus("corpus has no per-length mass")
    cum = np.cumsum([corpus.by_length[n].total for n in lengths], dtype=np.int64)
    return lengths, cum


def _sample_lengths(cum: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Length-bucket indexes drawn proportionally to per-length mass."""
    target = u * int(cum[-1])
    return np.minimum(np.searchsorted(cum, target, side="right"), cum.size - 1)


def sample_rank(corpus: Corpus, rng: np.random.Generator) -> tuple[int, int]:
    """Draw one (rank, length) victim from the corpus distribution.

    With per-rank length tags the rank is a global rank and the length is
    its tag.  Without tags the draw happens in two stages, length first,
    and the rank is within that per-length list.
    """
    if corpus.length_tags is not None:
        rank = int(_sample_ranks(corpus.overall.index, rng.random(1))[0])
        return rank, int(corpus.length_tags[rank - 1])
    lengths, cum = _length_layout(corpus)
    li = int(_sample_lengths(cum, rng.random(1))[0])
    length = lengths[li]
    rank = int(_sample_ranks(corpus.by_length[length].index, rng.random(1))[0])
    return rank, length


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = -(-trials // workers)
    return [(s, min(size, trials - s)) for s in range(0, trials, size)]


def _run_chunked(config: SimConfig, worker) -> list[np.ndarray]:
    """Run per-chunk trial kernels and reassemble arrays in trial order."""
    spans = _chunks(config.trials, config.workers)
    if len(spans) == 1:
        parts = [worker(*spans[0])]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(lambda s: worker(*s), spans))
    return [np.concatenate(cols) for cols in zip(*parts)]


def _se(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / math.sqrt(values.size))


def _outcome(
    success: np.ndarray, cost: np.ndarray, gain: np.ndarray | None, trials: int
) -> SimOutcome:
    success = success.astype(np.float64)
    success_se = _se(success)
    mean_gain = 0.0 if gain is None else float(gain.mean())
    gain_se = success_se if gain is None else _se(gain)
    return SimOutcome(
        success_rate=float(success.mean()),
        mean_gain=mean_gain,
        std_error=gain_se,
        trials=trials,
        success_se=success_se,
        mean_cost=float(cost.mean()),
        cost_se=_se(cost),
    )


def simulate_fixed(
    corpus: Corpus,
    budget: int,
    config: SimConfig,
    with_length: bool = False,
    k: float = 1.0,
) -> SimOutcome:
    """Replay fixed-budget attacks; the success rate estimates the
    guessing-curve value and the realized cost estimates the expected cost.

    ``with_length`` switches to the known-length experiment: the victim's
    length is revealed and the attack runs inside that per-length list.
    """
    if budget < 0:
        raise ValueError("guessing budget must be non-negative")
    if with_length:
        lengths, cum = _length_layout(corpus)
        caps = np.asarray(
            [min(budget, corpus.by_length[n].index.n) for n in lengths], dtype=np.int64
        )
        indexes = [corpus.by_length[n].index for n in lengths]

        def worker(start, count):
            draws = trial_uniforms(config.seed, start, count)
            li = _sample_lengths(cum, draws[:, 0])
            rank = np.empty(count, dtype=np.int64)
            for i, idx in enumerate(indexes):
                mask = li == i
                if mask.any():
                    rank[mask] = _sample_ranks(idx, draws[mask, 1])
            cap = caps[li]
            success = rank <= cap
            cost = np.where(success, rank, cap) * k
            return success, cost
    else:
        if corpus.overall.total <= 0:
            raise EmptyCorpus("empty corpus")
        idx = corpus.overall.index
        cap = min(budget, idx.n)

        def worker(start, count):
            draws = trial_uniforms(config.seed, start, count)
            rank = _sample_ranks(idx, draws[:, 0])
            success = rank <= cap
            cost = np.where(success, rank, cap) * k
            return success, cost

    success, cost = _run_chunked(config, worker)
    return _outcome(success, cost, None, config.trials)


def simulate_rational(
    corpus: Corpus, v: float, k: float, config: SimConfig
) -> SimOutcome:
    """Replay rational attacks at the gain-maximizing budgets.

    Without length knowledge one overall budget applies to every trial; in
    ``rational_with_length`` mode the victim's length is revealed and the
    attack uses that length's own optimal budget.  The mean realized gain
    estimates the rational attacker's expected gain.
    """
    with_length = config.mode == "rational_with_length"
    if with_length:
        lengths, cum = _length_layout(corpus)
        budgets = np.asarray(
            [optimal_budget(corpus.by_length[n], v, k).b_opt for n in lengths],
            dtype=np.int64,
        )
        indexes = [corpus.by_length[n].index for n in lengths]

        def worker(start, count):
            draws = trial_uniforms(config.seed, start, count)
            li = _sample_lengths(cum, draws[:, 0])
            rank = np.empty(count, dtype=np.int64)
            for i, idx in enumerate(indexes):
                mask = li == i
                if mask.any():
                    rank[mask] = _sample_ranks(idx, draws[mask, 1])
            cap = budgets[li]
            success = rank <= cap
            cost = np.where(success, rank, cap) * k
            return success, cost, v * success - cost
    else:
        if corpus.overall.total <= 0:
            raise EmptyCorpus("empty corpus")
        idx = corpus.overall.index
        cap = optimal_budget(corpus.overall, v, k).b_opt

        def worker(start, count):
            draws = trial_uniforms(config.seed, start, count)
            rank = _sample_ranks(idx, draws[:, 0])
            success = rank <= cap
            cost = np.where(success, rank, cap) * k
            return success, cost, v * success - cost

    success, cost, gains = _run_chunked(config, worker)
    return _outcome(success, cost, gains, config.trials)
