"""Differentially private release of frequency lists.

Neighboring lists differ by one user: the L1 distance between the raw
count sequences is at most 1.  In count-of-counts space that moves one
rank between adjacent multiplicity buckets, an L1 change of at most 2, so
a noisy histogram over the buckets carries the release:

* every occupied bucket, plus the empty buckets adjacent to an occupied
  one, receives two-sided discrete-geometric noise of scale 2/epsilon;
* noisy multiplicities below ``ceil((2/epsilon) * ln(2/delta)) + 1`` are
  suppressed, which both clamps negatives and keeps the probability of
  publishing a bucket that only a neighbor occupies below delta;
* surviving buckets re-expand into a sorted list.

Noise for a bucket comes from a splitmix64 substream keyed by (seed, list
tag, bucket value), so a release is a pure function of its inputs and is
independent of iteration order.  Epsilon of ``inf`` degenerates to the
identity, which the tests use as the no-noise hook.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, FrequencyList, RunList, expand
from .errors import InconsistentInput, InvalidParams
from .rng import Substream

__all__ = ["DPParams", "DPReport", "release", "release_corpus", "l1_report"]


@dataclass(frozen=True)
class DPParams:
    """Per-list privacy budget, failure probability, and release seed."""

    epsilon: float
    delta: float
    seed: int

    def __post_init__(self):
        if not self.epsilon > 0:
            raise InvalidParams("epsilon must be positive")
        if not 0 < self.delta < 1:
            raise InvalidParams("delta must lie in (0, 1)")


@dataclass(frozen=True)
class DPReport:
    """Distortion of one released list against its source."""

    l1_error: int
    bound_value: float
    ratio: float


def _discrete_laplace(scale: float, stream: Substream) -> int:
    """Two-sided geometric sample with P[X = x] proportional to
    exp(-|x| / scale); difference of two geometric draws."""
    if scale == 0:
        return 0
    g1 = math.floor(-scale * math.log(stream.uniform()))
    g2 = math.floor(-scale * math.log(stream.uniform()))
    return g1 - g2


def suppression_threshold(epsilon: float, delta: float) -> int:
    scale = 0.0 if math.isinf(epsilon) else 2.0 / epsilon
    return math.ceil(scale * math.log(2.0 / delta)) + 1


def release(
    flist: FrequencyList, params: DPParams, list_tag: int = 0
) -> FrequencyList:
    """Release a noisy frequency list.

    ``list_tag`` separates the noise streams of the several lists in a
    corpus-level release; standalone callers can leave it at 0.  Output is
    always a valid frequency list and is bit-identical for identical
    (input, params, tag).
    """
    scale = 0.0 if math.isinf(params.epsilon) else 2.0 / params.epsilon
    threshold = suppression_threshold(params.epsilon, params.delta)

    occupied: dict[int, int] = {}
    for value, mult in flist.runs.pairs():
        if value > 0:
            occupied[value] = mult
    candidates = set(occupied)
    for value in occupied:
        candidates.add(value + 1)
        if value > 1:
            candidates.add(value - 1)

    kept_values = []
    kept_mults = []
    for value in sorted(candidates, reverse=True):
        stream = Substream(params.seed, list_tag, value)
        noisy = occupied.get(value, 0) + _discrete_laplace(scale, stream)
        if noisy >= threshold:
            kept_values.append(value)
            kept_mults.append(noisy)

    values = np.asarray(kept_values, dtype=np.int64)
    mults = np.asarray(kept_mults, dtype=np.int64)
    return expand(RunList(values, mults, int((values * mults).sum())))


def release_corpus(
    corpus: Corpus, total_epsilon: float, delta: float, seed: int
) -> Corpus:
    """Release a whole corpus: the overall list and every per-length list.

    Every password sits in exactly two of those lists, so each list gets
    half the total budget and the releases compose to ``total_epsilon``.
    The output carries no length tags and is flagged inconsistent, since
    independent noise breaks the partition property.
    """
    if not corpus.consistent:
        raise InconsistentInput("refusing to re-release a noised corpus")
    params = DPParams(epsilon=total_epsilon / 2.0, delta=delta, seed=seed)
    noisy_overall = release(corpus.overall, params, list_tag=0)
    noisy_by_length = {
        length: release(corpus.by_length[length], params, list_tag=length)
        for length in corpus.lengths
    }
    return Corpus(noisy_overall, noisy_by_length, length_tags=None, consistent=False)


def l1_report(
    original: FrequencyList, released: FrequencyList, params: DPParams
) -> DPReport:
    """Exact L1 distortion next to the closed-form accuracy bound
    ``(sqrt(N) + ln(1/delta)) / epsilon`` (shorter list zero-padded)."""
    a, b = original.counts, released.counts
    if a.size < b.size:
        a = np.pad(a, (0, b.size - a.size))
    elif b.size < a.size:
        b = np.pad(b, (0, a.size - b.size))
    l1 = int(np.abs(a - b).sum())
    bound = (math.sqrt(original.total) + math.log(1.0 / params.delta)) / params.epsilon
    if bound > 0:
        ratio = l1 / bound
    else:
        ratio = 0.0 if l1 == 0 else float("inf")
    return DPReport(l1_error=l1, bound_value=bound, ratio=ratio)
