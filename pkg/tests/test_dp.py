"""Differentially private release: structure, determinism, accuracy, audit."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lengthleak import (
    DPParams,
    FrequencyList,
    l1_report,
    release,
    release_corpus,
)
from lengthleak.dp import suppression_threshold
from lengthleak.errors import InconsistentInput, InvalidParams

from dphelpers import audit_pair, banded_list, l1_bound, mean_l1

PAPER_DELTA = 2.0**-100

sorted_counts = st.lists(st.integers(0, 40), max_size=50).map(
    lambda xs: sorted(xs, reverse=True)
)


def test_infinite_epsilon_is_identity():
    fl = FrequencyList([5, 3, 2, 2])
    params = DPParams(float("inf"), PAPER_DELTA, 1)
    released = release(fl, params)
    assert released == fl
    assert l1_report(fl, released, params).l1_error == 0


def test_toy_release_is_structurally_valid():
    fl = FrequencyList([5, 3, 2, 2])
    released = release(fl, DPParams(0.25, PAPER_DELTA, 123))
    counts = released.counts
    assert (counts >= 0).all()
    assert (np.diff(counts) <= 0).all()


def test_determinism():
    fl = FrequencyList([2] * 10 + [1] * 15)  # multiplicities straddle the threshold
    params = DPParams(1.0, 0.05, 77)
    assert release(fl, params) == release(fl, params)
    assert release(fl, params, list_tag=3) == release(fl, params, list_tag=3)
    # distinct tags draw from distinct streams
    seen = {tuple(release(fl, params, list_tag=t).counts) for t in range(8)}
    assert len(seen) > 1


@given(sorted_counts, st.integers(0, 9))
@settings(max_examples=150, deadline=None)
def test_release_always_valid(counts, seed):
    fl = FrequencyList(counts)
    released = release(fl, DPParams(1.0, 0.05, seed))
    arr = released.counts
    assert (arr >= 0).all()
    if arr.size > 1:
        assert (np.diff(arr) <= 0).all()
    assert released.total == int(arr.sum())


def test_invalid_params():
    with pytest.raises(InvalidParams):
        DPParams(0.0, 0.5, 1)
    with pytest.raises(InvalidParams):
        DPParams(-2.0, 0.5, 1)
    with pytest.raises(InvalidParams):
        DPParams(1.0, 0.0, 1)
    with pytest.raises(InvalidParams):
        DPParams(1.0, 1.0, 1)


def test_threshold_shape():
    assert suppression_threshold(float("inf"), PAPER_DELTA) == 1
    assert suppression_threshold(0.25, PAPER_DELTA) == 562
    assert suppression_threshold(1.0, 0.1) == 7


def test_l1_report_examples():
    params = DPParams(0.25, PAPER_DELTA, 0)
    fl = FrequencyList([5, 3, 2, 2])
    assert l1_report(fl, fl, params).l1_error == 0
    assert l1_report(fl, FrequencyList([5, 3, 2]), params).l1_error == 2
    big = FrequencyList([174292189])
    report = l1_report(big, big, params)
    assert report.bound_value == pytest.approx(53085.2, abs=0.5)


def test_release_corpus_split_and_flags(toy_corpus):
    released = release_corpus(toy_corpus, 0.5, PAPER_DELTA, 11)
    assert not released.consistent
    assert released.length_tags is None
    assert set(released.by_length) == set(toy_corpus.by_length)
    # bit-identical for identical inputs
    again = release_corpus(toy_corpus, 0.5, PAPER_DELTA, 11)
    assert released.overall == again.overall
    for length in released.lengths:
        assert released.by_length[length] == again.by_length[length]
    with pytest.raises(InconsistentInput):
        release_corpus(released, 0.5, PAPER_DELTA, 1)


def test_mean_l1_within_bound_at_default_params():
    """Frozen accuracy check at the default parameters: a 10^4-user list
    whose bucket multiplicities survive the threshold stays well under the
    closed-form bound (observed mean ratio is about 0.04)."""
    fl = FrequencyList([2] * 2500 + [1] * 5000)
    assert fl.total == 10**4
    observed = mean_l1(fl, 0.25, PAPER_DELTA, seeds=100)
    bound = l1_bound(fl.total, 0.25, PAPER_DELTA)
    assert observed <= bound
    assert observed / bound <= 0.1


def test_l1_scaling_across_sizes():
    """Mean distortion grows no faster than the bound shape, with the
    constant calibrated at the smallest size."""
    epsilon, delta, seeds = 0.25, 1e-6, 50
    sizes = (100, 1000, 10**4, 10**5)
    lists = [banded_list(n) for n in sizes]
    means = [mean_l1(fl, epsilon, delta, seeds) for fl in lists]
    constant = means[0] / l1_bound(lists[0].total, epsilon, delta)
    for fl, mean in zip(lists[1:], means[1:]):
        assert mean <= constant * l1_bound(fl.total, epsilon, delta)


def test_statistical_audit_small_runs():
    """Light version of the neighboring-pair audit (full size runs in the
    acceptance suite)."""
    violations = audit_pair((2, 1), (1, 1), epsilon=1.0, delta=0.1, runs=20000)
    assert not violations, violations
