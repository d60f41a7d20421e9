"""Fixed-budget success rates against the brute-force oracle."""

import pytest

from lengthleak import (
    FrequencyList,
    Schedule,
    blind_crack_rate_for_length,
    crack_rate,
    crack_rate_for_length,
    length_aware_crack_rate,
    schedule_crack_rates,
    tail_uncertain,
)
from lengthleak.errors import EmptyCorpus, LengthTagsUnavailable, UnknownLength
from lengthleak import assemble_corpus

from oracles import BruteForce


def test_toy_values(toy_corpus):
    c = toy_corpus
    assert crack_rate(c, 1) == pytest.approx(5 / 12)
    assert crack_rate(c, 0) == 0.0
    assert crack_rate(c, 99) == 1.0
    assert crack_rate_for_length(c, 1, 6) == pytest.approx(5 / 7)
    assert crack_rate_for_length(c, 0, 6) == 0.0
    assert length_aware_crack_rate(c, 1) == pytest.approx(10 / 12)
    assert blind_crack_rate_for_length(c, 1, 6) == pytest.approx(5 / 7)
    assert blind_crack_rate_for_length(c, 0, 6) == 0.0


def test_schedule_pairs_with_then_without(toy_corpus):
    rates = schedule_crack_rates(toy_corpus, Schedule(days=1, guesses_per_day=1))
    assert rates.with_length == pytest.approx(10 / 12)
    assert rates.without_length == pytest.approx(5 / 12)
    zero = schedule_crack_rates(toy_corpus, Schedule(days=1, guesses_per_day=0))
    assert zero == (0.0, 0.0)


def test_errors(toy_corpus):
    with pytest.raises(UnknownLength):
        crack_rate_for_length(toy_corpus, 1, 99)
    with pytest.raises(EmptyCorpus):
        crack_rate(
            assemble_corpus(FrequencyList([]), {}), 1
        )
    noised = assemble_corpus(FrequencyList([3, 1]), {1: FrequencyList([3])})
    with pytest.raises(LengthTagsUnavailable):
        blind_crack_rate_for_length(noised, 1, 1)
    with pytest.raises(ValueError):
        crack_rate(toy_corpus, -1)
    with pytest.raises(ValueError):
        schedule_crack_rates(toy_corpus, Schedule(days=0, guesses_per_day=1))


def test_tail_flag_examples():
    no_singles = FrequencyList([5, 3, 2, 2])
    assert not tail_uncertain(no_singles, 3)
    assert not tail_uncertain(no_singles, 5)
    assert not tail_uncertain(no_singles, 0)
    singles = FrequencyList([3, 1, 1])
    assert tail_uncertain(singles, 2)
    assert not tail_uncertain(singles, 1)
    assert tail_uncertain(singles, 100)


def test_monotone_and_saturating(random_corpora):
    for _, corpus in random_corpora[:40]:
        n = len(corpus.overall)
        prev = prev_star = -1.0
        for budget in range(n + 2):
            lam = crack_rate(corpus, budget)
            lam_star = length_aware_crack_rate(corpus, budget)
            assert lam >= prev and lam_star >= prev_star
            prev, prev_star = lam, lam_star
        assert crack_rate(corpus, n) == 1.0
        max_len = max(len(corpus.by_length[l]) for l in corpus.lengths)
        assert length_aware_crack_rate(corpus, max_len) == 1.0


def test_oracle_equivalence(random_corpora):
    for tally, corpus in random_corpora[:60]:
        oracle = BruteForce(tally)
        for budget in range(oracle.n + 2):
            assert crack_rate(corpus, budget) == pytest.approx(
                oracle.lam(budget), abs=1e-12
            )
            assert length_aware_crack_rate(corpus, budget) == pytest.approx(
                oracle.lam_star(budget), abs=1e-12
            )
        for length in oracle.lengths:
            for budget in (0, 1, 2, 5, oracle.n):
                assert crack_rate_for_length(corpus, budget, length) == pytest.approx(
                    oracle.lam_star_len(budget, length), abs=1e-12
                )
                assert blind_crack_rate_for_length(
                    corpus, budget, length
                ) == pytest.approx(oracle.lam_blind_len(budget, length), abs=1e-12)


def test_dominance(random_corpora):
    for _, corpus in random_corpora:
        for budget in range(len(corpus.overall) + 1):
            assert (
                length_aware_crack_rate(corpus, budget)
                >= crack_rate(corpus, budget) - 1e-15
            )


def test_rockyou_yearlong_schedule(rockyou_corpus):
    """Dataset-conditional: one guess per day for a year."""
    rates = schedule_crack_rates(rockyou_corpus, Schedule(days=360, guesses_per_day=1))
    assert rates.with_length == pytest.approx(0.14, abs=0.01)
    assert rates.without_length == pytest.approx(0.08, abs=0.01)


def test_length_decomposition(random_corpora):
    """Blind success decomposes exactly over length prevalence."""
    for _, corpus in random_corpora[:40]:
        for budget in (0, 1, 3, 7, len(corpus.overall)):
            total = sum(
                corpus.pr_length(l) * blind_crack_rate_for_length(corpus, budget, l)
                for l in corpus.lengths
            )
            assert total == pytest.approx(crack_rate(corpus, budget), abs=1e-12)
