"""Fixed-budget attacker success rates, with and without length knowledge.

An online attacker tries the most popular passwords first and stops after a
budget of B guesses.  Knowing the victim's password length lets the attacker
guess inside the matching per-length sublist instead of the overall list.
All rates are exact prefix masses of the run-compressed lists; budgets past
the end of a list saturate rather than extrapolating into unseen passwords.
"""

from __future__ import annotations

from typing import NamedTuple

from .corpus import Corpus, FrequencyList
from .errors import EmptyCorpus, LengthTagsUnavailable, UnknownLength

import numpy as np

__all__ = [
    "Schedule",
    "ScheduleRates",
    "guessing_curve",
    "crack_rate",
    "crack_rate_for_length",
    "length_aware_crack_rate",
    "blind_crack_rate_for_length",
    "schedule_crack_rates",
    "tail_uncertain",
]


class Schedule(NamedTuple):
    """A throttled attack: so many guesses per day, for so many days."""

    days: int
    guesses_per_day: int

    @property
    def budget(self) -> int:
        return self.days * self.guesses_per_day


class ScheduleRates(NamedTuple):
    """Success rates for a schedule, with and without length knowledge."""

    with_length: float
    without_length: float


def _check_budget(budget: int) -> int:
    budget = int(budget)
    if budget < 0:
        raise ValueError("guessing budget must be non-negative")
    return budget


def guessing_curve(flist: FrequencyList, budget: int) -> float:
    """Probability that a random user's password is in the top ``budget``."""
    budget = _check_budget(budget)
    if flist.total <= 0:
        raise EmptyCorpus("empty frequency list")
    return flist.index.mass_at(budget) / flist.total


def crack_rate(corpus: Corpus, budget: int) -> float:
    """Success rate of a length-blind attacker after ``budget`` guesses."""
    return guessing_curve(corpus.overall, budget)


def crack_rate_for_length(corpus: Corpus, budget: int, length: int) -> float:
    """Success rate against length-``length`` users for an attacker who
    knows the length and guesses within that sublist."""
    return guessing_curve(corpus.sublist(length), budget)


def length_aware_crack_rate(corpus: Corpus, budget: int) -> float:
    """Success rate of an attacker told each victim's password length.

    Length-weighted average of the per-length rates; evaluated as one exact
    integer mass ratio so the weighting introduces no rounding.
    """
    budget = _check_budget(budget)
    if not corpus.by_length or corpus.length_total <= 0:
        raise EmptyCorpus("corpus has no per-length lists")
    mass = sum(
        fl.index.mass_at(budget) for fl in corpus.by_length.values() if fl.total > 0
    )
    return mass / corpus.length_total


def blind_crack_rate_for_length(corpus: Corpus, budget: int, length: int) -> float:
    """Success rate against length-``length`` users for a length-blind
    attacker working down the overall list.

    Needs per-rank length tags, so it is only available for corpora built
    from plaintext passwords.
    """
    budget = _check_budget(budget)
    if corpus.length_tags is None:
        raise LengthTagsUnavailable("corpus has no per-rank length tags")
    if length not in corpus.by_length:
        raise UnknownLength(length)
    sub_total = corpus.sublist(length).total
    if sub_total <= 0:
        raise EmptyCorpus(f"no users with length {length}")
    ranks, cum = corpus.tagged_prefixes[length]
    pos = int(np.searchsorted(ranks, min(budget, len(corpus.overall)), side="right"))
    mass = int(cum[pos - 1]) if pos else 0
    return mass / sub_total


def schedule_crack_rates(corpus: Corpus, schedule: Schedule) -> ScheduleRates:
    """Success rates after a time-delayed attack at the schedule's rate.

    The attacker works through a single cumulative popularity-ordered guess
    sequence, so the effective budget is days times guesses per day.
    """
    if schedule.days < 1 or schedule.guesses_per_day < 0:
        raise ValueError("schedule needs days >= 1 and a non-negative rate")
    budget = schedule.budget
    return ScheduleRates(
        with_length=length_aware_crack_rate(corpus, budget),
        without_length=crack_rate(corpus, budget),
    )


def tail_uncertain(view: Corpus | FrequencyList, budget: int) -> bool:
    """Whether a budget reaches ranks observed at most once.

    Empirical lists overestimate the tail: a password seen a single time
    may be far rarer than its 1/N estimate.  The flag is set when the
    effective prefix (budget clamped to the list) extends past the ranks
    with count >= 2.  Reporting only; values are never modified.
    """
    flist = view.overall if isinstance(view, Corpus) else view
    budget = _check_budget(budget)
    runs = flist.runs
    n = flist.index.n
    singles = int(runs.mults[runs.values <= 1].sum())
    return min(budget, n) > n - singles
