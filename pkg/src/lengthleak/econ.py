"""Rational attacker economics: expected reward, cost, gain, optimal budgets.

A password is worth ``v`` and every online guess costs ``k``.  After B
guesses down the popularity-ordered list the attacker has expected reward
``v * lambda(B)`` and expected cost ``k * ((1 - lambda(B)) * B + sum(i *
p_i, i <= B))``: a failed attack pays for all B guesses, a success at rank
i pays for i.  A rational attacker picks the budget maximizing expected
gain (reward minus cost), independently per length when lengths leak.

Everything here is evaluated through an exact integer score, ``N * gain``,
so optima and tie-breaks are never at the mercy of float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .attack import tail_uncertain
from .corpus import Corpus, FrequencyList
from .errors import EmptyCorpus

__all__ = [
    "AttackerSpec",
    "EconResult",
    "RatioSummary",
    "EconSummary",
    "attacker_label",
    "expected_cost",
    "expected_reward",
    "gain",
    "optimal_budget",
    "econ_summary",
]

_LABEL_BANDS = {
    "hacker": (1e2, 1e3),
    "criminal": (1e4, 1e5),
    "nation_state": (1e6, 1e7),
}


def attacker_label(ratio: float) -> str:
    """Classify a value-to-cost ratio into the conventional attacker tiers."""
    for label, band in _LABEL_BANDS.items():
        if ratio in band:
            return label
    return "custom"


@dataclass(frozen=True)
class AttackerSpec:
    """Attacker economics: password value, per-guess cost, tier label."""

    v: float
    k: float
    label: str = "custom"

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("password value must be non-negative")
        if self.k <= 0:
            raise ValueError("per-guess cost must be positive")
        if self.label != "custom":
            if self.label not in _LABEL_BANDS:
                raise ValueError(f"unknown attacker label {self.label!r}")
            if self.v / self.k not in _LABEL_BANDS[self.label]:
                raise ValueError(
                    f"ratio {self.v / self.k:g} outside the {self.label} band"
                )

    @property
    def ratio(self) -> float:
        return self.v / self.k


@dataclass(frozen=True)
class EconResult:
    """Outcome of optimizing the guessing budget for one list."""

    b_opt: int
    gain: float
    success: float
    tail_flagged: bool


@dataclass(frozen=True)
class RatioSummary:
    """Economic comparison at one value-to-cost ratio, per unit guess cost."""

    ratio: float
    adversary: str
    b_opt: int
    b_opt_by_length: Mapping[int, int]
    gain: float
    gain_with_length: float
    gain_advantage: float
    gain_ratio: float
    success: float
    success_with_length: float
    success_advantage: float
    success_ratio: float
    tail_flagged: bool


@dataclass(frozen=True)
class EconSummary:
    rows: tuple[RatioSummary, ...]


def _exact(x) -> int | Fraction:
    """Lossless scalar for score arithmetic (floats convert exactly)."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def _check_vk(v, k) -> tuple[int | Fraction, int | Fraction]:
    if not (v >= 0):
        raise ValueError("password value must be non-negative")
    if not (k > 0):
        raise ValueError("per-guess cost must be positive")
    return _exact(v), _exact(k)


def _require_mass(flist: FrequencyList) -> None:
    if flist.total <= 0:
        raise EmptyCorpus("empty frequency list")


def _score(v, k, mass: int, rank_mass: int, total: int, budget: int):
    """``total * gain`` at the given prefix, exact."""
    return v * mass - k * ((total - mass) * budget + rank_mass)


def expected_cost(flist: FrequencyList, k: float, budget: int) -> float:
    """Expected spend of an attack capped at ``budget`` guesses."""
    if not (k > 0):
        raise ValueError("per-guess cost must be positive")
    _require_mass(flist)
    if budget < 0:
        raise ValueError("guessing budget must be non-negative")
    idx = flist.index
    b = min(budget, idx.n)
    mass = idx.mass_at(b)
    units = (flist.total - mass) * b + idx.rank_mass_at(b)
    return k * units / flist.total


def expected_reward(flist: FrequencyList, v: float, budget: int) -> float:
    """Expected payoff: password value times the success probability."""
    if v < 0:
        raise ValueError("password value must be non-negative")
    _require_mass(flist)
    if budget < 0:
        raise ValueError("guessing budget must be non-negative")
    return v * flist.index.mass_at(budget) / flist.total


def gain(flist: FrequencyList, v: float, k: float, budget: int) -> float:
    """Expected gain, reward minus cost, at a fixed budget."""
    ve, ke = _check_vk(v, k)
    _require_mass(flist)
    if budget < 0:
        raise ValueError("guessing budget must be non-negative")
    idx = flist.index
    b = min(budget, idx.n)
    score = _score(ve, ke, idx.mass_at(b), idx.rank_mass_at(b), flist.total, b)
    return float(Fraction(score, flist.total))


def _optimal_score(flist: FrequencyList, ve, ke) -> tuple[int, int | Fraction]:
    """Budget maximizing the exact score, smallest budget on ties.

    The per-guess margin ``v * f_(B+1) - k * (N - mass(B))`` is strictly
    increasing across a run of equal counts, so gains are convex between
    run boundaries and no interior budget can beat both boundary budgets.
    Scanning budget 0 plus every run end is therefore an exhaustive scan
    of 0..n.
    """
    idx = flist.index
    total = flist.total
    best_b, best_score = 0, 0
    run_ends = idx.run_ends
    cum_mass = idx.cum_mass
    cum_rank_mass = idx.cum_rank_mass
    for j in range(len(idx.runs)):
        b = int(run_ends[j])
        score = _score(ve, ke, int(cum_mass[j]), int(cum_rank_mass[j]), total, b)
        if score > best_score:
            best_b, best_score = b, score
    return best_b, best_score


def optimal_budget(flist: FrequencyList, v: float, k: float) -> EconResult:
    """Budget maximizing expected gain, never negative (0 guesses fall back).

    Ties resolve toward the smallest budget.  The reported success rate is
    the guessing-curve value at the optimum, and the tail flag marks optima
    that reach into singleton-observation ranks.
    """
    ve, ke = _check_vk(v, k)
    _require_mass(flist)
    b_opt, score = _optimal_score(flist, ve, ke)
    return EconResult(
        b_opt=b_opt,
        gain=float(Fraction(score, flist.total)),
        success=flist.index.mass_at(b_opt) / flist.total,
        tail_flagged=tail_uncertain(flist, b_opt),
    )


def _ratio_cell(num: float, den: float) -> float:
    """Paper-table ratio semantics: inf over a zero denominator, nan when
    both sides are zero (rendered downstream as "inf" / "n/a")."""
    if den == 0:
        return float("nan") if num == 0 else float("inf")
    return num / den


def econ_summary(corpus: Corpus, ratios: Sequence[float]) -> EconSummary:
    """Economic comparison across value-to-cost ratios.

    Guess cost is normalized to 1 so every monetary column is in units of
    k.  For each ratio the blind attacker optimizes one overall budget; the
    length-aware attacker optimizes per length and the per-length gains and
    success rates aggregate by length prevalence.  Aggregation happens on
    the exact integer scores, one division at the end.
    """
    if not corpus.by_length or corpus.length_total <= 0:
        raise EmptyCorpus("corpus has no per-length lists")
    _require_mass(corpus.overall)
    rows = []
    for ratio in ratios:
        ve, ke = _check_vk(ratio, 1)
        overall = corpus.overall
        b_opt, score = _optimal_score(overall, ve, ke)
        g_plain = float(Fraction(score, overall.total))
        lam_plain = overall.index.mass_at(b_opt) / overall.total
        flagged = tail_uncertain(overall, b_opt)

        score_sum = 0
        mass_sum = 0
        b_by_length = {}
        for length in corpus.lengths:
            sub = corpus.by_length[length]
            if sub.total <= 0:
                b_by_length[length] = 0
                continue
            b_len, s_len = _optimal_score(sub, ve, ke)
            b_by_length[length] = b_len
            score_sum += s_len
            mass_sum += sub.index.mass_at(b_len)
            flagged = flagged or tail_uncertain(sub, b_len)
        g_aware = float(Fraction(score_sum, corpus.length_total))
        lam_aware = mass_sum / corpus.length_total

        rows.append(
            RatioSummary(
                ratio=float(ratio),
                adversary=attacker_label(float(ratio)),
                b_opt=b_opt,
                b_opt_by_length=b_by_length,
                gain=g_plain,
                gain_with_length=g_aware,
                gain_advantage=g_aware - g_plain,
                gain_ratio=_ratio_cell(g_aware, g_plain),
                success=lam_plain,
                success_with_length=lam_aware,
                success_advantage=lam_aware - lam_plain,
                success_ratio=_ratio_cell(lam_aware, lam_plain),
                tail_flagged=flagged,
            )
        )
    return EconSummary(rows=tuple(rows))
