"""Online password guessing analytics over frequency corpora.

Quantifies how much an online guessing attacker gains from learning
password lengths (leaked, for example, through unpadded encrypted
traffic), models the economics of rational attackers, validates the
closed forms against a Monte Carlo oracle, and publishes differentially
private noisy frequency lists.
"""

from .attack import (
    Schedule,
    ScheduleRates,
    blind_crack_rate_for_length,
    crack_rate,
    crack_rate_for_length,
    guessing_curve,
    length_aware_crack_rate,
    schedule_crack_rates,
    tail_uncertain,
)
from .corpus import (
    Corpus,
    FrequencyList,
    PrefixIndex,
    RunList,
    assemble_corpus,
    compress,
    expand,
    index,
    load_frequency_list,
    load_plaintext_corpus,
)
from .dp import DPParams, DPReport, l1_report, release, release_corpus
from .econ import (
    AttackerSpec,
    EconResult,
    EconSummary,
    RatioSummary,
    attacker_label,
    econ_summary,
    expected_cost,
    expected_reward,
    gain,
    optimal_budget,
)
from .payload import SiteProfile, calibrate, infer_length
from .simulate import SimConfig, SimOutcome, sample_rank, simulate_fixed, simulate_rational

__version__ = "0.1.0"

__all__ = [
    "AttackerSpec",
    "Corpus",
    "DPParams",
    "DPReport",
    "EconResult",
    "EconSummary",
    "FrequencyList",
    "PrefixIndex",
    "RatioSummary",
    "RunList",
    "Schedule",
    "ScheduleRates",
    "SimConfig",
    "SimOutcome",
    "SiteProfile",
    "assemble_corpus",
    "attacker_label",
    "blind_crack_rate_for_length",
    "calibrate",
    "compress",
    "crack_rate",
    "crack_rate_for_length",
    "econ_summary",
    "expand",
    "expected_cost",
    "expected_reward",
    "gain",
    "guessing_curve",
    "index",
    "infer_length",
    "l1_report",
    "length_aware_crack_rate",
    "load_frequency_list",
    "load_plaintext_corpus",
    "optimal_budget",
    "release",
    "release_corpus",
    "sample_rank",
    "schedule_crack_rates",
    "simulate_fixed",
    "simulate_rational",
    "tail_uncertain",
]
