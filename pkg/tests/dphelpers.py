"""Shared machinery for the differential privacy checks.

The audit is a necessary-condition check, not a proof: over many seeded
runs of the real release function on a neighboring pair, every event in a
fixed family must respect the (epsilon, delta) inequality up to sampling
error, in both directions.
"""

import math

import numpy as np

from lengthleak import DPParams, FrequencyList, release


def first_entries(counts, params_for_seed, runs):
    """Largest released count per seed (0 for an empty release)."""
    flist = FrequencyList(counts)
    out = np.zeros(runs, dtype=np.int64)
    for seed in range(runs):
        released = release(flist, params_for_seed(seed))
        if len(released):
            out[seed] = int(released.counts[0])
    return out


def audit_pair(pair_a, pair_b, epsilon, delta, runs, thresholds=range(6)):
    """Empirical DP inequality on the event family {first entry >= t}.

    Returns a list of (t, direction, lhs, bound) violations; empty means
    the audit passed.
    """
    tops_a = first_entries(pair_a, lambda s: DPParams(epsilon, delta, s), runs)
    tops_b = first_entries(pair_b, lambda s: DPParams(epsilon, delta, s), runs)
    violations = []
    e_eps = math.exp(epsilon)
    for t in thresholds:
        pa = float((tops_a >= t).mean())
        pb = float((tops_b >= t).mean())
        for lhs, rhs, tag in ((pa, pb, "a<=b"), (pb, pa, "b<=a")):
            se_l = math.sqrt(lhs * (1 - lhs) / runs)
            se_r = math.sqrt(rhs * (1 - rhs) / runs)
            slack = 3.0 * math.sqrt(se_l**2 + (e_eps * se_r) ** 2)
            bound = e_eps * rhs + delta + slack
            if lhs > bound:
                violations.append((t, tag, lhs, bound))
    return violations


def banded_list(total: int) -> FrequencyList:
    """Test family: equal rank multiplicity at counts 1, 2, and 3."""
    m = max(total // 6, 1)
    return FrequencyList([3] * m + [2] * m + [1] * m)


def mean_l1(flist: FrequencyList, epsilon, delta, seeds) -> float:
    from lengthleak import l1_report

    total = 0
    for seed in range(seeds):
        params = DPParams(epsilon, delta, seed)
        total += l1_report(flist, release(flist, params), params).l1_error
    return total / seeds


def l1_bound(total: int, epsilon: float, delta: float) -> float:
    return (math.sqrt(total) + math.log(1.0 / delta)) / epsilon
