"""Naive reference implementations used as test oracles.

Everything here works rank by rank on plain Python data derived straight
from a password tally, with exact integer/Fraction arithmetic and none of
the library's run compression or closed forms.  Slow on purpose.
"""

from fractions import Fraction


def _exact(x):
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


class BruteForce:
    """Rank-by-rank evaluation of every attack and economics quantity."""

    def __init__(self, tally):
        items = sorted(tally.items(), key=lambda kv: (-kv[1], kv[0]))
        self.items = items
        self.counts = [c for _, c in items]
        self.n = len(items)
        self.N = sum(self.counts)
        self.lengths = sorted({len(p) for p, _ in items})
        self.len_counts = {
            length: [c for p, c in items if len(p) == length]
            for length in self.lengths
        }
        self.len_totals = {l: sum(cs) for l, cs in self.len_counts.items()}

    # -- fixed budget success rates -----------------------------------------

    def lam(self, budget):
        return sum(self.counts[:budget]) / self.N

    def lam_star_len(self, budget, length):
        cs = self.len_counts[length]
        return sum(cs[:budget]) / self.len_totals[length]

    def lam_star(self, budget):
        mass = sum(sum(cs[:budget]) for cs in self.len_counts.values())
        return mass / self.N

    def lam_blind_len(self, budget, length):
        mass = sum(c for p, c in self.items[:budget] if len(p) == length)
        return mass / self.len_totals[length]

    # -- economics ------------------------------------------------------------

    def _prefix(self, counts, budget):
        b = min(budget, len(counts))
        mass = rank_mass = 0
        for i in range(b):
            mass += counts[i]
            rank_mass += (i + 1) * counts[i]
        return b, mass, rank_mass

    def cost(self, k, budget, counts=None):
        counts = self.counts if counts is None else counts
        total = sum(counts)
        b, mass, rank_mass = self._prefix(counts, budget)
        return k * ((total - mass) * b + rank_mass) / total

    def reward(self, v, budget, counts=None):
        counts = self.counts if counts is None else counts
        _, mass, _ = self._prefix(counts, budget)
        return v * mass / sum(counts)

    def gain(self, v, k, budget, counts=None):
        counts = self.counts if counts is None else counts
        total = sum(counts)
        v, k = _exact(v), _exact(k)
        b, mass, rank_mass = self._prefix(counts, budget)
        score = v * mass - k * ((total - mass) * b + rank_mass)
        return float(Fraction(score) / total)

    def bopt(self, v, k, counts=None):
        """Exhaustive scan of every budget, smallest budget on ties."""
        counts = self.counts if counts is None else counts
        total = sum(counts)
        v, k = _exact(v), _exact(k)
        best_b, best_score = 0, 0
        mass = rank_mass = 0
        for b in range(1, len(counts) + 1):
            mass += counts[b - 1]
            rank_mass += b * counts[b - 1]
            score = v * mass - k * ((total - mass) * b + rank_mass)
            if score > best_score:
                best_b, best_score = b, score
        return best_b, float(Fraction(best_score) / total)

    def summary(self, ratio):
        """Oracle counterpart of the per-ratio economic aggregation."""
        b_opt, g_plain = self.bopt(ratio, 1)
        lam_plain = self.lam(b_opt)
        g_aware = 0.0
        lam_aware = 0.0
        b_by_len = {}
        for length in self.lengths:
            cs = self.len_counts[length]
            pr = self.len_totals[length] / self.N
            b_len, g_len = self.bopt(ratio, 1, counts=cs)
            b_by_len[length] = b_len
            g_aware += pr * g_len
            lam_aware += pr * (sum(cs[:b_len]) / self.len_totals[length])
        return {
            "b_opt": b_opt,
            "gain": g_plain,
            "success": lam_plain,
            "b_opt_by_length": b_by_len,
            "gain_with_length": g_aware,
            "success_with_length": lam_aware,
        }
