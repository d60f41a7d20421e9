"""Result tables over a corpus, rendered as CSV, Markdown, or JSON.

Every cell comes straight from the module APIs; the only processing here
is the declared rounding (3 decimals for probabilities and ratios, 2 for
monetary values).  Infinite ratios render as ``inf`` and undefined cells
as ``n/a``.  Output is byte-identical for identical inputs.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Sequence

from . import attack, econ
from .corpus import Corpus

__all__ = ["ReportSpec", "Table", "build_table", "render", "TABLES", "REPORT_TABLES"]

DEFAULT_BUDGETS = (10**2, 10**3, 10**4, 10**5, 10**6, 10**7)
DEFAULT_RATIOS = (10**2, 10**3, 10**4, 10**5, 10**6, 10**7)
DEFAULT_LENGTHS = (5, 6, 7, 8, 9)
DEFAULT_DAYS = (30, 90, 180, 360)
DEFAULT_RATES = (1, 10, 100)

REPORT_TABLES = ("limitadv", "limitstats", "gain", "econadv", "bopt", "timeattack")
TABLES = REPORT_TABLES + ("econ",)

# column kinds drive formatting: int, num (general), prob/ratio (3 dp),
# gain (2 dp), str, bool
_PLACES = {"prob": 3, "ratio": 3, "gain": 2}


@dataclass(frozen=True)
class ReportSpec:
    """Which table to build and over which parameter grids."""

    table: str
    budgets: Sequence[int] = DEFAULT_BUDGETS
    ratios: Sequence[float] = DEFAULT_RATIOS
    lengths: Sequence[int] = DEFAULT_LENGTHS
    days: Sequence[int] = DEFAULT_DAYS
    rates: Sequence[int] = DEFAULT_RATES
    out_format: str = "csv"

    def __post_init__(self):
        if self.table not in TABLES:
            raise ValueError(f"unknown table {self.table!r}")
        for name in ("budgets", "ratios", "lengths", "days", "rates"):
            if not len(getattr(self, name)):
                raise ValueError(f"{name} must be non-empty")
        if self.out_format not in ("csv", "md", "json"):
            raise ValueError(f"unknown output format {self.out_format!r}")


@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple[tuple[str, str], ...]  # (column name, kind)
    rows: tuple[tuple, ...]


def _ratio_cell(num: float, den: float) -> float:
    if den == 0:
        return float("nan") if num == 0 else float("inf")
    return num / den


def _limitadv(corpus: Corpus, spec: ReportSpec) -> Table:
    rows = []
    for budget in spec.budgets:
        lam_star = attack.length_aware_crack_rate(corpus, budget)
        lam = attack.crack_rate(corpus, budget)
        rows.append(
            (
                budget,
                lam_star,
                lam_star - lam,
                _ratio_cell(lam_star, lam),
                attack.tail_uncertain(corpus, budget),
            )
        )
    return Table(
        "limitadv",
        (
            ("B", "int"),
            ("lambda_star", "prob"),
            ("diff", "prob"),
            ("ratio", "ratio"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


def _limitstats(corpus: Corpus, spec: ReportSpec) -> Table:
    tagged = corpus.length_tags is not None
    rows = []
    for length in spec.lengths:
        for budget in spec.budgets:
            lam_star = attack.crack_rate_for_length(corpus, budget, length)
            if tagged:
                lam = attack.blind_crack_rate_for_length(corpus, budget, length)
                diff = lam_star - lam
                ratio = _ratio_cell(lam_star, lam)
            else:
                diff = ratio = float("nan")
            rows.append(
                (
                    length,
                    budget,
                    lam_star,
                    diff,
                    ratio,
                    attack.tail_uncertain(corpus.by_length[length], budget),
                )
            )
    return Table(
        "limitstats",
        (
            ("length", "int"),
            ("B", "int"),
            ("lambda_star", "prob"),
            ("diff", "prob"),
            ("ratio", "ratio"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


def _summary_rows(corpus: Corpus, spec: ReportSpec) -> econ.EconSummary:
    return econ.econ_summary(corpus, list(spec.ratios))


def _gain(corpus: Corpus, spec: ReportSpec) -> Table:
    rows = [
        (
            r.ratio,
            r.adversary,
            r.gain_with_length,
            r.gain,
            r.gain_advantage,
            r.gain_ratio,
            r.tail_flagged,
        )
        for r in _summary_rows(corpus, spec).rows
    ]
    return Table(
        "gain",
        (
            ("vk_ratio", "num"),
            ("adversary", "str"),
            ("gain_star", "gain"),
            ("gain", "gain"),
            ("diff", "gain"),
            ("ratio", "ratio"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


def _econadv(corpus: Corpus, spec: ReportSpec) -> Table:
    rows = [
        (
            r.ratio,
            r.adversary,
            r.success_with_length,
            r.success_advantage,
            r.success_ratio,
            r.tail_flagged,
        )
        for r in _summary_rows(corpus, spec).rows
    ]
    return Table(
        "econadv",
        (
            ("vk_ratio", "num"),
            ("adversary", "str"),
            ("success_star", "prob"),
            ("diff", "prob"),
            ("ratio", "ratio"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


def _bopt(corpus: Corpus, spec: ReportSpec) -> Table:
    columns = [("vk_ratio", "num"), ("adversary", "str")]
    columns += [(f"bopt_len{length}", "int") for length in spec.lengths]
    columns += [("bopt_overall", "int"), ("tail_flag", "bool")]
    rows = []
    for r in _summary_rows(corpus, spec).rows:
        per_len = [r.b_opt_by_length.get(length) for length in spec.lengths]
        rows.append((r.ratio, r.adversary, *per_len, r.b_opt, r.tail_flagged))
    return Table("bopt", tuple(columns), tuple(rows))


def _econ(corpus: Corpus, spec: ReportSpec) -> Table:
    rows = [
        (
            r.ratio,
            r.adversary,
            r.b_opt,
            r.gain,
            r.gain_with_length,
            r.gain_advantage,
            r.gain_ratio,
            r.success,
            r.success_with_length,
            r.success_advantage,
            r.success_ratio,
            r.tail_flagged,
        )
        for r in _summary_rows(corpus, spec).rows
    ]
    return Table(
        "econ",
        (
            ("vk_ratio", "num"),
            ("adversary", "str"),
            ("bopt", "int"),
            ("gain", "gain"),
            ("gain_star", "gain"),
            ("gain_diff", "gain"),
            ("gain_ratio", "ratio"),
            ("success", "prob"),
            ("success_star", "prob"),
            ("success_diff", "prob"),
            ("success_ratio", "ratio"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


def _timeattack(corpus: Corpus, spec: ReportSpec) -> Table:
    rows = []
    for days in spec.days:
        for rate in spec.rates:
            schedule = attack.Schedule(days, rate)
            rates = attack.schedule_crack_rates(corpus, schedule)
            rows.append(
                (
                    days,
                    rate,
                    rates.with_length,
                    rates.without_length,
                    attack.tail_uncertain(corpus, schedule.budget),
                )
            )
    return Table(
        "timeattack",
        (
            ("days", "int"),
            ("guesses_per_day", "int"),
            ("with_length", "prob"),
            ("without_length", "prob"),
            ("tail_flag", "bool"),
        ),
        tuple(rows),
    )


_BUILDERS = {
    "limitadv": _limitadv,
    "limitstats": _limitstats,
    "gain": _gain,
    "econadv": _econadv,
    "bopt": _bopt,
    "econ": _econ,
    "timeattack": _timeattack,
}


def build_table(corpus: Corpus, spec: ReportSpec) -> Table:
    return _BUILDERS[spec.table](corpus, spec)


def _format_cell(value, kind: str) -> str:
    if value is None:
        return "n/a"
    if kind == "bool":
        return "true" if value else "false"
    if kind == "str":
        return str(value)
    if kind == "int":
        return str(int(value))
    if isinstance(value, float):
        if math.isnan(value):
            return "n/a"
        if math.isinf(value):
            return "inf"
    if kind == "num":
        if isinstance(value, float) and value.is_integer():
            return str(int(value))
        return f"{value:g}"
    return f"{value:.{_PLACES[kind]}f}"


def _json_cell(value, kind: str):
    if value is None:
        return "n/a"
    if kind in ("bool", "str"):
        return value
    if kind == "int":
        return int(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "n/a"
        if math.isinf(value):
            return "inf"
    if kind == "num":
        if isinstance(value, float) and value.is_integer():
            return int(value)
        return value
    return round(float(value), _PLACES[kind])


def render(table: Table, out_format: str) -> str:
    """Render a table; column order is fixed and documented per table."""
    names = [name for name, _ in table.columns]
    kinds = [kind for _, kind in table.columns]
    if out_format == "json":
        doc = {
            "table": table.name,
            "columns": names,
            "rows": [
                [_json_cell(v, k) for v, k in zip(row, kinds)] for row in table.rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    cells = [[_format_cell(v, k) for v, k in zip(row, kinds)] for row in table.rows]
    if out_format == "csv":
        import csv

        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(names)
        writer.writerows(cells)
        return buf.getvalue()
    if out_format == "md":
        widths = [
            max(len(names[i]), *(len(r[i]) for r in cells)) if cells else len(names[i])
            for i in range(len(names))
        ]
        def line(parts):
            return "| " + " | ".join(p.ljust(w) for p, w in zip(parts, widths)) + " |"

        out = [line(names), "| " + " | ".join("-" * w for w in widths) + " |"]
        out += [line(r) for r in cells]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown output format {out_format!r}")
