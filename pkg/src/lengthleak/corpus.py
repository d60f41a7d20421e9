"""Password frequency corpora: loading, validation, and run compression.

A frequency list is a non-increasing sequence of occurrence counts, one
entry per distinct password, most popular first.  A corpus couples the
overall list with per-length sublists plus optional per-rank length tags
(available only when ingesting plaintext passwords).

Big lists are handled through run compression: consecutive equal counts
collapse into (value, multiplicity) pairs, and cumulative tables over the
runs let every downstream statistic be evaluated in closed form instead of
rank by rank.  All prefix bookkeeping is exact integer arithmetic.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import BinaryIO, Iterable, Mapping

import numpy as np
import pandas as pd

from .errors import (
    EmptyCorpus,
    MalformedLine,
    NegativeCount,
    NotSorted,
    UnknownLength,
)

__all__ = [
    "FrequencyList",
    "RunList",
    "PrefixIndex",
    "Corpus",
    "compress",
    "expand",
    "index",
    "load_frequency_list",
    "load_plaintext_corpus",
    "assemble_corpus",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _validate_counts(counts: np.ndarray) -> None:
    if counts.size == 0:
        return
    if counts.min() < 0:
        pos = int(np.argmax(counts < 0))
        raise NegativeCount(pos, int(counts[pos]))
    diffs = np.diff(counts)
    if diffs.size and diffs.max() > 0:
        pos = int(np.argmax(diffs > 0))
        raise NotSorted(pos + 1, int(counts[pos]), int(counts[pos + 1]))


@dataclass(frozen=True)
class RunList:
    """Count-of-counts compression of a frequency list.

    ``values`` holds the distinct counts in strictly decreasing order and
    ``mults[j]`` how many consecutive ranks share ``values[j]``.
    """

    values: np.ndarray
    mults: np.ndarray
    total: int

    def __post_init__(self):
        _frozen(self.values)
        _frozen(self.mults)

    def __len__(self) -> int:
        return int(self.values.size)

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(c), int(m)) for c, m in zip(self.values, self.mults)]


@dataclass(frozen=True)
class PrefixIndex:
    """Cumulative tables over a run list, one entry per run.

    ``run_ends[j]`` is the last rank covered by run j (1-based ranks),
    ``cum_mass[j]`` the total count over ranks 1..run_ends[j], and
    ``cum_rank_mass[j]`` the rank-weighted total ``sum(i * f_i)`` over the
    same prefix.  Within a run of value c spanning ranks a..b the
    rank-weighted block is ``c * (a + b) * (b - a + 1) / 2``.
    """

    runs: RunList
    run_ends: np.ndarray
    cum_mass: np.ndarray
    cum_rank_mass: np.ndarray

    def __post_init__(self):
        _frozen(self.run_ends)
        _frozen(self.cum_mass)
        _frozen(self.cum_rank_mass)

    @property
    def n(self) -> int:
        """Number of ranks (distinct passwords, zero-count ranks included)."""
        return int(self.run_ends[-1]) if len(self.runs) else 0

    @property
    def total(self) -> int:
        return self.runs.total

    def _locate(self, budget: int) -> tuple[int, int, int, int, int]:
        """Run index, run start, prev cum mass, prev cum rank mass, clamped B."""
        b = min(budget, self.n)
        j = int(np.searchsorted(self.run_ends, b, side="left"))
        if j == 0:
            return j, 1, 0, 0, b
        return (
            j,
            int(self.run_ends[j - 1]) + 1,
            int(self.cum_mass[j - 1]),
            int(self.cum_rank_mass[j - 1]),
            b,
        )

    def mass_at(self, budget: int) -> int:
        """Exact ``sum(f_i for i <= budget)``, with budget clamped to n."""
        if budget <= 0 or self.n == 0:
            return 0
        j, start, prev_mass, _, b = self._locate(budget)
        return prev_mass + int(self.runs.values[j]) * (b - start + 1)

    def rank_mass_at(self, budget: int) -> int:
        """Exact ``sum(i * f_i for i <= budget)``, with budget clamped to n."""
        if budget <= 0 or self.n == 0:
            return 0
        j, start, _, prev_rank_mass, b = self._locate(budget)
        c = int(self.runs.values[j])
        width = b - start + 1
        return prev_rank_mass + c * (start + b) * width // 2


class FrequencyList:
    """Validated non-increasing list of password occurrence counts.

    Instances are immutable and hold either the raw per-rank counts or the
    run-compressed form, materializing the other representation on demand.
    An empty list is a legal degenerate carrier; probability computations
    reject it downstream.
    """

    def __init__(self, counts: Iterable[int] | np.ndarray):
        arr = np.array(counts, dtype=np.int64)  # owned copy, frozen below
        if arr.ndim != 1:
            raise ValueError("counts must be one-dimensional")
        _validate_counts(arr)
        self._counts = _frozen(arr)
        self.total = int(arr.sum())

    @classmethod
    def _from_validated(cls, arr: np.ndarray) -> "FrequencyList":
        obj = cls.__new__(cls)
        obj._counts = _frozen(arr)
        obj.total = int(arr.sum())
        return obj

    @classmethod
    def from_runs(cls, runs: RunList) -> "FrequencyList":
        obj = cls.__new__(cls)
        obj._counts = None
        obj.total = runs.total
        obj.__dict__["runs"] = runs
        return obj

    @property
    def counts(self) -> np.ndarray:
        if self._counts is None:
            runs = self.runs
            self._counts = _frozen(np.repeat(runs.values, runs.mults))
        return self._counts

    @cached_property
    def runs(self) -> RunList:
        return compress(self)

    @cached_property
    def index(self) -> PrefixIndex:
        return index(self.runs)

    def __len__(self) -> int:
        if self._counts is not None:
            return int(self._counts.size)
        return self.index.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequencyList):
            return NotImplemented
        return (
            self.total == other.total
            and np.array_equal(self.runs.values, other.runs.values)
            and np.array_equal(self.runs.mults, other.runs.mults)
        )

    def __hash__(self):
        return hash((self.total, len(self)))

    def __repr__(self) -> str:
        head = ", ".join(str(int(c)) for c in self.counts[:6])
        tail = ", ..." if len(self) > 6 else ""
        return f"FrequencyList([{head}{tail}], n={len(self)}, total={self.total})"


def compress(flist: FrequencyList) -> RunList:
    """Collapse consecutive equal counts into (value, multiplicity) runs."""
    counts = flist.counts
    if counts.size == 0:
        empty = np.empty(0, dtype=np.int64)
        return RunList(empty, empty.copy(), 0)
    # counts are already sorted, so run boundaries are where adjacent differ
    change = np.nonzero(np.diff(counts))[0]
    starts = np.concatenate(([0], change + 1))
    ends = np.concatenate((change, [counts.size - 1]))
    values = counts[starts].copy()
    mults = ends - starts + 1
    return RunList(values, mults.astype(np.int64), flist.total)


def expand(runs: RunList) -> FrequencyList:
    """Inverse of :func:`compress`."""
    return FrequencyList.from_runs(runs)


def index(runs: RunList) -> PrefixIndex:
    """Build cumulative mass and rank-weighted mass tables over the runs."""
    if len(runs) == 0:
        empty = np.empty(0, dtype=np.int64)
        return PrefixIndex(runs, empty, empty.copy(), empty.copy())
    run_ends = np.cumsum(runs.mults)
    starts = run_ends - runs.mults + 1
    block_mass = runs.values * runs.mults
    block_rank_mass = runs.values * ((starts + run_ends) * runs.mults // 2)
    return PrefixIndex(
        runs,
        run_ends.astype(np.int64),
        np.cumsum(block_mass).astype(np.int64),
        np.cumsum(block_rank_mass).astype(np.int64),
    )


class Corpus:
    """Overall frequency list plus per-length sublists.

    ``length_tags`` (plaintext ingestion only) gives the password length of
    each overall rank, in rank order.  ``consistent`` records whether the
    per-length lists are a partition of the overall list; noised releases
    are carried with ``consistent=False``.
    """

    def __init__(
        self,
        overall: FrequencyList,
        by_length: Mapping[int, FrequencyList],
        length_tags: np.ndarray | None = None,
        consistent: bool = False,
    ):
        self.overall = overall
        self.by_length = MappingProxyType(dict(by_length))
        if length_tags is not None:
            length_tags = _frozen(np.array(length_tags, dtype=np.int64))
            if length_tags.size != len(overall):
                raise ValueError("one length tag per overall rank required")
        self.length_tags = length_tags
        self.consistent = consistent

    @cached_property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(self.by_length))

    @cached_property
    def length_total(self) -> int:
        """Total users across the per-length lists (equals N when consistent)."""
        return sum(fl.total for fl in self.by_length.values())

    def pr_length(self, length: int) -> float:
        """Fraction of users whose password has the given length."""
        if length not in self.by_length:
            raise UnknownLength(length)
        if self.length_total == 0:
            raise EmptyCorpus("corpus has no per-length mass")
        return self.by_length[length].total / self.length_total

    def sublist(self, length: int) -> FrequencyList:
        try:
            return self.by_length[length]
        except KeyError:
            raise UnknownLength(length) from None

    @cached_property
    def tagged_prefixes(self) -> Mapping[int, tuple[np.ndarray, np.ndarray]]:
        """Per length: (sorted global ranks with that tag, cumulative counts).

        Supports conditioning a global top-B attack on the victim's length.
        """
        if self.length_tags is None:
            return MappingProxyType({})
        counts = self.overall.counts
        out = {}
        for length in self.lengths:
            sel = np.nonzero(self.length_tags == length)[0]
            ranks = (sel + 1).astype(np.int64)
            out[length] = (_frozen(ranks), _frozen(np.cumsum(counts[sel])))
        return MappingProxyType(out)

    def __repr__(self) -> str:
        return (
            f"Corpus(N={self.overall.total}, lengths={list(self.lengths)}, "
            f"tags={'yes' if self.length_tags is not None else 'no'}, "
            f"consistent={self.consistent})"
        )


# -- loading -----------------------------------------------------------------

def _read_bytes(source: BinaryIO | bytes | str | Path) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes()
    return source.read()


def _rescan_for_error(text: str, n_fields: int) -> None:
    """Pinpoint the first bad line after a failed bulk parse."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        fields = stripped.split("\t") if n_fields == 2 else [stripped]
        if len(fields) != n_fields:
            raise MalformedLine(line_no, line)
        for field in fields:
            try:
                int(field)
            except ValueError:
                raise MalformedLine(line_no, line) from None


def _parse_int_table(data: bytes, n_fields: int) -> np.ndarray:
    """Parse newline-separated integer rows, empty input giving shape (0, k)."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedLine(0, f"not UTF-8: {exc}") from None
    try:
        df = pd.read_csv(
            io.BytesIO(data),
            header=None,
            dtype=np.int64,
            sep="\t" if n_fields == 2 else ",",
            skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError:
        return np.empty((0, n_fields), dtype=np.int64)
    except (ValueError, OverflowError, pd.errors.ParserError):
        _rescan_for_error(text, n_fields)
        raise MalformedLine(0, "unparseable input")
    if df.shape[1] != n_fields:
        _rescan_for_error(text, n_fields)
        raise MalformedLine(0, f"expected {n_fields} column(s), got {df.shape[1]}")
    return df.to_numpy(dtype=np.int64)


def load_frequency_list(
    source: BinaryIO | bytes | str | Path, format: str = "freq"
) -> FrequencyList:
    """Load a frequency list from UTF-8 text.

    ``freq`` format is one count per line, non-increasing.  ``runs`` format
    is ``count<TAB>multiplicity`` with counts strictly decreasing (equal
    adjacent counts are merged).  Ordering is verified, never repaired.
    """
    data = _read_bytes(source)
    if format == "freq":
        table = _parse_int_table(data, 1)
        return FrequencyList(table[:, 0])
    if format == "runs":
        table = _parse_int_table(data, 2)
        values, mults = table[:, 0], table[:, 1]
        if values.size:
            if values.min() < 0:
                pos = int(np.argmax(values < 0))
                raise NegativeCount(pos, int(values[pos]))
            if mults.min() <= 0:
                pos = int(np.argmax(mults <= 0))
                raise MalformedLine(pos + 1, f"multiplicity {int(mults[pos])}")
            diffs = np.diff(values)
            if diffs.size and diffs.max() > 0:
                pos = int(np.argmax(diffs > 0))
                raise NotSorted(pos + 1, int(values[pos]), int(values[pos + 1]))
            if diffs.size and (diffs == 0).any():
                # merge equal neighbours into canonical strictly-decreasing runs
                keep = np.concatenate(([True], diffs < 0))
                groups = np.cumsum(keep) - 1
                merged = np.zeros(int(groups[-1]) + 1, dtype=np.int64)
                np.add.at(merged, groups, mults)
                values, mults = values[keep], merged
        total = int((values * mults).sum())
        return expand(RunList(_frozen(values.copy()), _frozen(mults.copy()), total))
    raise ValueError(f"unknown frequency list format {format!r}")


def load_plaintext_corpus(source: BinaryIO | bytes | str | Path) -> Corpus:
    """Build a corpus from raw passwords, one per line.

    Password length counts Unicode scalar values.  Ranks are deterministic:
    ties in frequency are broken by lexicographic password order, both in
    the overall list and inside every per-length sublist.  Blank lines are
    ignored; the raw passwords are discarded after counting.
    """
    data = _read_bytes(source)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedLine(0, f"not UTF-8: {exc}") from None
    tally: dict[str, int] = {}
    for line in text.splitlines():
        if line:
            tally[line] = tally.get(line, 0) + 1
    if not tally:
        raise EmptyCorpus("no passwords in input")

    items = sorted(tally.items())
    items.sort(key=lambda kv: kv[1], reverse=True)  # stable: keeps lex order

    counts = np.fromiter((c for _, c in items), dtype=np.int64, count=len(items))
    tags = np.fromiter((len(p) for p, _ in items), dtype=np.int64, count=len(items))
    overall = FrequencyList._from_validated(_frozen(counts))

    by_length = {}
    for length in np.unique(tags):
        sub = counts[tags == length]
        by_length[int(length)] = FrequencyList._from_validated(_frozen(sub.copy()))
    return Corpus(overall, by_length, length_tags=tags, consistent=True)


def _run_histogram(flist: FrequencyList) -> dict[int, int]:
    return {int(c): int(m) for c, m in zip(flist.runs.values, flist.runs.mults) if c > 0}


def assemble_corpus(
    overall: FrequencyList, by_length: Mapping[int, FrequencyList]
) -> Corpus:
    """Combine pre-validated lists into a corpus, checking consistency.

    The corpus is consistent exactly when the per-length lists could have
    been derived from the same password multiset as the overall list, i.e.
    their counts merge into precisely the overall multiset.  The check
    compares run histograms, so nothing is expanded.  Failing it flags the
    corpus rather than rejecting it, since noised releases legitimately
    disagree list by list.
    """
    merged: dict[int, int] = {}
    for fl in by_length.values():
        for value, mult in _run_histogram(fl).items():
            merged[value] = merged.get(value, 0) + mult
    consistent = bool(
        sum(fl.total for fl in by_length.values()) == overall.total
        and merged == _run_histogram(overall)
    )
    return Corpus(overall, by_length, length_tags=None, consistent=consistent)
