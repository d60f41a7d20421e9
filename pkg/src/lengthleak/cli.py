"""Command-line front end.

Subcommands: ``analyze``, ``econ``, ``report``, ``dp-release``,
``simulate``, ``infer-length``, ``calibrate``.  Corpora live in a
directory holding ``overall.txt`` plus ``len<L>.txt`` per length (``freq``
or ``runs`` text format, chosen by ``--format``), or in a single plaintext
password file with ``--format plain``.

Exit codes: 1 for usage problems, 2 for data errors, 3 for internal
failures; diagnostics are a single line on stderr.  Output is
deterministic for fixed inputs, flags, and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import dp, payload, report, simulate
from .corpus import Corpus, assemble_corpus, load_frequency_list, load_plaintext_corpus
from .errors import LengthLeakError

__all__ = ["main"]

_DEFAULT_DELTA = 2.0 ** -100


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _num_list(text: str) -> list:
    out = []
    for token in text.split(","):
        value = float(token)
        out.append(int(value) if value.is_integer() else value)
    return out


def _int_list(text: str) -> list[int]:
    return [int(token) for token in text.split(",")]


def load_corpus_path(path: str | Path, fmt: str) -> Corpus:
    """Load a corpus directory (freq/runs) or plaintext file (plain)."""
    path = Path(path)
    if fmt == "plain":
        return load_plaintext_corpus(path)
    overall_file = path / "overall.txt"
    if not overall_file.exists():
        raise LengthLeakError(f"missing {overall_file}")
    overall = load_frequency_list(overall_file, fmt)
    by_length = {}
    for child in sorted(path.iterdir()):
        match = re.fullmatch(r"len(\d+)\.txt", child.name)
        if match:
            by_length[int(match.group(1))] = load_frequency_list(child, fmt)
    return assemble_corpus(overall, by_length)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _add_corpus_args(sub):
    sub.add_argument("--corpus", required=True, help="corpus directory or plain file")
    sub.add_argument("--format", default="freq", choices=("freq", "runs", "plain"))


def _add_output_args(sub):
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--out-format", default="csv", choices=("csv", "md", "json"))


def _build_parser() -> _Parser:
    parser = _Parser(prog="lengthleak")
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="guessing-limit success rates")
    _add_corpus_args(analyze)
    _add_output_args(analyze)
    analyze.add_argument("--budgets", type=_int_list, default=None)

    econ_cmd = subs.add_parser("econ", help="rational attacker summary")
    _add_corpus_args(econ_cmd)
    _add_output_args(econ_cmd)
    econ_cmd.add_argument("--ratios", type=_num_list, default=None)

    rep = subs.add_parser("report", help="build one result table")
    _add_corpus_args(rep)
    _add_output_args(rep)
    rep.add_argument("--table", required=True, choices=report.REPORT_TABLES)
    rep.add_argument("--budgets", type=_int_list, default=None)
    rep.add_argument("--ratios", type=_num_list, default=None)
    rep.add_argument("--lengths", type=_int_list, default=None)
    rep.add_argument("--days", type=_int_list, default=None)
    rep.add_argument("--rates", type=_int_list, default=None)

    dprel = subs.add_parser("dp-release", help="differentially private release")
    _add_corpus_args(dprel)
    dprel.add_argument("--out", required=True, help="output corpus directory")
    dprel.add_argument(
        "--epsilon", type=float, default=0.5, help="total budget, half per list"
    )
    dprel.add_argument("--delta", type=float, default=_DEFAULT_DELTA)
    dprel.add_argument("--seed", type=int, default=0)

    sim = subs.add_parser("simulate", help="Monte Carlo attack replay")
    _add_corpus_args(sim)
    _add_output_args(sim)
    sim.add_argument(
        "--mode",
        default="fixed",
        choices=("fixed", "fixed-with-length", "rational", "rational-with-length"),
    )
    sim.add_argument("--trials", type=int, default=100000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--budget", type=int, default=None)
    sim.add_argument("--ratio", type=float, default=None)
    sim.add_argument("--workers", type=int, default=1)

    infer = subs.add_parser("infer-length", help="payload size to password length")
    infer.add_argument("--profile", required=True, help="bytes_per_char,overhead")
    infer.add_argument("--payload", required=True, type=int)

    cal = subs.add_parser("calibrate", help="fit a site profile")
    cal.add_argument("--pairs", required=True, help="CSV file of length,payload lines")

    return parser


def _spec_from_args(args, table: str) -> report.ReportSpec:
    kwargs = {"table": table, "out_format": args.out_format}
    for name in ("budgets", "ratios", "lengths", "days", "rates"):
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    return report.ReportSpec(**kwargs)


def _cmd_table(args, table: str) -> int:
    spec = _spec_from_args(args, table)
    corpus = load_corpus_path(args.corpus, args.format)
    text = report.render(report.build_table(corpus, spec), args.out_format)
    _write_output(text, args.out)
    return 0


def _cmd_dp_release(args) -> int:
    corpus = load_corpus_path(args.corpus, args.format)
    released = dp.release_corpus(corpus, args.epsilon, args.delta, args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    def write_list(name, flist):
        with open(out_dir / name, "w", encoding="utf-8") as fh:
            np.savetxt(fh, flist.counts, fmt="%d")

    params = dp.DPParams(args.epsilon / 2.0, args.delta, args.seed)
    lists = [("overall", "overall.txt", corpus.overall, released.overall)]
    for length in released.lengths:
        lists.append(
            (
                f"len{length}",
                f"len{length}.txt",
                corpus.by_length[length],
                released.by_length[length],
            )
        )
    def finite(x):
        return x if math.isfinite(x) else "inf"

    entries = []
    for name, filename, original, noisy in lists:
        write_list(filename, noisy)
        rep = dp.l1_report(original, noisy, params)
        entries.append(
            {
                "list": name,
                "l1_error": rep.l1_error,
                "bound_value": finite(rep.bound_value),
                "ratio": finite(rep.ratio),
            }
        )
    doc = {
        "epsilon_total": args.epsilon,
        "epsilon_per_list": args.epsilon / 2.0,
        "delta": args.delta,
        "seed": args.seed,
        "lists": entries,
    }
    (out_dir / "dp_report.json").write_text(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_simulate(args) -> int:
    corpus = load_corpus_path(args.corpus, args.format)
    mode = {
        "fixed": "fixed_budget",
        "fixed-with-length": "fixed_budget",
        "rational": "rational",
        "rational-with-length": "rational_with_length",
    }[args.mode]
    config = simulate.SimConfig(
        trials=args.trials, seed=args.seed, mode=mode, workers=args.workers
    )
    if mode == "fixed_budget":
        if args.budget is None:
            raise _UsageError("--budget is required for fixed modes")
        outcome = simulate.simulate_fixed(
            corpus, args.budget, config, with_length=args.mode == "fixed-with-length"
        )
    else:
        if args.ratio is None:
            raise _UsageError("--ratio is required for rational modes")
        outcome = simulate.simulate_rational(corpus, args.ratio, 1.0, config)
    table = report.Table(
        "simulate",
        (
            ("mode", "str"),
            ("trials", "int"),
            ("success_rate", "num"),
            ("success_se", "num"),
            ("mean_gain", "num"),
            ("mean_cost", "num"),
            ("std_error", "num"),
        ),
        (
            (
                args.mode,
                outcome.trials,
                outcome.success_rate,
                outcome.success_se,
                outcome.mean_gain,
                outcome.mean_cost,
                outcome.std_error,
            ),
        ),
    )
    _write_output(report.render(table, args.out_format), args.out)
    return 0


def _cmd_infer_length(args) -> int:
    try:
        r_text, o_text = args.profile.split(",")
        profile = payload.SiteProfile(int(r_text), int(o_text))
    except ValueError:
        raise _UsageError("--profile expects bytes_per_char,overhead") from None
    length = payload.infer_length(args.payload, profile)
    sys.stdout.write(f"{length}\n")
    return 0


def _cmd_calibrate(args) -> int:
    pairs = []
    text = Path(args.pairs).read_text(encoding="utf-8")
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            l_text, p_text = line.split(",")
            pairs.append((int(l_text), int(p_text)))
        except ValueError:
            raise LengthLeakError(f"{args.pairs}:{line_no}: expected length,payload")
    profile = payload.calibrate(pairs)
    sys.stdout.write(f"{profile.bytes_per_char},{profile.overhead}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return _cmd_table(args, "limitadv")
        if args.command == "econ":
            return _cmd_table(args, "econ")
        if args.command == "report":
            return _cmd_table(args, args.table)
        if args.command == "dp-release":
            return _cmd_dp_release(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "infer-length":
            return _cmd_infer_length(args)
        if args.command == "calibrate":
            return _cmd_calibrate(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (LengthLeakError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
