"""Shared fixtures: the toy corpus, random corpora, and optional datasets."""

import os
import string
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lengthleak import Corpus, load_plaintext_corpus
from lengthleak.cli import load_corpus_path

TOY_TALLY = {"123456": 5, "password": 3, "abc123": 2, "letmein": 2}


def tally_to_corpus(tally) -> Corpus:
    """Run a tally through the real plaintext ingestion path."""
    lines = []
    for pwd, count in tally.items():
        lines.extend([pwd] * count)
    return load_plaintext_corpus("\n".join(lines).encode())


@pytest.fixture(scope="session")
def toy_corpus():
    return tally_to_corpus(TOY_TALLY)


def random_tally(rng: np.random.Generator, max_distinct=60, max_lengths=20) -> dict:
    """Random password tally with deliberate frequency ties.

    Lengths start at 4 so the per-length password space is never exhausted.
    """
    n_distinct = int(rng.integers(1, max_distinct + 1))
    n_lengths = int(rng.integers(1, max_lengths + 1))
    lengths = rng.choice(np.arange(4, 4 + max_lengths), size=n_lengths, replace=False)
    style = rng.integers(0, 3)
    tally = {}
    for i in range(n_distinct):
        length = int(rng.choice(lengths))
        body = np.base_repr(i, 26).lower()
        body = "".join(string.ascii_lowercase[int(ch, 26)] for ch in body)
        pwd = body.rjust(length, "a")
        if style == 0:
            count = 1
        elif style == 1:
            count = int(rng.choice([1, 1, 2, 2, 3, 5]))
        else:
            count = 1 + int(rng.geometric(0.25))
            if rng.random() < 0.05:
                count *= 10
        tally[pwd] = count
    return tally


@pytest.fixture(scope="session")
def random_corpora():
    """The 200 seeded corpora shared by the oracle-equivalence suites."""
    rng = np.random.default_rng(20240817)
    out = []
    for _ in range(200):
        tally = random_tally(rng)
        out.append((tally, tally_to_corpus(tally)))
    return out


# -- optional public datasets -------------------------------------------------

LINKEDIN_DIR_VAR = "LENGTHLEAK_LINKEDIN_DIR"
LINKEDIN_FORMAT_VAR = "LENGTHLEAK_LINKEDIN_FORMAT"
ROCKYOU_TXT_VAR = "LENGTHLEAK_ROCKYOU_TXT"


@pytest.fixture(scope="session")
def linkedin_corpus():
    path = os.environ.get(LINKEDIN_DIR_VAR)
    if not path:
        pytest.skip(f"set {LINKEDIN_DIR_VAR} to the LinkedIn corpus directory")
    fmt = os.environ.get(LINKEDIN_FORMAT_VAR, "freq")
    return load_corpus_path(path, fmt)


@pytest.fixture(scope="session")
def rockyou_corpus():
    path = os.environ.get(ROCKYOU_TXT_VAR)
    if not path:
        pytest.skip(f"set {ROCKYOU_TXT_VAR} to the RockYou plaintext file")
    return load_plaintext_corpus(Path(path))
