"""Mapping encrypted payload sizes to plaintext password lengths.

Sites that fail to pad password fields leak the length through a linear
relationship ``payload = overhead + bytes_per_char * length``; ASCII forms
show one byte per character, UTF-16 forms two.  This module works on
already-extracted payload sizes; packet capture is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InconsistentObservations,
    InsufficientData,
    NonIntegerProfile,
    NonIntegralLength,
    PayloadTooSmall,
)

__all__ = ["SiteProfile", "infer_length", "calibrate"]


@dataclass(frozen=True)
class SiteProfile:
    """Linear payload model for one site."""

    bytes_per_char: int
    overhead: int = 0

    def __post_init__(self):
        if self.bytes_per_char < 1:
            raise NonIntegerProfile("bytes_per_char must be a positive integer")
        if self.overhead < 0:
            raise NonIntegerProfile("overhead must be non-negative")

    def payload_for(self, length: int) -> int:
        return self.overhead + self.bytes_per_char * length


def infer_length(payload: int, profile: SiteProfile) -> int:
    """Password length behind an observed payload size.

    A payload that cannot fit one character is rejected, and a remainder
    modulo bytes_per_char signals that the profile does not match the site.
    """
    span = payload - profile.overhead
    if span < profile.bytes_per_char:
        raise PayloadTooSmall(
            f"payload {payload} below profile minimum "
            f"{profile.overhead + profile.bytes_per_char}"
        )
    if span % profile.bytes_per_char:
        raise NonIntegralLength(
            f"payload {payload} minus overhead {profile.overhead} is not a "
            f"multiple of {profile.bytes_per_char}"
        )
    return span // profile.bytes_per_char


def calibrate(observations: Iterable[Sequence[int]]) -> SiteProfile:
    """Fit a profile from (length, payload) observations.

    Solves the line exactly from the first two observations with distinct
    lengths and requires every remaining observation to sit on it.
    """
    obs = [(int(l), int(p)) for l, p in observations]
    first = None
    second = None
    for point in obs:
        if first is None:
            first = point
        elif point[0] != first[0]:
            second = point
            break
    if first is None or second is None:
        raise InsufficientData("need two observations with distinct lengths")

    (x1, y1), (x2, y2) = first, second
    dy, dx = y2 - y1, x2 - x1
    if dy % dx:
        raise NonIntegerProfile(f"slope {dy}/{dx} is not an integer")
    slope = dy // dx
    if slope < 1:
        raise NonIntegerProfile(f"slope {slope} is not positive")
    intercept = y1 - slope * x1
    if intercept < 0:
        raise NonIntegerProfile(f"negative overhead {intercept}")
    profile = SiteProfile(bytes_per_char=slope, overhead=intercept)
    for x, y in obs:
        if profile.payload_for(x) != y:
            raise InconsistentObservations(
                f"({x}, {y}) off the fitted line "
                f"payload = {intercept} + {slope} * length"
            )
    return profile
