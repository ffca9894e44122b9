"""Maximal L-/R-exponent sets.

A maximal exponent set is a largest subset of a side's labelled exponents
whose values are all >= 6 and pairwise at least 6 apart. Since the gap rule
forbids repeated values, it is enough to work with distinct values; the
smallest-first greedy sweep is then optimal (exchange argument).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

MIN_EXPONENT = 6
MIN_GAP = 6


class Side(enum.Enum):
    L = "L"
    R = "R"


@dataclass(frozen=True)
class MaximalExponentSet:
    values: frozenset[int]
    side: Side = Side.L

    def __len__(self) -> int:
        return len(self.values)

    def sorted(self) -> list[int]:
        return sorted(self.values)


def maximal_exponent_set(exponents: Iterable[int], side: Side = Side.L) -> MaximalExponentSet:
    chosen: list[int] = []
    for v in sorted(set(exponents)):
        if v < MIN_EXPONENT:
            continue
        if not chosen or v - chosen[-1] >= MIN_GAP:
            chosen.append(v)
    return MaximalExponentSet(frozenset(chosen), side)


def greedy_cardinality_bound(distinct_count: int) -> Fraction:
    """(|A| - 5) / 6, the guaranteed size of the greedy set. May be negative."""
    return Fraction(distinct_count - 5, 6)
