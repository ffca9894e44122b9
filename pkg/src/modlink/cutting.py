"""XY cutting sequences of rational slopes and their LR images.

A line of slope p/q (direction (q, p)) crossing the unit grid gives an X at
every horizontal grid line and a Y at every vertical one. With a small
positive intercept no lattice point is hit, and one period reads

    Y X^(f(1) - f(0)) Y X^(f(2) - f(1)) ... ,   f(j) = floor(p * j / q),

which is the integer mechanical-word recurrence used here (no floating
point). Words are cyclic; compare them with :func:`cyclic_equal`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from . import _kernels
from .errors import NotCoprime, WordSyntaxError, ZeroDirection


class SignCase(enum.Enum):
    SAME = "same"
    OPPOSITE = "opposite"
    AXIS = "axis"


@dataclass(frozen=True)
class XYWord:
    letters: str
    slope: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if not self.letters:
            raise WordSyntaxError("XY word must be nonempty")
        bad = set(self.letters) - {"X", "Y"}
        if bad:
            raise WordSyntaxError(f"XY word has letters outside X, Y: {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    isolated_letter: Optional[str] = None
    block_length_k: Optional[int] = None


def cyclic_equal(u: str, v: str) -> bool:
    return len(u) == len(v) and u in v + v


def sign_case(p: int, q: int) -> SignCase:
    if p == 0 or q == 0:
        return SignCase.AXIS
    return SignCase.SAME if (p > 0) == (q > 0) else SignCase.OPPOSITE


def xy_from_slope(p: int, q: int) -> XYWord:
    if p == 0 and q == 0:
        raise ZeroDirection("slope direction (0, 0)")
    if gcd(p, q) != 1:
        raise NotCoprime(f"{p}/{q} is not in lowest terms")
    if p == 0:
        return XYWord("Y", (p, q))
    return XYWord(_kernels.mechanical_xy(abs(p), abs(q)), (p, q))


def _blocks(letters: str, letter: str) -> list[int]:
    """Cyclic run lengths of ``letter``; assumes the other letter occurs."""
    other = "Y" if letter == "X" else "X"
    start = letters.index(other)
    rotated = letters[start:] + letters[:start]
    return [len(run) for run in rotated.split(other) if run]


def check_admissible(word: XYWord) -> AdmissibilityReport:
    """Isolated-letter / two-block-length test, tried with Y isolated first.

    Primitivity is not part of this check.
    """
    letters = word.letters
    present = set(letters)
    if len(present) == 1:
        # "X" or "Y" alone: the axis directions
        if len(letters) == 1:
            return AdmissibilityReport(True, letters, 0)
        return AdmissibilityReport(False)
    for isolated, blocky in (("Y", "X"), ("X", "Y")):
        if max(_blocks(letters, isolated)) != 1:
            continue
        lengths = _blocks(letters, blocky)
        k = min(lengths)
        if max(lengths) <= k + 1:
            return AdmissibilityReport(True, isolated, k)
    return AdmissibilityReport(False)


def lr_from_xy(word: XYWord | str, case: SignCase) -> str:
    """Pairwise substitution over cyclically adjacent letters.

    same:      YX -> L,  XY -> R,  YY -> RL, XX -> LR
    opposite:  YX -> RR, XY -> LL, YY -> RL, XX -> LR
    axis:      LR regardless of the word
    """
    if case is SignCase.AXIS:
        return "LR"
    letters = word.letters if isinstance(word, XYWord) else XYWord(word).letters
    return _kernels.substitute(letters, case is SignCase.OPPOSITE)


def lr_from_slope(p: int, q: int) -> str:
    return lr_from_xy(xy_from_slope(p, q), sign_case(p, q))
