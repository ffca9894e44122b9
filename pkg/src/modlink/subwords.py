"""Winding subwords and linear LR words."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .codeword import CodeWord, ModularLink, labelled_exponents
from .cutting import SignCase
from .errors import MissingWinding, WordSyntaxError
from .exponents import Side, maximal_exponent_set

WINDING_PERIOD = 6


class Direction(enum.Enum):
    CLOCKWISE = "clockwise"                  # L R^m L
    COUNTER_CLOCKWISE = "counter-clockwise"  # R L^m R


def winding_decomposition(m: int) -> tuple[int, int]:
    """Split a central exponent as m = 6k + r with k >= 1 and 0 <= r <= 5."""
    if m < WINDING_PERIOD:
        raise ValueError(f"central exponent {m} is below {WINDING_PERIOD}")
    return divmod(m, WINDING_PERIOD)


@dataclass(frozen=True)
class WindingSubword:
    direction: Direction
    central_exponent: int
    k: int
    r: int
    position: int

    @property
    def letters(self) -> str:
        if self.direction is Direction.CLOCKWISE:
            return "L" + "R" * self.central_exponent + "L"
        return "R" + "L" * self.central_exponent + "R"


def find_winding_subwords(word: CodeWord) -> list[WindingSubword]:
    """All maximal runs of length >= 6, ordered by position.

    ``position`` is the index (in the canonical letters) of the flanking
    letter that opens the subword, taken cyclically.
    """
    total = len(word)
    found = []
    offset = 0
    for a, b in word.syllables:
        if a >= WINDING_PERIOD:
            k, r = winding_decomposition(a)
            found.append(WindingSubword(Direction.COUNTER_CLOCKWISE, a, k, r, (offset - 1) % total))
        if b >= WINDING_PERIOD:
            k, r = winding_decomposition(b)
            found.append(WindingSubword(Direction.CLOCKWISE, b, k, r, offset + a - 1))
        offset += a + b
    found.sort(key=lambda w: w.position)
    return found


@dataclass(frozen=True)
class Linearity:
    linear: bool
    witness: Optional[tuple[int, int]] = None
    case: Optional[SignCase] = None

    def __bool__(self) -> bool:
        return self.linear


def default_search_bound(length: int) -> int:
    return 2 * length + 4


def periodic_lr_word(p: int, q: int, case: SignCase) -> str:
    """One period of the LR image of the cutting sequence of |p|/|q|."""
    return _kernels.substitute(_kernels.mechanical_xy(abs(p), abs(q)), case is SignCase.OPPOSITE)


def is_witness(letters: str, p: int, q: int) -> bool:
    """Does ``letters`` occur (wrapping allowed) in the LR word of slope p/q?"""
    case = SignCase.SAME if (p > 0) == (q > 0) else SignCase.OPPOSITE
    u = periodic_lr_word(p, q, case)
    return letters in u * (-(-len(letters) // len(u)) + 1)


def is_linear(letters: str, search_bound: Optional[int] = None, cyclic: bool = False) -> Linearity:
    """Bounded search for a slope whose LR word contains ``letters``.

    Slopes p/q with p, q >= 1 coprime and p + q <= ``search_bound`` are
    tried in order of p + q, both sign cases each. A negative q in the
    witness marks the opposite-sign case. With ``cyclic=True`` the input is
    read as a closed word and two periods of it must occur.

    A ``False`` answer only means no witness exists below the bound.
    """
    if not letters or set(letters) - {"L", "R"}:
        raise WordSyntaxError(f"expected a nonempty word over L, R: {letters!r}")
    if search_bound is None:
        search_bound = default_search_bound(len(letters))
    target = letters * 2 if cyclic else letters
    hit = _kernels.linear_witness(target, search_bound)
    if hit is None:
        return Linearity(False)
    p, q, opposite = hit
    if opposite:
        return Linearity(True, (p, -q), SignCase.OPPOSITE)
    return Linearity(True, (p, q), SignCase.SAME)


def winding_exponent_correspondence(
    link: ModularLink,
) -> dict[tuple[Side, int], tuple[int, WindingSubword]]:
    """Attach to every value of A~ and B~ a winding subword carrying it.

    Keys are ``(side, value)``; values are ``(component index, subword)``.
    L-exponents give counter-clockwise subwords, R-exponents clockwise ones.
    """
    ls, rs = labelled_exponents(link)
    wanted = [(Side.L, v) for v in maximal_exponent_set(ls, Side.L).sorted()]
    wanted += [(Side.R, v) for v in maximal_exponent_set(rs, Side.R).sorted()]
    per_word = [find_winding_subwords(w) for w in link.words]
    out = {}
    for side, value in wanted:
        direction = Direction.COUNTER_CLOCKWISE if side is Side.L else Direction.CLOCKWISE
        for idx, subs in enumerate(per_word):
            hit = next(
                (s for s in subs if s.direction is direction and s.central_exponent == value),
                None,
            )
            if hit is not None:
                out[(side, value)] = (idx, hit)
                break
        else:
            raise MissingWinding(f"no winding subword for {side.value}-exponent {value}")
    return out
