"""ab-codes of arcs in the once-punctured annulus.

Letters are written ``a A b B`` for a, a^-1, b, b^-1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import WordSyntaxError

_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_FORWARD = "Ba"   # b^-1 a
_BACKWARD = "Ab"  # a^-1 b


@dataclass(frozen=True)
class AbWord:
    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - set(_INVERSE)
        if bad:
            raise WordSyntaxError(f"ab-word letters are a, A, b, B; got {sorted(bad)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    @property
    def is_reduced(self) -> bool:
        return all(_INVERSE[x] != y for x, y in zip(self.letters, self.letters[1:]))


def reduce(word: AbWord) -> AbWord:
    stack: list[str] = []
    for ch in word.letters:
        if stack and stack[-1] == _INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    return AbWord("".join(stack))


def last_winding_number(word: AbWord) -> int:
    """Signed repetition count of the last (b^-1 a)^m or (a^-1 b)^m block.

    The block is located by its last pair and extended backwards as far as
    the pattern repeats; (a^-1 b)^m counts as -m. Zero when neither pair
    occurs. The word should already be reduced.
    """
    s = word.letters
    for i in range(len(s) - 2, -1, -1):
        pair = s[i:i + 2]
        if pair in (_FORWARD, _BACKWARD):
            m = 1
            while i - 2 * m >= 0 and s[i - 2 * m:i - 2 * m + 2] == pair:
                m += 1
            return m if pair == _FORWARD else -m
    return 0


class Separation(enum.Enum):
    PROVABLY_DISTINCT = "ProvablyDistinct"
    INCONCLUSIVE = "Inconclusive"


def distinct_classes(word1: AbWord, word2: AbWord) -> Separation:
    """Different last winding numbers certify different homotopy classes.

    Equal numbers prove nothing, so equality of classes is never claimed.
    """
    if last_winding_number(word1) != last_winding_number(word2):
        return Separation.PROVABLY_DISTINCT
    return Separation.INCONCLUSIVE
