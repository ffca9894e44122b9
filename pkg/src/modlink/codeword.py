"""LR code words of modular geodesics and links built from them.

A code word is a primitive cyclic word in positive powers of L and R with
both letters present. It is stored in standard form
``L^a1 R^b1 ... L^an R^bn`` using the rotation whose flattened letter string
is lexicographically least (``L < R``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateComponent,
    EmptyWord,
    NonPrimitiveWord,
    SingleLetterWord,
    WordSyntaxError,
)

_TOKEN = re.compile(r"([LR])(?:\^?\{([1-9][0-9]*)\}|\^?([1-9][0-9]*))?")

Syllable = tuple[int, int]


def _rotation_key(syllables: Sequence[Syllable]) -> tuple[int, ...]:
    # Lex order of flattened strings with L < R: a longer leading L-run wins,
    # then a shorter R-run, and so on syllable by syllable.
    key: list[int] = []
    for a, b in syllables:
        key.append(-a)
        key.append(b)
    return tuple(key)


def _is_proper_power(seq: Sequence) -> bool:
    """True iff ``seq`` equals ``u * k`` for some k >= 2."""
    s = tuple(seq)
    n = len(s)
    doubled = s + s
    return any(doubled[i:i + n] == s for i in range(1, n) if n % i == 0)


@dataclass(frozen=True)
class CodeWord:
    """A primitive LR code word in canonical standard form.

    ``canonical_rotation`` records the letter offset, in the source text,
    at which the canonical rotation starts; it does not take part in
    equality or hashing.
    """

    syllables: tuple[Syllable, ...]
    canonical_rotation: int = field(default=0, compare=False)

    def __post_init__(self):
        syl = tuple((int(a), int(b)) for a, b in self.syllables)
        if not syl:
            raise EmptyWord("code word has no syllables")
        if any(a < 1 or b < 1 for a, b in syl):
            raise WordSyntaxError(f"exponents must be positive: {syl}")
        if _is_proper_power(syl):
            raise NonPrimitiveWord(f"{_render(syl)} is a proper power")
        n = len(syl)
        best = min(range(n), key=lambda i: _rotation_key(syl[i:] + syl[:i]))
        offset = sum(a + b for a, b in syl[:best])
        total = sum(a + b for a, b in syl)
        object.__setattr__(self, "syllables", syl[best:] + syl[:best])
        object.__setattr__(
            self, "canonical_rotation", (self.canonical_rotation + offset) % total
        )

    @property
    def n(self) -> int:
        """Word period: the number of syllables."""
        return len(self.syllables)

    @property
    def l_exponents(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.syllables)

    @property
    def r_exponents(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.syllables)

    @property
    def letters(self) -> str:
        return "".join("L" * a + "R" * b for a, b in self.syllables)

    def __len__(self) -> int:
        return sum(a + b for a, b in self.syllables)

    def __str__(self) -> str:
        return _render(self.syllables)


def _render(syllables: Iterable[Syllable]) -> str:
    def power(letter, e):
        return letter if e == 1 else f"{letter}^{e}"

    return "".join(power("L", a) + power("R", b) for a, b in syllables)


def _tokenize(text: str) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected {text[pos]!r} at position {pos} in {text!r}")
        count = int(m.group(2) or m.group(3) or 1)
        runs.append((m.group(1), count))
        pos = m.end()
    return runs


def parse_code_word(text: str) -> CodeWord:
    """Parse ``"L^2R^3"``, ``"L2R3"``, ``"LLRRR"`` or any mix of them.

    Any cyclic rotation of the same word parses to the same value.
    """
    if not text:
        raise EmptyWord("empty word")
    tokens = _tokenize(text)
    # merge adjacent equal letters, remembering where each run starts
    runs: list[list] = []
    pos = 0
    for letter, count in tokens:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += count
        else:
            runs.append([letter, count, pos])
        pos += count
    if len(runs) == 1:
        raise SingleLetterWord(f"{text!r} uses only the letter {runs[0][0]}")
    if runs[0][0] == runs[-1][0]:
        last = runs.pop()
        runs[0][1] += last[1]
        runs[0][2] = last[2]
    if runs[0][0] == "R":
        runs = runs[1:] + runs[:1]
    syllables = tuple((runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2))
    return CodeWord(syllables, canonical_rotation=runs[0][2])


@dataclass(frozen=True)
class ModularLink:
    """Finitely many distinct code words, one per link component."""

    words: tuple[CodeWord, ...]

    def __post_init__(self):
        words = tuple(self.words)
        if not words:
            raise EmptyWord("a link needs at least one component")
        seen = set()
        for w in words:
            if w in seen:
                raise DuplicateComponent(f"component {w} appears twice")
            seen.add(w)
        object.__setattr__(self, "words", words)

    @property
    def c(self) -> int:
        return len(self.words)

    def __str__(self) -> str:
        return ", ".join(str(w) for w in self.words)


def parse_link(text: str) -> ModularLink:
    """Parse comma-separated code words, optionally wrapped in braces."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    return ModularLink(tuple(parse_code_word(part.strip()) for part in body.split(",")))


def exponent_sets(link: ModularLink) -> tuple[frozenset[int], frozenset[int]]:
    """Distinct (unlabelled) L-exponents and R-exponents of the link."""
    ls, rs = labelled_exponents(link)
    return frozenset(ls), frozenset(rs)


def labelled_exponents(link: ModularLink) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """All L- and R-exponents with multiplicity, component by component."""
    ls: list[int] = []
    rs: list[int] = []
    for w in link.words:
        ls.extend(w.l_exponents)
        rs.extend(w.r_exponents)
    return tuple(ls), tuple(rs)
