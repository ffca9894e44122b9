"""Volume bounds for modular link complements, as exact multiples of v_tet."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .codeword import CodeWord, ModularLink, exponent_sets, labelled_exponents
from .errors import NotInFamily
from .exponents import MIN_GAP, Side, maximal_exponent_set

#: Volume of the regular ideal hyperbolic tetrahedron.
V_TET = 1.0149416064096536


class BoundKind(enum.Enum):
    LOWER_THM = "lower-thm"
    LOWER_COR = "lower-cor"
    LOWER_FAMILY = "lower-family"
    UPPER_FAMILY = "upper-family"


@dataclass(frozen=True)
class VolumeBound:
    coefficient: Fraction
    kind: BoundKind

    @property
    def numeric(self) -> float:
        return float(self.coefficient * Fraction(V_TET))

    def __str__(self) -> str:
        return f"{self.coefficient} * v_tet = {self.numeric!r} ({self.kind.value})"


def lower_bound_maximal(card_a_tilde: int, card_b_tilde: int) -> VolumeBound:
    """(|A~| + |B~|) / 12 * v_tet."""
    return VolumeBound(Fraction(card_a_tilde + card_b_tilde, 12), BoundKind.LOWER_THM)


def lower_bound_distinct(card_a: int, card_b: int) -> VolumeBound:
    """max(0, (|A| + |B| - 10) / 72) * v_tet; the raw value may be negative."""
    raw = Fraction(card_a + card_b - 10, 72)
    return VolumeBound(max(raw, Fraction(0)), BoundKind.LOWER_COR)


def family_parameters(word: CodeWord) -> tuple[tuple[int, ...], int]:
    """Return ``(a, i)`` if ``word`` is ``L^a1 R^i ... L^an R^i`` with a
    strictly decreasing by steps of at least 6; raise ``NotInFamily``.

    The canonical rotation of such a word always starts at the largest a.
    """
    a = word.l_exponents
    rs = set(word.r_exponents)
    if len(rs) != 1:
        raise NotInFamily(f"{word}: R-exponents are not constant")
    for prev, cur in zip(a, a[1:]):
        if prev - cur < MIN_GAP:
            raise NotInFamily(f"{word}: L-exponents {prev}, {cur} differ by less than {MIN_GAP}")
    return a, rs.pop()


def family_bounds(word: CodeWord) -> tuple[VolumeBound, VolumeBound]:
    """n/12 * v_tet <= Vol <= 8(7n + 2) * v_tet for the decreasing family."""
    family_parameters(word)
    n = word.n
    return (
        VolumeBound(Fraction(n, 12), BoundKind.LOWER_FAMILY),
        VolumeBound(Fraction(8 * (7 * n + 2)), BoundKind.UPPER_FAMILY),
    )


def best_lower_bound(link: ModularLink) -> VolumeBound:
    """The larger of the maximal-set bound and the distinct-exponent bound.

    Ties go to the maximal-set bound, which always dominates anyway.
    """
    ls, rs = labelled_exponents(link)
    thm = lower_bound_maximal(
        len(maximal_exponent_set(ls, Side.L)), len(maximal_exponent_set(rs, Side.R))
    )
    a, b = exponent_sets(link)
    cor = lower_bound_distinct(len(a), len(b))
    return cor if cor.coefficient > thm.coefficient else thm
