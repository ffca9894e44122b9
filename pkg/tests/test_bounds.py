from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from modlink.bounds import (
    V_TET,
    BoundKind,
    VolumeBound,
    best_lower_bound,
    family_bounds,
    family_parameters,
    lower_bound_distinct,
    lower_bound_maximal,
)
from modlink.codeword import ModularLink, exponent_sets, labelled_exponents, parse_code_word, parse_link
from modlink.errors import DuplicateComponent, NonPrimitiveWord, NotInFamily
from modlink.exponents import maximal_exponent_set
from tests.oracles import max_subset_dfs


def test_v_tet_against_clausen():
    # 3 * Lobachevsky(pi/3) = (3/2) Cl2(2 pi/3) = Cl2(pi/3)
    with mpmath.workdps(30):
        exact = 1.5 * mpmath.clsin(2, 2 * mpmath.pi / 3)
        assert abs(exact - mpmath.clsin(2, mpmath.pi / 3)) < mpmath.mpf(10) ** -25
    assert abs(V_TET - float(exact)) < 1e-15
    assert round(V_TET, 5) == 1.01494


def test_numeric_is_coefficient_times_v_tet():
    for q in (Fraction(1, 6), Fraction(5, 12), Fraction(184), Fraction(0)):
        b = VolumeBound(q, BoundKind.LOWER_THM)
        assert b.numeric == pytest.approx(float(q) * V_TET, rel=2.3e-16, abs=0)


@pytest.mark.parametrize("a, b, coef", [(0, 0, 0), (1, 1, Fraction(1, 6)), (3, 2, Fraction(5, 12))])
def test_lower_bound_maximal(a, b, coef):
    got = lower_bound_maximal(a, b)
    assert got.coefficient == coef and got.kind is BoundKind.LOWER_THM


@pytest.mark.parametrize("a, b, coef", [(1, 2, 0), (13, 9, Fraction(1, 6)), (5, 5, 0)])
def test_lower_bound_distinct(a, b, coef):
    got = lower_bound_distinct(a, b)
    assert got.coefficient == coef and got.kind is BoundKind.LOWER_COR


@pytest.mark.parametrize(
    "word, n, lower, upper",
    [("L^13RL^7RLR", 3, Fraction(3, 12), 184), ("L^7RLR", 2, Fraction(2, 12), 128)],
)
def test_family_bounds(word, n, lower, upper):
    lo, hi = family_bounds(parse_code_word(word))
    assert parse_code_word(word).n == n
    assert (lo.coefficient, hi.coefficient) == (lower, upper)
    assert (lo.kind, hi.kind) == (BoundKind.LOWER_FAMILY, BoundKind.UPPER_FAMILY)


@pytest.mark.parametrize("word", ["L^2RLR", "L^13RL^7R^2LR", "L^10R^2L^10R^2L^10R^6"])
def test_not_in_family(word):
    with pytest.raises(NotInFamily):
        family_bounds(parse_code_word(word))


def test_family_parameters():
    assert family_parameters(parse_code_word("L^13R^2L^7R^2LR^2")) == ((13, 7, 1), 2)


@pytest.mark.parametrize(
    "link, coef, kind",
    [
        ("L^10R^2L^10R^2L^10R^6", Fraction(2, 12), BoundKind.LOWER_THM),
        ("LR", Fraction(0), BoundKind.LOWER_THM),
        ("L^6R^6L^12R^12L^18R^18", Fraction(6, 12), BoundKind.LOWER_THM),
    ],
)
def test_best_lower_bound(link, coef, kind):
    got = best_lower_bound(parse_link(link))
    assert got.coefficient == coef and got.kind is kind


def test_best_bound_oracle_for_triple_ladder():
    ls, rs = labelled_exponents(parse_link("L^6R^6L^12R^12L^18R^18"))
    assert max_subset_dfs(list(ls)) == 3 and max_subset_dfs(list(rs)) == 3


@st.composite
def links(draw):
    comps = draw(st.integers(1, 3))
    words = []
    for _ in range(comps):
        n = draw(st.integers(1, 4))
        syl = tuple((draw(st.integers(1, 40)), draw(st.integers(1, 40))) for _ in range(n))
        words.append("".join(f"L^{a}R^{b}" for a, b in syl))
    try:
        return parse_link(", ".join(words))
    except (NonPrimitiveWord, DuplicateComponent):
        return parse_link("LR")


@given(links())
def test_dominance(link):
    ls, rs = labelled_exponents(link)
    a, b = exponent_sets(link)
    thm = lower_bound_maximal(len(maximal_exponent_set(ls)), len(maximal_exponent_set(rs)))
    cor = lower_bound_distinct(len(a), len(b))
    assert thm.coefficient >= cor.coefficient
    assert best_lower_bound(link).coefficient == thm.coefficient


@given(st.integers(0, 50), st.integers(0, 50))
def test_clamping(a, b):
    assert lower_bound_distinct(a, b).coefficient >= 0
    assert lower_bound_maximal(a, b).coefficient == Fraction(a + b, 12)


@given(st.integers(1, 8), st.integers(1, 5), st.integers(6, 12), st.lists(st.integers(6, 12), min_size=7, max_size=7))
def test_family_reproduced_by_maximal_bound(n, i, last, steps):
    a = [last]
    for s in steps[: n - 1]:
        a.append(a[-1] + s)
    a.reverse()
    word = parse_code_word("".join(f"L^{x}R^{i}" for x in a))
    lo, hi = family_bounds(word)
    assert lo.coefficient == Fraction(n, 12) and hi.coefficient == 8 * (7 * n + 2)
    assert len(maximal_exponent_set(word.l_exponents)) == n
    assert lower_bound_maximal(n, 0).coefficient == lo.coefficient
    assert lo.coefficient <= hi.coefficient
