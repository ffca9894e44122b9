"""Base-order signatures and the partition of links by them."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .bounds import VolumeBound, lower_bound_distinct, lower_bound_maximal
from .codeword import ModularLink, exponent_sets, labelled_exponents, parse_link
from .errors import BoundMismatch
from .exponents import Side, maximal_exponent_set


@dataclass(frozen=True)
class BaseOrderSignature:
    """Per-component rank tuples, rank 1 being the largest exponent value of
    the whole link on that side (dense ranking, equal values share a rank).

    Components are listed sorted by their (L-tuple, R-tuple) pair, so the
    two tuple lists stay aligned.
    """

    l_tuples: tuple[tuple[int, ...], ...]
    r_tuples: tuple[tuple[int, ...], ...]


def _dense_ranks(values) -> dict[int, int]:
    return {v: i + 1 for i, v in enumerate(sorted(set(values), reverse=True))}


def base_order(link: ModularLink) -> BaseOrderSignature:
    ls, rs = labelled_exponents(link)
    l_rank, r_rank = _dense_ranks(ls), _dense_ranks(rs)
    pairs = sorted(
        (tuple(l_rank[a] for a in w.l_exponents), tuple(r_rank[b] for b in w.r_exponents))
        for w in link.words
    )
    return BaseOrderSignature(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def maximal_bound(link: ModularLink) -> VolumeBound:
    ls, rs = labelled_exponents(link)
    return lower_bound_maximal(
        len(maximal_exponent_set(ls, Side.L)), len(maximal_exponent_set(rs, Side.R))
    )


def distinct_bound(link: ModularLink) -> VolumeBound:
    a, b = exponent_sets(link)
    return lower_bound_distinct(len(a), len(b))


@dataclass(frozen=True)
class BaseOrderClass:
    members: tuple[int, ...]
    signature: BaseOrderSignature
    shared_bound: VolumeBound
    member_bounds: tuple[VolumeBound, ...]


def partition_by_base_order(links: Sequence[ModularLink]) -> list[BaseOrderClass]:
    """Group links by signature, in order of first appearance.

    The class invariant is the distinct-exponent bound; the maximal-set
    bound is reported per member because it need not be shared.
    """
    if not links:
        raise ValueError("nothing to partition")
    groups: dict[BaseOrderSignature, list[int]] = {}
    for i, link in enumerate(links):
        groups.setdefault(base_order(link), []).append(i)
    classes = []
    for sig, members in groups.items():
        shared = distinct_bound(links[members[0]])
        for i in members[1:]:
            other = distinct_bound(links[i])
            if other.coefficient != shared.coefficient:
                raise BoundMismatch(
                    f"links {members[0]} and {i} share a base order but have bounds "
                    f"{shared.coefficient} and {other.coefficient}"
                )
        classes.append(
            BaseOrderClass(
                tuple(members), sig, shared, tuple(maximal_bound(links[i]) for i in members)
            )
        )
    return classes


def parse_link_list(text: str) -> list[ModularLink]:
    """One link per line, components comma-separated; ``#`` starts a comment."""
    links = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            links.append(parse_link(line))
    return links


def read_link_file(path: str | Path) -> list[ModularLink]:
    return parse_link_list(Path(path).read_text(encoding="utf-8"))
