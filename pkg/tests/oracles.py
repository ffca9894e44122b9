"""Brute-force references, written independently of the package code."""
from itertools import combinations


def feasible(values) -> bool:
    return all(v >= 6 for v in values) and all(
        abs(x - y) >= 6 for x, y in combinations(values, 2)
    )


def max_subset_plain(labelled) -> int:
    """Largest feasible subset of labelled positions, trying every subset."""
    n = len(labelled)
    best = 0
    for mask in range(1 << n):
        chosen = [labelled[i] for i in range(n) if mask >> i & 1]
        if len(chosen) > best and feasible(chosen):
            best = len(chosen)
    return best


def max_subset_dfs(labelled) -> int:
    """Same maximum, enumerating only feasible subsets of positions.

    Feasibility is hereditary, so every feasible subset is reached by
    extending a feasible subset one position at a time.
    """
    n = len(labelled)
    best = 0

    def grow(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, n):
            v = labelled[i]
            if v >= 6 and all(abs(v - c) >= 6 for c in chosen):
                chosen.append(v)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def mechanical_by_events(p: int, q: int) -> str:
    """Cutting sequence of direction (q, p) by sorting crossing times.

    The line is t -> (q t, p t + e) with a tiny positive e; crossing x = i
    at t = i/q gives Y, crossing y = j at t = (j - e)/p gives X. Times are
    compared exactly as fractions with e = 1/(2(p+1)(q+1)).
    """
    from fractions import Fraction

    e = Fraction(1, 2 * (p + 1) * (q + 1))
    events = [(Fraction(i, q), "Y") for i in range(1, q + 1)]
    events += [((j - e) / p, "X") for j in range(1, p + 1)]
    events.sort()
    return "".join(letter for _, letter in events)


def cyclic_equal(u: str, v: str) -> bool:
    return len(u) == len(v) and u in v + v


_PAIRS = {
    False: {"YX": "L", "XY": "R", "YY": "RL", "XX": "LR"},
    True: {"YX": "RR", "XY": "LL", "YY": "RL", "XX": "LR"},
}


def lr_word_oracle(p: int, q: int, opposite: bool) -> str:
    xy = mechanical_by_events(p, q)
    n = len(xy)
    return "".join(_PAIRS[opposite][xy[i] + xy[(i + 1) % n]] for i in range(n))


def linear_oracle(letters: str, bound: int) -> bool:
    from math import gcd

    for total in range(2, bound + 1):
        for p in range(1, total):
            q = total - p
            if gcd(p, q) != 1:
                continue
            for opposite in (False, True):
                u = lr_word_oracle(p, q, opposite)
                reps = len(letters) // len(u) + 2
                if letters in u * reps:
                    return True
    return False
