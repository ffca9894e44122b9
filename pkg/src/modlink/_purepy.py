"""Pure-Python reference kernels.

These are the hot loops of the package. ``_speedups.pyx`` mirrors every
function here with identical signatures and outputs; ``_kernels`` picks one
at import time.

Directed edges of the diagonally triangulated grid are encoded as
``(x, y, t)`` where ``(x, y)`` is the base lattice point and ``t`` is a type
code ``2 * kind + side``: kind 0 = horizontal, 1 = vertical, 2 = diagonal;
side 0 = positive crossing, 1 = negative crossing.
"""
from functools import lru_cache
from math import gcd

# (dx, dy, new_type) for t in 0..5, letter L then R. Derived from the grid
# geometry in ``walker._derive_transition``; a test keeps the two in sync.
TRANSITIONS = (
    ((0, 0, 4), (1, 0, 2)),    # H+
    ((0, -1, 5), (0, -1, 3)),  # H-
    ((0, 1, 0), (0, 0, 5)),    # V+
    ((-1, 0, 1), (-1, 0, 4)),  # V-
    ((0, 0, 3), (0, 1, 0)),    # D+
    ((1, 0, 2), (0, 0, 1)),    # D-
)


def mechanical_xy(p, q):
    """XY cutting sequence of slope p/q for p, q >= 0, one period."""
    if q == 0:
        return "X"
    out = []
    prev = 0
    for j in range(1, q + 1):
        cur = (p * j) // q
        out.append("Y")
        out.append("X" * (cur - prev))
        prev = cur
    return "".join(out)


_SAME = {"YX": "L", "XY": "R", "YY": "RL", "XX": "LR"}
_OPPOSITE = {"YX": "RR", "XY": "LL", "YY": "RL", "XX": "LR"}


def substitute(xy, opposite):
    table = _OPPOSITE if opposite else _SAME
    n = len(xy)
    return "".join(table[xy[j] + xy[(j + 1) % n]] for j in range(n))


@lru_cache(maxsize=8192)
def _periodic_lr(p, q, opposite):
    return substitute(mechanical_xy(p, q), opposite)


def linear_witness(target, bound):
    """First slope (p, q, opposite) whose periodic LR word contains target.

    Slopes run over coprime p, q >= 1 ordered by p + q, then p, with the
    same-sign case tried before the opposite-sign case.
    """
    n = len(target)
    for s in range(2, bound + 1):
        for p in range(1, s):
            q = s - p
            if gcd(p, q) != 1:
                continue
            for opposite in (False, True):
                u = _periodic_lr(p, q, opposite)
                reps = -(-n // len(u)) + 1
                if target in u * reps:
                    return (p, q, opposite)
    return None


def trace_states(letters, x, y, t):
    states = [(x, y, t)]
    for ch in letters:
        dx, dy, t = TRANSITIONS[t][0 if ch == "L" else 1]
        x += dx
        y += dy
        states.append((x, y, t))
    return states


def _half(x, y):
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def winding_turns(xs, ys, cx, cy):
    """Complete signed turns of the polyline about (cx, cy), truncated to zero.

    Integer coordinates only. The polyline must avoid the center.
    """
    n = len(xs)
    if n < 2:
        return 0
    crossings = 0
    ax, ay = xs[0] - cx, ys[0] - cy
    sx, sy = ax, ay
    for i in range(1, n):
        bx, by = xs[i] - cx, ys[i] - cy
        cross = ax * by - ay * bx
        if ay < 0 <= by and cross > 0:
            crossings += 1
        elif by < 0 <= ay and cross < 0:
            crossings -= 1
        ax, ay = bx, by
    # sign of arg(end) - arg(start), both taken in [0, 2pi)
    hs, he = _half(sx, sy), _half(ax, ay)
    if hs != he:
        frac = 1 if he > hs else -1
    else:
        c = sx * ay - sy * ax
        frac = (c > 0) - (c < 0)
    if crossings > 0 and frac < 0:
        return crossings - 1
    if crossings < 0 and frac > 0:
        return crossings + 1
    return crossings
