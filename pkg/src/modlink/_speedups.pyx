# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_purepy``."""
from libc.stdlib cimport free, malloc

cdef int[6][2][3] _TABLE
_TABLE[0][0][:] = [0, 0, 4]
_TABLE[0][1][:] = [1, 0, 2]
_TABLE[1][0][:] = [0, -1, 5]
_TABLE[1][1][:] = [0, -1, 3]
_TABLE[2][0][:] = [0, 1, 0]
_TABLE[2][1][:] = [0, 0, 5]
_TABLE[3][0][:] = [-1, 0, 1]
_TABLE[3][1][:] = [-1, 0, 4]
_TABLE[4][0][:] = [0, 0, 3]
_TABLE[4][1][:] = [0, 1, 0]
_TABLE[5][0][:] = [1, 0, 2]
_TABLE[5][1][:] = [0, 0, 1]

TRANSITIONS = tuple(
    tuple(tuple(_TABLE[t][k][i] for i in range(3)) for k in range(2))
    for t in range(6)
)


cdef long long _gcd(long long a, long long b):
    while b:
        a, b = b, a % b
    return a


cdef bytearray _mechanical(long long p, long long q):
    cdef bytearray out = bytearray()
    cdef long long j, cur, prev = 0, k
    if q == 0:
        out.append(88)  # X
        return out
    for j in range(1, q + 1):
        cur = (p * j) // q
        out.append(89)  # Y
        for k in range(cur - prev):
            out.append(88)
        prev = cur
    return out


cdef bytes _substitute(bytearray xy, bint opposite):
    cdef Py_ssize_t n = len(xy), j
    cdef unsigned char a, b
    cdef bytearray out = bytearray()
    for j in range(n):
        a = xy[j]
        b = xy[(j + 1) % n]
        if a == 89 and b == 88:      # YX
            if opposite:
                out += b"RR"
            else:
                out.append(76)
        elif a == 88 and b == 89:    # XY
            if opposite:
                out += b"LL"
            else:
                out.append(82)
        elif a == 89:                # YY
            out += b"RL"
        else:                        # XX
            out += b"LR"
    return bytes(out)


def mechanical_xy(long long p, long long q):
    return _mechanical(p, q).decode("ascii")


def substitute(str xy, bint opposite):
    return _substitute(bytearray(xy.encode("ascii")), opposite).decode("ascii")


cdef Py_ssize_t _fill_lr(long long p, long long q, bint opposite,
                         unsigned char *xy, unsigned char *lr):
    """Periodic LR word of slope p/q into ``lr``; returns its length."""
    cdef long long j, k, cur, prev = 0
    cdef Py_ssize_t n = 0, m = 0, i
    cdef unsigned char a, b
    for j in range(1, q + 1):
        cur = (p * j) // q
        xy[n] = 89
        n += 1
        for k in range(cur - prev):
            xy[n] = 88
            n += 1
        prev = cur
    for i in range(n):
        a = xy[i]
        b = xy[i + 1] if i + 1 < n else xy[0]
        if a == 89 and b == 88:
            if opposite:
                lr[m] = 82; lr[m + 1] = 82; m += 2
            else:
                lr[m] = 76; m += 1
        elif a == 88 and b == 89:
            if opposite:
                lr[m] = 76; lr[m + 1] = 76; m += 2
            else:
                lr[m] = 82; m += 1
        elif a == 89:
            lr[m] = 82; lr[m + 1] = 76; m += 2
        else:
            lr[m] = 76; lr[m + 1] = 82; m += 2
    return m


cdef bint _occurs_periodic(const unsigned char *t, Py_ssize_t n,
                           const unsigned char *u, Py_ssize_t m):
    """Is t a factor of the bi-infinite word ...uuu...?"""
    cdef Py_ssize_t start, i, pos
    for start in range(m):
        pos = start
        for i in range(n):
            if t[i] != u[pos]:
                break
            pos += 1
            if pos == m:
                pos = 0
        else:
            return True
    return False


def linear_witness(str target, long long bound):
    cdef bytes t = target.encode("ascii")
    cdef const unsigned char *tp = t
    cdef Py_ssize_t n = len(t), m
    cdef long long s, p, q
    cdef int side
    cdef unsigned char *xy = <unsigned char *> malloc(bound + 1)
    cdef unsigned char *lr = <unsigned char *> malloc(2 * bound + 2)
    if xy == NULL or lr == NULL:
        free(xy)
        free(lr)
        raise MemoryError()
    try:
        for s in range(2, bound + 1):
            for p in range(1, s):
                q = s - p
                if _gcd(p, q) != 1:
                    continue
                for side in range(2):
                    m = _fill_lr(p, q, side, xy, lr)
                    if _occurs_periodic(tp, n, lr, m):
                        return (p, q, bool(side))
        return None
    finally:
        free(xy)
        free(lr)


def trace_states(str letters, long long x, long long y, int t):
    cdef list states = [(x, y, t)]
    cdef Py_ssize_t i
    cdef int k
    cdef bytes b = letters.encode("ascii")
    for i in range(len(b)):
        k = 0 if b[i] == 76 else 1
        x += _TABLE[t][k][0]
        y += _TABLE[t][k][1]
        t = _TABLE[t][k][2]
        states.append((x, y, t))
    return states


cdef inline int _half(long long x, long long y):
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def winding_turns(xs, ys, long long cx, long long cy):
    cdef Py_ssize_t n = len(xs), i
    cdef long long crossings = 0, ax, ay, bx, by, sx, sy, cross, c
    cdef int hs, he, frac
    if n < 2:
        return 0
    ax = xs[0] - cx
    ay = ys[0] - cy
    sx, sy = ax, ay
    for i in range(1, n):
        bx = xs[i] - cx
        by = ys[i] - cy
        cross = ax * by - ay * bx
        if ay < 0 <= by and cross > 0:
            crossings += 1
        elif by < 0 <= ay and cross < 0:
            crossings -= 1
        ax, ay = bx, by
    hs = _half(sx, sy)
    he = _half(ax, ay)
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
