"""Time the compiled kernels against the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit
from math import gcd

from modlink import _purepy

try:
    from modlink import _speedups
except ImportError:
    _speedups = None

SLOPES = [(p, q) for p in range(1, 60) for q in range(1, 60) if p + q <= 60 and gcd(p, q) == 1]
WORDS = [_purepy.substitute(_purepy.mechanical_xy(p, q), False) for p, q in SLOPES[::7]]
WINDING = ["L" + "R" * m + "L" for m in range(6, 21)]
LONG = ("LRRRRRRRLLRLRRLLLLLLLLR" * 40)


def cases(mod):
    def mechanical():
        for p, q in SLOPES:
            mod.mechanical_xy(p, q)

    def linear_hits():
        for w in WORDS:
            mod.linear_witness(w, 2 * len(w) + 4)

    def linear_misses():
        for w in WINDING:
            mod.linear_witness(w, 3 * (len(w) - 2))

    def walk():
        states = mod.trace_states(LONG, 0, 0, 0)
        xs = [3 * (2 * s[0] + 1) for s in states]
        ys = [3 * (2 * s[1] + 1) for s in states]
        mod.winding_turns(xs, ys, 0, 0)

    return {"mechanical_xy": mechanical, "linear hits": linear_hits,
            "linear misses": linear_misses, "trace + winding": walk}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the pure backend is available")
    backends = {"python": _purepy}
    if _speedups is not None:
        backends["cython"] = _speedups
    results = {}
    for name, mod in backends.items():
        for label, fn in cases(mod).items():
            fn()  # warm caches so both backends are timed in steady state
            results[name, label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'kernel':<18}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for label in cases(_purepy):
        py = results["python", label] * 1e3
        if "cython" in backends:
            cy = results["cython", label] * 1e3
            print(f"{label:<18}{py:>14.2f}{cy:>14.2f}{py / cy:>9.1f}x")
        else:
            print(f"{label:<18}{py:>14.2f}{'-':>14}{'-':>10}")


if __name__ == "__main__":
    main()
