"""Time the compiled kernels against the numpy fallback on real generator matrices.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from ringcode import _kernels_py
from ringcode.binary import gray_image
from ringcode.construction import DefiningSetSpec, gray_generator_bits, materialize, pack_rows

try:
    from ringcode import _kernels as compiled
except ImportError:
    compiled = None

SPAN_CASES = [
    DefiningSetSpec(5, "T1", (1, 2, 3), (2, 3, 4), "left"),
    DefiningSetSpec(6, "T4", (1, 2), (3, 4), "left"),
    DefiningSetSpec(8, "T5", (1, 2), (3,), "left"),
    DefiningSetSpec(8, "T4", (1,), (2, 3), "right"),
]
MINIMAL_CASES = [
    DefiningSetSpec(8, "T4", (1,), (2, 3), "right"),
    DefiningSetSpec(9, "T3", (1, 2), (2, 3, 4, 5, 6, 7, 8), "right"),
    DefiningSetSpec(6, "T3", (1, 2, 3, 4, 5, 6), (1, 2), "left"),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        print("compiled extension not built; only the numpy fallback is timed")

    print(f"{'span_weights':40s} {'numpy':>10s} {'cython':>10s} {'speedup':>8s}")
    for spec in SPAN_CASES:
        bits = gray_generator_bits(materialize(spec))
        rows = pack_rows(bits)
        label = f"{spec.side} {spec.type} m={spec.m} ({bits.shape[0]} rows, n={bits.shape[1]})"
        t_py, w_py = best_of(lambda: _kernels_py.span_weights(rows), args.repeat)
        line = f"{label:40s} {t_py:10.4f}"
        if compiled is not None:
            t_c, w_c = best_of(lambda: compiled.span_weights(rows), args.repeat)
            assert np.array_equal(w_py, w_c)
            line += f" {t_c:10.4f} {t_py / t_c:7.1f}x"
        print(line)

    print(f"\n{'nested_pair (minimality scan)':40s} {'numpy':>10s} {'cython':>10s} {'speedup':>8s}")
    for spec in MINIMAL_CASES:
        code = gray_image(spec)
        weights = code.weights()
        label = f"{spec.side} {spec.type} m={spec.m} (k={code.k})"
        t_py, r_py = best_of(lambda: _kernels_py.nested_pair(weights), args.repeat)
        line = f"{label:40s} {t_py:10.4f}"
        if compiled is not None:
            t_c, r_c = best_of(lambda: compiled.nested_pair(weights), args.repeat)
            assert r_py == r_c
            line += f" {t_c:10.4f} {t_py / t_c:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
