"""Benchmark the two alignment cost-matrix backends against each other.

Usage: python3 benchmarks/bench_alignment.py [--sizes 200,700,2100] [--repeats 5]

Runs the numba-jitted kernel (unless LTGEC_DISABLE_NUMBA=1 or numba is
missing) and the vectorized numpy fallback on random Lithuanian-alphabet
string pairs of each size, reporting the best-of-N wall time per backend and
the resulting speedup. The two backends are also checked against each other
for equal outputs before timing.
"""

import argparse
import time

import numpy as np

from ltgec._kernels import _numba_matrix, dl_matrix_numpy

ALPHABET = "aąbcčdeęėfghiįyjklmnoprsštuųūvzž ,."


def encode(text: str) -> np.ndarray:
    # same representation the aligner feeds the kernels
    return np.array([ord(ch) for ch in text], dtype=np.int32)


def make_pair(size: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    chars = np.array(list(ALPHABET))
    a = "".join(rng.choice(chars, size=size))
    # perturb a copy so the pair is realistic rather than independent noise
    b = list(a)
    for _ in range(max(1, size // 50)):
        k = int(rng.integers(0, len(b)))
        b[k] = str(rng.choice(chars))
    return encode(a), encode("".join(b))


def best_of(fn, a, b, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(a, b)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="200,700,2100",
                        help="comma-separated string lengths")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(12345)
    backends = [("numpy", dl_matrix_numpy)]
    if _numba_matrix is not None:
        # trigger JIT compilation outside the timed region
        warm = encode("labas")
        _numba_matrix(warm, warm)
        backends.insert(0, ("numba", _numba_matrix))
    else:
        print("numba backend unavailable (disabled or not installed); "
              "timing numpy only")

    header = f"{'size':>6}" + "".join(f" {name + ' (ms)':>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for size in sizes:
        a, b = make_pair(size, rng)
        if len(backends) == 2:
            if not np.array_equal(backends[0][1](a, b), backends[1][1](a, b)):
                raise SystemExit(f"backend outputs differ at size {size}")
        times = [best_of(fn, a, b, args.repeats) for _, fn in backends]
        row = f"{size:>6}" + "".join(f" {t * 1e3:>12.2f}" for t in times)
        if len(times) == 2:
            row += f" {times[1] / times[0]:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
