"""Compare the compiled and pure-Python kernels on the two hot paths.

Usage: python benchmarks/bench_backends.py [--repeat N]

Each row reports the best wall time over N runs of the same workload on
both backends plus the speedup, after asserting the outputs are equal.
"""

from __future__ import annotations

import argparse
import time

from coprobber.generators import generate, random_gnp
from coprobber.solver import available_backends, solve_k_copwin
from coprobber.embedding import face_count, random_scheme


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_solver(rows, repeat):
    cases = [
        ("petersen k=2", generate("petersen"), 2),
        ("petersen k=3", generate("petersen"), 3),
        ("dodecahedron k=2", generate("dodecahedron"), 2),
        ("gnp(24,30%) k=2", random_gnp(24, 0.3, seed=1), 2),
    ]
    for label, g, k in cases:
        results = {
            b: solve_k_copwin(g, k, backend=b) for b in available_backends()
        }
        tables = [r.ranks.tolist() for r in results.values()]
        assert all(t == tables[0] for t in tables), label
        times = {
            b: best_time(lambda b=b: solve_k_copwin(g, k, backend=b), repeat)
            for b in available_backends()
        }
        rows.append((f"solve {label}", times))


def bench_faces(rows, repeat):
    cases = []
    for seed, spec in enumerate(
        (("dodecahedron", ()), ("icosahedron", ()), ("complete", (9,)))
    ):
        g = generate(*spec)
        cases.append((f"{spec[0]} scheme", random_scheme(g, seed=seed)))
    for label, s in cases:
        counts = {b: face_count(s, backend=b) for b in available_backends()}
        assert len(set(counts.values())) == 1, label

        def burst(b):
            for _ in range(200):
                face_count(s, backend=b)

        times = {
            b: best_time(lambda b=b: burst(b), repeat)
            for b in available_backends()
        }
        rows.append((f"faces x200 {label}", times))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) < 2:
        print("compiled kernel unavailable; nothing to compare")
        return 0

    rows: list[tuple[str, dict]] = []
    bench_solver(rows, args.repeat)
    bench_faces(rows, args.repeat)

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + "  speedup")
    for label, times in rows:
        cells = "  ".join(f"{times[b] * 1000:9.2f}ms" for b in backends)
        speedup = times["python"] / times["cython"]
        print(f"{label:<{width}}  {cells}  {speedup:6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
