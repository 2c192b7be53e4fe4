"""Benchmark: compiled kernel backend versus the pure-Python twin.

Times the three hot scalar kernels (erfcx, Faddeeva, and the full
phi-solve used by every branch point) on representative workloads and
prints a side-by-side table.  Run from a built checkout::

    python benchmarks/bench_kernels.py
"""

import importlib
import math
import time


def _load_backends():
    backends = {}
    py = importlib.import_module("slowmode._kernels_py")
    backends["python"] = py
    try:
        compiled = importlib.import_module("slowmode._kernels")
    except ImportError:
        print("compiled backend not built; benchmarking pure Python only\n")
    else:
        backends["compiled"] = compiled
    return backends


def _time(fn, repeat: int = 3) -> float:
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _workloads(mod):
    erfcx_args = [0.05 * i for i in range(2000)]
    w_args = [
        complex(0.02 * i - 10.0, 0.25 + 0.005 * i) for i in range(1000)
    ] + [complex(0.01 * i, 0.001) for i in range(1000)]
    solve_args = [1.2533 * (i + 1) / 401.0 for i in range(400)]

    def run_erfcx():
        f = mod.erfcx
        for y in erfcx_args:
            f(y)

    def run_faddeeva():
        f = mod.faddeeva
        for z in w_args:
            f(z)

    def run_solver():
        f = mod.solve_phi
        for c in solve_args:
            f(c)

    return [
        ("erfcx x2000", run_erfcx),
        ("faddeeva x2000", run_faddeeva),
        ("solve_phi x400 (branch sweep)", run_solver),
    ]


def main() -> None:
    backends = _load_backends()
    results: dict[str, dict[str, float]] = {}
    for name, mod in backends.items():
        results[name] = {}
        for label, fn in _workloads(mod):
            fn()  # warm-up
            results[name][label] = _time(fn)

    labels = [label for label, _ in _workloads(backends["python"])]
    header = f"{'workload':<32}" + "".join(f"{n:>14}" for n in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label in labels:
        row = f"{label:<32}"
        for name in results:
            row += f"{results[name][label] * 1e3:>11.2f} ms"
        if len(results) == 2:
            ratio = results["python"][label] / results["compiled"][label]
            row += f"{ratio:>9.1f}x"
        print(row)

    # Sanity: the two backends must agree wherever both exist.
    if len(backends) == 2:
        py, cc = backends["python"], backends["compiled"]
        worst = 0.0
        for y in (0.0, 0.3, 1.0, 5.0, 30.0, 200.0):
            a, b = py.erfcx(y), cc.erfcx(y)
            worst = max(worst, abs(a - b) / abs(b))
        for z in (0.3 + 0.2j, 2.0 + 0.1j, -4.0 + 0.8j, 9.0 + 3.0j, 1.0 - 1.0j):
            a, b = py.faddeeva(z), cc.faddeeva(z)
            worst = max(worst, abs(a - b) / abs(b))
        print(f"\ncross-backend agreement: worst relative difference {worst:.3e}")


if __name__ == "__main__":
    main()
