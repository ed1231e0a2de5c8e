"""Compare the compiled and pure-Python kernels on the array entry points.

    python benchmarks/bench_kernels.py [--n 20000] [--repeat 5]
"""
import argparse
import importlib
import timeit

import numpy as np

from casimir_polder.pair import CROSS_COEFF, FREE_COEFF


def workloads(n, seed=0):
    rng = np.random.default_rng(seed)
    z = 10 ** rng.uniform(-3, 3, n)
    x = 10 ** rng.uniform(-3, 3, n)
    za, zb = rng.uniform(0.1, 10, (2, n))
    rho = rng.uniform(0, 10, n)
    return {
        "aux_fg_array": lambda k: k.aux_fg_array(z),
        "wall_brackets_array": lambda k: k.wall_brackets_array(x),
        "pair_total_array": lambda k: k.pair_total_array(za, zb, rho, FREE_COEFF, CROSS_COEFF),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=20_000, help="points per call")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = {"python": importlib.import_module("casimir_polder._pykernels")}
    try:
        backends["cython"] = importlib.import_module("casimir_polder._ckernels")
    except ImportError:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'kernel':<22}{'backend':<9}{'best [ms]':>11}{'ns/point':>11}{'speedup':>10}")
    for name, call in workloads(args.n).items():
        best = {}
        for label, mod in backends.items():
            t = min(timeit.repeat(lambda: call(mod), number=1, repeat=args.repeat))
            best[label] = t
            speed = best["python"] / t if label != "python" else 1.0
            print(f"{name:<22}{label:<9}{t * 1e3:>11.2f}{t / args.n * 1e9:>11.0f}{speed:>9.1f}x")
        if "cython" in backends:
            a = np.concatenate([np.ravel(v) for v in np.atleast_1d(call(backends["python"]))])
            b = np.concatenate([np.ravel(v) for v in np.atleast_1d(call(backends["cython"]))])
            diff = np.max(np.abs(a - b) / np.maximum(np.abs(a), np.finfo(float).tiny))
            print(f"{'':<22}max relative difference between backends: {diff:.1e}")

if __name__ == "__main__":
    main()
