"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--sieve 10000000] [--tables 1000000] [--pairs 2000]
"""

import argparse
import importlib
import time

from primefig.diagram import figure_arrays


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--sieve", type=int, default=10_000_000, help="sieve limit")
    parser.add_argument("--tables", type=int, default=1_000_000, help="height/width table size")
    parser.add_argument("--pairs", type=int, default=2000, help="n_max for the subfigure pair scan")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": importlib.import_module("primefig._pykernels")}
    try:
        backends["cython"] = importlib.import_module("primefig._ckernels")
    except ImportError:
        print("compiled kernels not built; timing the fallback only")

    flat, offsets = figure_arrays(args.pairs)
    results = {}
    for name, k in backends.items():
        spf, primes = k.sieve(args.tables)
        results[name] = {
            f"sieve({args.sieve})": best_of(lambda: k.sieve(args.sieve), args.repeat),
            f"height_width_tables({args.tables})": best_of(lambda: k.height_width_tables(spf, primes), args.repeat),
            f"subfigure_violations({args.pairs}^2)": best_of(
                lambda: k.subfigure_violations(flat, offsets, 1, args.pairs + 1, args.pairs), args.repeat),
        }

    names = list(backends)
    print(f"{'kernel':<36}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for kernel in results["python"]:
        row = f"{kernel:<36}" + "".join(f"{results[n][kernel]:>11.3f}s" for n in names)
        if len(names) == 2:
            row += f"{results['python'][kernel] / results['cython'][kernel]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
