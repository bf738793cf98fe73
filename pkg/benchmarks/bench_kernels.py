"""Compare the compiled and pure-Python kernels, then the two engines.

    python benchmarks/bench_kernels.py [--sizes 4096 65536] [--repeats 3]
"""
import argparse
import random
import statistics
import time

from onevar import kernels
from onevar.cli import bench


def _time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def kernel_rows(sizes, repeats, backends):
    rng = random.Random(0)
    rows = []
    for n in sizes:
        text = [rng.randrange(4) for _ in range(n)]
        keys = [tuple(rng.randrange(1000) for _ in range(3)) for _ in range(n)]
        for backend in backends:
            kernels.use_backend(backend)
            sa = kernels.suffix_array(text)
            rows.append((n, backend, "suffix_array", _time(lambda: kernels.suffix_array(text), repeats)))
            rows.append((n, backend, "rank_and_lcp", _time(lambda: kernels.rank_and_lcp(text, sa), repeats)))
            rows.append((n, backend, "radix_sort_keys", _time(lambda: kernels.radix_sort_keys(keys, 3), repeats)))
    return rows


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", type=int, nargs="+", default=[2**12, 2**14, 2**16])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--engine-sizes", type=int, nargs="+", default=[2**10, 2**12, 2**14])
    args = p.parse_args()
    before = kernels.BACKEND
    backends = ["python"] + (["cython"] if kernels.compiled_available() else [])
    rows = kernel_rows(args.sizes, args.repeats, backends)
    kernels.use_backend(before)
    print(f"{'n':>8}  {'kernel':<16}" + "".join(f"{b:>10}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    table = {}
    for n, backend, name, t in rows:
        table.setdefault((n, name), {})[backend] = t
    for (n, name), by in table.items():
        line = f"{n:>8}  {name:<16}" + "".join(f"{by[b]:>10.4f}" for b in backends)
        if len(backends) > 1:
            line += f"{by['python'] / by['cython']:>9.1f}x"
        print(line)
    print()
    print(f"{'family':<10}{'size':>8}{'engine':>10}{'time[s]':>10}{'per n':>8}")
    for family in ("power", "dense-X"):
        for r in bench(family, args.engine_sizes, repeats=args.repeats):
            print(f"{family:<10}{r['size']:>8}{r['engine']:>10}{r['wall_time']:>10.4f}{r['comparisons'] / r['input_size']:>8.2f}")


if __name__ == "__main__":
    main()
