"""Time the pure-Python and compiled kernels on the same workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from qlrinv._kernels import available_backends
from qlrinv.oracle import enumerate_sst
from qlrinv.shapes import SkewShape, partitions_up_to, removable_rows


def workloads(seed=7):
    rng = random.Random(seed)
    tableaux = [T for lam in partitions_up_to(7, max_length=4)
                for T in enumerate_sst(SkewShape(lam), 4) if T.rows]
    sample = rng.sample(tableaux, 300)
    extracts = []
    for T in sample:
        rows = removable_rows(T.outer)
        extracts.append((T.columns(), (rows[-1],)))
    inserts = [(T.columns(), rng.randint(1, 5)) for T in sample]
    shapes = list(partitions_up_to(7, max_length=4))
    return inserts, extracts, shapes


def bench(kernels, inserts, extracts, shapes, repeat):
    def run_insert():
        for cols, x in inserts:
            kernels.column_insert(cols, x)

    def run_extract():
        for cols, rows in extracts:
            kernels.reverse_extract(cols, rows)

    def run_sst():
        for lam in shapes:
            kernels.sst_rows(lam, (), 4)

    return {name: min(timeit.repeat(fn, number=1, repeat=repeat))
            for name, fn in (("column_insert", run_insert),
                             ("reverse_extract", run_extract),
                             ("sst_rows", run_sst))}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    data = workloads()
    backends = available_backends()
    results = {name: bench(k, *data, args.repeat) for name, k in backends.items()}
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name in results)
          + ("     speedup" if len(results) == 2 else ""))
    for op in results["python"]:
        line = f"{op:<16}" + "".join(f"{r[op] * 1e3:>10.2f}ms" for r in results.values())
        if "cython" in results:
            line += f"{results['python'][op] / results['cython'][op]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
