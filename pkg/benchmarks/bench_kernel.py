"""Benchmark the compiled kernel against the pure Python twin.

Three workloads, all deterministic: reduced homology of random complexes,
upper-Koszul Betti tables of random splittable ideals, and full oracle
tables for edge ideals of random graphs (the subset-restriction route).
Caches are cleared between runs so the comparison is honest.

Run:  python benchmarks/bench_kernel.py [--count N]
"""

from __future__ import annotations

import argparse
import time
from random import Random

import vertexsplit
from vertexsplit import kernel
from vertexsplit.complexes import complex_of_ideal
from vertexsplit.corpus import random_complex, random_graph, random_splittable_ideal
from vertexsplit.graphs import edge_ideal
from vertexsplit.homology import QQ, hochster_betti, koszul_betti


def workload_homology(scale: int):
    rng = Random(1)
    complexes = [random_complex(7, 8, rng) for _ in range(scale * 400)]

    def run():
        total = 0
        for delta in complexes:
            dims = kernel.homology_dims(delta.sorted_facets(), 0)
            total += sum(dims)
        return total

    return "reduced homology, random complexes on 7 vertices", run


def workload_koszul(scale: int):
    rng = Random(2)
    ideals = [random_splittable_ideal(7, rng, max_gens=12)[0]
              for _ in range(scale * 150)]

    def run():
        total = 0
        for ideal in ideals:
            total += sum(koszul_betti(ideal, QQ).entries.values())
        return total

    return "upper-Koszul tables, random splittable ideals", run


def workload_hochster(scale: int):
    rng = Random(3)
    graphs = [random_graph(6, 0.4, rng) for _ in range(scale * 100)]
    ideals = [edge_ideal(G) for G in graphs if G.edges]

    def run():
        total = 0
        for ideal in ideals:
            table = hochster_betti(complex_of_ideal(ideal), QQ)
            total += sum(table.entries.values())
        return total

    return "subset-restriction tables, random graph edge ideals", run


def measure(run) -> tuple[float, int]:
    vertexsplit.clear_caches()
    start = time.perf_counter()
    checksum = run()
    return time.perf_counter() - start, checksum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=5,
                        help="workload scale factor")
    args = parser.parse_args()

    backends = kernel.available_backends()
    print(f"available backends: {', '.join(backends)}")
    if len(backends) < 2:
        print("compiled kernel not built; benchmarking the pure backend only")

    for factory in (workload_homology, workload_koszul, workload_hochster):
        label, run = factory(args.count)
        print(f"\n{label}")
        times = {}
        sums = {}
        for name in backends:
            kernel.set_backend(name)
            times[name], sums[name] = measure(run)
            print(f"  {name:>7}: {times[name]:8.3f}s  (checksum {sums[name]})")
        if len(set(sums.values())) > 1:
            raise SystemExit("BACKEND DISAGREEMENT: " + repr(sums))
        if "c" in times and "python" in times and times["c"] > 0:
            print(f"  speedup: {times['python'] / times['c']:.1f}x")
    kernel.set_backend(backends[-1] if "c" not in backends else "c")


if __name__ == "__main__":
    main()
