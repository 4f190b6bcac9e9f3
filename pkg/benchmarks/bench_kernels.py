"""Benchmark the pure-Python kernels against the compiled extension.

Times the two raw kernels (minimalize, intersect_rows) and two
end-to-end operations that lean on them (split_decompose,
enumerate_minimal_covers) under each implementation, then prints a
comparison table.  Workloads are seeded, so runs are repeatable.

Usage: python3 benchmarks/bench_kernels.py [--repeats N] [--seed S]
"""

import argparse
import random
import time

from graphideals import kernels
from graphideals.decompose import split_decompose
from graphideals.graphs import enumerate_minimal_covers, weighted_edge_ideal
from graphideals.monomials import MonomialIdeal, VariableContext
from graphideals.verify import random_weighted_graph


def make_vectors(rng, count, dim, max_exp):
    return [
        tuple(rng.randint(0, max_exp) for _ in range(dim)) for _ in range(count)
    ]


def make_ideal(rng, dim, gens, max_exp):
    ctx = VariableContext.of_dimension(dim)
    rows = [
        tuple(rng.randint(0, max_exp) for _ in range(dim)) for _ in range(gens)
    ]
    return MonomialIdeal.from_exponents(ctx, [r for r in rows if any(r)])


def build_workloads(seed):
    rng = random.Random(seed)
    vec_sets = [make_vectors(rng, 400, 6, 6) for _ in range(6)]
    ideal_pairs = [
        (make_ideal(rng, 5, 12, 5), make_ideal(rng, 5, 12, 5)) for _ in range(20)
    ]
    graphs = [
        random_weighted_graph(rng, max_vertices=6, max_weight=3, min_vertices=6)
        for _ in range(12)
    ]
    return {
        "minimalize (400 vecs, dim 6)": lambda: [
            kernels.minimalize(vs) for vs in vec_sets
        ],
        "intersect_rows (12x12, dim 5)": lambda: [
            kernels.intersect_rows(a.rows, b.rows) for a, b in ideal_pairs
        ],
        "split_decompose (6-vertex graphs)": lambda: [
            split_decompose(weighted_edge_ideal(g)) for g in graphs
        ],
        "enumerate_minimal_covers (6-vertex)": lambda: [
            enumerate_minimal_covers(g) for g in graphs
        ],
    }


def best_of(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5, help="timing repeats, best kept")
    ap.add_argument("--seed", type=int, default=12050, help="workload seed")
    args = ap.parse_args()

    impls = kernels.available()
    if "cython" not in impls:
        print("compiled extension not importable; timing pure Python only")

    workloads = build_workloads(args.seed)
    timings = {}
    for impl in impls:
        kernels.use(impl)
        for name, fn in workloads.items():
            fn()  # warm caches before timing
            timings[(impl, name)] = best_of(fn, args.repeats)

    width = max(len(n) for n in workloads)
    cols = "".join(f"{impl:>12}" for impl in impls)
    header = f"{'workload':<{width}}{cols}"
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name in workloads:
        row = f"{name:<{width}}"
        for impl in impls:
            row += f"{timings[(impl, name)] * 1000:>10.2f}ms"
        if len(impls) == 2:
            ratio = timings[("python", name)] / timings[("cython", name)]
            row += f"{ratio:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
