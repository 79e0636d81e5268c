"""Compare the compiled bitset kernel against the numpy fallback.

Times full subgroup-lattice enumeration (the dominant workload) on a few
representative groups, constructing a fresh group per run so no cached
lattice or kernel leaks between backends.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from indecomp import kernels
from indecomp.construct import (
    abelian,
    dihedral,
    generalized_quaternion,
    symmetric,
)
from indecomp.lattice import all_subgroups

CASES = [
    ("S(4)", lambda: symmetric(4)),
    ("S(5)", lambda: symmetric(5)),
    ("Q(8)", lambda: generalized_quaternion(8)),
    ("D(30)", lambda: dihedral(30)),
    ("A(2,2,2,2,2)", lambda: abelian([2, 2, 2, 2, 2])),
]


def time_lattice(builder, backend: str, repeat: int) -> tuple[float, int]:
    best = float("inf")
    count = 0
    for _ in range(repeat):
        with kernels.use_backend(backend):
            group = builder()
            start = time.perf_counter()
            lat = all_subgroups(group)
            best = min(best, time.perf_counter() - start)
            count = len(lat)
    return best, count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["py"]
    if kernels.has_compiled():
        backends.insert(0, "c")
    else:
        print("compiled kernel not available; timing the fallback only\n")

    header = f"{'group':<14}{'subgroups':>10}" + "".join(
        f"{b + ' (s)':>12}" for b in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, builder in CASES:
        times = {}
        count = 0
        for backend in backends:
            times[backend], count = time_lattice(builder, backend, args.repeat)
        row = f"{name:<14}{count:>10}" + "".join(
            f"{times[b]:>12.4f}" for b in backends
        )
        if len(backends) == 2:
            row += f"{times['py'] / times['c']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
