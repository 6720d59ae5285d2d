#!/usr/bin/env python3
"""Benchmark of the two integer search kernels (numba vs numpy).

Runs the same certified searches through both fast paths and reports wall
times plus the speedup.  Result lists are compared for equality, so this
doubles as a large randomized agreement check.

Usage:
    python benchmarks/bench_search.py [--repeats N]

The numba path includes jit compilation on the first call; a warm-up run
is performed so the table shows steady-state times.
"""

import argparse
import time
from fractions import Fraction

from bihomcheck.discovery import (
    AlgebraMapPairTarget,
    DerivationTarget,
    RBTarget,
    SearchSpec,
    search,
)
from bihomcheck.exactlin import BilinearOp, LinearMap
from bihomcheck.kernels import HAVE_NUMBA
from bihomcheck.structures import (
    AlphaPowerDerivation,
    AlphaPowerRB,
    BiHomAlgebra,
)

F = Fraction


def truncated_poly3() -> BiHomAlgebra:
    """Unital span of 1, x, x^2 with x^3 = 0."""
    mu = BilinearOp.from_products(3, {
        (0, 0): (1, 0, 0),
        (0, 1): (0, 1, 0), (1, 0): (0, 1, 0),
        (0, 2): (0, 0, 1), (2, 0): (0, 0, 1),
        (1, 1): (0, 0, 1),
    })
    ident = LinearMap.identity(3)
    return BiHomAlgebra(mu, ident, ident, unit=(F(1), F(0), F(0)))


def cases():
    id3 = LinearMap.identity(3)
    wide = tuple(F(c) for c in (-2, -1, 0, 1, 2))
    upper = tuple((i, j) for i in range(3) for j in range(3) if i <= j)
    poly = truncated_poly3()
    yield ("derivations on 1,x,x^2 over {-2..2}  (5^9 candidates)",
           SearchSpec(DerivationTarget(AlphaPowerDerivation(id3, 0)),
                      coefficients=wide),
           poly)
    yield ("weight-zero operators on 1,x,x^2 over {-2..2}  (5^9 candidates)",
           SearchSpec(RBTarget(AlphaPowerRB(id3, 0)), coefficients=wide),
           poly)
    yield ("upper-triangular map pairs on 1,x,x^2 over {-1,0,1}  (3^12)",
           SearchSpec(AlgebraMapPairTarget(), support=upper),
           poly)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if not HAVE_NUMBA:
        print("numba not importable: benchmarking the numpy path only")

    print(f"{'case':<62} " + " ".join(f"{b:>10}" for b in backends)
          + f" {'speedup':>8} {'found':>6}")
    for desc, spec, ambient in cases():
        times = {}
        results = {}
        for backend in backends:
            search(spec, ambient, backend=backend)  # warm-up / jit compile
            best = float("inf")
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                results[backend] = search(spec, ambient, backend=backend)
                best = min(best, time.perf_counter() - t0)
            times[backend] = best
        assert all(r == results[backends[0]] for r in results.values()), \
            "backends disagree"
        row = " ".join(f"{times[b]:>9.3f}s" for b in backends)
        speedup = (f"{times['numpy'] / times['numba']:>7.1f}x"
                   if "numba" in times else "     n/a")
        print(f"{desc:<62} {row} {speedup} {len(results[backends[0]]):>6}")


if __name__ == "__main__":
    main()
