#!/usr/bin/env python3
"""Benchmark: pure-Python vs Cython-compiled normalization kernel.

The workload normalizes decode-after-encode composites for a spread of
synthesized retractions, plus ground observations of generated
inhabitants; this is what dominates the package's own test time.

Run:  python benchmarks/bench_normalize.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from encodability import _nf
from encodability.normalize import term_to_kernel, type_to_kernel
from encodability.synthesis import synth_retraction
from encodability.terms import App, Lam, Var
from encodability.typesyntax import Arrow, parse_type
from encodability.verify import generate_inhabitant

try:
    from encodability import _nf_c
except ImportError:
    _nf_c = None

PAIRS = [
    ("N*N", "N->N"),
    ("N*N*N*N", "N->N"),
    ("N->N", "(N->N)*(N->N)->N"),
    ("(N->N)->N", "(N*N->N)->N"),
    ("N*(N->N)", "((N->N)->N)->N"),
    ("(N->N)->N", "((N->N)->N)*((N->N)->N)"),
]


def build_workload():
    work = []
    for a, b in PAIRS:
        s, t = parse_type(a), parse_type(b)
        r = synth_retraction(s, t, verify=False)
        probe = Lam("x", s, App(r.dec, App(r.enc, Var("x"))))
        work.append((term_to_kernel(probe), type_to_kernel(Arrow(s, s))))
        for seed in range(4):
            inhabitant = generate_inhabitant(s, seed, fuel=5)
            wrapped = App(r.enc, inhabitant)
            work.append((term_to_kernel(wrapped), type_to_kernel(t)))
    return work


def run(kernel, work, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for term, ty in work:
            kernel.normalize(term, ty)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    work = build_workload()
    print(f"workload: {len(work)} normalizations")

    pure = run(_nf, work, args.repeat)
    print(f"pure python : {pure * 1000:8.2f} ms")
    if _nf_c is None:
        print("compiled    : not built (install with a C compiler available)")
        return
    compiled = run(_nf_c, work, args.repeat)
    print(f"compiled    : {compiled * 1000:8.2f} ms")
    print(f"speedup     : {pure / compiled:8.2f}x")

    for (term, ty) in work:
        assert _nf.normalize(term, ty) == _nf_c.normalize(term, ty), "kernel mismatch"
    print("outputs identical across kernels")


if __name__ == "__main__":
    main()
