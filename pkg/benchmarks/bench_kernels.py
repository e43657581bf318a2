#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback on the
two hot loops: the conjugation-orbit partition of the whole semidirect
product, and the full-group subgroup-conjugacy scan. Outputs of the two
backends are cross-checked for equality while timing.

Usage:
    python benchmarks/bench_kernels.py [--instance gl3f2|s3-c2] [--repeat N]
"""

import argparse
import time

from permchar._kernel import get_module
from permchar.gassmann import catalog_get
from permchar.tilde import tilde_build, tilde_lift_subgroup


def build_tables(instance):
    group, h, hprime = catalog_get(instance).build()
    t, ht = tilde_build(group, h, 3)
    ng = group.order
    gmul = [group.mul(a, b) for a in range(ng) for b in range(ng)]
    ginv = [group.inv(a) for a in range(ng)]
    sigma = [j for g in range(ng) for j in t.action.sigma_of(g)]
    htp = tilde_lift_subgroup(t, hprime)
    mask = bytearray(t.order)
    for x in htp.elements:
        mask[x] = 1
    return t, (3, t.n, ng, gmul, ginv, sigma), list(t.generator_indices), \
        list(ht.generator_indices), mask


def bench(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instance", default="gl3f2", choices=["gl3f2", "s3-c2"])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    t, ctor_args, group_gens, sub_gens, mask = build_tables(args.instance)
    print("instance %s: |G~| = %d (l=3, n=%d)" % (args.instance, t.order, t.n))

    backends = []
    for name in ("py", "c"):
        mod = get_module(name)
        if mod is None:
            print("%-3s: not built (install with Cython available)" % name)
            continue
        backends.append((name, mod))

    results = {}
    for name, mod in backends:
        t0 = time.perf_counter()
        kern = mod.TildeKernel(*ctor_args)
        t_build = time.perf_counter() - t0
        t_part, partition = bench(lambda: kern.class_partition(group_gens),
                                  args.repeat)
        t_scan, witness = bench(
            lambda: kern.subgroup_conjugacy_scan(sub_gens, mask), args.repeat)
        results[name] = (t_build, t_part, t_scan, partition, witness)
        print("%-3s: build %7.3fs   class_partition %7.3fs   "
              "conjugacy_scan %7.3fs   (classes=%d, witness=%d)"
              % (name, t_build, t_part, t_scan, len(partition[1]), witness))

    if "py" in results and "c" in results:
        py, c = results["py"], results["c"]
        assert list(py[3][0]) == list(c[3][0]), "class maps differ!"
        assert py[3][1] == c[3][1] and py[3][2] == c[3][2], "reps/sizes differ!"
        assert py[4] == c[4], "scan witnesses differ!"
        print("outputs identical across backends")
        print("speedup: class_partition x%.1f, conjugacy_scan x%.1f"
              % (py[1] / c[1], py[2] / c[2]))


if __name__ == "__main__":
    main()
