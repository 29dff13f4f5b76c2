#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python twin.

Workload: every composable pair in Hom([m],[n]) x Hom([l],[m]) for the
3-dihedral family with indices up to 3, plus the matching factorizations
and duals.  Run:

    python3 benchmarks/bench_kernel.py
"""

import time

from csgroups import _kernel_py
from csgroups.core import hom_set
from csgroups.families import dihedral

try:
    from csgroups import _kernel_c
except ImportError:
    _kernel_c = None


def workload():
    fam = dihedral(3)
    jobs = []
    for n in range(3):
        for m in range(3):
            for l in range(3):
                hu = hom_set(fam, m, n)
                hv = hom_set(fam, l, m)
                rot_l = fam.rot_order(l)
                for u in hu:
                    du, (su, au) = u.delta.values, u.g.payload
                    for v in hv:
                        jobs.append((du, su, au, m, n,
                                     v.delta.values, *v.g.payload, l, rot_l))
    return jobs


def run(kernel, jobs):
    compose = kernel.compose_nf
    dual = kernel.dual_nf
    t0 = time.perf_counter()
    acc = 0
    for du, su, au, m, n, dv, sv, av, l, rot_l in jobs:
        d, a, s = compose(du, su, au, m, n, dv, sv, av, l, rot_l, 0)
        acc ^= a
    t1 = time.perf_counter()
    for du, su, au, m, n, dv, sv, av, l, rot_l in jobs[::7]:
        dual(du, su, au, m, n, 3 * (n + 1))
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1, acc


def main():
    jobs = workload()
    print(f"workload: {len(jobs)} compositions, {len(jobs[::7])} duals "
          "(3-dihedral family, indices <= 2)")
    t_py = run(_kernel_py, jobs)
    print(f"pure python : compose {t_py[0]:8.3f}s   dual {t_py[1]:8.3f}s")
    if _kernel_c is None:
        print("compiled    : not built (python setup.py build_ext --inplace)")
        return
    t_c = run(_kernel_c, jobs)
    print(f"compiled    : compose {t_c[0]:8.3f}s   dual {t_c[1]:8.3f}s")
    assert t_py[2] == t_c[2], "backends disagree"
    print(f"speedup     : compose {t_py[0] / t_c[0]:5.1f}x  dual {t_py[1] / t_c[1]:5.1f}x")


if __name__ == "__main__":
    main()
