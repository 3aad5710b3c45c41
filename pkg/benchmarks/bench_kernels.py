"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--groups 20]

Each workload is replayed on fresh engines for both backends; results are
checked for equality before timings are reported.
"""

import argparse
import random
import time

from nilhall import _pykernels
from nilhall.hallpolys import theorem_polynomials
from nilhall.polyring import IntegerEvaluator
from nilhall.presentation import new_presentation, random_consistent_t
from nilhall.symcollect import collect_symbolic

try:
    from nilhall import _ckernels
except ImportError:
    _ckernels = None


def collection_workload(module, groups, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(groups):
        G = new_presentation(5, random_consistent_t(rng))
        eng = module.Engine(5, G.relation_vectors())
        for _ in range(100):
            a = [rng.randint(-10, 10) for _ in range(5)]
            b = [rng.randint(-10, 10) for _ in range(5)]
            eng.reset_steps()
            out.append(tuple(eng.multiply(a, b)))
        for _ in range(10):
            a = [rng.randint(-10, 10) for _ in range(5)]
            eng.reset_steps()
            out.append(tuple(eng.power(a, rng.randint(-10**4, 10**4))))
        for x in range(-6, 7):
            for y in range(-6, 7):
                eng.reset_steps()
                out.append(tuple(eng.conj_power(0, 1, x, y)))
    return out


def evaluation_workload(module, seed):
    rng = random.Random(seed)
    evs = [IntegerEvaluator(p) for p in theorem_polynomials()]
    terms = [ev._terms for ev in evs]
    total = 0
    for _ in range(5000):
        point = [rng.randint(-10, 10) for _ in range(22)]
        for tm in terms:
            total += module.eval_int_terms(tm, point)
    return total


def symbolic_workload(module):
    # exercise mul_terms through polynomial products of the derivation
    p5 = collect_symbolic()[5]
    acc = 0
    for _ in range(3):
        acc += len(module.mul_terms(p5.terms, p5.terms))
    return acc


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--groups", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    workloads = [
        ("collection", lambda m: collection_workload(m, args.groups, args.seed)),
        ("evaluation", lambda m: evaluation_workload(m, args.seed)),
        ("poly-mul", symbolic_workload),
    ]
    print("%-12s %12s %12s %8s" % ("workload", "python [s]", "cython [s]", "speedup"))
    for name, work in workloads:
        times, results = {}, {}
        for label, module in backends:
            times[label], results[label] = timed(lambda: work(module), args.repeat)
        if "cython" in results and results["cython"] != results["python"]:
            raise SystemExit("backends disagree on %s" % name)
        cy = times.get("cython")
        print("%-12s %12.4f %12s %8s" % (
            name, times["python"],
            "-" if cy is None else "%.4f" % cy,
            "-" if cy is None else "%.2fx" % (times["python"] / cy)))


if __name__ == "__main__":
    main()
