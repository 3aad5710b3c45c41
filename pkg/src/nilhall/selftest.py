"""Randomized self-verification suites behind ``nilhall selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List

from nilhall import collector as col
from nilhall import hallpolys as hp
from nilhall.polyring import evaluate
from nilhall.presentation import (consistency_algebraic, consistency_direct,
                                  new_presentation, random_consistent_t,
                                  random_inconsistent_t, random_t)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = "%s %s (%d checks)" % (status, self.name, self.checks)
        return text + (": " + self.detail if self.detail else "")


def _vec(rng, bound, n=5):
    return [rng.randint(-bound, bound) for _ in range(n)]


def oracle_equivalence(rng, trials, bound, t_bound):
    for k in range(trials):
        G = new_presentation(5, random_consistent_t(rng, t_bound))
        a, b = _vec(rng, bound), _vec(rng, bound)
        h, c = hp.hall_multiply(G, a, b), col.collect_multiply(G, a, b)
        if h != c:
            return k + 1, "t=%s a=%s b=%s hall=%s oracle=%s" % (G.t.to_json(), a, b, h, c)
    return trials, ""


def associativity(rng, trials, bound, t_bound):
    for k in range(trials):
        G = new_presentation(5, random_consistent_t(rng, t_bound))
        a, b, c = _vec(rng, bound), _vec(rng, bound), _vec(rng, bound)
        m = hp.hall_multiply
        if m(G, m(G, a, b), c) != m(G, a, m(G, b, c)):
            return k + 1, "t=%s a=%s b=%s c=%s" % (G.t.to_json(), a, b, c)
    return trials, ""


def inverses(rng, trials, bound, t_bound):
    zero = (0,) * 5
    for k in range(trials):
        G = new_presentation(5, random_consistent_t(rng, t_bound))
        a = _vec(rng, bound)
        h = hp.hall_inverse(G, a)
        if (hp.hall_multiply(G, a, h) != zero or hp.hall_multiply(G, h, a) != zero
                or col.collect_invert(G, a) != h):
            return k + 1, "t=%s a=%s" % (G.t.to_json(), a)
    return trials, ""


def powers(rng, trials, bound, t_bound):
    for k in range(trials):
        G = new_presentation(5, random_consistent_t(rng, t_bound))
        a = _vec(rng, bound)
        x = rng.randint(-6, 6)
        if hp.hall_power(G, a, x) != col.collect_power(G, a, x):
            return k + 1, "t=%s a=%s x=%d" % (G.t.to_json(), a, x)
    return trials, ""


def conjugation(rng, trials, bound, t_bound):
    table = hp.r_table()
    checks = 0
    for _ in range(max(1, trials // 10)):
        t = random_consistent_t(rng, t_bound)
        G = new_presentation(5, t)
        point = t.as_point()
        for (i, j), entries in sorted(table.items()):
            x, y = rng.randint(-6, 6), rng.randint(-6, 6)
            checks += 1
            tail = col.conjugate_power(G, j, i, x, y)
            at = dict(point, x=x, y=y)
            expected = tuple(int(evaluate(p, at)) for _, p in entries[1:])
            if tail != expected:
                return checks, "t=%s (i,j)=(%d,%d) x=%d y=%d" % (t.to_json(), i, j, x, y)
    return checks, ""


def consistency(rng, trials, bound, t_bound):
    checks = 0
    for _ in range(max(1, trials // 5)):
        for t in (random_consistent_t(rng, t_bound), random_inconsistent_t(rng, t_bound),
                  random_t(rng, 4, t_bound)):
            checks += 1
            G = new_presentation(t.n, t)
            if consistency_algebraic(G) != consistency_direct(G).verdict:
                return checks, "t=%s" % t.to_json()
    return checks, ""


def derivation(rng, trials, bound, t_bound):
    from nilhall.symcollect import derive
    _, _, report = derive()
    return 5, "" if report.equivalent else "; ".join(report.lines())


SUITES: List[Callable] = [oracle_equivalence, associativity, inverses, powers,
                          conjugation, consistency, derivation]


def run_all(trials=500, seed=0, bound=10, t_bound=3) -> List[SuiteResult]:
    results = []
    for idx, suite in enumerate(SUITES):
        rng = random.Random("%d:%d" % (seed, idx))
        try:
            checks, detail = suite(rng, trials, bound, t_bound)
        except hp.NonIntegerValue as exc:
            checks, detail = 0, "non-integer value: %s" % exc
        results.append(SuiteResult(suite.__name__.replace("_", "-"), not detail,
                                   checks, detail))
    return results
