"""Symbolic collection: re-derive the Hall polynomials from the rewriting table.

The loop runs collection from the left with polynomial exponents.  It
starts from the word g_1^a_1 ... g_5^a_5 g_1^b_1 ... g_5^b_5, with g_5
central, and finishes with the five polynomials p_1..p_5.  Afterwards the
result is reduced modulo t123*t345.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from nilhall.hallpolys import HallSystem, r_table
from nilhall.polyring import (ZERO, Polynomial, evaluate, parse, reduce_lex,
                              substitute, var)
from nilhall.presentation import random_consistent_t

__all__ = [
    "MalformedTable", "collect_symbolic", "reduce_by_consistency",
    "compare_with_theorem", "ComparisonReport", "CONSISTENCY_RELATIONS",
    "derive",
]

CONSISTENCY_RELATIONS = (
    parse("t123*t345"),
    parse("t124*t345 + t145*t234 - t134*t245"),
)


class MalformedTable(KeyError):
    pass


@dataclass
class SymbolicRun:
    system: HallSystem
    pops: int


def collect_symbolic(table=None, max_pops: int = 10**4, return_pops: bool = False):
    """Replay the collection loop symbolically and return the unreduced system."""
    if table is None:
        table = r_table()
    for i in range(1, 5):
        for j in range(i + 1, 5):
            if (i, j) not in table:
                raise MalformedTable("rewriting table lacks entry (%d, %d)" % (i, j))

    a = [var("a%d" % i) for i in range(1, 6)]
    b = [var("b%d" % i) for i in range(1, 6)]
    v = list(a)
    v[4] = v[4] + b[4]
    stack: List[Tuple[int, Polynomial]] = [(i, b[i - 1]) for i in range(4, 0, -1)]
    pops = 0
    while stack:
        pops += 1
        if pops > max_pops:
            raise RuntimeError("symbolic collection exceeded %d pops" % max_pops)
        i, c = stack.pop()
        if c.is_zero():
            continue
        v[i - 1] = v[i - 1] + c
        for j in range(4, i, -1):
            vj = v[j - 1]
            for k, rpoly in reversed(table[i, j]):
                m = substitute(rpoly, {"x": vj, "y": c})
                if k == 5:
                    v[4] = v[4] + m
                elif not m.is_zero():
                    stack.append((k, m))
            v[j - 1] = ZERO
    system = HallSystem(tuple(v))
    if return_pops:
        return SymbolicRun(system, pops)
    return system


def reduce_by_consistency(sys: HallSystem, both: bool = False) -> HallSystem:
    """Reduce every p_i modulo t123*t345 (or both consistency relations)."""
    rels = CONSISTENCY_RELATIONS if both else CONSISTENCY_RELATIONS[:1]
    return HallSystem(tuple(reduce_lex(p, rels) for p in sys))


@dataclass
class PolyComparison:
    index: int
    identical: bool
    difference: Polynomial
    vanishes_on_variety: Optional[bool] = None


@dataclass
class ComparisonReport:
    entries: List[PolyComparison] = field(default_factory=list)

    @property
    def identical(self) -> bool:
        return all(e.identical for e in self.entries)

    @property
    def equivalent(self) -> bool:
        return all(e.identical or e.vanishes_on_variety for e in self.entries)

    def lines(self) -> List[str]:
        out = []
        for e in self.entries:
            if e.identical:
                out.append("p%d: identical" % e.index)
            else:
                verdict = "vanishes" if e.vanishes_on_variety else "DOES NOT vanish"
                out.append("p%d: differs by %s; difference %s on consistent points"
                           % (e.index, e.difference, verdict))
        return out


def random_variety_point(rng: random.Random, bound: int = 10) -> Dict[str, int]:
    point = random_consistent_t(rng).as_point()
    for name in ("a", "b"):
        for i in range(1, 6):
            point["%s%d" % (name, i)] = rng.randint(-bound, bound)
    return point


def compare_with_theorem(derived: HallSystem, stated: HallSystem,
                         points: int = 200, seed: int = 0) -> ComparisonReport:
    rng = random.Random(seed)
    sample = [random_variety_point(rng) for _ in range(points)]
    report = ComparisonReport()
    for idx, (d, s) in enumerate(zip(derived, stated), start=1):
        diff = d - s
        if diff.is_zero():
            report.entries.append(PolyComparison(idx, True, diff))
        else:
            vanishes = all(evaluate(diff, pt) == 0 for pt in sample)
            report.entries.append(PolyComparison(idx, False, diff, vanishes))
    return report


def derive(both: bool = False) -> Tuple[HallSystem, HallSystem, ComparisonReport]:
    """Run the full pipeline against the stated polynomials."""
    from nilhall.hallpolys import theorem_polynomials
    derived = reduce_by_consistency(collect_symbolic(), both=both)
    stated = theorem_polynomials()
    return derived, stated, compare_with_theorem(derived, stated)
