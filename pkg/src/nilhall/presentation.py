"""Presentations G(t) of torsion-free nilpotent groups of Hirsch length <= 5.

G(t) has generators g_1, ..., g_n and relations

    [g_j, g_i] = g_{j+1}^t_{i,j,j+1} ... g_n^t_{i,j,n}     (1 <= i < j <= n)

with the commutator convention [u, v] = u^-1 v^-1 u v, so that
g_j g_i = g_i g_j [g_j, g_i].
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

Triple = Tuple[int, int, int]

ALL_TRIPLES: Tuple[Triple, ...] = tuple(combinations(range(1, 6), 3))


class BadShape(ValueError):
    """Structure constants do not fit the requested Hirsch length."""


class Inconsistent(ValueError):
    """An operation that needs a consistent presentation got an inconsistent one."""


def triples(n: int) -> List[Triple]:
    return list(combinations(range(1, n + 1), 3))


def triple_key(ijk: Triple) -> str:
    return "%d%d%d" % ijk


@dataclass(frozen=True)
class StructureConstants:
    n: int
    t: Mapping[Triple, int]

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= 5:
            raise BadShape("Hirsch length must be in 1..5, got %r" % (self.n,))
        full = {}
        for key, val in dict(self.t).items():
            ijk = _as_triple(key)
            i, j, k = ijk
            if not (1 <= i < j < k <= self.n):
                raise BadShape("index triple %s invalid for n=%d" % (triple_key(ijk), self.n))
            if ijk in full:
                raise BadShape("duplicate triple %s" % triple_key(ijk))
            if not isinstance(val, int) or isinstance(val, bool):
                raise BadShape("t%s must be an integer" % triple_key(ijk))
            full[ijk] = val
        for ijk in triples(self.n):
            full.setdefault(ijk, 0)
        object.__setattr__(self, "t", full)

    def __getitem__(self, key) -> int:
        ijk = _as_triple(key)
        if ijk in self.t:
            return self.t[ijk]
        if ijk in ALL_TRIPLES:
            return 0
        raise KeyError(key)

    def padded(self) -> Dict[Triple, int]:
        """All ten constants, with those involving indices > n set to 0."""
        return {ijk: self.t.get(ijk, 0) for ijk in ALL_TRIPLES}

    def as_point(self) -> Dict[str, int]:
        return {"t" + triple_key(ijk): v for ijk, v in self.padded().items()}

    def to_json(self) -> str:
        return json.dumps({"n": self.n,
                           "t": {triple_key(k): v for k, v in sorted(self.t.items())}})


def _as_triple(key) -> Triple:
    if isinstance(key, str):
        s = key[1:] if key.startswith("t") else key
        if len(s) != 3 or not s.isdigit():
            raise BadShape("malformed triple key %r" % (key,))
        return (int(s[0]), int(s[1]), int(s[2]))
    try:
        i, j, k = key
    except (TypeError, ValueError):
        raise BadShape("malformed triple key %r" % (key,)) from None
    return (int(i), int(j), int(k))


def conditions(t: StructureConstants) -> Tuple[int, int]:
    """The two consistency expressions; both vanish iff G(t) is consistent (n=5).

    Returns (t123*t345, t124*t345 + t145*t234 - t134*t245).
    """
    c = t.padded()
    first = c[1, 2, 3] * c[3, 4, 5]
    second = c[1, 2, 4] * c[3, 4, 5] + c[1, 4, 5] * c[2, 3, 4] - c[1, 3, 4] * c[2, 4, 5]
    return first, second


# relation ids by generator triple / pair, 1-based
OVERLAP_IDS = {(4, 3, 1): "R1", (4, 2, 1): "R2", (3, 2, 1): "R3", (4, 3, 2): "R4"}
INVERSE_IDS = {(2, 1): "R5", (3, 1): "R6", (4, 1): "R7",
               (3, 2): "R8", (4, 2): "R9", (4, 3): "R10"}
CENTRAL_OVERLAPS = [(5, j, i) for (i, j) in combinations(range(1, 5), 2)]
CENTRAL_INVERSES = [(5, i) for i in range(1, 5)]
CENTRAL_IDS = {key: "C5" + chr(ord("a") + idx)
               for idx, key in enumerate(CENTRAL_OVERLAPS + CENTRAL_INVERSES)}


def relation_id(key) -> str:
    return OVERLAP_IDS.get(key) or INVERSE_IDS.get(key) or CENTRAL_IDS[key]


@dataclass(frozen=True)
class ConsistencyReport:
    verdict: bool
    failures: List[Tuple[str, Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)

    def failing_ids(self) -> List[str]:
        return [f[0] for f in self.failures]


@dataclass(frozen=True)
class GroupPresentation:
    constants: StructureConstants

    @property
    def n(self) -> int:
        return self.constants.n

    @property
    def t(self) -> StructureConstants:
        return self.constants

    @cached_property
    def consistent(self) -> bool:
        return consistency_algebraic(self)

    def require_consistent(self):
        if not self.consistent:
            first, second = conditions(self.constants)
            raise Inconsistent(
                "presentation is inconsistent: t123*t345=%d, "
                "t124*t345+t145*t234-t134*t245=%d" % (first, second))

    def relation_vectors(self) -> List[List[Optional[List[int]]]]:
        """0-based table: ``rels[i][j]`` is the exponent vector of [g_j, g_i]."""
        n = self.n
        rels: List[List[Optional[List[int]]]] = [[None] * n for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                vec = [0] * n
                for k in range(j + 1, n + 1):
                    vec[k - 1] = self.constants[(i, j, k)]
                rels[i - 1][j - 1] = vec
        return rels

    @cached_property
    def engine(self):
        # unchecked engine; collector functions enforce consistency
        from nilhall._backend import Engine
        return Engine(self.n, self.relation_vectors())

    @cached_property
    def report(self) -> ConsistencyReport:
        return consistency_direct(self)


def new_presentation(n: int, t) -> GroupPresentation:
    if isinstance(t, StructureConstants):
        if t.n != n:
            raise BadShape("constants are shaped for n=%d, not %d" % (t.n, n))
        constants = t
    else:
        constants = StructureConstants(n, dict(t))
    g = GroupPresentation(constants)
    g.consistent  # fill cache at construction time
    return g


def consistency_algebraic(G: GroupPresentation) -> bool:
    if G.n <= 4:
        return True
    return conditions(G.constants) == (0, 0)


def consistency_direct(G: GroupPresentation) -> ConsistencyReport:
    """Evaluate every overlap and inverse relation by concrete collection."""
    n = G.n
    eng = G.engine
    e = eng.unit
    failures = []

    def check(key, left, right):
        if left != right:
            failures.append((relation_id(key), tuple(left), tuple(right)))

    for k in range(n, 0, -1):
        for j in range(k - 1, 0, -1):
            for i in range(j - 1, 0, -1):
                eng.reset_steps()
                # (g_k g_j) g_i
                kj = eng.multiply(e(k - 1), e(j - 1))
                left = eng.multiply(kj, e(i - 1))
                # g_k (g_j g_i)
                ji = eng.multiply(e(j - 1), e(i - 1))
                right = eng.multiply(e(k - 1), ji)
                check((k, j, i), left, right)
    for k in range(2, n + 1):
        for i in range(1, k):
            eng.reset_steps()
            # g_k = (g_k g_i^-1) g_i
            kinv = eng.multiply(e(k - 1), e(i - 1, -1))
            left = eng.multiply(kinv, e(i - 1))
            check((k, i), left, e(k - 1))
    ordered = sorted(failures, key=lambda f: _id_order(f[0]))
    return ConsistencyReport(verdict=not failures, failures=ordered)


def _id_order(rid: str):
    if rid.startswith("R"):
        return (0, int(rid[1:]))
    return (1, rid)


def inverse_conjugate_table(G: GroupPresentation) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    """Tails c with g_j g_i^-1 = g_i^-1 g_j g_{j+1}^c_{j+1} ... g_n^c_n, keyed (j, i)."""
    G.require_consistent()
    eng = G.engine
    table = {}
    for i in range(1, G.n + 1):
        for j in range(i + 1, G.n + 1):
            eng.reset_steps()
            conj = eng.conj_power(i - 1, j - 1, 1, -1)
            table[(j, i)] = tuple(conj[j:])
    return table


# -- sampling ---------------------------------------------------------------

def random_t(rng: random.Random, n: int = 5, bound: int = 3) -> StructureConstants:
    return StructureConstants(n, {ijk: rng.randint(-bound, bound) for ijk in triples(n)})


def random_consistent_t(rng: random.Random, bound: int = 3) -> StructureConstants:
    """Random t in [-bound, bound]^10 satisfying both consistency conditions.

    Half the draws take t345 = 0, half take t123 = 0 with t345 != 0, so both
    components of the variety are exercised.
    """
    r = lambda: rng.randint(-bound, bound)
    while True:
        t = {ijk: r() for ijk in ALL_TRIPLES}
        if rng.random() < 0.5:
            t[3, 4, 5] = 0
            # need t145*t234 = t134*t245
            if t[1, 3, 4] != 0:
                num = t[1, 4, 5] * t[2, 3, 4]
                if num % t[1, 3, 4] == 0 and abs(num // t[1, 3, 4]) <= bound:
                    t[2, 4, 5] = num // t[1, 3, 4]
                else:
                    t[rng.choice([(1, 4, 5), (2, 3, 4)])] = 0
                    t[2, 4, 5] = 0
            elif t[1, 4, 5] * t[2, 3, 4] != 0:
                t[rng.choice([(1, 4, 5), (2, 3, 4)])] = 0
        else:
            t[1, 2, 3] = 0
            t[3, 4, 5] = rng.choice([v for v in range(-bound, bound + 1) if v])
            num = t[1, 3, 4] * t[2, 4, 5] - t[1, 4, 5] * t[2, 3, 4]
            if num % t[3, 4, 5] != 0 or abs(num // t[3, 4, 5]) > bound:
                continue
            t[1, 2, 4] = num // t[3, 4, 5]
        sc = StructureConstants(5, t)
        assert conditions(sc) == (0, 0)
        return sc


def random_inconsistent_t(rng: random.Random, bound: int = 3) -> StructureConstants:
    while True:
        sc = random_t(rng, 5, bound)
        if conditions(sc) != (0, 0):
            return sc


# -- group spec files -------------------------------------------------------

def load_group_spec(text: str) -> GroupPresentation:
    """Parse the JSON group spec ``{"n": 5, "t": {"123": 1, ...}}``."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise BadShape("group spec must be a JSON object")
    unknown = set(data) - {"n", "t"}
    if unknown:
        raise BadShape("unknown keys in group spec: %s" % ", ".join(sorted(unknown)))
    if "n" not in data:
        raise BadShape("group spec needs \"n\"")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise BadShape("\"n\" must be an integer")
    raw = data.get("t", {})
    if not isinstance(raw, dict):
        raise BadShape("\"t\" must be an object")
    valid = {triple_key(ijk) for ijk in triples(n)} if 1 <= n <= 5 else set()
    t = {}
    for key, val in raw.items():
        if key not in valid:
            raise BadShape("unknown structure constant key %r for n=%r" % (key, n))
        t[key] = val
    return new_presentation(n, t)


def read_group_spec(path: str) -> GroupPresentation:
    with open(path, encoding="utf-8") as fh:
        return load_group_spec(fh.read())
