"""Closed-form Hall polynomials for G(t), n <= 5, and fast arithmetic with them.

The multiplication polynomials p_1..p_5 satisfy

    (g_1^a_1 ... g_5^a_5)(g_1^b_1 ... g_5^b_5) = g_1^p_1(a,b) ... g_5^p_5(a,b)

on every consistent presentation G(t).  Alongside them live the
sub-systems used to derive them: the product and power polynomials of
G_2 = <g_2, ..., g_5>, the conjugation polynomials for g_2^x g_1^y, and
the full rewriting table ``r_table``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from nilhall.polyring import (IntegerEvaluator, Polynomial, const, point_vector,
                              s2_of, s3_of, substitute, var)
from nilhall.presentation import GroupPresentation, Inconsistent, StructureConstants

__all__ = [
    "HallSystem", "G2System", "ConjugationSystem", "NonIntegerValue",
    "theorem_polynomials", "g2_polynomials", "conjugation_polynomials",
    "r_table", "hall_multiply", "hall_inverse", "hall_power",
    "hall_commutator",
]


class NonIntegerValue(ArithmeticError):
    """A Hall polynomial produced a non-integer; means a transcription bug."""


@dataclass(frozen=True)
class HallSystem:
    p: Tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.p)

    def __getitem__(self, i: int) -> Polynomial:
        """1-based access, ``sys[5]`` is p_5."""
        return self.p[i - 1]


@dataclass(frozen=True)
class G2System:
    f: Dict[int, Polynomial]
    k: Dict[int, Polynomial]


@dataclass(frozen=True)
class ConjugationSystem:
    r: Polynomial
    s: Polynomial
    t: Polynomial
    R: Polynomial
    S: Polynomial
    T: Polynomial


def _syms():
    a = {i: var("a%d" % i) for i in range(1, 6)}
    b = {i: var("b%d" % i) for i in range(1, 6)}
    return a, b


def _t(ijk: str) -> Polynomial:
    return var("t" + ijk)


@lru_cache(maxsize=None)
def theorem_polynomials() -> HallSystem:
    a, b = _syms()
    t = _t
    s2, s3 = s2_of, s3_of

    p1 = a[1] + b[1]
    p2 = a[2] + b[2]
    p3 = a[3] + b[3] + t("123") * a[2] * b[1]
    p4 = (a[4] + b[4] + t("124") * a[2] * b[1] + t("134") * a[3] * b[1]
          + t("234") * a[3] * b[2]
          + t("123") * t("134") * a[2] * s2(b[1])
          + t("123") * t("234") * s2(a[2]) * b[1]
          + t("123") * t("234") * a[2] * b[1] * b[2])
    p5 = (a[5] + b[5]
          + t("345") * a[4] * b[3]
          + t("245") * a[4] * b[2]
          + t("235") * a[3] * b[2]
          + t("145") * a[4] * b[1]
          + t("135") * a[3] * b[1]
          + t("125") * a[2] * b[1]
          + t("234") * t("345") * s2(a[3]) * b[2]
          + t("234") * t("245") * a[3] * s2(b[2])
          + t("134") * t("345") * s2(a[3]) * b[1]
          + t("134") * t("145") * a[3] * s2(b[1])
          + t("234") * t("345") * a[3] * b[2] * b[3]
          + t("134") * t("345") * a[3] * b[1] * b[3]
          + t("134") * t("245") * a[3] * b[1] * b[2]
          + t("124") * t("345") * a[2] * b[1] * b[3]
          + t("124") * t("345") * a[2] * a[3] * b[1]
          + (t("123") * t("235") + t("124") * t("245")) * a[2] * b[1] * b[2]
          + (t("123") * t("235") + t("124") * t("245")) * s2(a[2]) * b[1]
          + (t("123") * t("135") + t("124") * t("145")) * a[2] * s2(b[1])
          + t("123") * t("234") * t("245") * a[2] * b[1] * s2(b[2])
          + t("123") * t("134") * t("245") * s2(a[2]) * s2(b[1])
          + t("123") * t("234") * t("245") * s3(a[2]) * b[1]
          + t("123") * t("134") * t("145") * a[2] * s3(b[1])
          + t("123") * t("234") * t("245") * s2(a[2]) * b[1] * b[2]
          + t("123") * t("134") * t("245") * a[2] * s2(b[1]) * b[2])
    return HallSystem((p1, p2, p3, p4, p5))


def _k5_tail(x, a2, a3, a4):
    # the part of k_5 beyond x*a_5, shared with T(x, y)
    t = _t
    s2x = s2_of(x)
    return (s2x * (a2 * a3 * t("235") + a2 * a4 * t("245") + a3 * a4 * t("345"))
            + s2x * a2 * a3 * t("234")
            * (t("245") * ((2 * x - 1) * a2 - 3) + t("345") * ((4 * x + 1) * a3 - 3))
            * Fraction(1, 6))


@lru_cache(maxsize=None)
def g2_polynomials() -> G2System:
    a, b = _syms()
    t = _t
    s2 = s2_of
    x = var("x")
    f = {
        2: a[2] + b[2],
        3: a[3] + b[3],
        4: a[4] + b[4] + a[3] * b[2] * t("234"),
        5: (a[5] + b[5] + a[3] * b[2] * t("235") + a[4] * b[2] * t("245")
            + a[4] * b[3] * t("345")
            + a[3] * s2(b[2]) * t("234") * t("245")
            + s2(a[3]) * b[2] * t("234") * t("345")
            + a[3] * b[2] * b[3] * t("234") * t("345")),
    }
    k = {
        2: x * a[2],
        3: x * a[3],
        4: x * a[4] + s2(x) * a[2] * a[3] * t("234"),
        5: x * a[5] + _k5_tail(x, a[2], a[3], a[4]),
    }
    return G2System(f, k)


@lru_cache(maxsize=None)
def conjugation_polynomials() -> ConjugationSystem:
    t = _t
    x, y = var("x"), var("y")
    r = y * t("123")
    s = y * t("124") + s2_of(y) * t("123") * t("134")
    tt = (y * t("125") + s2_of(y) * (t("123") * t("135") + t("124") * t("145"))
          + s3_of(y) * t("123") * t("134") * t("145"))
    R = x * r
    S = x * s + s2_of(x) * r * t("234")
    T = x * tt + _k5_tail(x, const(1), r, s)
    return ConjugationSystem(r, s, tt, R, S, T)


@lru_cache(maxsize=None)
def r_table() -> Dict[Tuple[int, int], List[Tuple[int, Polynomial]]]:
    """Symbolic rewriting table for g_j^x g_i^y = g_i^y (g_j^x)^(g_i^y).

    Keyed (i, j) with i < j <= 4; each value lists (k, exponent of g_k) for
    the normal form of the conjugate (g_j^x)^(g_i^y), starting with (j, x).
    """
    t = _t
    x, y = var("x"), var("y")
    s2 = s2_of
    table = {}
    for i in (1, 2, 3):
        table[i, 4] = [(4, x), (5, x * y * t("%d45" % i))]
    for i in (1, 2):
        table[i, 3] = [
            (3, x),
            (4, x * y * t("%d34" % i)),
            (5, s2(x) * y * t("%d34" % i) * t("345") + x * y * t("%d35" % i)
             + x * s2(y) * t("%d34" % i) * t("%d45" % i)),
        ]
    cs = conjugation_polynomials()
    table[1, 2] = [(2, x), (3, cs.R), (4, cs.S), (5, cs.T)]
    return table


# -- evaluation ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _theorem_evaluators() -> Tuple[IntegerEvaluator, ...]:
    return tuple(IntegerEvaluator(p) for p in theorem_polynomials())


def _pad(v: Sequence[int], n: int) -> List[int]:
    v = [int(e) for e in v]
    if len(v) != n:
        raise ValueError("exponent vector has length %d, expected %d" % (len(v), n))
    return v + [0] * (5 - n)


def _constants(G) -> StructureConstants:
    if isinstance(G, GroupPresentation):
        G.require_consistent()
        return G.constants
    if isinstance(G, StructureConstants):
        from nilhall.presentation import consistency_algebraic, new_presentation
        if not consistency_algebraic(new_presentation(G.n, G)):
            raise Inconsistent("presentation is inconsistent")
        return G
    raise TypeError("expected a GroupPresentation or StructureConstants")


def _check(value: Tuple[int, bool], i: int) -> int:
    q, exact = value
    if not exact:
        raise NonIntegerValue("p_%d evaluated to a non-integer" % i)
    return q


def _multiply5(tpoint, a5, b5):
    point = list(tpoint)
    point[10:15] = a5
    point[15:20] = b5
    return [_check(ev(point), i + 1) for i, ev in enumerate(_theorem_evaluators())]


def _tpoint(constants: StructureConstants) -> List[int]:
    return point_vector(constants.as_point())


def hall_multiply(G, a, b) -> Tuple[int, ...]:
    """Product of two normal forms via the closed-form Hall polynomials."""
    c = _constants(G)
    n = c.n
    out = _multiply5(_tpoint(c), _pad(a, n), _pad(b, n))
    return tuple(out[:n])


def _inverse5(tpoint, a5):
    b = [0] * 5
    point = list(tpoint)
    point[10:15] = a5
    evs = _theorem_evaluators()
    for i in range(5):
        point[15:20] = b
        # p_i = a_i + b_i + (terms in b_j, j < i); b_i is still 0 here
        b[i] = -_check(evs[i](point), i + 1)
    return b


def hall_inverse(G, a) -> Tuple[int, ...]:
    c = _constants(G)
    n = c.n
    return tuple(_inverse5(_tpoint(c), _pad(a, n))[:n])


def hall_power(G, a, x: int) -> Tuple[int, ...]:
    """a^x by square-and-multiply over the Hall polynomials."""
    c = _constants(G)
    n = c.n
    tp = _tpoint(c)
    base = _pad(a, n)
    x = int(x)
    if x < 0:
        base = _inverse5(tp, base)
        x = -x
    result = [0] * 5
    while x:
        if x & 1:
            result = _multiply5(tp, result, base)
        x >>= 1
        if x:
            base = _multiply5(tp, base, base)
    return tuple(result[:n])


def hall_commutator(G, a, b) -> Tuple[int, ...]:
    """[a, b] = a^-1 b^-1 a b via the Hall polynomials."""
    c = _constants(G)
    n = c.n
    tp = _tpoint(c)
    a5, b5 = _pad(a, n), _pad(b, n)
    left = _multiply5(tp, _inverse5(tp, a5), _inverse5(tp, b5))
    return tuple(_multiply5(tp, _multiply5(tp, left, a5), b5)[:n])


def evaluate_int(p: Polynomial, point: Dict[str, int]) -> int:
    """Evaluate at an integer point, raising :class:`NonIntegerValue` otherwise."""
    ev = IntegerEvaluator(p)
    q, exact = ev(point_vector(point))
    if not exact:
        raise NonIntegerValue("%s is not integral at %r" % (p, point))
    return q


def substitute_t(p: Polynomial, constants: StructureConstants) -> Polynomial:
    return substitute(p, constants.as_point())
