import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import iterate_product
from nilhall.collector import (collect_invert, collect_multiply, collect_power,
                               conjugate_power)
from nilhall.hallpolys import (NonIntegerValue, conjugation_polynomials,
                               evaluate_int, g2_polynomials, hall_commutator,
                               hall_inverse, hall_multiply, hall_power, r_table,
                               theorem_polynomials)
from nilhall.polyring import (ZERO, evaluate, parse, reduce_lex, s2_of, s3_of,
                              substitute, var)
from nilhall.presentation import (Inconsistent, new_presentation,
                                  random_consistent_t, random_t)


def P(text):
    return parse(text)


def test_theorem_low_polynomials():
    p = theorem_polynomials()
    assert p[1] == P("a1 + b1")
    assert p[2] == P("a2 + b2")
    assert p[3] == P("a3 + b3 + t123*a2*b1")


def test_theorem_spot_terms():
    p = theorem_polynomials()
    assert p[4].coefficient({"t123": 1, "t234": 1, "a2": 1, "b1": 1, "b2": 1}) == 1
    # t123 t134 t145 a2 s3(b1) contributes 1/6 t123 t134 t145 a2 b1^3
    assert p[5].coefficient({"t123": 1, "t134": 1, "t145": 1, "a2": 1, "b1": 3}) == Fraction(1, 6)
    for name in ("t345*a4*b3", "t245*a4*b2", "t235*a3*b2", "t145*a4*b1",
                 "t135*a3*b1", "t125*a2*b1"):
        mono = {}
        for part in name.split("*"):
            mono[part] = 1
        assert p[5].coefficient(mono) == 1


def test_triangular_shape():
    for i, p in enumerate(theorem_polynomials(), start=1):
        rest = p - var("a%d" % i) - var("b%d" % i)
        for name in rest.variables():
            if name[0] in "ab":
                assert int(name[1]) < i, (i, name)


def test_hall_multiply_examples():
    zero_t = new_presentation(5, {})
    assert hall_multiply(zero_t, (1, 2, 3, 4, 5), (5, 4, 3, 2, 1)) == (6, 6, 6, 6, 6)
    G = new_presentation(5, {"123": 1})
    assert hall_multiply(G, (0, 1, 0, 0, 0), (1, 0, 0, 0, 0)) == (1, 1, 1, 0, 0)
    rng = random.Random(1)
    for _ in range(30):
        t = random_consistent_t(rng)
        G = new_presentation(5, t)
        expected = (1, 1, t[(1, 2, 3)], t[(1, 2, 4)], t[(1, 2, 5)])
        assert hall_multiply(G, (0, 1, 0, 0, 0), (1, 0, 0, 0, 0)) == expected
        assert collect_multiply(G, (0, 1, 0, 0, 0), (1, 0, 0, 0, 0)) == expected


def test_hall_inverse_examples():
    assert hall_inverse(new_presentation(5, {}), (1, 2, 3, 4, 5)) == (-1, -2, -3, -4, -5)
    assert hall_inverse(new_presentation(5, {"123": 1}), (1, 1, 0, 0, 0)) == (-1, -1, 1, 0, 0)


vec = st.lists(st.integers(-10, 10), min_size=5, max_size=5)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), vec, vec, vec)
def test_hall_group_axioms(seed, a, b, c):
    G = new_presentation(5, random_consistent_t(random.Random(seed)))
    m = hall_multiply
    assert m(G, m(G, a, b), c) == m(G, a, m(G, b, c))
    inv = hall_inverse(G, a)
    assert m(G, inv, a) == (0,) * 5 == m(G, a, inv)
    assert m(G, a, (0,) * 5) == tuple(a)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), vec, vec)
def test_hall_matches_oracle(seed, a, b):
    G = new_presentation(5, random_consistent_t(random.Random(seed)))
    assert hall_multiply(G, a, b) == collect_multiply(G, a, b)


def test_hall_power_and_commutator():
    rng = random.Random(2)
    for _ in range(30):
        G = new_presentation(5, random_consistent_t(rng))
        a = [rng.randint(-5, 5) for _ in range(5)]
        b = [rng.randint(-5, 5) for _ in range(5)]
        x = rng.randint(-30, 30)
        assert hall_power(G, a, x) == collect_power(G, a, x)
        comm = hall_commutator(G, a, b)
        ab = hall_multiply(G, a, b)
        assert hall_multiply(G, hall_multiply(G, b, a), comm) == ab


def test_smaller_hirsch_lengths_truncate():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        for _ in range(20):
            t = random_t(rng, n, 3)
            G = new_presentation(n, t)
            a = [rng.randint(-6, 6) for _ in range(n)]
            b = [rng.randint(-6, 6) for _ in range(n)]
            assert hall_multiply(G, a, b) == collect_multiply(G, a, b)
            assert hall_inverse(G, a) == collect_invert(G, a)


def test_inconsistent_rejected():
    with pytest.raises(Inconsistent):
        hall_multiply(new_presentation(5, {"123": 1, "345": 1}), (0,) * 5, (0,) * 5)


def test_non_integer_guard():
    with pytest.raises(NonIntegerValue):
        evaluate_int(s2_of(var("x")) * P("1/3"), {"x": 2})
    assert evaluate_int(s3_of(var("x")), {"x": -4}) == -20


# -- G2 systems -------------------------------------------------------------

def test_g2_examples():
    g2 = g2_polynomials()
    assert g2.f[4] == P("a4 + b4 + t234*a3*b2")
    assert g2.k[2] == P("x*a2")
    point = {"a2": 1, "a3": 1, "a4": 0, "a5": 0, "x": 3, "t234": 2,
             "t235": 0, "t245": 0, "t345": 0}
    assert evaluate(g2.k[4], point) == 6


def test_k4_by_iterating_f4():
    # k_4(a, 3) from three applications of the G2 product
    g2 = g2_polynomials()
    t = {"t234": 2, "t235": 1, "t245": -1, "t345": 3}
    a = {"a2": 1, "a3": 1, "a4": 0, "a5": 2}

    def f(u, v):
        pt = dict(t)
        pt.update({"a%d" % i: u[i - 2] for i in range(2, 6)})
        pt.update({"b%d" % i: v[i - 2] for i in range(2, 6)})
        return tuple(int(evaluate(g2.f[i], pt)) for i in range(2, 6))

    av = tuple(a["a%d" % i] for i in range(2, 6))
    for x in range(0, 7):
        acc = iterate_product(f, av, x, (0, 0, 0, 0))
        pt = dict(t, x=x, **a)
        assert acc == tuple(int(evaluate(g2.k[i], pt)) for i in range(2, 6))


def test_g2_boundary_values():
    g2 = g2_polynomials()
    for i in range(2, 6):
        assert substitute(g2.k[i], {"x": 1}) == var("a%d" % i)
        assert substitute(g2.k[i], {"x": 0}) == ZERO


def test_f_is_restriction_of_p():
    p = theorem_polynomials()
    g2 = g2_polynomials()
    for i in range(2, 6):
        assert substitute(p[i], {"a1": 0, "b1": 0}) == g2.f[i]


# -- conjugation systems ----------------------------------------------------

def test_conjugation_examples():
    cs = conjugation_polynomials()
    for name, expected in (("R", "t123"), ("S", "t124"), ("T", "t125")):
        assert substitute(getattr(cs, name), {"x": 1, "y": 1}) == P(expected)
    for name in ("r", "s", "t"):
        assert substitute(getattr(cs, name), {"y": 0}) == ZERO
    for name in ("R", "S", "T"):
        assert substitute(getattr(cs, name), {"x": 0}) == ZERO
        assert substitute(getattr(cs, name), {"y": 0}) == ZERO


def test_S_spot_value():
    cs = conjugation_polynomials()
    t = {"t123": 1, "t124": 0, "t134": 1}
    pt = {n: 0 for n in ("t125", "t135", "t145", "t234", "t235", "t245", "t345")}
    pt.update(t, x=2, y=3)
    assert evaluate(cs.S, pt) == 6
    G = new_presentation(5, {"123": 1, "134": 1})
    assert conjugate_power(G, 2, 1, 2, 3)[1] == 6


def test_recursions_hold():
    cs = conjugation_polynomials()
    ym1 = {"y": var("y") - 1}
    r1, s1, t1 = (substitute(p, ym1) for p in (cs.r, cs.s, cs.t))
    assert cs.r - r1 - P("t123") == ZERO
    assert cs.s - s1 - P("t124") - r1 * P("t134") == ZERO
    rest = (cs.t - t1 - P("t125") - s2_of(r1) * P("t134*t345")
            - r1 * P("t124*t345 + t135") - s1 * P("t145"))
    assert not rest.is_zero()
    assert reduce_lex(rest, [P("t123*t345")]) == ZERO


def test_r_table_examples():
    tab = r_table()
    assert dict(tab[3, 4])[5] == P("x*y*t345")
    assert dict(tab[1, 3])[5] == (s2_of(var("x")) * P("y*t134*t345") + P("x*y*t135")
                                  + P("x*t134*t145") * s2_of(var("y")))
    for entries in tab.values():
        for k, poly in entries:
            assert substitute(poly, {"x": 0}) == ZERO
    assert set(tab) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}


def test_r_table_matches_oracle_small():
    rng = random.Random(4)
    tab = r_table()
    for _ in range(5):
        t = random_consistent_t(rng)
        G = new_presentation(5, t)
        for (i, j), entries in tab.items():
            for x in (-3, -1, 0, 2, 5):
                for y in (-4, -1, 1, 3):
                    at = dict(t.as_point(), x=x, y=y)
                    exp = tuple(int(evaluate(p, at)) for _, p in entries[1:])
                    assert conjugate_power(G, j, i, x, y) == exp
