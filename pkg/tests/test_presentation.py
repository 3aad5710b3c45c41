import json
import random

import pytest

from nilhall.collector import collect_word
from nilhall.presentation import (BadShape, Inconsistent, StructureConstants,
                                  conditions, consistency_algebraic,
                                  consistency_direct, inverse_conjugate_table,
                                  load_group_spec, new_presentation,
                                  random_consistent_t, random_inconsistent_t,
                                  random_t)


def test_new_presentation_shapes():
    G = new_presentation(5, {})
    assert G.n == 5 and all(v == 0 for v in G.constants.t.values())
    assert len(G.constants.t) == 10
    H = new_presentation(3, {"123": 1})
    assert H.constants[(1, 2, 3)] == 1
    with pytest.raises(BadShape):
        new_presentation(5, {(1, 2, 6): 1})
    with pytest.raises(BadShape):
        new_presentation(6, {})
    with pytest.raises(BadShape):
        new_presentation(3, {"124": 1})
    with pytest.raises(BadShape):
        new_presentation(5, {(2, 1, 3): 1})


def test_algebraic_examples():
    assert consistency_algebraic(new_presentation(5, {}))
    assert not consistency_algebraic(new_presentation(5, {"123": 1, "345": 1}))
    assert consistency_algebraic(
        new_presentation(5, {"124": 1, "345": 1, "134": 1, "245": 1}))


def test_direct_examples():
    assert consistency_direct(new_presentation(5, {})).verdict
    report = consistency_direct(new_presentation(5, {"123": 1, "345": 1}))
    assert not report.verdict
    assert "R2" in report.failing_ids()
    rid, left, right = dict((f[0], f) for f in report.failures)["R2"]
    # the two sides differ by g5^(t123*t345)
    assert right[4] - left[4] == 1 and left[:4] == right[:4]
    assert report.verdict == (not report.failures)


def test_direct_small_n():
    rng = random.Random(11)
    for _ in range(30):
        t = random_t(rng, 4, 5)
        assert consistency_direct(new_presentation(4, t)).verdict


def test_sampler_hits_both_branches():
    rng = random.Random(0)
    seen = set()
    for _ in range(200):
        t = random_consistent_t(rng)
        assert conditions(t) == (0, 0)
        assert all(-3 <= v <= 3 for v in t.t.values())
        seen.add((t[(1, 2, 3)] == 0, t[(3, 4, 5)] == 0))
    assert (True, False) in seen and (False, True) in seen


def test_inconsistent_sampler():
    rng = random.Random(0)
    for _ in range(50):
        assert conditions(random_inconsistent_t(rng)) != (0, 0)


def test_checkers_agree_randomized():
    rng = random.Random(7)
    for _ in range(40):
        for t in (random_consistent_t(rng), random_inconsistent_t(rng)):
            G = new_presentation(5, t)
            assert consistency_algebraic(G) == consistency_direct(G).verdict


def test_inverse_conjugate_table_closed_forms():
    rng = random.Random(5)
    for _ in range(40):
        G = new_presentation(5, random_consistent_t(rng))
        c = G.constants.t
        tab = inverse_conjugate_table(G)
        assert tab[(4, 1)] == (-c[1, 4, 5],)
        assert tab[(3, 1)] == (-c[1, 3, 4], c[1, 3, 4] * c[1, 4, 5] - c[1, 3, 5])
        assert tab[(2, 1)] == (
            -c[1, 2, 3],
            c[1, 2, 3] * c[1, 3, 4] - c[1, 2, 4],
            -c[1, 2, 3] * c[1, 3, 4] * c[1, 4, 5] + c[1, 2, 3] * c[1, 3, 5]
            + c[1, 2, 4] * c[1, 4, 5] - c[1, 2, 5])
        assert tab[(4, 2)] == (-c[2, 4, 5],)
        assert tab[(3, 2)] == (-c[2, 3, 4], c[2, 3, 4] * c[2, 4, 5] - c[2, 3, 5])
        assert tab[(4, 3)] == (-c[3, 4, 5],)
        assert tab[(5, 1)] == ()


def test_inverse_conjugate_table_abelian():
    tab = inverse_conjugate_table(new_presentation(5, {}))
    assert all(not any(v) for v in tab.values())


def test_inverse_conjugate_table_roundtrip():
    rng = random.Random(9)
    for _ in range(20):
        G = new_presentation(5, random_consistent_t(rng))
        for (j, i), tail in inverse_conjugate_table(G).items():
            word = [(i, -1), (j, 1)] + [(j + 1 + k, e) for k, e in enumerate(tail)] + [(i, 1)]
            expected = [0] * 5
            expected[j - 1] = 1
            assert collect_word(G, word) == tuple(expected)


def test_inverse_conjugate_table_needs_consistency():
    with pytest.raises(Inconsistent):
        inverse_conjugate_table(new_presentation(5, {"123": 1, "345": 1}))


def test_group_spec_json():
    G = load_group_spec(json.dumps({"n": 5, "t": {"123": 2, "345": 0}}))
    assert G.constants[(1, 2, 3)] == 2 and G.constants[(2, 4, 5)] == 0
    with pytest.raises(BadShape):
        load_group_spec('{"n": 5, "t": {"129": 1}}')
    with pytest.raises(BadShape):
        load_group_spec('{"n": 5, "t": {}, "extra": 1}')
    with pytest.raises(BadShape):
        load_group_spec('{"n": 3, "t": {"124": 1}}')
    sc = StructureConstants(4, {"134": -2})
    assert json.loads(sc.to_json())["t"]["134"] == -2
