"""Collection from the left: the reference arithmetic for G(t).

Everything here is driven by the defining relations only; no closed-form
polynomials are used, so these functions serve as the oracle for
:mod:`nilhall.hallpolys`.  Exponent vectors are tuples of Python ints
(arbitrary precision) and generator indices are 1-based.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from nilhall._backend import BACKEND, CollectionLimitExceeded
from nilhall.presentation import GroupPresentation

__all__ = [
    "collect_multiply", "collect_invert", "collect_power", "collect_word",
    "conjugate_power", "collect_commutator", "BACKEND",
    "CollectionLimitExceeded",
]

Vector = Tuple[int, ...]


def _check_vector(G: GroupPresentation, a: Sequence[int]) -> list:
    a = [int(x) for x in a]
    if len(a) != G.n:
        raise ValueError("exponent vector has length %d, expected %d" % (len(a), G.n))
    return a


def _engine(G: GroupPresentation):
    G.require_consistent()
    eng = G.engine
    eng.reset_steps()
    return eng


def _limited(eng, max_steps, fn, *args):
    if max_steps is None:
        return fn(*args)
    saved = eng.max_steps
    eng.max_steps = max_steps
    try:
        return fn(*args)
    finally:
        eng.max_steps = saved


def collect_multiply(G: GroupPresentation, a, b, max_steps=None) -> Vector:
    """Normal form of (g_1^a_1 ... g_n^a_n)(g_1^b_1 ... g_n^b_n).

    ``max_steps`` overrides the engine's ceiling on stack pops for this call.
    """
    a, b = _check_vector(G, a), _check_vector(G, b)
    eng = _engine(G)
    return tuple(_limited(eng, max_steps, eng.multiply, a, b))


def collect_word(G: GroupPresentation, word, max_steps=None) -> Vector:
    """Normal form of a word given as ``[(generator, exponent), ...]``."""
    eng = _engine(G)
    items = []
    for gen, e in word:
        if not 1 <= gen <= G.n:
            raise ValueError("generator index %d out of range" % gen)
        items.append((gen - 1, int(e)))
    return tuple(_limited(eng, max_steps, eng.collect, eng.identity(), items))


def collect_invert(G: GroupPresentation, a) -> Vector:
    a = _check_vector(G, a)
    return tuple(_engine(G).invert(a))


def collect_power(G: GroupPresentation, a, x: int) -> Vector:
    a = _check_vector(G, a)
    return tuple(_engine(G).power(a, int(x)))


def collect_commutator(G: GroupPresentation, a, b) -> Vector:
    """[a, b] = a^-1 b^-1 a b."""
    a, b = _check_vector(G, a), _check_vector(G, b)
    eng = _engine(G)
    left = eng.multiply(eng.invert(a), eng.invert(b))
    return tuple(eng.multiply(eng.multiply(left, a), b))


def conjugate_power(G: GroupPresentation, j: int, i: int, x: int, y: int) -> Vector:
    """Tail (c_{j+1}, ..., c_n) with g_j^x g_i^y = g_i^y g_j^x g_{j+1}^c_{j+1} ... g_n^c_n."""
    if not 1 <= i < j <= G.n:
        raise ValueError("need 1 <= i < j <= n, got i=%d j=%d" % (i, j))
    eng = _engine(G)
    conj = eng.conj_power(i - 1, j - 1, int(x), int(y))
    return tuple(conj[j:])
