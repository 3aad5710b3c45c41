"""Sparse multivariate polynomials with exact rational coefficients.

All polynomials live over one fixed universe of 22 indeterminates::

    t123 t124 t125 t134 t135 t145 t234 t235 t245 t345
    a1 .. a5  b1 .. b5  x  y

listed from largest to smallest in the lexicographic monomial order used by
:func:`reduce_lex`.  A monomial is stored as a tuple of 22 exponents in that
order, so comparing two monomials lexicographically is plain tuple
comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from nilhall._backend import eval_int_terms, mul_terms

__all__ = [
    "VARIABLES", "T_NAMES", "Polynomial", "UnknownIndeterminate",
    "UnboundIndeterminate", "var", "const", "add", "mul", "s2_of", "s3_of",
    "substitute", "evaluate", "reduce_lex", "parse", "lex_leading",
]

T_NAMES: Tuple[str, ...] = tuple(
    "t%d%d%d" % c for c in combinations(range(1, 6), 3))
VARIABLES: Tuple[str, ...] = (
    T_NAMES
    + tuple("a%d" % i for i in range(1, 6))
    + tuple("b%d" % i for i in range(1, 6))
    + ("x", "y")
)
NVARS = len(VARIABLES)
INDEX: Dict[str, int] = {name: k for k, name in enumerate(VARIABLES)}
_ZERO_MONO = (0,) * NVARS

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class UnknownIndeterminate(ValueError):
    """A symbol outside the fixed universe was requested."""


class UnboundIndeterminate(KeyError):
    """Evaluation point is missing a value for an indeterminate."""


def _index(name: str) -> int:
    try:
        return INDEX[name]
    except KeyError:
        raise UnknownIndeterminate(name) from None


class Polynomial:
    """Immutable polynomial in canonical form: ``{monomial: nonzero Fraction}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] = ()):
        clean = {}
        for m, c in dict(terms).items():
            if c != 0:
                if len(m) != NVARS or any(e < 0 for e in m):
                    raise ValueError("malformed monomial %r" % (m,))
                clean[tuple(m)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        return Polynomial._raw(mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)) or other == 0:
            raise TypeError("polynomials divide only by nonzero scalars")
        return self * (1 / Fraction(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def variables(self) -> List[str]:
        used = set()
        for m in self._terms:
            used.update(k for k, e in enumerate(m) if e)
        return [VARIABLES[k] for k in sorted(used)]

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def coefficient(self, mono: Mapping[str, int]) -> Fraction:
        key = [0] * NVARS
        for name, e in mono.items():
            key[_index(name)] = e
        return self._terms.get(tuple(key), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self._terms.items(), key=lambda mc: (sum(mc[0]), mc[0]),
                      reverse=True)

    def denominator(self) -> int:
        d = 1
        for c in self._terms.values():
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Polynomial(%r)" % format_poly(self)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return const(p)
    raise TypeError("cannot use %r as a polynomial" % (p,))


def const(c: Scalar) -> Polynomial:
    return Polynomial._raw({_ZERO_MONO: Fraction(c)} if c else {})


def var(name: str) -> Polynomial:
    """The polynomial consisting of the single indeterminate ``name``."""
    m = [0] * NVARS
    m[_index(name)] = 1
    return Polynomial._raw({tuple(m): Fraction(1)})


ZERO = Polynomial._raw({})
ONE = const(1)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def s2_of(p) -> Polynomial:
    """p(p-1)/2."""
    p = _coerce(p)
    return p * (p - 1) * Fraction(1, 2)


def s3_of(p) -> Polynomial:
    """p(p-1)(p-2)/6."""
    p = _coerce(p)
    return p * (p - 1) * (p - 2) * Fraction(1, 6)


def substitute(p: Polynomial, bindings: Mapping[str, object]) -> Polynomial:
    """Simultaneously replace indeterminates by polynomials (or scalars)."""
    if not bindings:
        return p
    bound = {_index(name): _coerce(val) for name, val in bindings.items()}
    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(k, e):
        key = (k, e)
        if key not in powers:
            powers[key] = bound[k] ** e
        return powers[key]

    out = ZERO
    for m, c in p.items():
        rest = list(m)
        factor = const(c)
        for k in bound:
            e = m[k]
            if e:
                rest[k] = 0
                factor = factor * power(k, e)
        out = out + factor * Polynomial._raw({tuple(rest): Fraction(1)})
    return out


def evaluate(p: Polynomial, point: Mapping[str, Scalar]) -> Fraction:
    """Exact value of ``p`` at ``point``; every variable of ``p`` must be bound."""
    values = [None] * NVARS
    for name, v in point.items():
        values[_index(name)] = v
    total = Fraction(0)
    for m, c in p.items():
        term = c
        for k, e in enumerate(m):
            if e:
                v = values[k]
                if v is None:
                    raise UnboundIndeterminate(VARIABLES[k])
                term *= v ** e
        total += term
    return total


class IntegerEvaluator:
    """Fast exact evaluation of a fixed polynomial at integer points.

    The polynomial is scaled by the lcm of its denominators so the inner loop
    runs on integers only; the final division is checked for exactness.
    """

    __slots__ = ("poly", "denominator", "_terms")

    def __init__(self, poly: Polynomial):
        self.poly = poly
        self.denominator = poly.denominator()
        d = self.denominator
        self._terms = [(int(c * d), m) for m, c in poly.sorted_terms()]

    def scaled(self, point: List[int]) -> int:
        return eval_int_terms(self._terms, point)

    def __call__(self, point: List[int]):
        """Return ``(numerator, exact)``; ``exact`` is False for non-integers."""
        num = eval_int_terms(self._terms, point)
        q, r = divmod(num, self.denominator)
        return q, r == 0


def point_vector(point: Mapping[str, int]) -> List[int]:
    values = [0] * NVARS
    for name, v in point.items():
        values[_index(name)] = v
    return values


def lex_leading(p: Polynomial) -> Tuple[Monomial, Fraction]:
    m = max(p._terms)
    return m, p._terms[m]


def _divides(m: Monomial, n: Monomial) -> bool:
    return all(a <= b for a, b in zip(m, n))


def reduce_lex(p: Polynomial, relations: Iterable[Polynomial]) -> Polynomial:
    """Remainder of ``p`` on division by ``relations`` in the lex order."""
    rels = []
    for r in relations:
        if r.is_zero():
            raise ValueError("relation must be nonzero")
        lm, lc = lex_leading(r)
        rels.append((lm, lc, r))
    work = dict(p._terms)
    remainder = {}
    while work:
        m = max(work)
        c = work[m]
        for lm, lc, r in rels:
            if _divides(lm, m):
                quot = tuple(a - b for a, b in zip(m, lm))
                factor = c / lc
                for rm, rc in r.items():
                    key = tuple(a + b for a, b in zip(rm, quot))
                    val = work.get(key, 0) - factor * rc
                    if val:
                        work[key] = val
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial._raw(remainder)


# -- text format ----------------------------------------------------------

def _format_mono(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(VARIABLES[k])
        elif e:
            parts.append("%s^%d" % (VARIABLES[k], e))
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _format_mono(m)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = "%s*%s" % (c, mono)
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([a-z]\w*)|(\^)|(\*)|([+-]))")


def parse(text: str) -> Polynomial:
    """Parse the output of :func:`format_poly` (and whitespace variants)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError("cannot parse polynomial at %r" % text[pos:])
        num, name, caret, star, sign = mt.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("var", name))
        elif caret:
            tokens.append(("^", caret))
        elif star:
            tokens.append(("*", star))
        else:
            tokens.append(("sign", sign))
        pos = mt.end()
    if not tokens:
        raise ValueError("empty polynomial text")

    terms: Dict[Monomial, Fraction] = {}
    i = 0

    def expect_factor():
        nonlocal i
        if i >= len(tokens):
            raise ValueError("unexpected end of polynomial text")
        kind, val = tokens[i]
        i += 1
        if kind == "num":
            return Fraction(val), None
        if kind == "var":
            k = _index(val)
            e = 1
            if i < len(tokens) and tokens[i][0] == "^":
                if i + 1 >= len(tokens) or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                    raise ValueError("bad exponent after %s" % val)
                e = int(tokens[i + 1][1])
                i += 2
            return None, (k, e)
        raise ValueError("unexpected token %r" % val)

    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "sign":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ValueError("missing operator before %r" % tokens[i][1])
        first = False
        coeff = Fraction(sign)
        mono = [0] * NVARS
        while True:
            c, ve = expect_factor()
            if c is not None:
                coeff *= c
            else:
                mono[ve[0]] += ve[1]
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                continue
            break
        key = tuple(mono)
        val = terms.get(key, 0) + coeff
        if val:
            terms[key] = val
        else:
            terms.pop(key, None)
    return Polynomial._raw(terms)
