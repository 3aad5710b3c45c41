"""Pure-Python hot kernels.

This module is the fallback for the compiled ``_ckernels`` extension and
must stay behaviourally identical to it.  Both export ``mul_terms``,
``eval_int_terms`` and ``Engine``.
"""

BACKEND = "python"


class CollectionLimitExceeded(RuntimeError):
    pass


def mul_terms(t1, t2):
    """Multiply two term dicts ``{exponent-tuple: coefficient}``."""
    out = {}
    get = out.get
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            m = tuple([e1 + e2 for e1, e2 in zip(m1, m2)])
            out[m] = get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def eval_int_terms(terms, point):
    """Evaluate ``[(int_coeff, exponent-tuple), ...]`` at an integer point."""
    total = 0
    for coeff, exps in terms:
        val = coeff
        for k, e in enumerate(exps):
            if e:
                val *= point[k] ** e
        total += val
    return total


class Engine:
    """Collection from the left for a nilpotent presentation on n generators.

    ``rels[i][j]`` (0-based, i < j) is the exponent vector of the commutator
    [g_j, g_i]; it is supported on indices > j.  Normal words are lists of
    n Python ints.  The conjugation action of g_i on <g_{i+1},...,g_n> is
    powered by repeated squaring of automorphisms, so the cost is polynomial
    in the bit length of the exponents.
    """

    def __init__(self, n, rels, max_steps=10**6):
        self.n = n
        self.rels = [[list(r) if r is not None else None for r in row] for row in rels]
        self.max_steps = max_steps
        self.steps = 0
        # _squares[i][s] = [phi_i^(s*2^k) for k = 0, 1, ...], s in {+1, -1}
        self._squares = [{1: None, -1: None} for _ in range(n)]
        self._aut_cache = {}

    def reset_steps(self):
        self.steps = 0

    def identity(self):
        return [0] * self.n

    def unit(self, j, e=1):
        v = [0] * self.n
        v[j] = e
        return v

    # -- collection -------------------------------------------------------

    def collect(self, v, word):
        """Multiply normal word ``v`` in place by ``word`` = [(gen, exp), ...]."""
        stack = [(g, e) for g, e in reversed(word) if e != 0]
        last = self.n - 1
        while stack:
            self.steps += 1
            if self.steps > self.max_steps:
                raise CollectionLimitExceeded(
                    "collection exceeded %d steps" % self.max_steps)
            i, c = stack.pop()
            v[i] += c
            if i == last:
                continue
            for j in range(last - 1, i, -1):
                x = v[j]
                if x == 0:
                    continue
                conj = self.conj_power(i, j, x, c)
                for k in range(last, j - 1, -1):
                    e = conj[k]
                    if k == last:
                        v[last] += e
                    elif e != 0:
                        stack.append((k, e))
                v[j] = 0
        return v

    def multiply(self, a, b):
        word = [(k, e) for k, e in enumerate(b) if e != 0]
        return self.collect(list(a), word)

    def invert(self, a):
        word = [(k, -a[k]) for k in range(self.n - 1, -1, -1) if a[k] != 0]
        return self.collect(self.identity(), word)

    def power(self, a, x):
        if x < 0:
            a = self.invert(a)
            x = -x
        result = self.identity()
        base = list(a)
        while x:
            if x & 1:
                result = self.multiply(result, base)
            x >>= 1
            if x:
                base = self.multiply(base, base)
        return result

    # -- conjugation action ----------------------------------------------

    def conj_power(self, i, j, x, y):
        """Normal word of g_i^-y g_j^x g_i^y (i < j)."""
        if y == 0:
            return self.unit(j, x)
        image = self.aut_power(i, y)[j]
        return self.power(image, x)

    def apply_aut(self, images, w):
        result = self.identity()
        for k, e in enumerate(w):
            if e != 0:
                result = self.multiply(result, self.power(images[k], e))
        return result

    def _base_aut(self, i, sign):
        n = self.n
        images = [None] * n
        if sign > 0:
            for j in range(i + 1, n):
                img = list(self.rels[i][j])
                img[j] = 1
                images[j] = img
            return images
        # phi^-1(g_j) = g_j * (phi^-1(d_j))^-1 where phi(g_j) = g_j d_j
        for j in range(n - 1, i, -1):
            d = self.rels[i][j]
            pre = self.apply_aut(images, d)
            images[j] = self.multiply(self.unit(j), self.invert(pre))
        return images

    def _compose(self, outer, inner, i):
        images = [None] * self.n
        for j in range(i + 1, self.n):
            images[j] = self.apply_aut(outer, inner[j])
        return images

    def aut_power(self, i, y):
        key = (i, y)
        cached = self._aut_cache.get(key)
        if cached is not None:
            return cached
        sign = 1 if y > 0 else -1
        squares = self._squares[i][sign]
        if squares is None:
            squares = [self._base_aut(i, sign)]
            self._squares[i][sign] = squares
        m = abs(y)
        result = None
        k = 0
        while m:
            while len(squares) <= k:
                prev = squares[-1]
                squares.append(self._compose(prev, prev, i))
            if m & 1:
                result = squares[k] if result is None else self._compose(squares[k], result, i)
            m >>= 1
            k += 1
        if len(self._aut_cache) > 4096:
            self._aut_cache.clear()
        self._aut_cache[key] = result
        return result
