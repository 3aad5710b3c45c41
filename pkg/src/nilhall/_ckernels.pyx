# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; mirror of ``nilhall._pykernels``.

Exponents stay Python ints (arbitrary precision); the gain comes from
C-level loop control and typed containers.
"""

from nilhall._pykernels import CollectionLimitExceeded

BACKEND = "cython"


def mul_terms(dict t1, dict t2):
    cdef dict out = {}
    cdef tuple m1, m2, m
    cdef Py_ssize_t k, nv
    cdef list buf
    for m1, c1 in t1.items():
        nv = len(m1)
        for m2, c2 in t2.items():
            buf = [0] * nv
            for k in range(nv):
                buf[k] = <object>m1[k] + <object>m2[k]
            m = tuple(buf)
            prev = out.get(m)
            if prev is None:
                out[m] = c1 * c2
            else:
                out[m] = prev + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def eval_int_terms(list terms, point):
    cdef Py_ssize_t k, nv
    cdef tuple exps
    cdef long e
    total = 0
    for coeff, exps in terms:
        val = coeff
        nv = len(exps)
        for k in range(nv):
            e = exps[k]
            if e == 1:
                val *= point[k]
            elif e:
                val *= point[k] ** e
        total += val
    return total


cdef class Engine:
    cdef public Py_ssize_t n
    cdef public list rels
    cdef public object max_steps
    cdef public object steps
    cdef list _squares
    cdef dict _aut_cache

    def __init__(self, n, rels, max_steps=10**6):
        self.n = n
        self.rels = [[list(r) if r is not None else None for r in row] for row in rels]
        self.max_steps = max_steps
        self.steps = 0
        self._squares = [{1: None, -1: None} for _ in range(n)]
        self._aut_cache = {}

    def reset_steps(self):
        self.steps = 0

    cpdef list identity(self):
        return [0] * self.n

    cpdef list unit(self, Py_ssize_t j, e=1):
        cdef list v = [0] * self.n
        v[j] = e
        return v

    cpdef list collect(self, list v, word):
        cdef list stack = [(g, e) for g, e in reversed(word) if e != 0]
        cdef Py_ssize_t last = self.n - 1
        cdef Py_ssize_t i, j, k
        cdef list conj
        cdef long steps = self.steps
        cdef long limit = self.max_steps
        while stack:
            steps += 1
            if steps > limit:
                self.steps = steps
                raise CollectionLimitExceeded(
                    "collection exceeded %d steps" % self.max_steps)
            i, c = stack.pop()
            v[i] = v[i] + c
            if i == last:
                continue
            for j in range(last - 1, i, -1):
                x = v[j]
                if x == 0:
                    continue
                self.steps = steps
                conj = self.conj_power(i, j, x, c)
                steps = self.steps
                for k in range(last, j - 1, -1):
                    e = conj[k]
                    if k == last:
                        v[last] = v[last] + e
                    elif e != 0:
                        stack.append((k, e))
                v[j] = 0
        self.steps = steps
        return v

    cpdef list multiply(self, list a, list b):
        cdef Py_ssize_t k
        cdef list word = []
        for k in range(self.n):
            if b[k] != 0:
                word.append((k, b[k]))
        return self.collect(list(a), word)

    cpdef list invert(self, list a):
        cdef Py_ssize_t k
        cdef list word = []
        for k in range(self.n - 1, -1, -1):
            if a[k] != 0:
                word.append((k, -a[k]))
        return self.collect(self.identity(), word)

    cpdef list power(self, list a, x):
        if x < 0:
            a = self.invert(a)
            x = -x
        cdef list result = self.identity()
        cdef list base = list(a)
        while x:
            if x & 1:
                result = self.multiply(result, base)
            x >>= 1
            if x:
                base = self.multiply(base, base)
        return result

    cpdef list conj_power(self, Py_ssize_t i, Py_ssize_t j, x, y):
        if y == 0:
            return self.unit(j, x)
        cdef list image = self.aut_power(i, y)[j]
        return self.power(image, x)

    cpdef list apply_aut(self, list images, list w):
        cdef list result = self.identity()
        cdef Py_ssize_t k
        for k in range(self.n):
            e = w[k]
            if e != 0:
                result = self.multiply(result, self.power(images[k], e))
        return result

    cdef list _base_aut(self, Py_ssize_t i, int sign):
        cdef Py_ssize_t n = self.n
        cdef Py_ssize_t j
        cdef list images = [None] * n
        cdef list img, pre
        if sign > 0:
            for j in range(i + 1, n):
                img = list(self.rels[i][j])
                img[j] = 1
                images[j] = img
            return images
        for j in range(n - 1, i, -1):
            pre = self.apply_aut(images, self.rels[i][j])
            images[j] = self.multiply(self.unit(j), self.invert(pre))
        return images

    cdef list _compose(self, list outer, list inner, Py_ssize_t i):
        cdef list images = [None] * self.n
        cdef Py_ssize_t j
        for j in range(i + 1, self.n):
            images[j] = self.apply_aut(outer, inner[j])
        return images

    cpdef list aut_power(self, Py_ssize_t i, y):
        key = (i, y)
        cached = self._aut_cache.get(key)
        if cached is not None:
            return cached
        cdef int sign = 1 if y > 0 else -1
        cdef dict slot = self._squares[i]
        cdef list squares = slot[sign]
        if squares is None:
            squares = [self._base_aut(i, sign)]
            slot[sign] = squares
        m = abs(y)
        cdef list result = None
        cdef list prev
        cdef Py_ssize_t k = 0
        while m:
            while len(squares) <= k:
                prev = squares[len(squares) - 1]
                squares.append(self._compose(prev, prev, i))
            if m & 1:
                if result is None:
                    result = squares[k]
                else:
                    result = self._compose(squares[k], result, i)
            m >>= 1
            k += 1
        if len(self._aut_cache) > 4096:
            self._aut_cache.clear()
        self._aut_cache[key] = result
        return result
