"""Small finite fields F_q, q = p^s, with elements encoded as integers.

The element sum(c_i * t^i) of F_p[t]/(modulus) is encoded as sum(c_i * p^i).
The modulus is the least monic irreducible of degree s (see gfp.least_irreducible).
Multiplication goes through discrete log tables, so q should stay small.
"""

import functools

from . import gfp
from .arith import is_prime

MAX_Q = 1 << 16
ADD_TABLE_Q = 729


def _encode(c, p):
    r = 0
    for x in reversed(c):
        r = r * p + x
    return r


def _decode(a, p, s):
    return gfp.norm([(a // p**i) % p for i in range(s)], p)


class Fq:
    """The finite field with p^s elements."""

    def __init__(self, p, s=1):
        if not is_prime(p) or s < 1:
            raise ValueError('need p prime and s >= 1')
        self.p, self.s, self.q = p, s, p**s
        if self.q > MAX_Q:
            raise ValueError(f'q = {self.q} exceeds the table bound {MAX_Q}')
        self.modulus = gfp.least_irreducible(s, p) if s > 1 else [0, 1]
        if s > 1:
            self._build_tables()

    def __repr__(self):
        return f'Fq({self.p}, {self.s})'

    def __eq__(self, other):
        return isinstance(other, Fq) and (self.p, self.s) == (other.p, other.s)

    def __hash__(self):
        return hash((self.p, self.s))

    def _polymul(self, a, b):
        p, s = self.p, self.s
        prod = gfp.rem(gfp.mul(_decode(a, p, s), _decode(b, p, s), p), self.modulus, p)
        return _encode(prod, p)

    def _build_tables(self):
        q = self.q
        for g in range(self.p, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._polymul(x, g)
            if len(exp) == q - 1:
                break
        else:
            raise AssertionError('no primitive element found')
        self.generator = g
        self._exp = exp + exp
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i
        p = self.p
        digits = [[(a // p**i) % p for i in range(self.s)] for a in range(q)]
        self._digits = digits
        self._pw = [p**i for i in range(self.s)]
        self._add_table = None
        if p != 2 and q <= ADD_TABLE_Q:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]

    @property
    def elements(self):
        return range(self.q)

    def from_int(self, k):
        return k % self.p

    def _digit_add(self, a, b):
        p = self.p
        da, db = self._digits[a], self._digits[b]
        return sum(((x + y) % p) * w for x, y, w in zip(da, db, self._pw))

    def add(self, a, b):
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            # digits are bits, so addition is xor
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a):
        if self.s == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return sum(((-x) % p) * w for x, w in zip(self._digits[a], self._pw))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('inverse of zero')
        if self.s == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r


@functools.lru_cache(maxsize=None)
def get_field(p, s=1):
    return Fq(p, s)
