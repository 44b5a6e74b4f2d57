"""Exact integer and integer-polynomial primitives.

Polynomials are dense, ascending: ``IntPoly([3, 0, 1])`` is 3 + X^2.
Everything here is exact; no floating point is used anywhere in this module.
"""

import functools
import math

__all__ = [
    'IntPoly', 'NotElementaryError', 'X',
    'euler_phi', 'jacobi_symbol', 'multiplicative_order', 'cyclotomic_poly',
    'perfect_power_decompose', 'charpoly_integer_matrix',
    'is_prime', 'factorize', 'divisors', 'lcm',
]


class NotElementaryError(ValueError):
    """Polynomial is not a power of a squarefree polynomial."""


# ---------------------------------------------------------------------------
# integers

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n):
    """Deterministic primality test (Miller-Rabin, exact for n < 3.3e24)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@functools.lru_cache(maxsize=4096)
def _factorize(n):
    f = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            f[d] = f.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        f[n] = f.get(n, 0) + 1
    return tuple(sorted(f.items()))


def factorize(n):
    """Prime factorization of n >= 1 by trial division, as a dict {prime: exponent}."""
    if n < 1:
        raise ValueError('factorize requires n >= 1')
    return dict(_factorize(n))


def divisors(n):
    ds = [1]
    for p, k in _factorize(n):
        ds = [d * p**i for d in ds for i in range(k + 1)]
    return sorted(ds)


def lcm(*args):
    r = 1
    for a in args:
        r = r * a // math.gcd(r, a)
    return r


def _lpart(n, l):
    # (n_l, n_(l)): l-part and non-l-part of n
    nl = 1
    while n % l == 0:
        n //= l
        nl *= l
    return nl, n


def euler_phi(n):
    """Euler's totient."""
    if n < 1:
        raise ValueError('euler_phi requires n >= 1')
    r = n
    for p, _ in _factorize(n):
        r = r // p * (p - 1)
    return r


def jacobi_symbol(a, n):
    """Jacobi symbol (a/n) for odd positive n."""
    if n < 1 or n % 2 == 0:
        raise ValueError('jacobi_symbol requires odd positive n')
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def multiplicative_order(a, n):
    """Smallest k >= 1 with a^k = 1 mod n."""
    if n < 1:
        raise ValueError('modulus must be positive')
    if math.gcd(a, n) != 1:
        raise ValueError(f'{a} is not a unit modulo {n}')
    if n == 1:
        return 1
    k = euler_phi(n)
    for p, _ in _factorize(k):
        while k % p == 0 and pow(a, k // p, n) == 1:
            k //= p
    return k


# ---------------------------------------------------------------------------
# polynomial kernels on ascending coefficient lists

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _schoolbook(a, b):
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return r


def _pack(c, w):
    pos = b''.join((x if x > 0 else 0).to_bytes(w, 'little') for x in c)
    neg = b''.join((-x if x < 0 else 0).to_bytes(w, 'little') for x in c)
    return int.from_bytes(pos, 'little') - int.from_bytes(neg, 'little')


def _kronecker(a, b):
    # product by Kronecker substitution; big-int multiply runs in C
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    ma, mb = max(map(abs, a)), max(map(abs, b))
    if not ma or not mb:
        return [0] * n
    bound = min(len(a), len(b)) * ma * mb
    w = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * w - 1)
    offset = int.from_bytes(half.to_bytes(w, 'little') * n, 'little')
    bs = (_pack(a, w) * _pack(b, w) + offset).to_bytes(n * w, 'little')
    return [int.from_bytes(bs[i * w:(i + 1) * w], 'little') - half for i in range(n)]


def _mul(a, b):
    if not a or not b:
        return []
    if min(len(a), len(b)) < 24:
        return _schoolbook(a, b)
    return _kronecker(a, b)


def _divmod_monic(a, b):
    # a = q*b + r over Z, b monic
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    low = [(j, c) for j, c in enumerate(b[:-1]) if c]
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j, bj in low:
                a[i - db + j] -= c * bj
    return q, _trim(a[:db])


def _content(c):
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return g


def _primitive(c):
    c = _trim(c)
    if not c:
        return c
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _pseudo_rem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j, bj in enumerate(b):
            a[shift + j] -= la * bj
        a = _trim(a)
    return a


def _gcd_primitive(a, b):
    # gcd over Q, returned as primitive integer polynomial with positive lc
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


# ---------------------------------------------------------------------------

class IntPoly:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored ascending with no trailing zeros; the zero
    polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, IntPoly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = list(coeffs)
        if any(not isinstance(x, int) for x in c):
            raise TypeError('IntPoly coefficients must be integers')
        self.coeffs = tuple(_trim(c))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self):
        return self.lc == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        # total order: degree first, then ascending coefficient tuple
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return IntPoly([-x for x in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, x in enumerate(b):
            r[i] += x
        return IntPoly(r)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([x * other for x in self.coeffs])
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError('negative exponent')
        r, b = IntPoly([1]), self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def __divmod__(self, other):
        other = _coerce(other)
        if abs(other.lc) != 1:
            raise ValueError('division requires a monic (or -monic) divisor')
        if other.lc == -1:
            q, r = _divmod_monic(self.coeffs, [-x for x in other.coeffs])
            return -IntPoly(q), IntPoly(r)
        q, r = _divmod_monic(self.coeffs, other.coeffs)
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        r = 0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_x_power(self, k):
        """Return self(X^k)."""
        r = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            r[k * i] = c
        return IntPoly(r)

    def scale_x(self, a):
        """Return self(a*X)."""
        return IntPoly([c * a**i for i, c in enumerate(self.coeffs)])

    def content(self):
        return _content(self.coeffs)

    def primitive_part(self):
        return IntPoly(_primitive(self.coeffs))

    def __repr__(self):
        return f'IntPoly({list(self.coeffs)})'

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = '' if i == 0 else ('X' if i == 1 else f'X^{i}')
            a = abs(c)
            body = f'{a}' if not mono else (mono if a == 1 else f'{a}*{mono}')
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            s += f' {sign} {body}'
        return s


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly(x)
    return NotImplemented


X = IntPoly([0, 1])


def poly_gcd(f, g):
    """Gcd over Q as a primitive integer polynomial with positive leading coefficient."""
    return IntPoly(_gcd_primitive(f.coeffs, g.coeffs))


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """The n-th cyclotomic polynomial, by exact division of X^n - 1."""
    if n < 1:
        raise ValueError('cyclotomic_poly requires n >= 1')
    f = IntPoly.monomial(n) - 1
    for d in divisors(n)[:-1]:
        f, r = divmod(f, cyclotomic_poly(d))
        assert not r
    return f


def perfect_power_decompose(f):
    """Write a monic f as g^e with g squarefree; raise NotElementaryError otherwise.

    g is the squarefree radical f / gcd(f, f').
    """
    f = IntPoly(f)
    if f.degree < 1 or not f.is_monic():
        raise ValueError('perfect_power_decompose requires a monic polynomial of degree >= 1')
    d = poly_gcd(f, f.derivative())
    g, r = divmod(f, d)
    assert not r
    if g.lc < 0:
        g = -g
    if f.degree % g.degree:
        raise NotElementaryError(f'{f} is not a power of its radical {g}')
    e = f.degree // g.degree
    if g**e != f:
        raise NotElementaryError(f'{f} is not a power of its radical {g}')
    return g, e


def charpoly_integer_matrix(M):
    """Characteristic polynomial det(X*I - M) by Berkowitz's division-free algorithm."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError('matrix must be square')
    if n == 0:
        return IntPoly([1])
    A = [list(row) for row in M]
    # descending coefficient vector of the leading r x r principal minor
    c = [1, -A[0][0]]
    for r in range(1, n):
        R = [A[i][r] for i in range(r)]
        S = A[r][:r]
        t = [1, -A[r][r]]
        v = R
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(S, v)))
            v = [sum(A[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                s += t[i - j] * c[j]
            new[i] = s
        c = new
    return IntPoly(c[::-1])
