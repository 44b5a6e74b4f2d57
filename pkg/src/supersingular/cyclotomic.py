"""Exact arithmetic in Z[zeta_M].

An element of level M is a coefficient vector of length phi(M) over the
power basis 1, zeta_M, ..., zeta_M^(phi(M)-1), always reduced modulo the
cyclotomic polynomial Phi_M. Elements of different levels are compared and
combined at the lcm level. The canonical complex embedding sends zeta_M to
exp(2*pi*i/M).
"""

import functools
import math
from collections import Counter

from mpmath import iv

from .arith import (IntPoly, cyclotomic_poly, euler_phi, is_prime, jacobi_symbol, lcm,
                    perfect_power_decompose, charpoly_integer_matrix, factorize, _mul)

__all__ = ['CycInt', 'quadratic_discriminant', 'sqrt_p_embed', 'weil_embed',
           'minimal_polynomial_cyclotomic']

# above this phi(M), the characteristic polynomial is computed modulo split primes
BERKOWITZ_MAX_DEGREE = 16


@functools.lru_cache(maxsize=None)
def _phi_tail(M):
    # nonzero non-leading coefficients of Phi_M as (index, coeff)
    c = cyclotomic_poly(M).coeffs
    return tuple((j, x) for j, x in enumerate(c[:-1]) if x), len(c) - 1


def _reduce(M, c):
    tail, n = _phi_tail(M)
    c = list(c)
    for i in range(len(c) - 1, n - 1, -1):
        a = c[i]
        if a:
            base = i - n
            for j, b in tail:
                c[base + j] -= a * b
    c = c[:n]
    return tuple(c + [0] * (n - len(c)))


class CycInt:
    """Element of Z[zeta_M] for a fixed level M."""

    __slots__ = ('level', 'coeffs')

    def __init__(self, level, coeffs=()):
        if level < 1:
            raise ValueError('level must be positive')
        self.level = level
        self.coeffs = _reduce(level, coeffs)

    @classmethod
    def integer(cls, M, a):
        return cls(M, [a])

    @classmethod
    def zeta(cls, M, k=1):
        """zeta_M^k."""
        k %= M
        return cls(M, [0] * k + [1])

    @property
    def degree(self):
        return len(self.coeffs)

    def lift(self, N):
        """The same element viewed at level N (a multiple of the current level)."""
        if N == self.level:
            return self
        if N % self.level:
            raise ValueError(f'cannot lift level {self.level} to {N}')
        k = N // self.level
        c = [0] * (k * (len(self.coeffs) - 1) + 1)
        for i, a in enumerate(self.coeffs):
            c[k * i] = a
        return CycInt(N, c)

    def _common(self, other):
        if isinstance(other, int):
            return self, CycInt.integer(self.level, other)
        if not isinstance(other, CycInt):
            return None, None
        if other.level == self.level:
            return self, other
        N = lcm(self.level, other.level)
        return self.lift(N), other.lift(N)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def __neg__(self):
        return CycInt(self.level, [-x for x in self.coeffs])

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CycInt(a.level, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CycInt(a.level, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.level, [x * other for x in self.coeffs])
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CycInt(a.level, _mul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e):
        r, b = CycInt.integer(self.level, 1), self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def __repr__(self):
        return f'CycInt({self.level}, {list(self.coeffs)})'

    def evaluate(self, poly):
        """poly(self) for an IntPoly, by Horner's rule."""
        r = CycInt.integer(self.level, 0)
        for c in reversed(IntPoly(poly).coeffs):
            r = r * self + c
        return r

    def multiplication_matrix(self):
        """Matrix of y -> self*y on the power basis (columns are images of zeta^j)."""
        n = len(self.coeffs)
        cols = []
        col = self
        z = CycInt.zeta(self.level)
        for _ in range(n):
            cols.append(col.coeffs)
            col = col * z
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def interval(self, prec=53):
        """(real, imag) mpmath intervals enclosing the canonical complex image."""
        old = iv.prec
        iv.prec = prec
        try:
            re = iv.mpf(0)
            im = iv.mpf(0)
            tau = 2 * iv.pi / self.level
            for k, c in enumerate(self.coeffs):
                if c:
                    re += c * iv.cos(tau * k)
                    im += c * iv.sin(tau * k)
            return re, im
        finally:
            iv.prec = old

    def __complex__(self):
        re, im = self.interval(80)
        return complex(float(re.mid), float(im.mid))

    def real_sign(self):
        """Sign of the real part, certified by interval arithmetic (0 if it is exactly 0)."""
        if self.is_zero():
            return 0
        prec = 53
        while prec <= 1 << 14:
            re, _ = self.interval(prec)
            if re.a > 0:
                return 1
            if re.b < 0:
                return -1
            prec *= 2
        return 0


def quadratic_discriminant(p):
    """Discriminant of Q(sqrt(p)) for a prime p."""
    if not is_prime(p):
        raise ValueError(f'{p} is not prime')
    if p % 4 == 1:
        return p
    return 8 if p == 2 else 4 * p


@functools.lru_cache(maxsize=None)
def sqrt_p_embed(p, M):
    """The positive square root of the prime p as an element of Z[zeta_M]."""
    D = quadratic_discriminant(p)
    if M % D:
        raise ValueError(f'sqrt({p}) is not in Q(zeta_{M}): {D} does not divide {M}')
    if p == 2:
        g = CycInt.zeta(M, M // 8) + CycInt.zeta(M, 7 * M // 8)
    else:
        g = CycInt.integer(M, 0)
        for t in range(1, p):
            g = g + CycInt.zeta(M, t * M // p) * jacobi_symbol(t, p)
        if p % 4 == 3:
            # Gauss sum squares to -p here
            g = g * CycInt.zeta(M, 3 * M // 4)
    if g * g != CycInt.integer(M, p):
        raise AssertionError(f'Gauss sum construction failed for p={p}, M={M}')
    if g.real_sign() < 0:
        g = -g
    return g


def weil_embed(w):
    """(M, pi) with pi = zeta_m^nu * sqrt(q) as an element of Z[zeta_M]."""
    p, s, m, nu = w.p, w.s, w.m, w.nu
    if s % 2 == 0:
        M = m
        return M, CycInt.zeta(M, nu) * p**(s // 2)
    M = lcm(m, quadratic_discriminant(p))
    root = sqrt_p_embed(p, M)
    return M, CycInt.zeta(m, nu).lift(M) * root * p**(s // 2)


# ---------------------------------------------------------------------------
# minimal polynomials

def _split_primes(M, start_bits=61):
    # primes l = 1 mod M with a primitive M-th root of unity r mod l
    k = ((1 << start_bits) // M) + 1
    qs = list(factorize(M)) if M > 1 else []
    while True:
        l = k * M + 1
        k += 1
        if not is_prime(l):
            continue
        for a in range(2, 200):
            r = pow(a, (l - 1) // M, l)
            if all(pow(r, M // q, l) != 1 for q in qs):
                yield l, r
                break


def _radical_mod(x, l, r):
    # charpoly of multiplication by x mod l is prod over primitive roots z of (X - x(z))
    M = x.level
    vals = []
    for j in range(1, M + 1):
        if math.gcd(j, M) == 1:
            z = pow(r, j, l)
            v = 0
            for c in reversed(x.coeffs):
                v = (v * z + c) % l
            vals.append(v)
    counts = Counter(vals)
    mults = set(counts.values())
    poly = [1]
    for v in sorted(counts):
        poly = [(a - v * b) % l for a, b in zip([0] + poly, poly + [0])]
    return poly, (mults.pop() if len(mults) == 1 else None)


def _minpoly_modular(x):
    n = len(x.coeffs)
    R = sum(abs(c) for c in x.coeffs)
    best_D = 0
    residues = []
    modulus = 1
    for l, r in _split_primes(x.level):
        poly, mult = _radical_mod(x, l, r)
        if mult is None:
            continue
        D = len(poly) - 1
        if D * mult != n:
            continue
        if D > best_D:
            best_D, residues, modulus = D, [], 1
        if D < best_D:
            continue
        residues.append((poly, l))
        modulus *= l
        if modulus > 2 * (1 + R)**D:
            break
    coeffs = []
    for i in range(best_D + 1):
        acc, mod = 0, 1
        for poly, l in residues:
            t = ((poly[i] - acc) * pow(mod, -1, l)) % l
            acc += mod * t
            mod *= l
        if acc > mod // 2:
            acc -= mod
        coeffs.append(acc)
    return IntPoly(coeffs)


def minimal_polynomial_cyclotomic(x):
    """Monic minimal polynomial over Q of a cyclotomic integer.

    It is the radical of the characteristic polynomial of multiplication by x.
    Small levels use Berkowitz on the multiplication matrix; larger ones reduce
    the characteristic polynomial modulo primes that split completely in
    Q(zeta_M) and recombine by CRT. Either way the result is certified by exact
    substitution.
    """
    if len(x.coeffs) <= BERKOWITZ_MAX_DEGREE:
        chi = charpoly_integer_matrix(x.multiplication_matrix())
        g, _ = perfect_power_decompose(chi)
    else:
        g = _minpoly_modular(x)
    if not x.evaluate(g).is_zero():
        raise AssertionError(f'minimal polynomial certification failed at level {x.level}')
    return g
