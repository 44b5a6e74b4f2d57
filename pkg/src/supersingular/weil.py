"""Supersingular Weil q-numbers pi = zeta_m^nu * sqrt(q) and their isogeny classes."""

import enum
import math
from dataclasses import dataclass

from .arith import (IntPoly, NotElementaryError, cyclotomic_poly, euler_phi, is_prime,
                    multiplicative_order, perfect_power_decompose, _lpart)
from .cyclotomic import CycInt, minimal_polynomial_cyclotomic, quadratic_discriminant, weil_embed

__all__ = [
    'WeilNumber', 'IsogenyClass', 'Exceptional',
    'NotSupersingularError', 'MultiplicityError', 'NotElementaryError',
    'weil_min_poly', 'qpi_equals_K', 'is_in_E', 'is_in_Q', 'simple_class',
    'is_supersingular_poly', 'parse_frobenius', 'exceptional_type', 'predicted_degree',
    'verify_roundtrip',
]


class NotSupersingularError(ValueError):
    """No root of the polynomial has the form zeta * sqrt(q)."""


class MultiplicityError(ValueError):
    """The power e is not a multiple of the simple constituent's multiplicity."""


class Exceptional(str, enum.Enum):
    NONE = 'none'
    TYPE1 = 'type1'  # g = X^2 + q, p = 3 mod 4, q not a square
    TYPE2 = 'type2'  # g = X^2 - q, p = 1 mod 4, q not a square


@dataclass(frozen=True)
class WeilNumber:
    """pi = zeta_m^nu * sqrt(p^s), sqrt taken positive."""

    p: int
    s: int
    m: int
    nu: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f'p = {self.p} is not prime')
        if self.s < 1 or self.m < 1:
            raise ValueError('s and m must be positive')
        if not 0 <= self.nu < self.m or math.gcd(self.nu, self.m) != 1:
            raise ValueError(f'nu = {self.nu} is not a unit in [0, {self.m})')

    @property
    def q(self):
        return self.p**self.s

    @property
    def m_half(self):
        """m/(2, m): the order of pi^2/q."""
        return self.m // math.gcd(2, self.m)

    @classmethod
    def all_for(cls, p, s, m):
        return [cls(p, s, m, nu) for nu in range(m) if math.gcd(nu, m) == 1]


@dataclass(frozen=True)
class IsogenyClass:
    """Elementary supersingular isogeny class with Frobenius polynomial g^e."""

    p: int
    s: int
    g: IntPoly
    e: int
    m: int
    d: int
    exceptional: Exceptional = Exceptional.NONE

    def __post_init__(self):
        if 2 * self.d != self.e * self.g.degree:
            raise ValueError('dimension must satisfy 2d = e * deg g')
        if self.exceptional is not exceptional_type(self.g, self.p, self.s):
            raise ValueError('exceptional flag inconsistent with g, p, s')
        if self.exceptional is Exceptional.TYPE2 and self.e % 2:
            raise ValueError('type2 classes have even e')

    @property
    def q(self):
        return self.p**self.s

    @property
    def f(self):
        return self.g**self.e

    @property
    def group_order_factor(self):
        """|g(1)|, the order of the cyclic building block."""
        return abs(self.g(1))

    def power(self, k):
        return IsogenyClass(self.p, self.s, self.g, k * self.e, self.m, k * self.d,
                            self.exceptional)


def exceptional_type(g, p, s):
    if s % 2 == 0 or p == 2:
        return Exceptional.NONE
    q = p**s
    if p % 4 == 3 and g == IntPoly([q, 0, 1]):
        return Exceptional.TYPE1
    if p % 4 == 1 and g == IntPoly([-q, 0, 1]):
        return Exceptional.TYPE2
    return Exceptional.NONE


# ---------------------------------------------------------------------------

_embed_cache = {}
_minpoly_cache = {}


def _embed(w):
    r = _embed_cache.get(w)
    if r is None:
        r = _embed_cache[w] = weil_embed(w)
    return r


def _vanishes(g, w):
    # g(pi) = g_even(pi^2) + pi * g_odd(pi^2), with pi^2 = q zeta_m^(2 nu) at level m
    y = CycInt.zeta(w.m, 2 * w.nu) * w.q
    even = y.evaluate(IntPoly(g.coeffs[0::2]))
    odd = y.evaluate(IntPoly(g.coeffs[1::2]))
    if odd.is_zero():
        return even.is_zero()
    M, pi = _embed(w)
    return (even.lift(M) + pi * odd.lift(M)).is_zero()


def weil_min_poly(w):
    """Minimal polynomial over Q of pi = zeta_m^nu sqrt(q)."""
    # all pi for fixed (p, s, m) share at most two minimal polynomials
    known = _minpoly_cache.setdefault((w.p, w.s, w.m), [])
    for g in known:
        if _vanishes(g, w):
            return g
    g = minimal_polynomial_cyclotomic(_embed(w)[1])
    known.append(g)
    return g


def qpi_equals_K(w):
    """Whether Q(pi) = Q(pi^2) for non-square q."""
    if w.s % 2 == 0:
        raise ValueError('qpi_equals_K requires q to be a non-square (s odd)')
    D = quadratic_discriminant(w.p)
    if w.m % D:
        return False
    return not (w.m % 4 == 0 and (w.m // 2) % D == 0)


def is_in_E(w):
    if w.p == 2 or w.s % 2 == 0 or w.m % w.p == 0:
        return False
    if w.p % 4 == 1:
        return w.m % 4 != 0
    return w.m % 4 == 0 and w.m % 8 != 0


def is_in_Q(w):
    if w.m in (1, 2):
        return True
    if w.s % 2:
        return False
    if w.m % (math.gcd(2, w.p) * w.p) == 0:
        return False
    _, rest = _lpart(w.m, w.p)
    return multiplicative_order(w.p, rest) % 2 == 1


def simple_class(w):
    """Isogeny class of the simple abelian variety with Frobenius pi."""
    g = weil_min_poly(w)
    e = 2 if is_in_Q(w) else 1
    return IsogenyClass(w.p, w.s, g, e, w.m, e * g.degree // 2, exceptional_type(g, w.p, w.s))


def _cleared_cyclotomic(n, q):
    # q^phi(n) * Phi_n(X^2 / q), with integer coefficients
    a = cyclotomic_poly(n).coeffs
    k = len(a) - 1
    c = [0] * (2 * k + 1)
    for i, ai in enumerate(a):
        c[2 * i] = ai * q**(k - i)
    return IntPoly(c)


def _check_prime_power(p, s):
    if not is_prime(p):
        raise ValueError(f'p = {p} is not prime')
    if s < 1:
        raise ValueError('s must be positive')


def is_supersingular_poly(f, p, s):
    """Least m' such that pi^2/q is a primitive m'-th root of unity for the roots pi of f.

    Returns None when f is not supersingular for q = p^s.
    """
    _check_prime_power(p, s)
    g, _ = perfect_power_decompose(f)
    q = p**s
    D = g.degree
    for n in range(1, 2 * D * D + 3):
        k = euler_phi(n)
        # g | C_n needs deg g <= 2 phi(n); phi(n) <= deg g bounds the search
        if k > D or 2 * k < D:
            continue
        if not (_cleared_cyclotomic(n, q) % g):
            return n
    return None


def parse_frobenius(f, p, s):
    """Isogeny class of an elementary supersingular Frobenius polynomial f over F_{p^s}."""
    _check_prime_power(p, s)
    f = IntPoly(f)
    g, e = perfect_power_decompose(f)
    mp = is_supersingular_poly(g, p, s)
    if mp is None:
        raise NotSupersingularError(f'{f} is not supersingular for q = {p}^{s}')
    candidates = ([mp] if mp % 2 else []) + [2 * mp]
    w = None
    for m in candidates:
        for cand in WeilNumber.all_for(p, s, m):
            if weil_min_poly(cand) == g:
                w = cand
                break
        if w is not None:
            break
    if w is None:
        raise NotElementaryError(f'radical {g} of {f} is not irreducible')
    e0 = 2 if is_in_Q(w) else 1
    if e % e0:
        raise MultiplicityError(f'e = {e} is not a multiple of {e0} for {g}')
    d = e * g.degree // 2
    if abs(f(0)) != (p**s)**d:
        raise AssertionError(f'constant term check failed for {f}')
    return IsogenyClass(p, s, g, e, w.m, d, exceptional_type(g, p, s))


def predicted_degree(w):
    """[Q(pi):Q]: phi(m) for square q, else phi(m') or 2 phi(m') as Q(pi) = Q(pi^2) or not."""
    if w.s % 2 == 0:
        return euler_phi(w.m)
    k = euler_phi(w.m_half)
    return k if qpi_equals_K(w) else 2 * k


def verify_roundtrip(primes=(2, 3, 5, 7, 11, 13), s_values=(1, 2), m_max=24):
    """Exact g(pi) = 0, degree prediction and parse_frobenius round trip for every Weil number."""
    report = {'suite': 'roundtrip', 'checked': 0, 'failures': []}
    for p in primes:
        for s in s_values:
            for m in range(1, m_max + 1):
                for w in WeilNumber.all_for(p, s, m):
                    report['checked'] += 1
                    g = weil_min_poly(w)
                    problems = []
                    if not _vanishes(g, w):
                        problems.append('g(pi) != 0')
                    if g.degree != predicted_degree(w):
                        problems.append(f'deg g = {g.degree}, predicted {predicted_degree(w)}')
                    cls = simple_class(w)
                    back = parse_frobenius(cls.f, p, s)
                    if (back.g, back.e, back.exceptional) != (cls.g, cls.e, cls.exceptional):
                        problems.append('parse_frobenius does not round-trip')
                    if problems:
                        report['failures'].append({'p': p, 's': s, 'm': m, 'nu': w.nu,
                                                   'g': list(g.coeffs), 'problems': problems})
    report['passed'] = not report['failures']
    return report
