"""Local maximality of equation orders Z[alpha] at a rational prime l.

Two independent routes are provided: the prime-by-prime invertibility test
(`llenstra_invertible`, aggregated by `maximal_at_l`) and the classical
Dedekind criterion (`dedekind_maximal_at_l`).
"""

import math
from dataclasses import dataclass
from typing import Optional

from . import gfp
from .arith import IntPoly, cyclotomic_poly, factorize, is_prime
from .weil import is_in_E, weil_min_poly

__all__ = ['LocalMaximality', 'llenstra_invertible', 'clenstra_invertible', 'maximal_at_l',
           'dedekind_maximal_at_l', 'quadratic_order_index', 'fundamental_discriminant',
           'zpi_maximality', 'order_corpus', 'verify_order_corpus', 'verify_zpi_bridge']

FACTOR_SEED = 0


@dataclass(frozen=True)
class LocalMaximality:
    l: int
    maximal: bool
    witnesses: tuple = ()
    splitting: Optional[str] = None
    quotient: Optional[str] = None

    def __post_init__(self):
        if self.maximal != (not self.witnesses):
            raise ValueError('maximal iff there are no witnesses')


def _check_prime(l):
    if not is_prime(l):
        raise ValueError(f'l = {l} is not prime')


def _lift(a):
    # canonical lift: coefficients already in [0, l)
    return IntPoly(list(a))


def _reduce(h, l):
    return gfp.norm(list(IntPoly(h).coeffs), l)


def llenstra_invertible(h, l, h0bar, lift=None):
    """Whether the prime (l, h0(alpha)) of Z[alpha] = Z[X]/(h) is invertible.

    Not invertible iff h0bar^2 divides h mod l and the remainder of h upon
    division by the lift of h0bar has every coefficient divisible by l^2.
    The lift defaults to the canonical one (coefficients in [0, l)); any
    other monic lift may be passed to check that the answer does not change.
    """
    _check_prime(l)
    h = IntPoly(h)
    hbar = _reduce(h, l)
    h0bar = gfp.monic(gfp.norm(list(h0bar), l), l)
    if gfp.deg(h0bar) < 1 or gfp.rem(hbar, h0bar, l):
        raise ValueError(f'{h0bar} does not divide h mod {l}')
    if gfp.rem(hbar, gfp.mul(h0bar, h0bar, l), l):
        return True
    if lift is None:
        lift = _lift(h0bar)
    else:
        lift = IntPoly(lift)
        if not lift.is_monic() or _reduce(lift, l) != h0bar:
            raise ValueError(f'{lift} is not a monic lift of {h0bar} mod {l}')
    r = h % lift
    return any(c % (l * l) for c in r.coeffs)


def clenstra_invertible(h, l, beta):
    """Linear-factor case: not invertible iff h(beta) = 0 mod l^2 and h'(beta) = 0 mod l."""
    _check_prime(l)
    h = IntPoly(h)
    if h(beta) % l:
        raise ValueError(f'X - {beta} does not divide h mod {l}')
    return not (h(beta) % (l * l) == 0 and h.derivative()(beta) % l == 0)


def maximal_at_l(h, l):
    """Whether Z[X]/(h) is maximal at l, with the non-invertible primes as witnesses."""
    _check_prime(l)
    h = IntPoly(h)
    if not h.is_monic():
        raise ValueError('h must be monic')
    witnesses = tuple(tuple(fac) for fac, _ in gfp.factor(_reduce(h, l), l, FACTOR_SEED)
                      if not llenstra_invertible(h, l, fac))
    return LocalMaximality(l, not witnesses, witnesses)


def dedekind_maximal_at_l(h, l):
    """Dedekind's criterion for maximality of Z[X]/(h) at l."""
    _check_prime(l)
    h = IntPoly(h)
    if not h.is_monic():
        raise ValueError('h must be monic')
    hbar = _reduce(h, l)
    rad = [1]
    for fac, _ in gfp.factor(hbar, l, FACTOR_SEED):
        rad = gfp.mul(rad, fac, l)
    hstar = gfp.divmod_(hbar, rad, l)[0]
    diff = _lift(rad) * _lift(hstar) - h
    assert all(c % l == 0 for c in diff.coeffs)
    T = gfp.norm([c // l for c in diff.coeffs], l)
    common = gfp.gcd(gfp.gcd(T, rad, l), hstar, l)
    return gfp.deg(common) == 0


def fundamental_discriminant(D):
    """Discriminant of the quadratic field Q(sqrt(D)) for a non-square integer D."""
    if D == 0 or (D > 0 and math.isqrt(D)**2 == D):
        raise ValueError(f'{D} is a square')
    core = -1 if D < 0 else 1
    for p, k in factorize(abs(D)).items():
        if k % 2:
            core *= p
    return core if core % 4 == 1 else 4 * core


def quadratic_order_index(h):
    """Index of Z[X]/(h) in the maximal order of its quadratic field."""
    h = IntPoly(h)
    if h.degree != 2 or not h.is_monic():
        raise ValueError('h must be a monic quadratic')
    c, b = h[0], h[1]
    disc = b * b - 4 * c
    if disc >= 0 and math.isqrt(disc)**2 == disc:
        raise ValueError(f'{h} is reducible over Q')
    d0 = fundamental_discriminant(disc)
    idx2, r = divmod(disc, d0)
    k = math.isqrt(idx2)
    assert r == 0 and k * k == idx2
    return k


def zpi_maximality(w, l):
    """Maximality of Z[pi] at a prime l != p, by the set-E criterion."""
    _check_prime(l)
    if l == w.p:
        raise ValueError('l must differ from the characteristic p')
    if not (l == 2 and is_in_E(w)):
        return LocalMaximality(l, True)
    splitting = 'split' if w.p % 8 in (1, 7) else 'inert'
    witnesses = maximal_at_l(weil_min_poly(w), 2).witnesses
    if not witnesses:
        raise AssertionError(f'no non-invertible prime over 2 found for {w}')
    return LocalMaximality(l, False, witnesses, splitting,
                           'O_P / Z[pi]_P = (O_K)_P / P for each prime P of K over 2')


def _is_cube(n):
    r = round(abs(n) ** (1 / 3))
    return any(k**3 == abs(n) for k in (r - 1, r, r + 1))


def order_corpus():
    """Test polynomials: X^2 - D for non-square D, 0 < |D| <= 50; Phi_n for n <= 30;
    X^3 - D for non-cube D, 0 < |D| <= 20."""
    corpus = [IntPoly([-D, 0, 1]) for D in range(-50, 51)
              if D != 0 and not (D > 0 and math.isqrt(D)**2 == D)]
    corpus.extend(cyclotomic_poly(n) for n in range(1, 31))
    corpus.extend(IntPoly([-D, 0, 0, 1]) for D in range(-20, 21) if D != 0 and not _is_cube(D))
    return corpus


def verify_order_corpus(primes=(2, 3, 5)):
    """Agreement of maximal_at_l with the Dedekind criterion on the corpus."""
    report = {'suite': 'orders', 'checked': 0, 'agreed': 0, 'failures': []}
    for h in order_corpus():
        for l in primes:
            report['checked'] += 1
            ours = maximal_at_l(h, l).maximal
            theirs = dedekind_maximal_at_l(h, l)
            if ours == theirs:
                report['agreed'] += 1
            else:
                report['failures'].append({'h': list(h.coeffs), 'l': l,
                                           'maximal_at_l': ours, 'dedekind': theirs})
    report['passed'] = not report['failures']
    return report


def verify_zpi_bridge(p_max=50, s_values=(1, 3), m_values=(1, 2, 4)):
    """zpi_maximality(w, 2) against maximal_at_l(g, 2) for odd p (l = 2 must differ from p)."""
    from .weil import WeilNumber
    report = {'suite': 'zpi-bridge', 'checked': 0, 'agreed': 0, 'failures': []}
    for p in range(3, p_max + 1):
        if not is_prime(p):
            continue
        for s in s_values:
            for m in m_values:
                for w in WeilNumber.all_for(p, s, m):
                    report['checked'] += 1
                    ours = zpi_maximality(w, 2).maximal
                    direct = maximal_at_l(weil_min_poly(w), 2).maximal
                    if ours == direct:
                        report['agreed'] += 1
                    else:
                        report['failures'].append({'p': p, 's': s, 'm': m, 'nu': w.nu,
                                                   'zpi': ours, 'direct': direct})
    report['passed'] = not report['failures']
    return report
