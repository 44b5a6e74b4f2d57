"""Brute-force ground truth for genus-2 curves y^2 = f5(x) over F_p, p odd.

Point counts over F_p and F_{p^2} give the Frobenius quartic; the Jacobian
is enumerated in Mumford form and its group law is Cantor's algorithm.
"""

import itertools
import math
import random
from dataclasses import dataclass

from . import gfp
from .arith import IntPoly, is_prime
from .fields import get_field
from .structure import rational_point_structures, structure_from_element_orders
from .weil import Exceptional, NotElementaryError, is_supersingular_poly, parse_frobenius

__all__ = ['G2Curve', 'MumfordDiv', 'curve_counts', 'frobenius_quartic', 'jacobian_elements',
           'jacobian_structure', 'cantor_add', 'cantor_neg', 'search_exceptional_g2',
           'count_model', 'MAX_P', 'MAX_JACOBIAN', 'SEARCH_PRIMES']

MAX_P = 13
MAX_JACOBIAN = 5000
SEARCH_PRIMES = (5, 13)
AXIOM_SAMPLES = 3


@dataclass(frozen=True)
class G2Curve:
    """y^2 = f5(x) over F_p; f5 is ascending, monic of degree 5 and squarefree."""

    p: int
    f5: tuple

    def __post_init__(self):
        p = self.p
        if not is_prime(p) or p == 2:
            raise ValueError(f'p = {p} must be an odd prime')
        f = gfp.norm(list(self.f5), p)
        if gfp.deg(f) != 5 or f[-1] != 1:
            raise ValueError(f'{self.f5} is not monic of degree 5 mod {p}')
        if gfp.deg(gfp.gcd(f, gfp.derivative(f, p), p)) > 0:
            raise ValueError(f'{self.f5} is not squarefree mod {p}')
        object.__setattr__(self, 'f5', tuple(f))

    def __str__(self):
        return f'y^2 = {IntPoly(self.f5)} over F_{self.p}'


@dataclass(frozen=True)
class MumfordDiv:
    """Reduced divisor class (u, v): u monic, deg v < deg u <= 2, u | v^2 - f5."""

    u: tuple
    v: tuple

    @property
    def is_identity(self):
        return self.u == (1,)


IDENTITY = MumfordDiv((1,), ())


def _check_bound(p):
    if p > MAX_P:
        raise ValueError(f'p = {p} exceeds the configured bound {MAX_P}')


def count_model(p, f5):
    """Point counts of the model y^2 = f5(x) over F_p and F_{p^2}, smooth or not."""
    _check_bound(p)
    n1 = 1
    for x in range(p):
        r = gfp.evaluate(gfp.norm(list(f5), p), x, p)
        n1 += 1 if r == 0 else (2 if pow(r, (p - 1) // 2, p) == 1 else 0)
    F = get_field(p, 2)
    squares = {F.mul(y, y) for y in F.elements}
    n2 = 1
    for x in F.elements:
        r = 0
        for a in reversed(f5):
            r = F.add(F.mul(r, x), a % p)
        n2 += 1 if r == 0 else (2 if r in squares else 0)
    assert n2 >= n1
    return n1, n2


def curve_counts(c):
    """(#C(F_p), #C(F_{p^2})), each including the single point at infinity."""
    return count_model(c.p, c.f5)


def frobenius_quartic(N1, N2, p):
    """X^4 - a X^3 + b X^2 - a p X + p^2 from the point counts over F_p and F_{p^2}."""
    a = p + 1 - N1
    b2 = N2 - p * p - 1 + a * a
    if b2 % 2:
        raise AssertionError(f'non-integral b from counts ({N1}, {N2}) over F_{p}')
    b = b2 // 2
    f = IntPoly([p * p, -a * p, b, -a, 1])
    if f(1) < 0:
        raise AssertionError(f'negative Jacobian order from {f}')
    return f


# Cantor's algorithm --------------------------------------------------------

def cantor_neg(c, D):
    return MumfordDiv(D.u, tuple(gfp.norm([-x for x in D.v], c.p)))


def _reduce(c, u, v):
    p, f = c.p, list(c.f5)
    v = gfp.rem(v, u, p)
    while gfp.deg(u) > 2:
        u = gfp.divmod_(gfp.sub(f, gfp.mul(v, v, p), p), u, p)[0]
        u = gfp.monic(u, p)
        v = gfp.rem(gfp.norm([-x for x in v], p), u, p)
    return MumfordDiv(tuple(u), tuple(v))


def cantor_add(c, D1, D2):
    p, f = c.p, list(c.f5)
    u1, v1, u2, v2 = list(D1.u), list(D1.v), list(D2.u), list(D2.v)
    d1, e1, e2 = gfp.xgcd(u1, u2, p)
    d, c1, c2 = gfp.xgcd(d1, gfp.add(v1, v2, p), p)
    s1, s2, s3 = gfp.mul(c1, e1, p), gfp.mul(c1, e2, p), c2
    dd = gfp.mul(d, d, p)
    u, r = gfp.divmod_(gfp.mul(u1, u2, p), dd, p)
    assert not r
    num = gfp.add(gfp.add(gfp.mul(s1, gfp.mul(u1, v2, p), p), gfp.mul(s2, gfp.mul(u2, v1, p), p), p),
                  gfp.mul(s3, gfp.add(gfp.mul(v1, v2, p), f, p), p), p)
    v, r = gfp.divmod_(num, d, p)
    assert not r
    return _reduce(c, u, gfp.rem(v, u, p))


def is_valid(c, D):
    p = c.p
    u, v = list(D.u), list(D.v)
    if not u or u[-1] != 1 or gfp.deg(u) > 2 or gfp.deg(v) >= gfp.deg(u):
        return False
    return not gfp.rem(gfp.sub(gfp.mul(v, v, p), list(c.f5), p), u, p)


# Jacobian enumeration ------------------------------------------------------

def jacobian_elements(c):
    """Every F_p-rational divisor class, identity first."""
    p, f = c.p, list(c.f5)
    roots = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    out = [IDENTITY]
    for a in range(p):
        for b in roots.get(gfp.evaluate(f, a, p), ()):
            out.append(MumfordDiv((-a % p, 1), tuple(gfp.norm([b], p))))
    inv2 = pow(2, -1, p)
    for c0, c1 in itertools.product(range(p), repeat=2):
        u = [c0, c1, 1]
        r = gfp.rem(f, u, p) + [0, 0]
        r0, r1 = r[0], r[1]
        # v = v1 X + v0 with v^2 = f mod u, where X^2 = -c1 X - c0
        for v1 in range(p):
            if v1 == 0:
                sols = [(v0, 0) for v0 in roots.get(r0, ())] if r1 == 0 else []
            else:
                v0 = (r1 + v1 * v1 * c1) * inv2 * pow(v1, -1, p) % p
                sols = [(v0, v1)] if (v0 * v0 - v1 * v1 * c0 - r0) % p == 0 else []
            for v0, w1 in sols:
                out.append(MumfordDiv(tuple(u), tuple(gfp.norm([v0, w1], p))))
    return out


def _element_orders(c, elements):
    order = {IDENTITY: 1}
    for D in elements:
        if D in order:
            continue
        multiples = [D]
        R = cantor_add(c, D, D)
        while not R.is_identity:
            multiples.append(R)
            R = cantor_add(c, R, D)
        k = len(multiples) + 1
        for j, Q in enumerate(multiples, start=1):
            order.setdefault(Q, k // math.gcd(j, k))
    return [order[D] for D in elements]


def check_group_axioms(c, elements, samples=AXIOM_SAMPLES, seed=0):
    """Identity, inverse and associativity laws on a seeded sample of triples."""
    rng = random.Random(seed)
    for _ in range(samples):
        A, B, C = (rng.choice(elements) for _ in range(3))
        if cantor_add(c, A, IDENTITY) != A or not cantor_add(c, A, cantor_neg(c, A)).is_identity:
            raise AssertionError(f'identity or inverse law fails on {c}')
        lhs = cantor_add(c, cantor_add(c, A, B), C)
        rhs = cantor_add(c, A, cantor_add(c, B, C))
        if lhs != rhs or cantor_add(c, A, B) != cantor_add(c, B, A):
            raise AssertionError(f'associativity or commutativity fails on {c}')


def jacobian_structure(c, f=None):
    """Invariant factors of Jac(C)(F_p), cross-checked against f(1)."""
    if f is None:
        f = frobenius_quartic(*curve_counts(c), c.p)
    N = f(1)
    if N > MAX_JACOBIAN:
        raise ValueError(f'Jacobian order {N} exceeds the enumeration bound {MAX_JACOBIAN}')
    elements = jacobian_elements(c)
    if len(elements) != N:
        raise AssertionError(f'{len(elements)} divisor classes on {c}, expected f(1) = {N}')
    check_group_axioms(c, elements)
    structure = structure_from_element_orders(_element_orders(c, elements))
    assert structure.order == N and structure.rank <= 4
    return structure


# Search for the Type2 class ------------------------------------------------

def _quintics(p):
    # with p != 5 the X^4 coefficient can be removed by translating x
    top = [0] if p != 5 else range(p)
    for a4 in top:
        for low in itertools.product(range(p), repeat=4):
            yield tuple(low) + (a4, 1)


def _n1(f, p, chi):
    n = 1
    for x in range(p):
        r = 0
        for a in reversed(f):
            r = (r * x + a) % p
        n += chi[r]
    return n


def search_exceptional_g2(p, check_supersingular=True):
    """Scan quintics over F_p for Jacobians with Frobenius (X^2 - p)^2.

    Every hit must have a structure in the predicted family; which (a, b)
    occur is reported, not asserted. With check_supersingular, every other
    elementary supersingular Jacobian met in the scan is checked as well.
    """
    if p not in SEARCH_PRIMES or p % 4 != 1:
        raise ValueError(f'p = {p} is not in the configured search set {SEARCH_PRIMES}')
    target = IntPoly([-p, 0, 1])**2
    cls = parse_frobenius(target, p, 1)
    assert cls.exceptional is Exceptional.TYPE2 and cls.e == 2
    family = rational_point_structures(cls)
    chi = [1] + [2 if pow(r, (p - 1) // 2, p) == 1 else 0 for r in range(1, p)]
    predictions = {}
    report = {'p': p, 'target': list(target.coeffs), 'curves': 0, 'hits': [],
              'family': [{'a': a, 'b': b, 'invariant_factors': list(s.invariant_factors)}
                         for a, b, s in family.family],
              'supersingular_checked': 0, 'failures': []}
    for f5 in _quintics(p):
        fl = gfp.norm(list(f5), p)
        if gfp.deg(gfp.gcd(fl, gfp.derivative(fl, p), p)) > 0:
            continue
        report['curves'] += 1
        N1 = _n1(f5, p, chi)
        if N1 != p + 1 and not check_supersingular:
            continue
        c = G2Curve(p, f5)
        f = frobenius_quartic(N1, curve_counts(c)[1], p)
        a = -f[3]
        assert a * a <= 16 * p
        if f == target:
            structure = jacobian_structure(c, f)
            if structure not in family:
                report['failures'].append({'curve': list(f5), 'structure': list(structure.invariant_factors)})
                continue
            a_, b_ = family.index_of(structure)
            report['hits'].append({'curve': list(f5), 'a': a_, 'b': b_,
                                   'invariant_factors': list(structure.invariant_factors)})
        elif check_supersingular and is_supersingular_poly(f, p, 1) is not None:
            if f not in predictions:
                try:
                    predictions[f] = rational_point_structures(parse_frobenius(f, p, 1))
                except NotElementaryError:
                    predictions[f] = None
            if predictions[f] is None:
                continue
            structure = jacobian_structure(c, f)
            report['supersingular_checked'] += 1
            if structure not in predictions[f]:
                report['failures'].append({'curve': list(f5), 'frobenius': list(f.coeffs),
                                           'structure': list(structure.invariant_factors)})
    realized = sorted({(h['a'], h['b']) for h in report['hits']}, reverse=True)
    report['realized_ab'] = [list(ab) for ab in realized]
    report['passed'] = not report['failures']
    return report
