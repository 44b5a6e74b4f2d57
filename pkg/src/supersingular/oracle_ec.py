"""Brute-force ground truth for elliptic curves over small finite fields.

Curves are in general Weierstrass form
    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6,
so characteristics 2 and 3 need no special treatment. Points are found by
testing the curve equation on every (x, y).
"""

import functools
import itertools
import random
from collections import Counter, defaultdict
from dataclasses import dataclass

from .arith import IntPoly, is_prime
from .fields import get_field
from .structure import (AbelianGroupStructure, enumerate_classes, rational_point_structures,
                        structure_from_element_orders)
from .weil import Exceptional, is_supersingular_poly, parse_frobenius

__all__ = ['WeierstrassCurve', 'ECGroup', 'SingularCurveError', 'count_points',
           'count_points_and_structure', 'frobenius_of_curve', 'is_supersingular_curve',
           'iter_curves', 'sweep_verify', 'REPORT_SCHEMA']

REPORT_SCHEMA = 'supersingular-report/1'
MAX_Q = 2500
EXHAUSTIVE_Q = 50


class SingularCurveError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def _solutions_table(p, s):
    # table[u][r] = all y with y^2 + u*y = r, found by enumerating every (u, y)
    F = get_field(p, s)
    table = [defaultdict(list) for _ in range(F.q)]
    for u in F.elements:
        row = table[u]
        for y in F.elements:
            row[F.add(F.mul(y, y), F.mul(u, y))].append(y)
    return [dict(row) for row in table]


@dataclass(frozen=True)
class WeierstrassCurve:
    p: int
    s: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    def __post_init__(self):
        if self.p**self.s > MAX_Q:
            raise ValueError(f'q = {self.p}^{self.s} exceeds the brute-force bound {MAX_Q}')
        if self.discriminant() == 0:
            raise SingularCurveError(f'singular curve {self}')

    @property
    def field(self):
        return get_field(self.p, self.s)

    @property
    def q(self):
        return self.p**self.s

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant(self):
        F = get_field(self.p, self.s)
        mul, add, sub, k = F.mul, F.add, F.sub, F.from_int
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = add(mul(a1, a1), mul(k(4), a2))
        b4 = add(mul(k(2), a4), mul(a1, a3))
        b6 = add(mul(a3, a3), mul(k(4), a6))
        b8 = sub(add(add(mul(mul(a1, a1), a6), mul(k(4), mul(a2, a6))), mul(a2, mul(a3, a3))),
                 add(mul(a1, mul(a3, a4)), mul(a4, a4)))
        d = sub(sub(mul(k(9), mul(b2, mul(b4, b6))), mul(b2, mul(b2, b8))),
                add(mul(k(8), mul(b4, mul(b4, b4))), mul(k(27), mul(b6, b6))))
        return d

    def rhs(self, x):
        F = self.field
        x2 = F.mul(x, x)
        return F.add(F.add(F.mul(x2, x), F.mul(self.a2, x2)), F.add(F.mul(self.a4, x), self.a6))

    def points(self):
        """All affine points (x, y)."""
        F = self.field
        table = _solutions_table(self.p, self.s)
        pts = []
        for x in F.elements:
            u = F.add(F.mul(self.a1, x), self.a3)
            for y in table[u].get(self.rhs(x), ()):
                pts.append((x, y))
        return pts

    def on_curve(self, P):
        if P is None:
            return True
        F = self.field
        x, y = P
        lhs = F.add(F.mul(y, y), F.add(F.mul(self.a1, F.mul(x, y)), F.mul(self.a3, y)))
        return lhs == self.rhs(x)

    # group law, identity is None
    def neg(self, P):
        if P is None:
            return None
        F = self.field
        x, y = P
        return x, F.sub(F.neg(y), F.add(F.mul(self.a1, x), self.a3))

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        F = self.field
        a1, a2, a3, a4, a6 = self.coefficients
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if F.add(F.add(y1, y2), F.add(F.mul(a1, x2), a3)) == 0:
                return None
            den = F.add(F.add(F.mul(F.from_int(2), y1), F.mul(a1, x1)), a3)
            num = F.sub(F.add(F.add(F.mul(F.from_int(3), F.mul(x1, x1)),
                                    F.mul(F.from_int(2), F.mul(a2, x1))), a4), F.mul(a1, y1))
            lam = F.div(num, den)
        else:
            lam = F.div(F.sub(y2, y1), F.sub(x2, x1))
        x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x1), x2)
        y3 = F.sub(F.sub(F.neg(F.mul(lam, F.sub(x3, x1))), y1), F.add(F.mul(a1, x3), a3))
        return x3, y3


@dataclass(frozen=True)
class ECGroup:
    order: int
    structure: AbelianGroupStructure

    @property
    def n1(self):
        f = self.structure.invariant_factors
        return f[0] if len(f) == 2 else 1

    @property
    def n2(self):
        f = self.structure.invariant_factors
        return f[-1] if f else 1


def count_points(c):
    """#E(F_q), including the point at infinity."""
    F = c.field
    table = _solutions_table(c.p, c.s)
    n = 1
    for x in F.elements:
        sols = table[F.add(F.mul(c.a1, x), c.a3)].get(c.rhs(x))
        if sols:
            n += len(sols)
    return n


def _element_orders(c, pts):
    order = {None: 1}
    for P in pts:
        if P in order:
            continue
        multiples = [P]
        R = c.add(P, P)
        while R is not None:
            multiples.append(R)
            R = c.add(R, P)
        k = len(multiples) + 1
        for j, Q in enumerate(multiples, start=1):
            order.setdefault(Q, k // _gcd(j, k))
    return [order[P] for P in [None] + pts]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def count_points_and_structure(c):
    pts = c.points()
    N = len(pts) + 1
    structure = structure_from_element_orders(_element_orders(c, pts))
    g = ECGroup(N, structure)
    if structure.order != N or structure.rank > 2:
        raise AssertionError(f'bad group structure {structure} for {c}')
    if g.n2 % g.n1 or (c.q - 1) % g.n1:
        raise AssertionError(f'n1 = {g.n1} must divide n2 and q - 1 for {c}')
    return g


def frobenius_of_curve(c, N=None):
    """(t, X^2 - t X + q) with t = q + 1 - #E(F_q)."""
    if N is None:
        N = count_points(c)
    q = c.q
    t = q + 1 - N
    if t * t > 4 * q:
        raise AssertionError(f'Hasse bound violated by {c}: t = {t}')
    f = IntPoly([q, -t, 1])
    assert f(1) == N
    return t, f


def is_supersingular_curve(c, t=None):
    if t is None:
        t, _ = frobenius_of_curve(c)
    return t % c.p == 0


def _family(p, s):
    # coefficient tuples (a1, a2, a3, a4, a6) covering every isomorphism class
    q = p**s
    E = range(q)
    if p == 2:
        if q**5 <= 40000:
            return itertools.product(E, E, E, E, E)
        ordinary = ((1, a2, 0, 0, a6) for a2 in E for a6 in E)
        supersingular = ((0, 0, a3, a4, a6) for a3 in E for a4 in E for a6 in E)
        return itertools.chain(ordinary, supersingular)
    if p == 3:
        return ((0, a2, 0, a4, a6) for a2 in E for a4 in E for a6 in E)
    return ((0, 0, 0, a4, a6) for a4 in E for a6 in E)


def iter_curves(p, s, samples=None, seed=0):
    """Nonsingular curves over F_{p^s}: the whole family, or a seeded sample of it."""
    coeffs = _family(p, s)
    if samples is not None:
        pool = list(coeffs)
        coeffs = random.Random(seed).sample(pool, min(samples, len(pool)))
    for a in coeffs:
        try:
            yield WeierstrassCurve(p, s, *a)
        except SingularCurveError:
            continue


def _structure_key(structure):
    return list(structure.invariant_factors)


def _sweep_field(p, s, samples, seed):
    q = p**s
    exhaustive = q <= EXHAUSTIVE_Q
    curves = iter_curves(p, s, None if exhaustive else samples, seed)
    n_curves = 0
    failures = []
    conservation = 0
    by_f = defaultdict(Counter)
    root_tests = {}
    predictions = {}
    for c in curves:
        n_curves += 1
        N = count_points(c)
        t, f = frobenius_of_curve(c, N)
        if f not in root_tests:
            root_tests[f] = is_supersingular_poly(f, p, s) is not None
        root_test = root_tests[f]
        if root_test != (t % p == 0):
            failures.append({'curve': list(c.coefficients), 'reason': 'supersingularity tests disagree'})
        if t % p:
            continue
        grp = count_points_and_structure(c)
        if grp.order != f(1):
            conservation += 1
            failures.append({'curve': list(c.coefficients), 'reason': '#E(F_q) != f(1)'})
        by_f[f.coeffs][tuple(grp.structure.invariant_factors)] += 1
        if f not in predictions:
            predictions[f] = rational_point_structures(parse_frobenius(f, p, s))
        if grp.structure not in predictions[f]:
            failures.append({'curve': list(c.coefficients), 'reason': 'structure not predicted',
                             'observed': _structure_key(grp.structure)})
    classes = []
    for fc in sorted(by_f, key=lambda k: (len(k), k)):
        f = IntPoly(fc)
        cls = parse_frobenius(f, p, s)
        pred = rational_point_structures(cls)
        observed = by_f[fc]
        realized = sorted({pred.index_of(AbelianGroupStructure(k)) for k in observed} - {None},
                          reverse=True)
        entry = {
            'f': list(f.coeffs), 'g': list(cls.g.coeffs), 'e': cls.e, 'd': cls.d, 'm': cls.m,
            'trace': -f[1], 'exceptional': cls.exceptional.value,
            'predicted': [_structure_key(x) for x in pred.structures],
            'observed': [{'structure': list(k), 'curves': n} for k, n in sorted(observed.items())],
            'ok': all(AbelianGroupStructure(k) in pred for k in observed),
        }
        if cls.exceptional is not Exceptional.NONE:
            entry['realized_ab'] = [list(ab) for ab in realized]
            entry['all_realized'] = len(realized) == len(pred.family)
            if exhaustive and not entry['all_realized']:
                failures.append({'f': list(f.coeffs), 'reason': 'exceptional family not fully realized'})
        classes.append(entry)
    trace_set_ok = None
    if exhaustive:
        predicted = {c.f.coeffs for c in enumerate_classes(p, s, 1) if c.d == 1}
        trace_set_ok = predicted == set(by_f)
        if not trace_set_ok:
            failures.append({'reason': 'trace set mismatch',
                             'predicted': sorted(map(list, predicted)),
                             'observed': sorted(map(list, by_f))})
    return {
        'p': p, 's': s, 'q': q, 'mode': 'exhaustive' if exhaustive else 'sampled',
        'curves': n_curves, 'supersingular_curves': sum(sum(v.values()) for v in by_f.values()),
        'classes': classes, 'trace_set_ok': trace_set_ok,
        'conservation_violations': conservation, 'failures': failures,
        'passed': not failures,
    }


def _sweep_task(args):
    return _sweep_field(*args)


def sweep_verify(p_max, s_set=(1,), samples=2000, seed=0, jobs=1, primes=None):
    """Check every supersingular curve's group against the predicted structures.

    Returns a report dict; ``report['passed']`` is the overall verdict.
    """
    if primes is None:
        primes = [p for p in range(2, p_max + 1) if is_prime(p)]
    tasks = [(p, s, samples, seed) for p in primes for s in sorted(set(s_set))
             if p**s <= MAX_Q]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            fields = list(ex.map(_sweep_task, tasks))
    else:
        fields = [_sweep_task(t) for t in tasks]
    fields.sort(key=lambda r: (r['p'], r['s']))
    return {
        'schema': REPORT_SCHEMA,
        'suite': 'ec',
        'params': {'p_max': p_max, 's': sorted(set(s_set)), 'samples': samples, 'seed': seed},
        'fields': fields,
        'curves': sum(f['curves'] for f in fields),
        'conservation_violations': sum(f['conservation_violations'] for f in fields),
        'passed': all(f['passed'] for f in fields),
    }
