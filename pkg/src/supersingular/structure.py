"""Group structures of rational points on elementary supersingular abelian varieties.

For an isogeny class with Frobenius polynomial g^e and N = |g(1)|, the group
of rational points is (Z/N)^e, except for the two exceptional families
where every (Z/N)^a x (Z/(N/2) x Z/2)^b with a + b = e occurs.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .arith import euler_phi, factorize, is_prime, _lpart
from .weil import Exceptional, WeilNumber, simple_class

__all__ = ['AbelianGroupStructure', 'StructureResult', 'LocalStructureAt2', 'ModuleDescriptor',
           'canonical_invariant_factors', 'structure_from_element_orders',
           'rational_point_structures', 'local_structure_at_2', 'module_structure_descriptor',
           'enumerate_classes']


@dataclass(frozen=True, order=True)
class AbelianGroupStructure:
    """Invariant factors n_1 | n_2 | ... | n_k, all > 1; () is the trivial group."""

    invariant_factors: tuple = ()

    def __post_init__(self):
        f = self.invariant_factors
        if any(n <= 1 for n in f) or any(b % a for a, b in zip(f, f[1:])):
            raise ValueError(f'not an invariant factor chain: {f}')

    @property
    def order(self):
        return math.prod(self.invariant_factors)

    @property
    def rank(self):
        return len(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return '0'
        return ' x '.join(f'Z/{n}' for n in self.invariant_factors)


def canonical_invariant_factors(orders):
    """Invariant factors of a product of cyclic groups of the given orders."""
    exps = {}
    for n in orders:
        if n < 1:
            raise ValueError('cyclic orders must be positive')
        for p, k in factorize(n).items():
            exps.setdefault(p, []).append(k)
    if not exps:
        return AbelianGroupStructure()
    width = max(len(v) for v in exps.values())
    factors = [1] * width
    for p, ks in exps.items():
        ks.sort(reverse=True)
        for i, k in enumerate(ks):
            factors[width - 1 - i] *= p**k
    return AbelianGroupStructure(tuple(n for n in factors if n > 1))


def structure_from_element_orders(element_orders):
    """Invariant factors of a finite abelian group, given the order of every element."""
    counts = Counter(element_orders)
    N = sum(counts.values())
    cyclic = []
    for l in factorize(N) if N > 1 else ():
        # r[k-1] = number of l-primary cyclic factors of exponent >= k
        r = []
        prev = 1
        while True:
            lk = l**(len(r) + 1)
            ck = sum(c for o, c in counts.items() if lk % o == 0)
            if ck == prev:
                break
            step = 0
            while prev * l**step < ck:
                step += 1
            assert prev * l**step == ck
            r.append(step)
            prev = ck
        r.append(0)
        for k in range(1, len(r)):
            cyclic.extend([l**k] * (r[k - 1] - r[k]))
    return canonical_invariant_factors(cyclic)


@dataclass(frozen=True)
class StructureResult:
    """Either one structure, or the exceptional family indexed by (a, b), a + b = e."""

    unique: Optional[AbelianGroupStructure] = None
    family: tuple = ()

    @property
    def structures(self):
        if self.unique is not None:
            return (self.unique,)
        return tuple(s for _, _, s in self.family)

    def __contains__(self, structure):
        return structure in self.structures

    def index_of(self, structure):
        """(a, b) for a family member, or None."""
        for a, b, s in self.family:
            if s == structure:
                return a, b
        return None


def rational_point_structures(cls):
    N = cls.group_order_factor
    e = cls.e
    # the chains are written down directly, so N never needs factoring
    if cls.exceptional is Exceptional.NONE:
        return StructureResult(unique=AbelianGroupStructure((N,) * e if N > 1 else ()))
    if N % 4:
        raise AssertionError(f'exceptional class with |g(1)| = {N} not divisible by 4')
    family = tuple((a, e - a, AbelianGroupStructure((2,) * (e - a) + (N // 2,) * (e - a) + (N,) * a))
                   for a in range(e, -1, -1))
    return StructureResult(family=family)


@dataclass(frozen=True)
class LocalStructureAt2:
    """Possible 2-primary parts of one cyclic building block."""

    exceptional: bool
    options: tuple


def local_structure_at_2(cls):
    N2, _ = _lpart(cls.group_order_factor, 2)
    cyclic = canonical_invariant_factors([N2])
    if cls.exceptional is Exceptional.NONE:
        return LocalStructureAt2(False, (cyclic,))
    return LocalStructureAt2(True, (cyclic, canonical_invariant_factors([2, N2 // 2])))


@dataclass(frozen=True)
class ModuleDescriptor:
    branch: str          # 'exact' or 'mixed'
    e: int
    ab_pairs: tuple
    kernel_bound: int
    notes: str


def module_structure_descriptor(cls):
    """Statement of the Galois-module structure of A(k-bar) for the class (emitted, not computed)."""
    e, d = cls.e, cls.d
    bound = 1 if cls.p == 2 else 2**d
    if cls.p != 2 and d == 2 and cls.exceptional is not Exceptional.NONE:
        pairs = tuple((a, e - a) for a in range(e, -1, -1))
        return ModuleDescriptor('mixed', e, pairs, bound,
                                'A(k-bar) = (R_(p)/R)^a x (O_(p)/O)^b for some a + b = e')
    if cls.p == 2:
        note = f'A(k-bar) = (R_(p)/R)^{e} (isomorphism)'
    else:
        note = f'surjection A(k-bar) -> (R_(p)/R)^{e} with kernel of order dividing {bound}'
    return ModuleDescriptor('exact', e, ((e, 0),), bound, note)


def enumerate_classes(p, s, d_max):
    """All elementary supersingular isogeny classes over F_{p^s} of dimension <= d_max."""
    if not is_prime(p) or s < 1 or d_max < 1:
        raise ValueError('need p prime, s >= 1, d_max >= 1')
    simple = {}
    top = 2 * (2 * d_max)**2 + 2
    ms = sorted({m for mh in range(1, top + 1) if euler_phi(mh) <= 2 * d_max
                 for m in ((mh, 2 * mh) if mh % 2 else (2 * mh,))})
    for m in ms:
        for w in WeilNumber.all_for(p, s, m):
            cls = simple_class(w)
            if cls.d <= d_max and cls.g not in simple:
                simple[cls.g] = cls
    out = []
    for cls in simple.values():
        k = 1
        while k * cls.d <= d_max:
            out.append(cls.power(k))
            k += 1
    out.sort(key=lambda c: (c.g.degree, c.g.coeffs, c.e))
    return out
