import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from supersingular import gfp
from supersingular.fields import Fq, get_field


def _all_monic(d, p):
    for low in itertools.product(range(p), repeat=d):
        yield list(low) + [1]


@pytest.mark.parametrize('p', [2, 3, 5])
def test_irreducible_counts(p):
    # number of monic irreducibles of degree d is (1/d) sum_{k|d} mu(k) p^(d/k)
    expected = {1: p, 2: (p * p - p) // 2, 3: (p**3 - p) // 3}
    for d, n in expected.items():
        assert sum(gfp.is_irreducible(f, p) for f in _all_monic(d, p)) == n


def test_least_irreducible():
    assert gfp.least_irreducible(2, 2) == [1, 1, 1]
    assert gfp.least_irreducible(3, 2) == [1, 1, 0, 1]
    assert gfp.least_irreducible(2, 3) == [1, 0, 1]
    assert gfp.least_irreducible(2, 7) == [1, 0, 1]


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_factor_reassembles(p):
    rng = random.Random(p)
    for _ in range(40):
        f = [rng.randrange(p) for _ in range(rng.randint(1, 9))] + [1]
        prod = [1]
        for g, k in gfp.factor(f, p):
            assert gfp.is_irreducible(g, p) and g[-1] == 1
            for _ in range(k):
                prod = gfp.mul(prod, g, p)
        assert prod == gfp.norm(f, p)


def test_factor_is_deterministic():
    f = gfp.norm([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1], 2)
    assert gfp.factor(f, 2) == gfp.factor(f, 2, seed=0)


@given(st.lists(st.integers(0, 6), max_size=8), st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_divmod_and_xgcd(a, b):
    p = 7
    a, b = gfp.norm(a, p), gfp.norm(b, p)
    if not b:
        return
    q, r = gfp.divmod_(a, b, p)
    assert gfp.add(gfp.mul(q, b, p), r, p) == a and gfp.deg(r) < gfp.deg(b)
    g, s, t = gfp.xgcd(a, b, p)
    assert gfp.add(gfp.mul(s, a, p), gfp.mul(t, b, p), p) == g
    assert g == gfp.gcd(a, b, p)


@pytest.mark.parametrize('p, s', [(2, 1), (2, 3), (3, 2), (5, 2), (7, 2), (13, 2), (2, 4)])
def test_field_axioms(p, s):
    F = Fq(p, s)
    q = p**s
    assert F.q == q and len(F.elements) == q
    rng = random.Random(q)
    for _ in range(300):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # Frobenius: x^q = x
    assert all(F.pow(x, q) == x for x in F.elements)
    # the multiplicative group is cyclic of order q - 1
    if s > 1:
        assert len({F.pow(F.generator, k) for k in range(q - 1)}) == q - 1


def test_field_rejects():
    with pytest.raises(ValueError):
        Fq(4, 1)
    with pytest.raises(ZeroDivisionError):
        get_field(3, 2).inv(0)
