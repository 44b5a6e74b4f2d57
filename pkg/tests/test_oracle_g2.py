import random

import pytest

from supersingular.arith import IntPoly, X
from supersingular.oracle_g2 import (G2Curve, IDENTITY, cantor_add, cantor_neg, check_group_axioms,
                                     count_model, curve_counts, frobenius_quartic, is_valid,
                                     jacobian_elements, jacobian_structure, search_exceptional_g2)


def test_count_model_example():
    # y^2 = x^5 + 1 over F_5 is y^2 = x + 1 on points; singular, so counted on the raw model
    assert count_model(5, (1, 0, 0, 0, 0, 1))[0] == 6


def test_curve_validation():
    with pytest.raises(ValueError):
        G2Curve(5, (1, 0, 0, 0, 0, 1))      # (x + 1)^5
    with pytest.raises(ValueError):
        G2Curve(2, (1, 1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        G2Curve(7, (1, 1, 0, 0, 1))
    assert G2Curve(7, (10, 8, 0, 0, 0, 1)).f5 == (3, 1, 0, 0, 0, 1)


def test_frobenius_quartic():
    f = frobenius_quartic(6, 26, 5)
    assert f == IntPoly([25, 0, 0, 0, 1])
    with pytest.raises(AssertionError):
        frobenius_quartic(6, 27, 5)


def _random_curves(p, n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        try:
            out.append(G2Curve(p, tuple(rng.randrange(p) for _ in range(5)) + (1,)))
        except ValueError:
            pass
    return out


@pytest.mark.parametrize('p', [3, 5, 7, 11])
def test_enumeration_count_equals_f1(p):
    for c in _random_curves(p, 12, p):
        n1, n2 = curve_counts(c)
        assert n1 >= 1 and n2 >= n1
        f = frobenius_quartic(n1, n2, p)
        a = -f[3]
        assert a * a <= 16 * p
        elements = jacobian_elements(c)
        assert len(elements) == f(1)
        assert len(set(elements)) == len(elements)
        assert all(is_valid(c, D) for D in elements)
        s = jacobian_structure(c, f)
        assert s.order == f(1) and s.rank <= 4


def test_cantor_group_axioms():
    for p in (3, 5, 7):
        for c in _random_curves(p, 5, 100 + p):
            els = jacobian_elements(c)
            check_group_axioms(c, els, samples=30, seed=p)
            for D in els[:20]:
                assert cantor_add(c, D, cantor_neg(c, D)) == IDENTITY
                assert is_valid(c, cantor_add(c, D, D))


def test_prime_order_jacobian_is_cyclic():
    for c in _random_curves(7, 40, 5):
        f = frobenius_quartic(*curve_counts(c), 7)
        N = f(1)
        if all(N % d for d in range(2, int(N**0.5) + 1)):
            assert jacobian_structure(c, f).invariant_factors == (N,)
            return
    pytest.skip('no prime-order Jacobian in the sample')


def test_search_p5():
    r = search_exceptional_g2(5)
    assert r['passed'] and not r['failures']
    assert r['target'] == [25, 0, -10, 0, 1]
    assert [f['invariant_factors'] for f in r['family']] == [[4, 4], [2, 2, 4], [2, 2, 2, 2]]
    assert r['curves'] == 2500
    assert all(h['invariant_factors'] in ([4, 4], [2, 2, 4], [2, 2, 2, 2]) for h in r['hits'])
    # frozen outcome of the exhaustive scan
    assert r['hits'] == [{'curve': [0, 4, 0, 0, 0, 1], 'a': 0, 'b': 2, 'invariant_factors': [2, 2, 2, 2]}]
    assert r['realized_ab'] == [[0, 2]]
    assert r['supersingular_checked'] == 79


def test_search_rejects_other_primes():
    with pytest.raises(ValueError):
        search_exceptional_g2(7)
    with pytest.raises(ValueError):
        search_exceptional_g2(17)
