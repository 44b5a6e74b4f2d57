import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from supersingular.arith import (IntPoly, NotElementaryError, X, charpoly_integer_matrix,
                                 cyclotomic_poly, divisors, euler_phi, factorize, is_prime,
                                 jacobi_symbol, multiplicative_order, perfect_power_decompose,
                                 _kronecker, _lpart, _schoolbook, _trim)


@pytest.mark.parametrize('n, phi', [(1, 1), (4, 2), (12, 4), (97, 96), (1000, 400)])
def test_euler_phi(n, phi):
    assert euler_phi(n) == phi


def test_euler_phi_rejects_zero():
    with pytest.raises(ValueError):
        euler_phi(0)


def test_euler_phi_brute_force():
    for n in range(1, 300):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_euler_phi_multiplicative():
    rng = random.Random(1)
    checked = 0
    while checked < 500:
        a, b = rng.randint(1, 10**4), rng.randint(1, 10**4)
        if math.gcd(a, b) == 1:
            assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
            checked += 1


@pytest.mark.parametrize('a, n, j', [(1, 3, 1), (-1, 7, -1), (-1, 5, 1), (2, 15, 1), (5, 15, 0)])
def test_jacobi_examples(a, n, j):
    assert jacobi_symbol(a, n) == j


@pytest.mark.parametrize('n', [0, -3, 8])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        jacobi_symbol(1, n)


def test_jacobi_matches_quadratic_residues():
    for n in range(3, 101):
        if not is_prime(n):
            continue
        squares = {x * x % n for x in range(1, n)}
        for a in range(-n, 2 * n):
            expected = 0 if a % n == 0 else (1 if a % n in squares else -1)
            assert jacobi_symbol(a, n) == expected


@given(st.integers(-200, 200), st.integers(-200, 200),
       st.integers(0, 60).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative_in_a(a, b, n):
    assert jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n)


@pytest.mark.parametrize('a, n, k', [(1, 5, 1), (2, 7, 3), (3, 5, 4), (10, 1, 1), (2, 1023, 10)])
def test_multiplicative_order(a, n, k):
    assert multiplicative_order(a, n) == k


def test_multiplicative_order_brute_force():
    for n in range(2, 80):
        for a in range(1, n):
            if math.gcd(a, n) == 1:
                k = next(k for k in itertools.count(1) if pow(a, k, n) == 1)
                assert multiplicative_order(a, n) == k


def test_multiplicative_order_rejects_non_unit():
    with pytest.raises(ValueError):
        multiplicative_order(2, 6)


def test_primes_and_factorization():
    small = [n for n in range(2, 2000) if all(n % d for d in range(2, math.isqrt(n) + 1))]
    assert [n for n in range(2000) if is_prime(n)] == small
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)
    for n in range(1, 3000):
        assert math.prod(p**k for p, k in factorize(n).items()) == n
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_lpart():
    assert _lpart(24, 2) == (8, 3)
    assert _lpart(45, 3) == (9, 5)
    assert _lpart(7, 2) == (1, 7)


@pytest.mark.parametrize('n, coeffs', [(1, [-1, 1]), (4, [1, 0, 1]), (12, [1, 0, -1, 0, 1]),
                                      (15, [1, -1, 0, 1, -1, 1, 0, -1, 1])])
def test_cyclotomic_examples(n, coeffs):
    assert cyclotomic_poly(n) == IntPoly(coeffs)


def test_cyclotomic_product_identity():
    for n in range(1, 201):
        prod = IntPoly([1])
        for d in divisors(n):
            prod = prod * cyclotomic_poly(d)
        assert prod == X**n - 1
        assert cyclotomic_poly(n).degree == euler_phi(n)


def test_cyclotomic_105_has_coefficient_minus_two():
    assert min(cyclotomic_poly(105).coeffs) == -2


@pytest.mark.parametrize('f, g, e', [
    ((X**2 + 3)**2, X**2 + 3, 2),
    (X - 1, X - 1, 1),
    ((X**2 - 5)**3, X**2 - 5, 3),
    ((X**4 + 25)**5, X**4 + 25, 5),
])
def test_perfect_power_decompose(f, g, e):
    assert perfect_power_decompose(f) == (g, e)
    assert g**e == f


@pytest.mark.parametrize('f', [(X - 1) * (X - 2)**2, (X**2 + 1) * (X**2 + 2)**2])
def test_perfect_power_decompose_rejects(f):
    with pytest.raises(NotElementaryError):
        perfect_power_decompose(f)


def test_perfect_power_decompose_product_of_distinct_factors():
    # squarefree products are returned with e = 1; irreducibility is checked elsewhere
    assert perfect_power_decompose((X - 1) * (X - 2)) == ((X - 1) * (X - 2), 1)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(1, 4))
@settings(max_examples=60)
def test_perfect_power_roundtrip(low, e):
    base = IntPoly(low + [1])
    try:
        g, k = perfect_power_decompose(base)
    except NotElementaryError:
        return
    g2, k2 = perfect_power_decompose(base**e)
    assert g2 == g and k2 == k * e
    assert g2**k2 == base**e


def test_charpoly_examples():
    assert charpoly_integer_matrix([[1, 0], [0, 1]]) == (X - 1)**2
    assert charpoly_integer_matrix([[0, -3], [1, 0]]) == X**2 + 3
    assert charpoly_integer_matrix([[0] * 3 for _ in range(3)]) == X**3


def _det(M):
    # cofactor expansion over IntPoly entries
    n = len(M)
    if n == 1:
        return M[0][0]
    total = IntPoly([0])
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_charpoly_matches_cofactor_expansion():
    rng = random.Random(7)
    for n in range(1, 5):
        for _ in range(25):
            M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            XI_M = [[(X if i == j else IntPoly([0])) - M[i][j] for j in range(n)] for i in range(n)]
            assert charpoly_integer_matrix(M) == _det(XI_M)


def test_charpoly_rejects_non_square():
    with pytest.raises(ValueError):
        charpoly_integer_matrix([[1, 2]])


@given(st.lists(st.integers(-10**6, 10**6), max_size=60), st.lists(st.integers(-10**6, 10**6), max_size=60))
def test_kronecker_matches_schoolbook(a, b):
    assert _trim(_kronecker(a, b)) == _trim(_schoolbook(a, b))


def test_intpoly_arithmetic():
    f = IntPoly([3, -3, 1])
    assert str(f) == 'X^2 - 3*X + 3'
    assert f(2) == 1 and f.degree == 2 and f.is_monic()
    q, r = divmod(X**5 + 1, f)
    assert q * f + r == X**5 + 1 and r.degree < 2
    assert f.derivative() == IntPoly([-3, 2])
    assert f.compose_x_power(2) == IntPoly([3, 0, -3, 0, 1])
    assert IntPoly([0, 0]) == IntPoly([]) and not IntPoly([0])
    assert IntPoly([5]) < X < f
