"""Polynomials over GF(p), p prime.

Polynomials are lists of integers in {0, ..., p-1}, ascending, with no
trailing zeros; ``[]`` is the zero polynomial. All functions take the
prime ``p`` explicitly.
"""

import random

from .arith import is_prime, factorize


def norm(a, p):
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] = (r[i] + x) % p
    while r and r[-1] == 0:
        r.pop()
    return r


def sub(a, b, p):
    return add(a, [(-x) % p for x in b], p)


def scale(a, c, p):
    c %= p
    if not c:
        return []
    return [x * c % p for x in a]


def mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return norm(r, p)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError('polynomial division by zero')
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) <= db:
        return [], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return norm(q, p), norm(a[:db], p)


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (d, s, t) with d = s*a + t*b monic."""
    r0, r1 = a, b
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    c = pow(r0[-1], -1, p)
    return scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)


def powmod(a, e, m, p):
    r = [1]
    a = rem(a, m, p)
    while e:
        if e & 1:
            r = rem(mul(r, a, p), m, p)
        e >>= 1
        if e:
            a = rem(mul(a, a, p), m, p)
    return rem(r, m, p)


def derivative(a, p):
    return norm([i * c for i, c in enumerate(a)][1:], p)


def evaluate(a, x, p):
    r = 0
    for c in reversed(a):
        r = (r * x + c) % p
    return r


def is_irreducible(f, p):
    """Rabin's irreducibility test for f over GF(p)."""
    f = monic(norm(f, p), p)
    n = deg(f)
    if n < 1:
        return False
    x = [0, 1]
    if powmod(x, p**n, f, p) != rem(x, f, p):
        return False
    for r in factorize(n):
        h = sub(powmod(x, p**(n // r), f, p), x, p)
        if deg(gcd(f, h, p)) > 0:
            return False
    return True


def least_irreducible(s, p):
    """Least monic irreducible of degree s, ordering by sum(c_i p^i) over lower coefficients."""
    if not is_prime(p):
        raise ValueError(f'{p} is not prime')
    for k in range(p**s):
        c = [(k // p**i) % p for i in range(s)] + [1]
        if is_irreducible(c, p):
            return c
    raise AssertionError('no irreducible polynomial found')


def squarefree_factorization(f, p):
    """Return [(g_i, i)] with f = lc * prod g_i^i and each g_i squarefree."""
    f = monic(norm(f, p), p)
    out = []

    def rec(f, mult):
        i = 1
        fp = derivative(f, p)
        if not fp:
            # f is a p-th power
            root = [f[k] for k in range(0, len(f), p)]
            rec(root, mult * p)
            return
        c = gcd(f, fp, p)
        w = divmod_(f, c, p)[0]
        while deg(w) > 0:
            y = gcd(w, c, p)
            z = divmod_(w, y, p)[0]
            if deg(z) > 0:
                out.append((z, i * mult))
            i += 1
            w = y
            c = divmod_(c, y, p)[0]
        if deg(c) > 0:
            root = [c[k] for k in range(0, len(c), p)]
            rec(root, mult * p)

    if deg(f) > 0:
        rec(f, 1)
    merged = {}
    for g, k in out:
        merged.setdefault(k, [1])
        merged[k] = mul(merged[k], g, p)
    return sorted(((g, k) for k, g in merged.items()), key=lambda t: t[1])


def distinct_degree_factorization(f, p):
    """For squarefree monic f, return [(g_d, d)] with g_d the product of degree-d factors."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _trace_poly(a, d, f, p):
    # a + a^2 + a^4 + ... + a^(2^(d-1)) mod f, for p = 2
    t = a
    s = a
    for _ in range(d - 1):
        t = rem(mul(t, t, p), f, p)
        s = add(s, t, p)
    return s


def equal_degree_factorization(f, d, p, rng):
    """Split squarefree monic f whose irreducible factors all have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = norm([rng.randrange(p) for _ in range(n)], p)
        if deg(a) < 1:
            continue
        if p == 2:
            b = _trace_poly(a, d, f, p)
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 0 < deg(g) < n:
            return (equal_degree_factorization(g, d, p, rng)
                    + equal_degree_factorization(divmod_(f, g, p)[0], d, p, rng))


def factor(f, p, seed=0):
    """Monic irreducible factorization over GF(p): sorted list of (factor, multiplicity)."""
    rng = random.Random(seed)
    f = monic(norm(f, p), p)
    if deg(f) < 1:
        return []
    res = []
    for g, k in squarefree_factorization(f, p):
        for h, d in distinct_degree_factorization(g, p):
            for irr in equal_degree_factorization(h, d, p, rng):
                res.append((irr, k))
    res.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return res
