"""Dense univariate polynomials over a field, as coefficient lists.

``[a0, a1, ..., an]`` represents ``a0 + a1*T + ... + an*T^n``; the zero
polynomial is ``[]``. Only the handful of operations needed for minimal
polynomials and field extensions live here.
"""

from __future__ import annotations


def poly_trim(K, a):
    a = list(a)
    while a and K.is_zero(a[-1]):
        a.pop()
    return a


def poly_sub(K, a, b):
    n = max(len(a), len(b))
    a = list(a) + [K.zero] * (n - len(a))
    b = list(b) + [K.zero] * (n - len(b))
    return poly_trim(K, [K.sub(x, y) for x, y in zip(a, b)])


def poly_mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return poly_trim(K, out)


def poly_divmod(K, a, b):
    b = poly_trim(K, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = poly_trim(K, a)
    inv_lead = K.inv(b[-1])
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = K.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = K.sub(a[shift + j], K.mul(c, y))
        a = poly_trim(K, a)
    return poly_trim(K, q), a


def poly_monic(K, a):
    a = poly_trim(K, a)
    if not a:
        return a
    c = K.inv(a[-1])
    return [K.mul(c, x) for x in a]


def poly_gcd(K, a, b):
    a, b = poly_trim(K, a), poly_trim(K, b)
    while b:
        a, b = b, poly_divmod(K, a, b)[1]
    return poly_monic(K, a)


def poly_xgcd(K, a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    r0, r1 = poly_trim(K, a), poly_trim(K, b)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = poly_divmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(K, s0, poly_mul(K, q, s1))
        t0, t1 = t1, poly_sub(K, t0, poly_mul(K, q, t1))
    if not r0:
        return [], s0, t0
    c = K.inv(r0[-1])
    scale = lambda p: [K.mul(c, x) for x in p]  # noqa: E731
    return scale(r0), scale(s0), scale(t0)


def poly_derivative(K, a):
    return poly_trim(K, [K.mul(K.from_int(k), c) for k, c in enumerate(a)][1:])


def _pth_root(K, a):
    """``b`` with ``b(x)^p = a(x)`` when ``a`` is a polynomial in ``x^p`` over F_p."""
    p = K.characteristic
    return [a[k] for k in range(0, len(a), p)]


def squarefree_part(K, a):
    """The monic product of the distinct irreducible factors of ``a``.

    In characteristic ``p`` the quotient ``a / gcd(a, a')`` misses factors
    whose multiplicity is divisible by ``p``; those are recovered from the
    gcd recursively, and a vanishing derivative is handled by a p-th root
    (valid over prime fields, where every element is its own p-th power).
    """
    a = poly_trim(K, a)
    if len(a) <= 1:
        return poly_monic(K, a)
    d = poly_derivative(K, a)
    if not d:
        return squarefree_part(K, _pth_root(K, a))
    g = poly_gcd(K, a, d)
    w = poly_monic(K, poly_divmod(K, a, g)[0])
    if len(g) <= 1 or not K.characteristic:
        return w
    r = squarefree_part(K, g)
    common = poly_gcd(K, w, r)
    return poly_monic(K, poly_divmod(K, poly_mul(K, w, r), common)[0])


def poly_eval(K, a, x):
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def roots_in_prime_field(K, a):
    """All roots of ``a`` in the prime field ``K``, by ``gcd(a, T^p - T)``."""
    a = poly_monic(K, a)
    if not a:
        raise ValueError("zero polynomial has every element as a root")
    if len(a) == 1:
        return []
    p = K.p
    # T^p mod a by repeated squaring
    result, base, e = [K.one], [K.zero, K.one], p
    while e:
        if e & 1:
            result = poly_divmod(K, poly_mul(K, result, base), a)[1]
        base = poly_divmod(K, poly_mul(K, base, base), a)[1]
        e >>= 1
    g = poly_gcd(K, a, poly_sub(K, result, [K.zero, K.one]))
    return sorted(r for r in range(p) if K.is_zero(poly_eval(K, g, r))) if len(g) > 1 else []
