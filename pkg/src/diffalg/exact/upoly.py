"""
Dense univariate polynomial routines.

A polynomial is a list of field elements, lowest degree first, with no
trailing zeros; ``[]`` is zero.  The routines only use ``+ - * /`` and
comparison against ``0`` on coefficients, so they work over ``Fraction``
as well as over the quadratic-field numbers in :mod:`diffalg.exact.quadratic`.
Every function returns a fresh list.
"""

from fractions import Fraction


def trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p):
    return len(p) - 1


def lc(p):
    return p[-1]


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] = r[i] + c
    return trim(r)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if c == 0:
        return []
    return trim([a * c for a in p])


def mul(p, q):
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            r[i + j] = r[i + j] + a * b
    return trim(r)


def power(p, n):
    r = [Fraction(1)]
    base = p
    while n:
        if n & 1:
            r = mul(r, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return r


def shift(p, k):
    """Multiply by x**k."""
    if not p:
        return []
    return [0] * k + list(p)


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = deg(q)
    if deg(r) < dq:
        return [], r
    quo = [0] * (deg(r) - dq + 1)
    lead = q[-1]
    while r and deg(r) >= dq:
        k = deg(r) - dq
        c = r[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        r.pop()  # leading term cancels exactly
        trim(r)
    return trim(quo), r


def quo(p, q):
    return divmod_(p, q)[0]


def rem(p, q):
    return divmod_(p, q)[1]


def exquo(p, q):
    qq, rr = divmod_(p, q)
    if rr:
        raise ArithmeticError("inexact polynomial division")
    return qq


def monic(p):
    if not p:
        return []
    lead = p[-1]
    if lead == 1:
        return list(p)
    return [c / lead for c in p]


def gcd(p, q):
    """Monic gcd; ``gcd([], []) == []``."""
    a, b = list(p), list(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = list(p), list(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        qq, rr = divmod_(r0, r1)
        r0, r1 = r1, rr
        s0, s1 = s1, sub(s0, mul(qq, s1))
        t0, t1 = t1, sub(t0, mul(qq, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return monic(r0), [c / lead for c in s0], [c / lead for c in t0]


def diophantine(a, b, c):
    """Solve ``s*a + t*b == c`` with ``deg(s) < deg(b)``; needs gcd(a, b) | c."""
    g, s, t = xgcd(a, b)
    qq, rr = divmod_(c, g)
    if rr:
        raise ArithmeticError("c is not in the ideal (a, b)")
    s = mul(s, qq)
    t = mul(t, qq)
    if b and deg(b) > 0 and s and deg(s) >= deg(b):
        k, s = divmod_(s, b)
        t = add(t, mul(k, a))
    return s, t


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def integral(p):
    return [0] + [c / (i + 1) for i, c in enumerate(p)] if p else []


def evaluate(p, x):
    r = 0
    for c in reversed(p):
        r = r * x + c
    return r


def taylor_shift(p, a):
    """Coefficients of ``p(x + a)``."""
    r = list(p)
    n = len(r)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            r[j] = r[j] + a * r[j + 1]
    return trim(r)


def compose(p, q):
    r = []
    for c in reversed(p):
        r = add(mul(r, q), [c] if c != 0 else [])
    return r


def squarefree(p):
    """Yun's algorithm: list of ``(factor, multiplicity)``, factors monic."""
    if not p:
        raise ValueError("squarefree decomposition of zero")
    out = []
    if deg(p) == 0:
        return out
    dp = derivative(p)
    a = gcd(p, dp)
    b = exquo(p, a)
    c = exquo(dp, a)
    d = sub(c, derivative(b))
    i = 1
    while deg(b) > 0:
        g = gcd(b, d)
        if deg(g) > 0:
            out.append((g, i))
        b = exquo(b, g)
        c = exquo(d, g)
        d = sub(c, derivative(b))
        i += 1
    return out
