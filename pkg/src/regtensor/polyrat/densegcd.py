"""Multivariate gcd over a prime field F_p in a recursive dense representation.

A polynomial in k variables is a list of coefficients in the last variable, each a
polynomial in the first k-1 variables; with no variables left it is an int mod p.
Lists carry no trailing zeros, so the zero polynomial is [] (or 0 at depth zero).
Univariate gcds use Euclid over F_p; deeper levels use primitive remainder
sequences with the content taken recursively.
"""

from __future__ import annotations


def _is_zero(a) -> bool:
    return a == 0 or a == []


def _trim(a: list) -> list:
    while a and _is_zero(a[-1]):
        a.pop()
    return a


def _zero(k: int):
    return 0 if k == 0 else []


def _one(k: int):
    return 1 if k == 0 else [_one(k - 1)]


def _is_unit(a, k: int) -> bool:
    if k == 0:
        return a != 0
    return len(a) == 1 and _is_unit(a[0], k - 1)


def _add(a, b, k: int, p: int):
    if k == 0:
        return (a + b) % p
    if k == 1:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = (out[i] + y) % p
        return _trim(out)
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else _zero(k - 1)
        y = b[i] if i < len(b) else _zero(k - 1)
        out.append(_add(x, y, k - 1, p))
    return _trim(out)


def _neg(a, k: int, p: int):
    if k == 0:
        return -a % p
    if k == 1:
        return [-c % p for c in a]
    return [_neg(c, k - 1, p) for c in a]


def _sub(a, b, k: int, p: int):
    return _add(a, _neg(b, k, p), k, p)


def _mul(a, b, k: int, p: int):
    if k == 0:
        return a * b % p
    if not a or not b:
        return []
    if k == 1:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim([c % p for c in out])
    out = [_zero(k - 1)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if _is_zero(x):
            continue
        for j, y in enumerate(b):
            if not _is_zero(y):
                out[i + j] = _add(out[i + j], _mul(x, y, k - 1, p), k - 1, p)
    return _trim(out)


def _scale(a, c, k: int, p: int):
    """Multiply every main-variable coefficient of a (depth k) by c (depth k-1)."""
    return _trim([_mul(x, c, k - 1, p) for x in a])


def _exact_div(a, b, k: int, p: int):
    """a / b, assuming b divides a exactly."""
    if k == 0:
        return a * pow(b, -1, p) % p
    if not a:
        return []
    if k == 1:
        return _div1(a, b, p)
    a = list(a)
    db = len(b) - 1
    q = [_zero(k - 1)] * (len(a) - db)
    lb = b[-1]
    while a and len(a) - 1 >= db:
        s = len(a) - 1 - db
        c = _exact_div(a[-1], lb, k - 1, p)
        q[s] = c
        for i, y in enumerate(b):
            a[s + i] = _sub(a[s + i], _mul(c, y, k - 1, p), k - 1, p)
        _trim(a)
    if a:
        raise ArithmeticError("inexact division in dense gcd")
    return _trim(q)


def _div_coeffs(a, c, k: int, p: int):
    return _trim([_exact_div(x, c, k - 1, p) for x in a])


def _prem(a, b, k: int, p: int):
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        s = len(a) - 1 - db
        la = a[-1]
        shifted = [_zero(k - 1)] * s + _scale(b, la, k, p)
        a = _sub(_scale(a, lb, k, p), shifted, k, p)
    return a


def _content(a, k: int, p: int):
    g = None
    for c in a:
        if _is_zero(c):
            continue
        g = c if g is None else _gcd(g, c, k - 1, p)
        if _is_unit(g, k - 1):
            return _one(k - 1)
    return g


def _monic1(a: list, p: int) -> list:
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, k: int, p: int):
    """A gcd of a and b up to a unit of F_p."""
    if _is_zero(a):
        return b
    if _is_zero(b):
        return a
    if k == 0:
        return 1
    if k == 1:
        while b:
            a, b = b, _rem1(a, b, p)
        return _monic1(a, p)
    ca, cb = _content(a, k, p), _content(b, k, p)
    c = _gcd(ca, cb, k - 1, p)
    a, b = _div_coeffs(a, ca, k, p), _div_coeffs(b, cb, k, p)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem(a, b, k, p)
        if not r:
            break
        if len(r) == 1:
            return [c]
        a, b = b, _div_coeffs(r, _content(r, k, p), k, p)
    return _scale(_div_coeffs(b, _content(b, k, p), k, p), c, k, p)


def _div1(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = a[s + db] * inv % p
        if c:
            q[s] = c
            for i, y in enumerate(b):
                a[s + i] = (a[s + i] - c * y) % p
    if any(a[:db]):
        raise ArithmeticError("inexact division in dense gcd")
    return _trim(q)


def _rem1(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        s = len(a) - 1 - db
        c = a[-1] * inv % p
        for i, y in enumerate(b):
            a[s + i] = (a[s + i] - c * y) % p
        _trim(a)
    return a


def to_dense(terms: dict, order: list[int], p: int):
    """Nested lists over the variable positions in ``order`` (last entry is the main variable)."""
    k = len(order)
    if k == 0:
        return sum(terms.values()) % p
    main = order[-1]
    groups: dict = {}
    for e, c in terms.items():
        groups.setdefault(e[main], {})[e] = c
    out = [_zero(k - 1)] * (max(groups) + 1)
    for d, sub in groups.items():
        out[d] = to_dense(sub, order[:-1], p)
    return _trim(out)


def from_dense(a, order: list[int], nvars: int) -> dict:
    out: dict = {}

    def walk(x, k, exp):
        if k == 0:
            if x:
                out[tuple(exp)] = x
            return
        for d, c in enumerate(x):
            if not _is_zero(c):
                exp[order[k - 1]] = d
                walk(c, k - 1, exp)
        exp[order[k - 1]] = 0

    walk(a, len(order), [0] * nvars)
    return out


def dense_gcd_terms(f_terms: dict, g_terms: dict, order: list[int], nvars: int, p: int) -> dict:
    """Term dict of a gcd of two polynomials over F_p (not normalized)."""
    k = len(order)
    g = _gcd(to_dense(f_terms, order, p), to_dense(g_terms, order, p), k, p)
    return from_dense(g, order, nvars)


def dense_exact_div_terms(f_terms: dict, g_terms: dict, order: list[int], nvars: int, p: int) -> dict:
    """Term dict of f / g over F_p; ArithmeticError if g does not divide f."""
    k = len(order)
    q = _exact_div(to_dense(f_terms, order, p), to_dense(g_terms, order, p), k, p)
    return from_dense(q, order, nvars)
