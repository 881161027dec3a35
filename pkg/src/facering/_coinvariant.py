"""Normal forms in the coinvariant algebra ``Z[x_1..x_m] / (e_1, ..., e_m)``.

The complete homogeneous polynomials ``h_k(x_k, ..., x_m)``, k = 1..m, are a
Groebner basis of the ideal of positive-degree symmetric polynomials for lex
order with ``x_1 > ... > x_m``; their leading terms are ``x_k**k``.  The
standard monomials are the Artin monomials, exponent ``a_k <= k - 1``, and
there are ``m!`` of them.  Everything has integer coefficients, so one table
serves every field.

Variables are 0-indexed here: variable ``i`` is reduced iff its exponent is
``<= i``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement


@lru_cache(maxsize=None)
def _monomials_of_degree(nvars: int, deg: int) -> tuple:
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def _power_nf(m: int, i: int, e: int) -> tuple:
    """Reduce ``x_i**e`` using the basis elements for variables ``>= i``.

    Returns ``((exps over variables i..m-1), coeff)`` pairs whose first
    exponent is ``<= i``; later variables are not yet reduced.
    """
    width = m - i
    if e <= i:
        return (((e,) + (0,) * (width - 1), 1),)
    acc: dict = {}
    base = e - (i + 1)
    for b in _monomials_of_degree(width, i + 1):
        if b[0] == i + 1:
            continue
        for mono, c in _power_nf(m, i, base + b[0]):
            key = (mono[0],) + tuple(x + y for x, y in zip(mono[1:], b[1:]))
            acc[key] = acc.get(key, 0) - c
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def normal_form(exps: tuple) -> tuple:
    """Normal form of the monomial ``x**exps`` as ``((artin exps), coeff)`` pairs."""
    m = len(exps)
    poly = {exps: 1}
    for i in range(m):
        nxt: dict = {}
        for mono, c in poly.items():
            if mono[i] <= i:
                nxt[mono] = nxt.get(mono, 0) + c
                continue
            head = mono[:i]
            tail = mono[i + 1:]
            for red, rc in _power_nf(m, i, mono[i]):
                key = head + (red[0],) + tuple(x + y for x, y in zip(red[1:], tail))
                nxt[key] = nxt.get(key, 0) + c * rc
        poly = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(poly.items(), reverse=True))


@lru_cache(maxsize=None)
def artin_basis(m: int, d: int) -> tuple:
    """Artin monomials of degree ``d`` in ``m`` variables, descending lex order."""
    out = []

    def rec(i, left, acc):
        if i == m:
            if left == 0:
                out.append(tuple(acc))
            return
        # remaining capacity of variables i..m-1 is sum(i..m-1)
        cap = sum(range(i, m))
        if left > cap:
            return
        for a in range(min(i, left), -1, -1):
            acc.append(a)
            rec(i + 1, left - a, acc)
            acc.pop()

    rec(0, d, [])
    out.sort(reverse=True)
    return tuple(out)
