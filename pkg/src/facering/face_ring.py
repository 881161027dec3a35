"""The Stanley-Reisner ring ``F(K) = F[v_1..v_m] / (v_sigma : sigma not in K)``.

Grading is algebraic: ``deg v_i = 1``.  (Topologists double this; all degrees
here are half the cohomological ones.)  A monomial is an exponent tuple of
length ``m``; it survives in ``F(K)`` iff its support is a face.  Ghost labels
therefore act as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .complex import SimplicialComplex
from .linalg import ExactMatrix, FieldSpec

__all__ = [
    "support", "monomial_basis", "HilbertSeries", "hilbert_series",
    "multiplication_matrix", "poly_mul", "poly_add", "one_minus_t_pow",
]


def support(mono: tuple) -> tuple:
    return tuple(i + 1 for i, e in enumerate(mono) if e)


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` positive ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cut + (total,):
            out.append(c - prev)
            prev = c
        yield tuple(out)


@lru_cache(maxsize=8192)
def monomial_basis(K: SimplicialComplex, d: int) -> tuple:
    """Degree-``d`` monomials with support in ``K``, in descending lex order."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for f in K.faces:
        if len(f) > d:
            break
        for comp in _compositions(d, len(f)):
            e = [0] * K.m
            for v, a in zip(f, comp):
                e[v - 1] = a
            out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


# -- integer polynomials as coefficient tuples, lowest degree first ----------

def _trim(c: list) -> tuple:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def poly_mul(a, b) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a, b) -> tuple:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def one_minus_t_pow(k: int) -> tuple:
    out = (1,)
    for _ in range(k):
        out = poly_mul(out, (1, -1))
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)**n``; the denominator is never cancelled."""

    numerator: tuple
    n: int

    def coefficients(self, upto: int) -> list[int]:
        """Series coefficients of ``t**0 .. t**upto``."""
        c = [0] * (upto + 1)
        for i, a in enumerate(self.numerator[: upto + 1]):
            c[i] = a
        for _ in range(self.n):
            for i in range(1, upto + 1):
                c[i] += c[i - 1]
        return c

    def with_denominator(self, n: int) -> HilbertSeries:
        if n < self.n:
            raise ValueError("can only raise the denominator exponent")
        return HilbertSeries(poly_mul(self.numerator, one_minus_t_pow(n - self.n)), n)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        n = max(self.n, other.n)
        return self.with_denominator(n).numerator == other.with_denominator(n).numerator

    def __hash__(self):
        return hash(self.numerator) ^ self.n

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        n = max(self.n, other.n)
        return HilbertSeries(poly_add(self.with_denominator(n).numerator,
                                      other.with_denominator(n).numerator), n)

    def __mul__(self, other):
        if isinstance(other, HilbertSeries):
            return HilbertSeries(poly_mul(self.numerator, other.numerator), self.n + other.n)
        return HilbertSeries(poly_mul(self.numerator, tuple(other)), self.n)

    def shift(self, k: int = 1) -> HilbertSeries:
        """Multiply by ``t**k``."""
        return HilbertSeries((0,) * k + self.numerator, self.n)


def hilbert_series(K: SimplicialComplex) -> HilbertSeries:
    """Sum over faces of ``t**|s| (1-t)**(n-|s|)``, over ``(1-t)**n``."""
    n = K.n
    num = (0,)
    for k, f_k in enumerate(K.f_vector()):
        term = poly_mul((0,) * k + (f_k,), one_minus_t_pow(n - k))
        num = poly_add(num, term)
    return HilbertSeries(num, n)


def multiplication_matrix(K: SimplicialComplex, i: int, d: int, field: FieldSpec) -> ExactMatrix:
    """Matrix of ``v_i : F(K)_d -> F(K)_{d+1}`` in the monomial bases."""
    if not 1 <= i <= K.m:
        raise ValueError(f"vertex label {i} outside 1..{K.m}")
    src = monomial_basis(K, d)
    tgt = {mono: r for r, mono in enumerate(monomial_basis(K, d + 1))}
    rows = [{} for _ in tgt]
    for j, mono in enumerate(src):
        e = list(mono)
        e[i - 1] += 1
        r = tgt.get(tuple(e))
        if r is not None:
            rows[r][j] = 1
    return ExactMatrix.from_sparse(rows, len(src), field)
