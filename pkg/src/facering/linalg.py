"""Exact scalar fields and matrix elimination over GF(p) and Q.

Scalars are plain Python objects: ``int`` in ``0..p-1`` for a prime field;
over the rationals integral values stay ``int`` and the rest are
``fractions.Fraction``.  Matrices keep their rows as sparse
dicts ``{column: nonzero scalar}``; the public surface is that of a dense
matrix.

Elimination over GF(p) is ordinary Gauss with the leading entry normalised to
one.  Over Q rows are kept integral and primitive (content divided out after
every step), so no fractions appear during elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "FieldSpec", "GF2", "GF3", "QQ", "ExactMatrix", "RowEchelon",
    "rank", "kernel_basis", "solve", "rank_of_rows",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) (``p`` set) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"not a supported prime: {self.p!r}")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def parse(cls, token: str) -> FieldSpec:
        """Parse ``f2``, ``f3``, ``f5``, ``fp:<p>`` or ``q``."""
        t = token.strip().lower()
        if t == "q":
            return cls(None)
        if t.startswith("fp:"):
            return cls(int(t[3:]))
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field token {token!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def name(self) -> str:
        if self.p is None:
            return "q"
        if self.p in (2, 3, 5):
            return f"f{self.p}"
        return f"fp:{self.p}"

    def __str__(self):
        return self.name

    def __call__(self, x) -> int | Fraction:
        """Canonical representative of ``x`` in this field."""
        if self.p is None:
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


def _clear_denominators(row: dict) -> dict:
    """Scale a row of rationals/ints to a primitive integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    g = 0
    for c, v in row.items():
        iv = int(v * den)
        if iv:
            out[c] = iv
            g = gcd(g, iv)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


class RowEchelon:
    """Incrementally grown row echelon form over a field.

    Pivot rows are stored by leading column.  Over GF(p) they are monic; over
    Q they are primitive integer rows.  Rows fed to :meth:`add` are reduced
    only until their leading column is new, which is all rank needs;
    :meth:`reduce` eliminates every pivot column.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _prep(self, row) -> dict:
        if isinstance(row, dict):
            items = row.items()
        else:
            items = enumerate(row)
        p = self.field.p
        if p is None:
            return _clear_denominators({c: v for c, v in items if v})
        out = {}
        for c, v in items:
            v = self.field(v)
            if v:
                out[c] = v
        return out

    def _eliminate(self, r: dict, c: int, piv: dict) -> dict:
        p = self.field.p
        a = r[c]
        if p is None:
            b = piv[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: b * v for k, v in r.items()}
            for k, v in piv.items():
                nv = out.get(k, 0) - a * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            cont = 0
            for v in out.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont > 1:
                out = {k: v // cont for k, v in out.items()}
            return out
        for k, v in piv.items():
            nv = (r.get(k, 0) - a * v) % p
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
        return r

    def _normalise(self, r: dict, c: int) -> dict:
        p = self.field.p
        if p is None:
            if r[c] < 0:
                r = {k: -v for k, v in r.items()}
            return r
        inv = pow(r[c], -1, p)
        return {k: (v * inv) % p for k, v in r.items()}

    def add(self, row) -> bool:
        """Insert a row; return True if it was independent of the current rows."""
        r = self._prep(row)
        pivots = self.pivots
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = self._normalise(r, c)
                return True
            r = self._eliminate(r, c, piv)
        return False

    def extend(self, rows: Iterable) -> "RowEchelon":
        for row in rows:
            self.add(row)
        return self

    def reduce(self, row) -> dict:
        """Exact remainder of ``row`` modulo the row space, free of pivot columns."""
        p = self.field.p
        if p is None:
            r = {c: Fraction(v) for c, v in (row.items() if isinstance(row, dict) else enumerate(row)) if v}
            pivots = self.pivots
            while True:
                hit = [c for c in r if c in pivots]
                if not hit:
                    return {k: self.field(v) for k, v in r.items()}
                c = min(hit)
                piv = pivots[c]
                f = r[c] / piv[c]
                for k, v in piv.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        r = self._prep(row)
        pivots = self.pivots
        while True:
            hit = [c for c in r if c in pivots]
            if not hit:
                return r
            c = min(hit)
            r = self._eliminate(r, c, pivots[c])

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def rref(self) -> dict[int, dict]:
        """Reduced echelon rows keyed by pivot column, with exact field entries."""
        F = self.field
        out: dict[int, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            r = dict(self.pivots[c])
            if F.p is None:
                lead = r[c]
                r = {k: Fraction(v, lead) for k, v in r.items()}
            for k in sorted(k for k in r if k != c and k in out):
                f = r.get(k)
                if not f:
                    continue
                for kk, vv in out[k].items():
                    nv = r.get(kk, 0) - f * vv
                    if F.p is not None:
                        nv %= F.p
                    if nv:
                        r[kk] = nv
                    else:
                        r.pop(kk, None)
            out[c] = {k: F(v) for k, v in r.items()}
        return out


def rank_of_rows(rows: Iterable, field: FieldSpec) -> int:
    """Rank of a matrix given as an iterable of rows (dicts or sequences)."""
    return RowEchelon(field).extend(rows).rank


class ExactMatrix:
    """Matrix over a :class:`FieldSpec` with exact entries.

    Construct from a dense list of rows or with :meth:`from_sparse`.  Entries
    are converted to canonical field elements on the way in.
    """

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence], field: FieldSpec, ncols: int | None = None):
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            d = {}
            for j, v in enumerate(r):
                v = field(v)
                if v:
                    d[j] = v
            data.append(d)
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = data

    @classmethod
    def from_sparse(cls, rows: Sequence[dict], ncols: int, field: FieldSpec) -> ExactMatrix:
        M = cls.__new__(cls)
        M.field = field
        M.nrows = len(rows)
        M.ncols = ncols
        data = []
        for r in rows:
            d = {}
            for j, v in r.items():
                if not 0 <= j < ncols:
                    raise IndexError(j)
                v = field(v)
                if v:
                    d[j] = v
            data.append(d)
        M._rows = data
        return M

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldSpec) -> ExactMatrix:
        return cls.from_sparse([{} for _ in range(nrows)], ncols, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> ExactMatrix:
        return cls.from_sparse([{i: 1} for i in range(n)], n, field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> dict:
        return dict(self._rows[i])

    def sparse_rows(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= j < self.ncols):
            raise IndexError(j)
        return self._rows[i].get(j, self.field.zero())

    def tolist(self) -> list[list]:
        z = self.field.zero()
        return [[r.get(j, z) for j in range(self.ncols)] for r in self._rows]

    def transpose(self) -> ExactMatrix:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return ExactMatrix.from_sparse(cols, self.nrows, self.field)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows or self.field != other.field:
                raise ValueError("shape or field mismatch")
            p = self.field.p
            out = []
            for r in self._rows:
                acc: dict = {}
                for k, a in r.items():
                    for j, b in other._rows[k].items():
                        acc[j] = acc.get(j, 0) + a * b
                if p is not None:
                    acc = {j: v % p for j, v in acc.items()}
                out.append({j: v for j, v in acc.items() if v})
            return ExactMatrix.from_sparse(out, other.ncols, self.field)
        v = list(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch")
        return [self.field(sum(a * v[j] for j, a in r.items())) for r in self._rows]

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field, self.shape, self._rows) == (other.field, other.shape, other._rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field})"

    def echelon(self) -> RowEchelon:
        return RowEchelon(self.field).extend(self._rows)

    def rank(self) -> int:
        return self.echelon().rank

    def kernel_basis(self) -> list[list]:
        """Basis of the right null space, one vector per free column."""
        F = self.field
        red = self.echelon().rref()
        free = [j for j in range(self.ncols) if j not in red]
        basis = []
        for f in free:
            v = [F.zero()] * self.ncols
            v[f] = F.one()
            for c, r in red.items():
                a = r.get(f)
                if a:
                    v[c] = F(-a)
            basis.append(v)
        return basis

    def solve(self, b: Sequence) -> list | None:
        """Some ``x`` with ``self @ x == b``, or None if the system is inconsistent."""
        F = self.field
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        n = self.ncols
        ech = RowEchelon(F)
        for r, bi in zip(self._rows, b):
            row = dict(r)
            bi = F(bi)
            if bi:
                row[n] = bi
            ech.add(row)
        if n in ech.pivots:
            return None
        x = [F.zero()] * n
        for c, r in ech.rref().items():
            x[c] = F(r.get(n, 0))
        if self @ x != [F(v) for v in b]:
            raise ArithmeticError("substitution check failed")
        return x


def rank(M: ExactMatrix) -> int:
    return M.rank()


def kernel_basis(M: ExactMatrix) -> list[list]:
    return M.kernel_basis()


def solve(M: ExactMatrix, b: Sequence) -> list | None:
    return M.solve(b)
