"""Parameter systems, the quotient algebra ``A = F(K)/(theta)`` and Koszul Tor.

The parameters are the elementary symmetric polynomials ``theta_j = e_j(v)``,
``j = 1..n``.  Since ``e_j`` vanishes in ``F(K)`` for ``j > n``,

    A = F[v] / (I_K + (e_1, ..., e_m)),

which is the coinvariant algebra of ``F[v]`` modulo the image of the
Stanley-Reisner ideal ``I_K``.  :class:`QuotientAlgebra` works in the Artin
basis of the coinvariant algebra (``m!``-dimensional), which keeps the
matrices small even when ``F(K)_d`` is large.  :func:`koszul_tor_dims`
works directly with the monomial bases of ``F(K)`` and recovers ``A`` as
``Tor_0``, an independent route to the same numbers.

Ghost labels are dropped before computing; every quotient here is invariant
under that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import _coinvariant as coinv
from .complex import SimplicialComplex, from_facets, minimal_missing_faces
from .face_ring import hilbert_series, monomial_basis, poly_mul
from .linalg import ExactMatrix, FieldSpec, RowEchelon, rank_of_rows

__all__ = [
    "ThetaSystem", "QuotientAlgebra", "TorTable", "theta_system",
    "quotient_algebra", "freeness_check", "socle_dims", "pd_check",
    "koszul_tor_dims", "ambient_quotient_dims", "default_d_max",
    "image_dims_of_vertex", "expected_quotient_series",
]


def default_d_max(n: int) -> int:
    return n * (n + 1) // 2 + n


@dataclass(frozen=True)
class ThetaSystem:
    """``vectors[j-1]`` is ``theta_j`` as a coefficient vector in ``monomial_basis(K, j)``."""

    complex: SimplicialComplex
    field: FieldSpec
    vectors: tuple

    @property
    def n(self) -> int:
        return len(self.vectors)

    def as_polynomial(self, j: int) -> dict:
        """``{monomial: coeff}`` for ``theta_j``."""
        basis = monomial_basis(self.complex, j)
        return {mono: c for mono, c in zip(basis, self.vectors[j - 1]) if c}


def _squarefree(m: int, face: tuple) -> tuple:
    e = [0] * m
    for v in face:
        e[v - 1] = 1
    return tuple(e)


def theta_system(K: SimplicialComplex, field: FieldSpec) -> ThetaSystem:
    vecs = []
    for j in range(1, K.n + 1):
        idx = {mono: r for r, mono in enumerate(monomial_basis(K, j))}
        v = [field.zero()] * len(idx)
        for f in K.faces_of_order(j):
            v[idx[_squarefree(K.m, f)]] = field.one()
        vecs.append(tuple(v))
    # e_j for j > n is a sum of non-faces
    for j in range(K.n + 1, K.m + 1):
        for tau in combinations(range(1, K.m + 1), j):
            assert tau not in K, f"e_{j} does not vanish: {tau} is a face"
    return ThetaSystem(K, field, tuple(vecs))


class QuotientAlgebra:
    """``A = F(K)/(theta_1..theta_n)`` degree by degree, in coinvariant coordinates.

    For each degree ``d`` we keep the Artin basis of the coinvariant algebra,
    the echelon form of the image of ``I_K`` there, and the free (non-pivot)
    Artin monomials, which are the chosen coset representatives of ``A_d``.
    Computation stops at the first ``d`` with ``A_d = 0``; ``A`` is generated
    in degree one, so it vanishes from there on.
    """

    def __init__(self, K: SimplicialComplex, field: FieldSpec, generators=None):
        self.complex = K
        self.field = field
        Kc = K.compact()
        self._compact = Kc
        self._index = {v: i for i, v in enumerate(K.vertices)}
        self.mc = Kc.m
        if generators is None:
            generators = minimal_missing_faces(Kc)
        self._gens = [(_squarefree(self.mc, g), len(g)) for g in generators]
        self._artin: list = []
        self._col: list = []
        self._ech: list = []
        self._free: list = []
        self._free_pos: list = []
        n = K.n
        cap = max(4 * n * (n + 1), 1)
        d = 0
        while True:
            if d > cap:
                raise RuntimeError(f"quotient did not vanish by degree {cap}")
            self._build_degree(d)
            if not self._free[d]:
                break
            d += 1
        self.dims = tuple(len(f) for f in self._free[:-1]) or (0,)
        self.top_degree = len(self.dims) - 1

    def _build_degree(self, d: int) -> None:
        art = coinv.artin_basis(self.mc, d)
        col = {a: j for j, a in enumerate(art)}
        ech = RowEchelon(self.field)
        for g, deg in self._gens:
            if deg > d:
                continue
            for b in coinv.artin_basis(self.mc, d - deg):
                mono = tuple(x + y for x, y in zip(g, b))
                ech.add({col[a]: c for a, c in coinv.normal_form(mono)})
                if ech.rank == len(art):
                    break
            if ech.rank == len(art):
                break
        free = [j for j in range(len(art)) if j not in ech.pivots]
        self._artin.append(art)
        self._col.append(col)
        self._ech.append(ech)
        self._free.append(free)
        self._free_pos.append({j: k for k, j in enumerate(free)})

    # -- coordinates --------------------------------------------------------

    def dim(self, d: int) -> int:
        return self.dims[d] if 0 <= d <= self.top_degree else 0

    def _coords_compact(self, poly: dict, d: int) -> dict:
        """Coordinates in ``A_d`` of a polynomial ``{compact exps: coeff}`` of degree d."""
        if d > self.top_degree or d < 0:
            return {}
        col = self._col[d]
        vec: dict = {}
        for mono, c in poly.items():
            for a, k in coinv.normal_form(mono):
                j = col[a]
                vec[j] = vec.get(j, 0) + c * k
        rem = self._ech[d].reduce({j: v for j, v in vec.items() if v})
        pos = self._free_pos[d]
        F = self.field
        return {pos[j]: F(v) for j, v in rem.items() if F(v)}

    def _to_compact(self, mono: tuple) -> tuple | None:
        e = [0] * self.mc
        for i, a in enumerate(mono):
            if a:
                k = self._index.get(i + 1)
                if k is None:
                    return None
                e[k] = a
        return tuple(e)

    def coords(self, poly: dict, d: int) -> dict:
        """Coordinates in ``A_d`` of ``{monomial over K's labels: coeff}``."""
        cp: dict = {}
        for mono, c in poly.items():
            cm = self._to_compact(mono)
            if cm is not None:
                cp[cm] = cp.get(cm, 0) + c
        return self._coords_compact(cp, d)

    def basis(self, d: int) -> list:
        """Coset representatives of ``A_d`` as monomials over ``K``'s labels."""
        if d > self.top_degree:
            return []
        used = self.complex.vertices
        out = []
        for j in self._free[d]:
            e = [0] * self.complex.m
            for k, x in enumerate(self._artin[d][j]):
                e[used[k] - 1] = x
            out.append(tuple(e))
        return out

    def _basis_compact(self, d: int) -> list:
        return [self._artin[d][j] for j in self._free[d]] if d <= self.top_degree else []

    def projection_matrix(self, d: int) -> ExactMatrix:
        """Matrix of ``F(K)_d -> A_d`` in the monomial basis of ``F(K)_d``."""
        src = monomial_basis(self.complex, d)
        cols = [self.coords({mono: 1}, d) for mono in src]
        rows = [{} for _ in range(self.dim(d))]
        for j, c in enumerate(cols):
            for i, v in c.items():
                rows[i][j] = v
        return ExactMatrix.from_sparse(rows, len(src), self.field)

    def multiplication_matrix(self, i: int, d: int) -> ExactMatrix:
        """Matrix of ``v_i : A_d -> A_{d+1}`` (``i`` a label of ``K``)."""
        k = self._index.get(i)
        src = self._basis_compact(d)
        rows = [{} for _ in range(self.dim(d + 1))]
        if k is not None:
            for j, b in enumerate(src):
                e = list(b)
                e[k] += 1
                for r, v in self._coords_compact({tuple(e): 1}, d + 1).items():
                    rows[r][j] = v
        return ExactMatrix.from_sparse(rows, len(src), self.field)

    def pairing_matrix(self, k: int, D: int | None = None) -> ExactMatrix:
        """Rows ``A_k``, columns ``A_{D-k}``, entries the ``A_D`` coordinate of the product.

        Only meaningful when ``dim A_D == 1``.
        """
        if D is None:
            D = self.top_degree
        left = self._basis_compact(k)
        right = self._basis_compact(D - k)
        rows = []
        for a in left:
            r = {}
            for j, b in enumerate(right):
                prod = tuple(x + y for x, y in zip(a, b))
                v = self._coords_compact({prod: 1}, D).get(0)
                if v:
                    r[j] = v
            rows.append(r)
        return ExactMatrix.from_sparse(rows, len(right), self.field)


def _support_ok(K: SimplicialComplex, mono: tuple) -> bool:
    return tuple(i + 1 for i, e in enumerate(mono) if e) in K


def quotient_algebra(K: SimplicialComplex, field: FieldSpec) -> QuotientAlgebra:
    return QuotientAlgebra(K, field)


def _parameter_factor(n: int) -> tuple:
    """``prod_{j=1..n} (1 - t**j) / (1 - t)``."""
    out = (1,)
    for j in range(1, n + 1):
        out = poly_mul(out, (1,) * j)
    return out


def freeness_check(K: SimplicialComplex, field: FieldSpec, A: QuotientAlgebra | None = None):
    """``(is_free, witness_degree)`` from the Hilbert series identity.

    ``F(K)`` is free over ``F[theta]`` iff ``Hilb(A) == Hilb(F(K)) * prod(1 - t**j)``;
    the witness is the first degree where the two differ.  Coefficientwise
    domination does not hold in general, but the totals obey the
    multiplicity bound ``dim A >= h(1) * n!``, which is asserted.
    """
    if A is None:
        A = quotient_algebra(K, field)
    expected = expected_quotient_series(K)
    if sum(A.dims) < sum(expected):
        raise AssertionError(f"multiplicity bound violated: dim A = {sum(A.dims)} < {sum(expected)}")
    L = max(len(expected), len(A.dims))
    for d in range(L):
        a = A.dims[d] if d < len(A.dims) else 0
        b = expected[d] if d < len(expected) else 0
        if a != b:
            return False, d
    return True, None


def expected_quotient_series(K: SimplicialComplex) -> tuple:
    """Coefficients of ``Hilb(F(K)) * prod_{j<=n} (1 - t**j)``, the Koszul Euler characteristic."""
    return poly_mul(hilbert_series(K).numerator, _parameter_factor(K.n))


def socle_dims(K: SimplicialComplex, field: FieldSpec, A: QuotientAlgebra | None = None) -> tuple:
    """``dim soc(A)_d`` for ``d = 0..top``: common kernel of all ``v_i`` on ``A_d``."""
    if A is None:
        A = quotient_algebra(K, field)
    out = []
    used = K.vertices
    for d in range(A.top_degree + 1):
        src = A._basis_compact(d)
        if d == A.top_degree:
            out.append(len(src))
            continue
        width = A.dim(d + 1)
        rows = []
        for b in src:
            r = {}
            for s, lab in enumerate(used):
                k = A._index[lab]
                e = list(b)
                e[k] += 1
                for c, v in A._coords_compact({tuple(e): 1}, d + 1).items():
                    r[s * width + c] = v
            rows.append(r)
        out.append(len(src) - rank_of_rows(rows, field))
    return tuple(out)


def pd_check(K: SimplicialComplex, field: FieldSpec, A: QuotientAlgebra | None = None):
    """``(is_pd, top_degree)``: Poincare duality with respect to the top degree."""
    if A is None:
        A = quotient_algebra(K, field)
    D = A.top_degree
    if A.dim(D) != 1:
        return False, D
    for k in range(D + 1):
        if A.dim(k) != A.dim(D - k):
            return False, D
        if A.pairing_matrix(k, D).rank() != A.dim(k):
            return False, D
    return True, D


def image_dims_of_vertex(A: QuotientAlgebra, i: int) -> tuple:
    """``dim (v_i A)_d`` for ``d = 0..top``."""
    return tuple(0 if d == 0 else A.multiplication_matrix(i, d - 1).rank()
                 for d in range(A.top_degree + 1))


def ambient_quotient_dims(K: SimplicialComplex, L: SimplicialComplex, field: FieldSpec) -> tuple:
    """Dimensions of ``F(L) / (theta^K F(L))`` for a subcomplex ``L`` of ``K``.

    ``theta^K_j`` reduces in ``F(L)`` to ``e_j(v)``; with ``e_j = 0`` in F(L)
    for ``j > n(K)`` this is ``F[V_K] / (I_L + e_1..e_m)``, computed in the
    coinvariant algebra on the used vertices of ``K``.
    """
    if L.m != K.m or not all(f in K for f in L.faces):
        raise ValueError("L is not a subcomplex of K on the same labels")
    Kc = K.compact()
    pos = {v: i + 1 for i, v in enumerate(K.vertices)}
    Lfaces = [tuple(pos[v] for v in f) for f in L.faces]
    Lc = from_facets(Kc.m, Lfaces)
    # ghost vertices of Lc are singleton non-faces and are among its generators
    A = QuotientAlgebra(Kc, field, generators=minimal_missing_faces(Lc))
    return A.dims


# -- Koszul complex ----------------------------------------------------------

@dataclass(frozen=True)
class TorTable:
    """``dims[(j, d)] = dim Tor^{-j}_P(F(K), F)_d`` for ``0 <= j <= n``, ``0 <= d <= d_max``."""

    n: int
    d_max: int
    dims: dict = field(default_factory=dict)

    def row(self, j: int) -> tuple:
        return tuple(self.dims[(j, d)] for d in range(self.d_max + 1))

    def higher_vanish(self) -> bool:
        return all(v == 0 for (j, _), v in self.dims.items() if j >= 1)


def _koszul_basis(K, n, j, d):
    out = []
    for S in combinations(range(1, n + 1), j):
        e = d - sum(S)
        if e < 0:
            continue
        for mono in monomial_basis(K, e):
            out.append((S, mono))
    return out


def _theta_terms(K, j):
    return [_squarefree(K.m, f) for f in K.faces_of_order(j)]


def _koszul_rows(K, field, n, j, d, thetas):
    """Differential from stage j to stage j-1 in internal degree d, as sparse rows of the source."""
    tgt = {b: r for r, b in enumerate(_koszul_basis(K, n, j - 1, d))}
    rows = []
    for S, mono in _koszul_basis(K, n, j, d):
        r: dict = {}
        for k, s in enumerate(S):
            sign = -1 if k % 2 else 1
            rest = S[:k] + S[k + 1:]
            for t in thetas[s]:
                prod = tuple(x + y for x, y in zip(mono, t))
                if not _support_ok(K, prod):
                    continue
                c = tgt[(rest, prod)]
                r[c] = r.get(c, 0) + sign
        rows.append({c: v for c, v in r.items() if v})
    return rows, len(tgt)


def koszul_tor_dims(K: SimplicialComplex, field: FieldSpec, d_max: int | None = None) -> TorTable:
    """Homology of ``F(K) (x) Lambda(x_1..x_n)`` with ``x_s -> theta_s``, degree ``x_s = s``."""
    n = K.n
    if d_max is None:
        d_max = default_d_max(n)
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    thetas = {s: _theta_terms(K, s) for s in range(1, n + 1)}
    dims = {}
    for d in range(d_max + 1):
        sizes = [len(_koszul_basis(K, n, j, d)) for j in range(n + 1)]
        ranks = [0] * (n + 2)
        for j in range(1, n + 1):
            if sizes[j] and sizes[j - 1]:
                rows, _ = _koszul_rows(K, field, n, j, d, thetas)
                ranks[j] = rank_of_rows(rows, field)
        for j in range(n + 1):
            dims[(j, d)] = sizes[j] - ranks[j] - ranks[j + 1]
    return TorTable(n, d_max, dims)
