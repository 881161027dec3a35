"""Brute-force oracles.  Nothing here imports the package's algebra code.

Complexes are plain ``(m, set_of_sorted_tuples)`` pairs; fields are ``None``
for Q or a prime ``p``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


# -- complexes ---------------------------------------------------------------

def closure(facets) -> set:
    out = {()}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def faces_of(K) -> set:
    """Face set of a package complex, as plain tuples."""
    return set(K.faces)


def link_faces(faces, sigma) -> set:
    s = set(sigma)
    return {tuple(sorted(set(t) - s)) for t in faces if s <= set(t)}


def star_faces(faces, sigma) -> set:
    s = set(sigma)
    return {t for t in faces if tuple(sorted(s | set(t))) in faces}


def join_faces(A, m, B) -> set:
    return {tuple(sorted(a + tuple(x + m for x in b))) for a in A for b in B}


def used_vertices(faces) -> list:
    return sorted({v for f in faces for v in f})


# -- dense exact rank ----------------------------------------------------------

def rank(rows, p=None) -> int:
    """Row-by-row dense elimination; Fractions for Q, ints mod p otherwise."""
    pivots = {}          # column -> dense row with a one there
    ncols = None
    for row in rows:
        if ncols is None:
            ncols = len(row)
        r = [Fraction(x) for x in row] if p is None else [x % p for x in row]
        for c in range(ncols):
            if r[c] == 0:
                continue
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / r[c] if p is None else pow(r[c], -1, p)
                pivots[c] = [x * inv if p is None else (x * inv) % p for x in r]
                break
            f = r[c]
            r = [a - f * b if p is None else (a - f * b) % p for a, b in zip(r, piv)]
        if ncols is not None and len(pivots) == ncols:
            break
    return len(pivots)


def transpose(rows, ncols=None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*rows)]


# -- homology via Smith normal form ------------------------------------------------

def smith_diagonal(M) -> list[int]:
    """Nonzero invariant factors of an integer matrix (absolute values)."""
    A = [list(r) for r in M]
    if not A or not A[0]:
        return []
    rows, cols = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot = smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                q = A[i][t] // A[t][t]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // A[t][t]
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    for r in A:
                        r[t], r[j] = r[j], r[t]
                    done = False
            if done:
                # divisibility condition
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if A[i][j] % A[t][t]:
                            A[t] = [a + b for a, b in zip(A[t], A[i])]
                            done = False
                            break
                    if not done:
                        break
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def boundary_matrix(faces, k) -> list[list[int]]:
    """Augmented boundary from faces of order k to order k-1 (rows = order k-1)."""
    src = sorted(f for f in faces if len(f) == k)
    tgt = sorted(f for f in faces if len(f) == k - 1)
    idx = {f: i for i, f in enumerate(tgt)}
    M = [[0] * len(src) for _ in tgt]
    for j, f in enumerate(src):
        for pos in range(len(f)):
            M[idx[f[:pos] + f[pos + 1:]]][j] += (-1) ** pos
    return M


def reduced_betti(faces, p=None) -> dict[int, int]:
    """``dim H~^i(K; F)`` from integral Smith forms and universal coefficients."""
    top = max(len(f) for f in faces)
    n = {k: sum(1 for f in faces if len(f) == k) for k in range(top + 2)}
    snf = {k: smith_diagonal(boundary_matrix(faces, k)) if n[k] and n[k - 1] else []
           for k in range(1, top + 1)}
    out = {}
    for i in range(-1, top):
        k = i + 1                    # faces of order k are i-dimensional
        r_in = len(snf.get(k, []))   # rank of boundary out of order k
        r_out = len(snf.get(k + 1, []))
        free = n[k] - r_in - r_out
        # homology H_i torsion = invariant factors > 1 of boundary from order k+1
        tors_i = [d for d in snf.get(k + 1, []) if d > 1]
        tors_im1 = [d for d in snf.get(k, []) if d > 1]
        if p is None:
            out[i] = free
        else:
            # H^i(K;F_p) = Hom(H_i, F_p) + Ext(H_{i-1}, F_p)
            out[i] = free + sum(1 for d in tors_i if d % p == 0) + sum(1 for d in tors_im1 if d % p == 0)
    return out


# -- face ring ---------------------------------------------------------------------

def monomials(m, d):
    if m == 0:
        return [()] if d == 0 else []
    return [(a,) + rest for a in range(d + 1) for rest in monomials(m - 1, d - a)]


def face_ring_basis(faces, m, d) -> list:
    return [e for e in monomials(m, d) if tuple(i + 1 for i in range(m) if e[i]) in faces]


def hilbert_counts(faces, m, upto) -> list[int]:
    return [len(face_ring_basis(faces, m, d)) for d in range(upto + 1)]


def thetas(faces, m):
    """theta_j as ``{exponent: 1}`` over the squarefree faces of order j."""
    n = max(len(f) for f in faces)
    out = []
    for j in range(1, n + 1):
        poly = {}
        for f in faces:
            if len(f) == j:
                e = tuple(1 if i + 1 in f else 0 for i in range(m))
                poly[e] = 1
        out.append(poly)
    return out


def _mul_into(faces, m, a, poly):
    """``a * poly`` in F(K): a is an exponent tuple, poly a dict."""
    out = {}
    for e, c in poly.items():
        s = tuple(x + y for x, y in zip(a, e))
        if tuple(i + 1 for i in range(m) if s[i]) in faces:
            out[s] = out.get(s, 0) + c
    return out


def theta_ideal_rows(faces, m, d):
    """Spanning rows of ``(theta_1 F(K)_{d-1} + ... + theta_n F(K)_{d-n})`` in the basis of F(K)_d."""
    basis = face_ring_basis(faces, m, d)
    idx = {e: i for i, e in enumerate(basis)}
    rows = []
    for j, th in enumerate(thetas(faces, m), start=1):
        if d - j < 0:
            continue
        for a in face_ring_basis(faces, m, d - j):
            poly = _mul_into(faces, m, a, th)
            r = [0] * len(basis)
            for e, c in poly.items():
                r[idx[e]] += c
            if any(r):
                rows.append(r)
    return basis, rows


def quotient_dims(faces, m, p=None, max_d=None) -> tuple:
    """Macaulay-matrix elimination directly in F(K), degree by degree."""
    n = max(len(f) for f in faces)
    if max_d is None:
        max_d = n * (n + 1) // 2 + 1
    out = []
    for d in range(max_d + 1):
        basis, rows = theta_ideal_rows(faces, m, d)
        out.append(len(basis) - rank(rows, p))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def socle_dims(faces, m, p=None, top=None) -> tuple:
    """``dim {x in A_d : v_i x = 0 in A for all i}`` via preimages in F(K)."""
    if top is None:
        top = len(quotient_dims(faces, m, p)) - 1
    verts = used_vertices(faces)
    out = []
    for d in range(top + 1):
        src, Id = theta_ideal_rows(faces, m, d)
        tgt, Inext = theta_ideal_rows(faces, m, d + 1)
        tidx = {e: i for i, e in enumerate(tgt)}
        T, w = len(tgt), len(verts)
        # columns of the map x -> (v_i x)_i, plus the ideal in each block
        cols = []
        for e in src:
            c = [0] * (T * w)
            for b, v in enumerate(verts):
                s = list(e)
                s[v - 1] += 1
                s = tuple(s)
                if s in tidx:
                    c[b * T + tidx[s]] = 1
            cols.append(c)
        G = []
        for b in range(w):
            for r in Inext:
                c = [0] * (T * w)
                c[b * T:(b + 1) * T] = r
                G.append(c)
        rk_G = rank(G, p)
        rk_map = rank(cols + G, p) - rk_G
        # kernel of A_d -> sum A_{d+1}: (dim F_d - rk_map) - dim I_d
        out.append(len(src) - rk_map - rank(Id, p))
    return tuple(out)
