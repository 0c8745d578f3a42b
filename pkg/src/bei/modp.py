"""Exact dense linear algebra over a prime field GF(p).

All ranks in this package (simplicial homology, Koszul homology, Artinian
reductions) reduce to Gaussian elimination mod p.  Matrices are kept as
float64 and updated in BLAS-backed panels: with p < 2**15.5 a single product
is below 2**31 and a panel accumulates at most 2**22 of them, far inside the
2**53 window where float64 arithmetic is exact.  Pivoting is deterministic
(first usable row, columns left to right), so every caller is reproducible.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 32003

_PANEL = 64


def _inv_mod(a, p):
    return pow(int(a) % p, -1, p)


def rref_dense(A, p, max_rank=None):
    """Reduced row echelon form of A over GF(p).

    Returns (R, pivots) where pivots is the ascending list of pivot columns
    and R has one unit row per pivot (R[k, pivots[k]] == 1, zeros in the
    other pivot columns).  A is not modified.
    """
    A = np.array(A, dtype=np.float64) % p
    if A.ndim != 2:
        raise ValueError("matrix expected")
    m, w = A.shape
    if m == 0 or w == 0:
        return np.zeros((0, w)), []
    if max_rank is None:
        max_rank = min(m, w)
    used = np.zeros(m, dtype=bool)
    pivots = []
    piv_rows = []
    c0 = 0
    while c0 < w and len(pivots) < max_rank:
        c1 = min(c0 + _PANEL, w)
        P = A[:, c0:c1].copy()
        P[used] = 0.0
        new_rows, new_cols = [], []
        for c in range(c1 - c0):
            col = P[:, c]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            r = int(nz[0])
            inv = _inv_mod(P[r, c], p)
            P[r] = (P[r] * inv) % p
            rest = col != 0
            rest[r] = False
            if rest.any():
                P[rest] = (P[rest] - np.outer(col[rest], P[r])) % p
            used[r] = True
            P[r] = 0.0
            new_rows.append(r)
            new_cols.append(c0 + c)
            if len(pivots) + len(new_rows) == max_rank:
                break
        if new_rows:
            # Bring the pivot rows themselves to rref (small, sequential).
            U = A[new_rows, :] % p
            k = len(new_rows)
            for j in range(k):
                cj = new_cols[j]
                U[j] = (U[j] * _inv_mod(U[j, cj], p)) % p
                coef = U[:, cj].copy()
                coef[j] = 0
                hit = coef != 0
                if hit.any():
                    U[hit] = (U[hit] - np.outer(coef[hit], U[j])) % p
            others = np.ones(m, dtype=bool)
            others[new_rows] = False
            if others.any():
                M = A[np.ix_(others, new_cols)] % p
                if M.any():
                    A[others] = (A[others] - M @ U) % p
            A[new_rows] = U
            piv_rows.extend(new_rows)
            pivots.extend(new_cols)
        c0 = c1
    order = np.argsort(pivots, kind="stable")
    pivots = [pivots[i] for i in order]
    R = A[[piv_rows[i] for i in order], :]
    return R, pivots


def rank_modp(A, p=DEFAULT_PRIME):
    """Rank of an integer matrix over GF(p)."""
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_dense(A, p)[1])


class Rref:
    """Incremental reduced row echelon form over GF(p).

    Rows can be fed in blocks; the object maintains the rref of everything
    seen so far.  `coords` projects vectors onto the complement of the row
    space using the non-pivot coordinates, which is how Artinian quotients
    are represented downstream.
    """

    def __init__(self, width, p=DEFAULT_PRIME):
        self.width = width
        self.p = p
        self.rows = np.zeros((0, width))
        self.pivots = []

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def free_cols(self):
        piv = set(self.pivots)
        return [c for c in range(self.width) if c not in piv]

    def reduce(self, B):
        """Reduce the rows of B modulo the current row space."""
        B = np.array(B, dtype=np.float64) % self.p
        if self.rows.shape[0] and B.size:
            M = B[:, self.pivots]
            if M.any():
                B = (B - M @ self.rows) % self.p
        return B

    def add_rows(self, B):
        """Adjoin rows, returning the number of new pivots."""
        if self.width == 0:
            return 0
        B = self.reduce(B)
        if not B.any():
            return 0
        R, piv = rref_dense(B, self.p)
        if not piv:
            return 0
        if self.rows.shape[0]:
            M = self.rows[:, piv]
            if M.any():
                self.rows = (self.rows - M @ R) % self.p
        rows = np.vstack([self.rows, R])
        pivots = self.pivots + piv
        order = np.argsort(pivots, kind="stable")
        self.pivots = [pivots[i] for i in order]
        self.rows = rows[order]
        return len(piv)

    def coords(self, B):
        """Quotient-space coordinates (non-pivot columns) of the rows of B."""
        return self.reduce(B)[:, self.free_cols]
