"""Small dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries reduced mod p.  Everything here
is sized for desk-scale work (dozens of rows); the only performance-critical
piece is the batched GF(2) rank kernel used by the subspace scan engines,
which processes many independent bit-packed matrices at once.
"""

import numpy as np


def rref(mat, p):
    """Reduced row echelon form mod p.  Returns (R, pivot_columns)."""
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        a = a.reshape(1, -1)
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, p):
    return len(rref(mat, p)[1])


def nullspace(mat, p):
    """Basis (as rows) of {x : mat @ x = 0 mod p}."""
    a = np.asarray(mat, dtype=np.int64)
    ncols = a.shape[1] if a.ndim == 2 else a.size
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red[r, f]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), ncols)


def solve_particular(mat, rhs, p):
    """One solution of mat @ x = rhs mod p, or None if inconsistent."""
    a = np.asarray(mat, dtype=np.int64) % p
    b = np.asarray(rhs, dtype=np.int64) % p
    aug = np.hstack([a, b.reshape(-1, 1)])
    red, pivots = rref(aug, p)
    ncols = a.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = red[r, ncols]
    return x


# --- bit-packed GF(2) helpers -------------------------------------------------

def pack_rows(mat):
    """Rows of a 0/1 matrix as python ints (bit j = column j)."""
    out = []
    for row in mat:
        v = 0
        for j, x in enumerate(row):
            if x & 1:
                v |= 1 << j
        out.append(v)
    return out


def rank_bits(rows):
    """Rank of a GF(2) matrix given as bit-packed integer rows."""
    basis = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def rank_bits_batch(rows, ncols):
    """Ranks of many GF(2) matrices at once.

    rows: uint64 array of shape (B, R); matrix b has rows rows[b, :], each an
    ncols-bit mask.  Returns int64 array (B,) of ranks.  Branch-free echelon
    insertion: one pass per row, one where() per column.
    """
    rows = np.asarray(rows, dtype=np.uint64)
    nbat, nrows = rows.shape
    basis = np.zeros((nbat, ncols), dtype=np.uint64)
    ranks = np.zeros(nbat, dtype=np.int64)
    for r in range(nrows):
        v = rows[:, r].copy()
        for j in range(ncols - 1, -1, -1):
            bj = basis[:, j]
            hit = (((v >> np.uint64(j)) & np.uint64(1)) == 1) & (bj != 0)
            v = np.where(hit, v ^ bj, v)
            place = (((v >> np.uint64(j)) & np.uint64(1)) == 1) & (bj == 0)
            basis[:, j] = np.where(place, v, bj)
            ranks += place
            v = np.where(place, np.uint64(0), v)
    return ranks
