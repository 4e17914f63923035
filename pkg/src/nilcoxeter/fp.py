"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries in [0, p).  Everything here is
plain Gaussian elimination; the sizes met in this package stay in the low
thousands.
"""

import numpy as np


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def as_fp(a, p):
    return np.asarray(a, dtype=np.int64) % p


def inverse(a, p):
    return pow(int(a) % p, p - 2, p)


def rref(a, p):
    """Row-reduce a copy of `a` over F_p.

    Returns (R, pivots) where R is in reduced row echelon form with the zero
    rows dropped and pivots[r] is the pivot column of row r.
    """
    m = as_fp(a, p).copy()
    if m.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = inverse(m[r, c], p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p):
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Basis (as rows) of {x : a @ x = 0} over F_p."""
    a = as_fp(a, p)
    rows, cols = a.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-r[row, f]) % p
    return basis


def left_nullspace(a, p):
    """Basis (as rows) of {y : y @ a = 0}."""
    return nullspace(np.asarray(a).T, p)


def solve_left(a, b, p):
    """Find one row vector y with y @ a == b over F_p, or None."""
    a = as_fp(a, p)
    b = as_fp(b, p)
    k = a.shape[0]
    if k == 0:
        return np.zeros(0, dtype=np.int64) if not b.any() else None
    aug = np.concatenate([a.T, b.reshape(-1, 1)], axis=1)
    r, pivots = rref(aug, p)
    if pivots and pivots[-1] == k:
        return None
    y = np.zeros(k, dtype=np.int64)
    for row, pc in enumerate(pivots):
        y[pc] = r[row, k]
    return y


class RowSpace:
    """Incrementally maintained row space in echelon form.

    `add(v)` reduces v against the stored rows and keeps it if it is new.
    """

    def __init__(self, width, p):
        self.width = width
        self.p = p
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = as_fp(v, self.p).copy()
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = (v - c * row) % self.p
        return v

    def add(self, v):
        v = self.reduce(v)
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        pc = nz[0]
        v = (v * inverse(v[pc], self.p)) % self.p
        # keep rows fully reduced so `reduce` stays a single pass
        for k, row in enumerate(self.rows):
            c = row[pc]
            if c:
                self.rows[k] = (row - c * v) % self.p
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def contains(self, v):
        return not self.reduce(v).any()


def rational_rank(rows):
    """Exact rank over Q of an integer matrix given as a list of rows."""
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def rational_nullspace(rows, ncols):
    """Basis over Q of {x : rows @ x = 0}, scaled to integer vectors."""
    from fractions import Fraction
    from math import lcm

    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = []
    for f in (c for c in range(ncols) if c not in set(pivots)):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][f]
        den = lcm(*(x.denominator for x in v))
        out.append([int(x * den) for x in v])
    return out
