"""Matrix representations of Z of size 2^(n-2).

The representation for n points is built from the one for n-1 points:
every z_{i,j} other than z_{1,n} goes to a block diagonal matrix whose
blocks are rho(tau z) and rho(tau z^dagger), where tau kills the
generators that involve the point n.  z_{1,n} goes to the block swap
scaled by t_{n-1}.
"""

import itertools

import numpy as np

from . import fp
from . import zring


class MatrixRep:
    """Generator (i, j), i < j, -> integer matrix."""

    def __init__(self, n, mats, params):
        self.n = n
        self.mats = {g: np.asarray(m, dtype=np.int64) for g, m in mats.items()}
        self.params = tuple(params)
        self.size = next(iter(self.mats.values())).shape[0]

    def __getitem__(self, g):
        return self.mats[g]

    def generators(self):
        return sorted(self.mats)

    def of_monomial(self, factors):
        m = np.eye(self.size, dtype=np.int64)
        for f in factors:
            g, s = zring.orient(f)
            m = m @ (s * self.mats[g])
        return m

    def of_element(self, a):
        out = np.zeros((self.size, self.size), dtype=np.int64)
        for m, c in a.terms.items():
            out = out + c * self.of_monomial(m)
        return out

    def reduce(self, p):
        return MatrixRep(self.n, {g: m % p for g, m in self.mats.items()}, self.params)

    def to_json(self):
        return {"n": self.n, "size": self.size, "params": list(self.params),
                "matrices": {f"{i},{j}": m.tolist() for (i, j), m in sorted(self.mats.items())}}


def _gens(n):
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def rep_a2(t1, t2):
    """x = z_{1,2}, y = z_{2,3}, z = z_{1,3} as 2 x 2 matrices."""
    return MatrixRep(3, {(1, 2): [[t1, 0], [0, 0]],
                         (2, 3): [[0, 0], [0, -t1]],
                         (1, 3): [[0, t2], [t2, 0]]}, (t1, t2))


def rep_base(t1):
    """n = 2: the commutative ring Z[z_{1,2}] on 1 x 1 matrices."""
    return MatrixRep(2, {(1, 2): [[t1]]}, (t1,))


def rep_doubling(base, t_new):
    """Representation of Z on n = base.n + 1 points, twice the size."""
    n = base.n + 1
    m = base.size
    zero = np.zeros((m, m), dtype=np.int64)
    R = zring.ZRing(n)

    def rho_tau(i, j, sign=1):
        # tau kills generators touching the point n
        if j == n:
            return zero
        return sign * base[(i, j)]

    mats = {}
    for i, j in _gens(n):
        if (i, j) == (1, n):
            eye = np.eye(m, dtype=np.int64)
            mats[(i, j)] = np.block([[zero, t_new * eye], [t_new * eye, zero]])
            continue
        (facs, c), = zring.dagger(R.z(i, j)).terms.items()
        (a, b), = facs
        upper = rho_tau(i, j)
        lower = rho_tau(a, b, c)
        mats[(i, j)] = np.block([[upper, zero], [zero, lower]])
    return MatrixRep(n, mats, base.params + (t_new,))


def rep_symmetric(n, params=None):
    """The recursive representation for n points (parameters t_1..t_{n-1})."""
    if n < 2:
        raise ValueError("n must be at least 2")
    params = list(params) if params is not None else [1] * (n - 1)
    if len(params) != n - 1:
        raise ValueError("need n - 1 parameters")
    rep = rep_base(params[0])
    for k in range(3, n + 1):
        rep = rep_doubling(rep, params[k - 2])
    return rep


def verify_homomorphism(rep, p=None):
    """Check every product of two generators against its normal form.

    The orientation rule for z_{j,i} is built into MatrixRep; products of
    two generators cover the overlap, containment and disjoint relations.
    The report lists the failing ordered pairs.
    """
    n = rep.n
    bad = []
    checked = 0
    for a in _gens(n):
        for b in _gens(n):
            lhs = rep[a] @ rep[b]
            r = zring.normalize([a, b], n)
            if r is None:
                rhs = np.zeros_like(lhs)
            else:
                facs, s = r
                rhs = s * rep.of_monomial(facs)
            diff = lhs - rhs
            if p is not None:
                diff = diff % p
            checked += 1
            if diff.any():
                bad.append((a, b))
    return {"n": n, "size": rep.size, "checked": checked, "failures": bad,
            "ok": not bad}


def check_dagger_identity(rep):
    """rho(z_{1,n}) rho(a) = rho(a^dagger) rho(z_{1,n}) on every generator a."""
    n = rep.n
    R = zring.ZRing(n)
    top = rep[(1, n)]
    bad = []
    for g in _gens(n):
        lhs = top @ rep[g]
        rhs = rep.of_element(zring.dagger(R.z(*g))) @ top
        if not np.array_equal(lhs, rhs):
            bad.append(g)
    return bad


def rep_vxy_quotient(t1, t2, t3):
    """Four dimensional representation of Z/(v, x, y) for n = 4.

    Without the minus sign on u these matrices satisfy uz + zw = 0 and
    wz + zu = 0, while in Z uz = zw and wz = zu; the sign fixes both and
    keeps uw + wu = 0.
    """
    zero = [[0] * 4 for _ in range(4)]
    u = [[t1, 0, 0, 0], [0, -t1, 0, 0], [0, 0, 0, -t2], [0, 0, -t2, 0]]
    w = [[0, t2, 0, 0], [t2, 0, 0, 0], [0, 0, -t1, 0], [0, 0, 0, t1]]
    z = [[0, 0, t3, 0], [0, 0, 0, t3], [t3, 0, 0, 0], [0, t3, 0, 0]]
    return MatrixRep(4, {(1, 2): -np.array(u), (3, 4): w, (1, 4): z,
                         (2, 3): zero, (1, 3): zero, (2, 4): zero}, (t1, t2, t3))


def corrupt(rep, g, sign=-1):
    """Copy of rep with one generator matrix rescaled; a negative control."""
    mats = dict(rep.mats)
    mats[g] = sign * mats[g]
    return MatrixRep(rep.n, mats, rep.params)


def image_dimension(rep, p):
    """Dimension over F_p of the unital algebra generated by the images."""
    size = rep.size
    gens = [rep[g] % p for g in rep.generators()]
    space = fp.RowSpace(size * size, p)
    frontier = [np.eye(size, dtype=np.int64)]
    space.add(frontier[0].reshape(-1))
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                x = (m @ g) % p
                if space.add(x.reshape(-1)):
                    new.append(x)
        frontier = new
    return len(space)


def distinct_kernels(rep):
    """For n >= 4: upper block kills z_{2,n} but not z_{1,n-1}; lower the reverse."""
    n, m = rep.n, rep.size // 2
    up = lambda g: rep[g][:m, :m]
    low = lambda g: rep[g][m:, m:]
    a, b = (1, n - 1), (2, n)
    return bool(up(a).any() and not up(b).any() and low(b).any() and not low(a).any())


# -- graded tensor products and detection ---------------------------------------


def graded_tensor_embedding(degrees, split, values):
    """2 x 2 images of t_1..t_r in the graded tensor product.

    Variables 1..split form the left factor.  Even degree -> u I, odd on the
    left -> diag(u, -u), odd on the right -> antidiag(u, u).
    """
    out = []
    for j, (m, u) in enumerate(zip(degrees, values), 1):
        if m % 2 == 0:
            out.append(np.array([[u, 0], [0, u]], dtype=np.int64))
        elif j <= split:
            out.append(np.array([[u, 0], [0, -u]], dtype=np.int64))
        else:
            out.append(np.array([[0, u], [u, 0]], dtype=np.int64))
    return out


def graded_tensor_sort(word, degrees, split):
    """Sort a word in the variables into (left sorted, right sorted) with the Koszul sign."""
    w = list(word)
    sign = 1
    # bubble sort; only left/right swaps of two odd variables cost a sign
    for a in range(len(w)):
        for b in range(len(w) - 1 - a):
            x, y = w[b], w[b + 1]
            if x > y:
                if (x <= split) != (y <= split):
                    sign *= (-1) ** (degrees[x - 1] * degrees[y - 1])
                w[b], w[b + 1] = y, x
    return tuple(w), sign


def check_graded_embedding(degrees, split, values, words):
    """The embedding respects the Koszul sign rule on the given words."""
    mats = graded_tensor_embedding(degrees, split, values)

    def image(word):
        m = np.eye(2, dtype=np.int64)
        for v in word:
            m = m @ mats[v - 1]
        return m

    bad = []
    for word in words:
        srt, s = graded_tensor_sort(word, degrees, split)
        if not np.array_equal(image(word), s * image(srt)):
            bad.append(word)
    return bad


def window_image(factors, n, i):
    """Image of a canonical monomial of Z' in Z[1,i] (x) Z[i+1,n].

    Returns (sign, left, right) or None when some factor straddles i.
    """
    left = [f for f in factors if f[1] <= i]
    right = [f for f in factors if f[0] >= i + 1]
    if len(left) + len(right) != len(factors):
        return None
    r = zring.normalize(left + right)
    lnorm = zring.normalize(left)
    rnorm = zring.normalize(right)
    # factors = s * (left)(right) and left, right normalise with their own signs
    _, s = r
    return s * lnorm[1] * rnorm[1], lnorm[0], rnorm[0]


def detection_rank(n, d):
    """(number of Z' monomials of degree -d, rank of their images)."""
    mons = [m for m in zring.enumerate_canonical(n, d) if (1, n) not in m]
    cols = {}
    rows = []
    for m in mons:
        row = {}
        for i in range(1, n):
            img = window_image(m, n, i)
            if img is None:
                continue
            s, left, right = img
            key = (i, left, right)
            cols.setdefault(key, len(cols))
            row[cols[key]] = s
        rows.append(row)
    dense = [[row.get(c, 0) for c in range(len(cols))] for row in rows]
    return len(mons), fp.rational_rank(dense) if cols else 0


def sample_words(r, length, count, seed=0):
    import random

    rng = random.Random(seed)
    return [tuple(rng.randint(1, r) for _ in range(rng.randint(1, length))) for _ in range(count)]


def all_words(r, length):
    return [w for k in range(1, length + 1) for w in itertools.product(range(1, r + 1), repeat=k)]
