"""Quadratic duality between Z and the signed nilcactus algebra X.

Both rings are generated by symbols indexed by intervals (i, j), i < j.
Quadratic relations live in the span of ordered generator pairs; a
relation is a dict {(g, h): coeff}.
"""

import itertools

from . import fp
from . import zring


def generators(n):
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def pairs(n):
    g = generators(n)
    return [(a, b) for a in g for b in g]


class QuadraticPresentation:
    def __init__(self, n, relations, name=""):
        self.n = n
        self.name = name
        self.relations = [r for r in relations if r]
        self.pairs = pairs(n)
        self.index = {ab: k for k, ab in enumerate(self.pairs)}

    def matrix(self):
        rows = []
        for r in self.relations:
            row = [0] * len(self.pairs)
            for ab, c in r.items():
                row[self.index[ab]] += c
            rows.append(row)
        return rows

    def dim(self, p=None):
        m = self.matrix()
        if not m:
            return 0
        return fp.rational_rank(m) if p is None else fp.rank(m, p)

    def __len__(self):
        return len(self.relations)

    def __repr__(self):
        return f"QuadraticPresentation({self.name}, n={self.n}, {len(self.relations)} relations)"


def _vec(d):
    return {k: c for k, c in d.items() if c}


def z_relation_space(n):
    """Relations of Z between two generators: overlaps, containment, disjoint."""
    rels = []
    for a, b in pairs(n):
        rel = zring.relation(a, b)
        if rel == "overlap":
            rels.append({(a, b): 1})
        elif rel == "disjoint":
            s = (-1) ** ((a[1] - a[0]) * (b[1] - b[0]))
            if a < b:
                rels.append(_vec({(a, b): 1, (b, a): -s}))
        elif rel == "contains" and a != b:
            # z_a z_b = (-1)^{|a||b|} z_{b reflected in a} z_a
            g, s = zring.orient(zring.reflect(a, b))
            s *= (-1) ** ((a[1] - a[0]) * (b[1] - b[0]))
            rels.append(_vec({(a, b): 1, (g, a): -s}))
    return QuadraticPresentation(n, rels, "Z")


def x_orient(i, j, orientation="shifted"):
    """X_{j,i} in terms of X_{i,j}: return ((min, max), sign), or (None, 0) if i == j.

    "shifted" uses X_{j,i} = (-1)^{j-i} X_{i,j}, the same rule as for z.
    "literal" uses X_{j,i} = (-1)^{j-i-1} X_{i,j}.  Only the first makes
    X the quadratic dual of Z for n >= 4 (see the tests).
    """
    if i == j:
        return None, 0
    if i < j:
        return (i, j), 1
    d = i - j if orientation == "shifted" else i - j - 1
    return (j, i), (-1) ** d


def nilcactus_relations(n, orientation="shifted"):
    """Squares, containment and disjoint relations of X, with its signs."""
    rels = []
    for a in generators(n):
        rels.append({(a, a): 1})
    for a, b in pairs(n):
        if a == b:
            continue
        e = (a[1] - a[0] - 1) * (b[1] - b[0] - 1)
        rel = zring.relation(a, b)
        if rel == "contains":
            i, j = a
            g, s = x_orient(i + j - b[0], i + j - b[1], orientation)
            rels.append(_vec({(a, b): 1, (g, a): -s * (-1) ** e}))
        elif rel == "disjoint" and a < b:
            rels.append(_vec({(a, b): 1, (b, a): -(-1) ** e}))
    return QuadraticPresentation(n, rels, "X")


def x_degree(g):
    """(homological, Z-degree, internal) triple of X_{i,j}."""
    m = g[1] - g[0]
    return (-1, m, m * (m + 1) // 2)


# Pairing <X_c X_d, z_a z_b> = sign(a, b) when (c, d) = (a, b), else 0.
# Lengths |a| = j - i.  Only sign(a, b) / sign(g, a) with |g| = |b| is
# ever tested, so any symmetric factor is invisible.
CONVENTIONS = {
    "plain": lambda a, b: 1,
    "koszul": lambda a, b: (-1) ** ((a[1] - a[0] - 1) * (b[1] - b[0] - 1)),
    "suspended": lambda a, b: (-1) ** ((a[1] - a[0] - 1) * (b[1] - b[0] - 1) + a[1] - a[0]),
}
PAIRING = "suspended"


def perpendicular(P, convention=PAIRING, p=None):
    """Annihilator of P's relation space under the signed pairing."""
    sign = CONVENTIONS[convention]
    m = P.matrix()
    # x . r = sum_k x_k s_k r_k; fold the sign into the columns
    signed = [[c * sign(*ab) for c, ab in zip(row, P.pairs)] for row in m]
    if p is None:
        basis = fp.rational_nullspace(signed, len(P.pairs)) if signed else \
            [[int(k == c) for k in range(len(P.pairs))] for c in range(len(P.pairs))]
    else:
        import numpy as np
        a = np.array(signed, dtype=np.int64).reshape(len(signed), len(P.pairs))
        basis = fp.nullspace(a, p).tolist()
    rels = [{ab: c for ab, c in zip(P.pairs, v) if c} for v in basis]
    return QuadraticPresentation(P.n, rels, P.name + "^perp")


def same_space(P, Q, p=None):
    a, b = P.matrix(), Q.matrix()
    if p is None:
        r = fp.rational_rank
        return r(a) == r(b) == r(a + b)
    return fp.rank(a, p) == fp.rank(b, p) == fp.rank(a + b, p)


def duality_report(n, p=None, convention=PAIRING, orientation="shifted"):
    Zr = z_relation_space(n)
    X = nilcactus_relations(n, orientation)
    perp = perpendicular(Zr, convention, p)
    N = len(Zr.pairs)
    return {"n": n, "p": p, "pairs": N, "dim_Z": Zr.dim(p), "dim_perp": perp.dim(p),
            "dim_X": X.dim(p), "equal": same_space(perp, X, p)}


# -- graded ranks of X ------------------------------------------------------------

WORD_LIMIT = 200000


def _length(g):
    return g[1] - g[0]


def _key(g):
    return (_length(g), g[0])


class Rewriting:
    """Truncated completion of the binomial ideal of X.

    Words are compared by length, then lexicographically with letters
    ordered by (length, first point).  A rule maps a leading word to
    (sign, smaller word), or to (0, None) when the word is zero.  Completion
    resolves every overlap and inclusion ambiguity up to word length `cap`;
    the words avoiding all leading words then form a basis in lengths <= cap.
    With `char2` signs are ignored, which models F_2.
    """

    def __init__(self, n, cap, char2=False, orientation="shifted"):
        self.n = n
        self.cap = cap
        self.char2 = char2
        self.rules = {}
        for r in nilcactus_relations(n, orientation).relations:
            self._add(r)
        self._complete()

    def _wkey(self, w):
        return tuple(_key(g) for g in w)

    def _add(self, rel):
        """Insert the relation sum c w = 0 (at most two words), reduced first."""
        terms = {}
        for w, c in rel.items():
            s, v = self.reduce(w)
            if s:
                terms[v] = terms.get(v, 0) + c * s
        if self.char2:
            terms = {v: c % 2 for v, c in terms.items()}
        terms = {v: c for v, c in terms.items() if c}
        if not terms:
            return False
        if len(terms) == 1:
            (v, c), = terms.items()
            # c v = 0 with c = +-1 or +-2: v = 0 over Q
            self.rules[v] = (0, None)
            return True
        (v1, c1), (v2, c2) = sorted(terms.items(), key=lambda t: self._wkey(t[0]), reverse=True)
        sign = 1 if self.char2 else -c2 * c1
        self.rules[v1] = (sign, v2)
        return True

    def reduce(self, w):
        sign = 1
        w = tuple(w)
        changed = True
        while changed:
            changed = False
            for k in range(len(w)):
                for ln in range(2, len(w) - k + 1):
                    sub = w[k:k + ln]
                    if sub in self.rules:
                        s, rhs = self.rules[sub]
                        if s == 0:
                            return 0, None
                        sign *= s
                        w = w[:k] + rhs + w[k + ln:]
                        changed = True
                        break
                if changed:
                    break
        return (1 if self.char2 else sign), w

    def _ambiguities(self):
        lhs = list(self.rules)
        for l1 in lhs:
            for l2 in lhs:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k] and len(l1) + len(l2) - k <= self.cap:
                        yield l1 + l2[k:], l1, 0, l2, len(l1) - k
                if l1 != l2 and len(l2) < len(l1):
                    for q in range(len(l1) - len(l2) + 1):
                        if l1[q:q + len(l2)] == l2:
                            yield l1, l1, 0, l2, q

    def _one_step(self, w, l, q):
        s, rhs = self.rules[l]
        if s == 0:
            return 0, None
        t, v = self.reduce(w[:q] + rhs + w[q + len(l):])
        return s * t, v

    def _complete(self):
        done = set()
        while True:
            new = []
            for w, l1, q1, l2, q2 in self._ambiguities():
                key = (w, l1, q1, l2, q2)
                if key in done:
                    continue
                done.add(key)
                a = self._one_step(w, l1, q1)
                b = self._one_step(w, l2, q2)
                if a != b:
                    rel = {}
                    if a[0]:
                        rel[a[1]] = rel.get(a[1], 0) + a[0]
                    if b[0]:
                        rel[b[1]] = rel.get(b[1], 0) - b[0]
                    new.append(rel)
            added = False
            for rel in new:
                added |= self._add(rel)
            if not added:
                return

    def obstructions(self):
        """Leading words that are not quadratic, by length."""
        out = {}
        for l in self.rules:
            if len(l) > 2:
                out[len(l)] = out.get(len(l), 0) + 1
        return out

    def is_normal(self, w):
        for k in range(len(w)):
            for ln in range(2, len(w) - k + 1):
                if w[k:k + ln] in self.rules:
                    return False
        return True

    def normal_words(self, length):
        gens = generators(self.n)
        words = [()]
        for _ in range(length):
            # a word is normal iff every suffix check passes as it grows
            words = [w + (g,) for w in words for g in gens
                     if all((w + (g,))[k:] not in self.rules for k in range(len(w)))]
        return words


def normal_words(n, length, char2=False):
    return Rewriting(n, max(length, 2), char2).normal_words(length)


def _weight(word):
    return sum(_length(g) for g in word)


def ranks_by_normal_form(n, cap, char2=False):
    """{(length, weight): number of normal words} for length <= cap."""
    rw = Rewriting(n, max(cap, 2), char2)
    out = {}
    for ell in range(cap + 1):
        for w in rw.normal_words(ell):
            key = (ell, _weight(w))
            out[key] = out.get(key, 0) + 1
    return out


def _ideal_rows(X, ell, gens):
    """Relations u r v in word length ell, grouped by weight."""
    by_weight = {}
    for k in range(ell - 1):
        for u in itertools.product(gens, repeat=k):
            for v in itertools.product(gens, repeat=ell - 2 - k):
                for r in X.relations:
                    row = {u + ab + v: c for ab, c in r.items()}
                    wt = _weight(next(iter(row)))
                    by_weight.setdefault(wt, []).append(row)
    return by_weight


def ranks_by_linear_algebra(n, cap, p=None, orientation="shifted"):
    """Dimensions of the truncated quotient of the free algebra.

    Over F_p this is row reduction.  Over Q (p=None) the relations are
    binomials e - s e' and monomials, so the quotient in each degree is
    read off a signed union-find: a class of words survives iff it
    contains no killed word and its sign constraints are consistent.
    """
    gens = generators(n)
    if len(gens) ** cap > WORD_LIMIT:
        raise ValueError(f"cap {cap} too large for n = {n}")
    X = nilcactus_relations(n, orientation)
    out = {}
    for ell in range(cap + 1):
        words_by_weight = {}
        for w in itertools.product(gens, repeat=ell):
            words_by_weight.setdefault(_weight(w), []).append(w)
        rows_by_weight = _ideal_rows(X, ell, gens) if ell >= 2 else {}
        for wt, words in words_by_weight.items():
            rows = rows_by_weight.get(wt, [])
            if p is None:
                dim = _binomial_quotient_dim(words, rows)
            else:
                col = {w: c for c, w in enumerate(words)}
                if rows:
                    import numpy as np
                    m = np.zeros((len(rows), len(words)), dtype=np.int64)
                    for r, row in enumerate(rows):
                        for w, c in row.items():
                            m[r, col[w]] = (m[r, col[w]] + c) % p
                    dim = len(words) - fp.rank(m, p)
                else:
                    dim = len(words)
            if dim:
                out[(ell, wt)] = dim
    return out


def _binomial_quotient_dim(words, rows):
    parent = {w: (w, 1) for w in words}
    dead = set()
    broken = set()

    def find(w):
        s = 1
        path = []
        while parent[w][0] != w:
            path.append(w)
            w2, t = parent[w]
            s *= t
            w = w2
        return w, s

    for row in rows:
        items = list(row.items())
        if len(items) == 1:
            dead.add(items[0][0])
            continue
        (w1, c1), (w2, c2) = items
        # c1 w1 + c2 w2 = 0  ->  w1 = -c2/c1 w2
        rel = -c2 * c1
        r1, s1 = find(w1)
        r2, s2 = find(w2)
        if r1 == r2:
            if s1 != rel * s2:
                broken.add(r1)
        else:
            parent[r1] = (r2, s1 * rel * s2)
    roots = {}
    for w in words:
        r, _ = find(w)
        roots.setdefault(r, False)
    for w in dead:
        roots[find(w)[0]] = True
    for r in broken:
        roots[find(r)[0]] = True
    return sum(1 for bad in roots.values() if not bad)


def koszul_series_check(n, cap, ranks=None):
    """sum_k (-1)^k dim X_{k, w} dim Z_{ell - k, w'} = [ell = 0] up to length cap.

    Z is bigraded by (number of factors, sum of lengths); X by (word length,
    weight).  Returns the list of (ell, weight) where the identity fails.
    """
    X = ranks_by_normal_form(n, cap) if ranks is None else ranks
    Zr = {}
    for d in range(cap * (n - 1) + 1):
        for m in zring.enumerate_canonical(n, d):
            if len(m) <= cap:
                key = (len(m), d)
                Zr[key] = Zr.get(key, 0) + 1
    bad = []
    for ell in range(cap + 1):
        for wt in range(ell * (n - 1) + 1):
            tot = 0
            for (k, a), x in X.items():
                if k <= ell and a <= wt:
                    tot += (-1) ** k * x * Zr.get((ell - k, wt - a), 0)
            if tot != (1 if ell == 0 else 0):
                bad.append((ell, wt))
    return bad


def x_graded_ranks(n, cap, p=None):
    """Per word length: (normal-form count, linear-algebra count)."""
    nf = ranks_by_normal_form(n, cap, char2=(p == 2))
    la = ranks_by_linear_algebra(n, cap, p)
    out = {}
    for ell in range(cap + 1):
        a = sum(v for (k, _), v in nf.items() if k == ell)
        b = sum(v for (k, _), v in la.items() if k == ell)
        out[ell] = (a, b)
    return out
