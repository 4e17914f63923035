"""The nilCoxeter algebra over the integers.

Basis Y_w (w in W), with Y_u Y_v = Y_{uv} when lengths add and 0 otherwise.
Type A helpers build the interval elements Y_[i,j], their powers
Y_[i,j];k, and the canonical factorisation Y_[1,m1] ... Y_[n-1,m(n-1)].
"""

import json

from .coxeter import CoxeterDiagram, CoxeterError, SymmetricGroup


class NilCoxeterAlgebra:
    def __init__(self, diagram):
        if isinstance(diagram, str):
            diagram = CoxeterDiagram.parse(diagram)
        self.diagram = diagram
        self.group = diagram.group

    @classmethod
    def symmetric(cls, n):
        """The algebra N_{S_n} (type A_{n-1})."""
        if n < 2:
            raise CoxeterError("n must be at least 2")
        return cls(CoxeterDiagram.type_A(n - 1))

    def __eq__(self, other):
        return isinstance(other, NilCoxeterAlgebra) and self.diagram == other.diagram

    def __hash__(self):
        return hash(self.diagram)

    def basis_product(self, u, v):
        """uv if lengths add, else None."""
        g = self.group
        uv = g.multiply(u, v)
        if g.length(uv) == g.length(u) + g.length(v):
            return uv
        return None

    def one(self):
        return NilCoxElement(self, {self.group.identity: 1})

    def zero(self):
        return NilCoxElement(self, {})

    def Y(self, w):
        return NilCoxElement(self, {w: 1})

    def gen(self, i):
        return self.Y(self.group.generator(i))

    def word(self, word):
        """Product of generators Y_{i1} Y_{i2} ... (zero unless reduced)."""
        g = self.group
        w = g.identity
        for i in word:
            w, sign = g.right_mul_gen(w, i)
            if sign < 0:
                return self.zero()
        return self.Y(w)

    # -- JSON ----------------------------------------------------------

    def from_json(self, data):
        if isinstance(data, str):
            data = json.loads(data)
        if CoxeterDiagram.parse(data["diagram"]) != self.diagram:
            raise CoxeterError("diagram mismatch")
        out = self.zero()
        for t in data["terms"]:
            out = out + self.word(t["word"]) * t["coeff"]
        return out


class NilCoxElement:
    """Sparse integer combination of basis elements Y_w."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def _same(self, other):
        if not isinstance(other, NilCoxElement) or other.algebra != self.algebra:
            raise CoxeterError("elements of different nilCoxeter algebras")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return NilCoxElement(self.algebra, t)

    def __neg__(self):
        return NilCoxElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NilCoxElement(self.algebra, {w: c * other for w, c in self.terms.items()})
        self._same(other)
        A = self.algebra
        t = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                uv = A.basis_product(u, v)
                if uv is not None:
                    t[uv] = t.get(uv, 0) + a * b
        return NilCoxElement(A, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return other == 0 and not self.terms
        return isinstance(other, NilCoxElement) and self.algebra == other.algebra \
            and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree_components(self):
        """Map length -> homogeneous component."""
        g = self.algebra.group
        out = {}
        for w, c in self.terms.items():
            out.setdefault(g.length(w), {})[w] = c
        return {d: NilCoxElement(self.algebra, t) for d, t in out.items()}

    def is_homogeneous(self):
        return len(self.degree_components()) <= 1

    def sorted_terms(self):
        g = self.algebra.group
        return sorted(self.terms.items(), key=lambda wc: (g.length(wc[0]), g.reduced_word(wc[0])))

    def to_json(self):
        g = self.algebra.group
        return {"diagram": self.algebra.diagram.spec_string(),
                "terms": [{"word": list(g.reduced_word(w)), "coeff": c}
                          for w, c in self.sorted_terms()]}

    def __repr__(self):
        if not self.terms:
            return "0"
        g = self.algebra.group
        parts = []
        for w, c in self.sorted_terms():
            word = g.reduced_word(w)
            mon = "".join(f"Y{i}" for i in word) or "1"
            parts.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(parts)


def trace(a):
    """Coefficient of Y_{w_0}."""
    return a.terms.get(a.algebra.group.longest_element, 0)


def psi(a):
    """Nakayama automorphism Y_w -> Y_{w0 w w0}."""
    g = a.algebra.group
    return NilCoxElement(a.algebra, {g.psi(w): c for w, c in a.terms.items()})


# -- type A ------------------------------------------------------------


def cycle_power(n, i, j, k):
    """The permutation (j j-1 ... i)^k of {1..n}, one-line."""
    w = list(range(1, n + 1))
    L = j - i + 1
    for x in range(i, j + 1):
        # the cycle sends x to x-1 and i to j
        w[x - 1] = i + (x - i - k) % L
    return tuple(w)


def interval_word(i, j):
    """Generator word of Y_[i,j] = Y_{j-1} Y_{j-2} ... Y_i."""
    return tuple(range(j - 1, i - 1, -1))


def interval_power_word(i, j, k):
    word = ()
    for s in range(k):
        word += interval_word(i + s, j + 1 - k + s)
    return word


def _check_interval(n, i, j, k=0):
    if not (1 <= i <= j <= n):
        raise CoxeterError(f"interval [{i},{j}] out of range for n={n}")
    if not (0 <= k <= j - i):
        raise CoxeterError(f"power {k} out of range for [{i},{j}]")


def interval_element(A, i, j):
    n = A.group.n
    _check_interval(n, i, j)
    return A.word(interval_word(i, j))


def interval_power(A, i, j, k):
    n = A.group.n
    _check_interval(n, i, j, k)
    return A.word(interval_power_word(i, j, k))


def canonical_decompose(w):
    """Tuple (m_1, ..., m_{n-1}) with Y_w = Y_[1,m_1] ... Y_[n-1,m_{n-1}]."""
    n = len(w)
    S = SymmetricGroup(n)
    ms = []
    rest = tuple(w)
    for i in range(1, n):
        m = rest[i - 1]
        ms.append(m)
        # strip the factor: rest <- c^{-1} rest with c = (m m-1 ... i)
        c = cycle_power(n, i, m, 1)
        rest = S.multiply(S.inverse(c), rest)
    return tuple(ms)


def canonical_word(ms):
    word = ()
    for i, m in enumerate(ms, 1):
        word += interval_word(i, m)
    return word


def loewy_dims(n):
    """Coefficients of prod_{i=1}^{n-1} (1 + x + ... + x^i)."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [1]
    for i in range(1, n):
        new = [0] * (len(poly) + i)
        for a, c in enumerate(poly):
            for b in range(i + 1):
                new[a + b] += c
        poly = new
    return poly


def rewrite(word):
    """Apply the rewriting rules until none applies.

    Rules: Y_i Y_i -> 0; Y_j Y_i -> Y_i Y_j (j - i >= 2);
    Y_i Y_[i,j] -> Y_[i,j] Y_{i+1} (j - i >= 2).
    Returns the final word, or None for zero.
    """
    word = list(word)
    while True:
        for p in range(len(word) - 1):
            a, b = word[p], word[p + 1]
            if a == b:
                return None
            if a - b >= 2:
                word[p], word[p + 1] = b, a
                break
            if b > a:
                # look for a descending run b, b-1, ..., a after position p
                q = p + 1
                while q + 1 < len(word) and word[q + 1] == word[q] - 1 and word[q] > a:
                    q += 1
                if word[q] == a:
                    word[p:q + 1] = word[p + 1:q + 1] + [a + 1]
                    break
        else:
            return tuple(word)


# -- products of interval elements --------------------------------------------
#
# Right-hand sides are lists of factors (i, j, k) meaning Y_[i,j];k, read
# left to right; None means zero.


def interval_product_rule(i, j, ip, jp):
    """Y_[i',j'] Y_[i,j] for j > i and j' > i' >= i."""
    if j == ip:
        return [(i, jp, 1)]
    if j < ip:
        return [(i, j, 1), (ip, jp, 1)]
    if j > jp:
        return [(i, j, 1), (ip + 1, jp + 1, 1)]
    return None


def interval_power_product_rule(i, j, k, ip, jp):
    """Y_[i',j'] Y_[i,j];k for 1 <= k <= j - i and j' > i' >= i.

    In the first case the middle factor starts at i + i' + k - j - 1 and the
    last at i + i' + k - j; offsets measured from 1 instead of from i give
    wrong answers as soon as i > 1.
    """
    if j >= ip >= j + 1 - k:
        return [(i, ip - 1, ip + k - j - 1), (i + ip + k - j - 1, jp, 1),
                (i + ip + k - j, j, j - ip)]
    if j < ip:
        return [(i, j, k), (ip, jp, 1)]
    if j + 1 - k > jp:
        return [(i, j, k), (ip + k, jp + k, 1)]
    return None


def evaluate_factors(A, factors):
    if factors is None:
        return A.zero()
    out = A.one()
    for i, j, k in factors:
        out = out * (A.one() if k == 0 or i == j else A.word(interval_power_word(i, j, k)))
    return out
