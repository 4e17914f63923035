"""The ring Z with generators z_{i,j} (and its signless shadow).

A monomial is a tuple of factors (i, j) with i < j, stored in canonical
form: lengths j - i weakly increasing, each interval containing or disjoint
from every earlier one, equal-length neighbours ordered by i.  Intervals are
sets of integers, so [1,2] and [2,3] overlap and their product vanishes.
"""

import json
import re
from math import comb


class ZError(ValueError):
    pass


def _len(f):
    return abs(f[1] - f[0])


def _span(f):
    return (min(f), max(f))


def relation(a, b):
    """'contains' if b's interval lies in a's, 'inside', 'disjoint' or 'overlap'."""
    a0, a1 = _span(a)
    b0, b1 = _span(b)
    if a1 < b0 or b1 < a0:
        return "disjoint"
    if a0 <= b0 and b1 <= a1:
        return "contains"
    if b0 <= a0 and a1 <= b1:
        return "inside"
    return "overlap"


def reflect(outer, f):
    """Reflect the factor f in the interval of `outer`, keeping orientation."""
    s = outer[0] + outer[1]
    return (s - f[0], s - f[1])


def orient(f):
    """(i, j) -> ((min, max), sign) via z_{j,i} = (-1)^{j-i} z_{i,j}."""
    i, j = f
    if i < j:
        return (i, j), 1
    return (j, i), (-1) ** (i - j)


def normalize(word, n=None, signed=True):
    """Canonical form of a product of generators.

    Returns (factors, sign), or None when the product vanishes.  With
    signed=False the sign is always +1 (the ring Z~).
    """
    facs = []
    sign = 1
    for f in word:
        i, j = int(f[0]), int(f[1])
        if i == j:
            raise ZError(f"z_{{{i},{j}}} is not a generator")
        if n is not None and not (1 <= i <= n and 1 <= j <= n):
            raise ZError(f"index out of range in ({i},{j}) for n={n}")
        g, s = orient((i, j))
        facs.append(g)
        sign *= s

    changed = True
    while changed:
        changed = False
        for p in range(len(facs) - 1):
            a, b = facs[p], facs[p + 1]
            la, lb = _len(a), _len(b)
            if (la, a[0]) <= (lb, b[0]):
                continue
            rel = relation(a, b)
            if rel == "overlap":
                return None
            if rel == "disjoint":
                facs[p], facs[p + 1] = b, a
                sign *= (-1) ** (la * lb)
            elif rel == "contains":
                # a b = (-1)^{|a||b|} refl(b) a
                g, s = orient(reflect(a, b))
                facs[p], facs[p + 1] = g, a
                sign *= (-1) ** (la * lb) * s
            else:
                # equal length and b inside a means b == a; ordered already
                raise AssertionError("unreachable")
            changed = True
            break
    for q in range(len(facs)):
        for p in range(q):
            if relation(facs[p], facs[q]) == "overlap":
                return None
    return tuple(facs), (sign if signed else 1)


def is_canonical(factors):
    for q, b in enumerate(factors):
        if not b[0] < b[1]:
            return False
        for a in factors[:q]:
            if relation(a, b) == "overlap":
                return False
        if q:
            a = factors[q - 1]
            if _len(a) > _len(b):
                return False
            if _len(a) == _len(b) and not (a[0] == b[0] or a[1] < b[0]):
                return False
    return True


def reversed_form(factors, signed=True, trace=None):
    """Reverse a canonical monomial by the containment and disjoint relations.

    The last factor is moved to the front, reflecting every factor it
    crosses that it contains; then the next one is moved to second place, and
    so on.  Returns (factors, sign) with factors possibly written as (j, i).
    """
    facs = list(factors)
    sign = 1
    for pos in range(len(facs)):
        m = facs[-1]
        rest = facs[pos:-1]
        moved = []
        for c in rest:
            rel = relation(m, c)
            if _span(c) == _span(m):
                # the same generator up to sign: they commute
                moved.append(c)
                continue
            if rel == "contains":
                moved.append(reflect(m, c))
            elif rel == "disjoint":
                moved.append(c)
            else:
                raise ZError("not a canonical monomial")
            sign *= (-1) ** (_len(m) * _len(c))
        facs = facs[:pos] + [m] + moved
        if trace is not None:
            trace.append(tuple(facs))
    return tuple(facs), (sign if signed else 1)


def reversal_steps(factors):
    """Intermediate monomials of reversed_form, one per moved factor."""
    steps = []
    reversed_form(factors, False, trace=steps)
    return steps


# -- text and JSON -----------------------------------------------------------


def format_factors(factors):
    out = []
    k = 0
    while k < len(factors):
        f = factors[k]
        r = 1
        while k + r < len(factors) and factors[k + r] == f:
            r += 1
        out.append(f"[{f[0]},{f[1]}]" + (f"^{r}" if r > 1 else ""))
        k += r
    return "".join(out) or "1"


def format_monomial(factors, coeff=1):
    body = format_factors(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


_TOKEN = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^(\d+))?")


def parse_factors(text):
    """Parse '[5,6][2,4]^2' (optionally '-' or 'c*' prefixed) -> (factors, coeff)."""
    s = text.strip()
    coeff = 1
    m = re.match(r"^([+-]?\d*)\s*\*?\s*(?=\[|1$)", s)
    if m and m.group(1):
        c = m.group(1)
        coeff = -1 if c == "-" else 1 if c == "+" else int(c)
        s = s[m.end():]
    if s == "1":
        return (), coeff
    factors = []
    pos = 0
    while pos < len(s):
        t = _TOKEN.match(s, pos)
        if not t:
            raise ZError(f"cannot parse monomial {text!r}")
        f = (int(t.group(1)), int(t.group(2)))
        factors.extend([f] * int(t.group(3) or 1))
        pos = t.end()
    if not factors:
        raise ZError(f"cannot parse monomial {text!r}")
    return tuple(factors), coeff


# -- elements ------------------------------------------------------------------


class ZRing:
    """Z (signed=True) or Z~ (signed=False) on n points."""

    def __init__(self, n, signed=True):
        if n < 2:
            raise ZError("n must be at least 2")
        self.n = n
        self.signed = signed

    def __eq__(self, other):
        return isinstance(other, ZRing) and (self.n, self.signed) == (other.n, other.signed)

    def __hash__(self):
        return hash((self.n, self.signed))

    def __repr__(self):
        return f"ZRing({self.n}, signed={self.signed})"

    def zero(self):
        return ZElement(self, {})

    def one(self):
        return ZElement(self, {(): 1})

    def z(self, i, j):
        return self.monomial([(i, j)])

    def monomial(self, word, coeff=1):
        r = normalize(word, self.n, self.signed)
        if r is None:
            return self.zero()
        facs, s = r
        return ZElement(self, {facs: s * coeff})

    def parse(self, text):
        """Parse a sum of monomials such as '[1,3][2,3] - 2*[1,2]^2'."""
        out = self.zero()
        s = text.replace(" ", "")
        parts = re.findall(r"[+-]?[^+-]+", s) if s else []
        for part in parts:
            facs, c = parse_factors(part)
            out = out + self.monomial(facs, c)
        return out

    def from_json(self, data):
        if isinstance(data, str):
            data = json.loads(data)
        out = self.zero()
        for t in data["terms"]:
            out = out + self.monomial([tuple(f) for f in t["factors"]], t["coeff"])
        return out

    def basis(self, d):
        """Canonical monomials of degree -d."""
        return enumerate_canonical(self.n, d)


class ZElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other):
        if not isinstance(other, ZElement) or other.ring != self.ring:
            raise ZError("elements of different rings")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return ZElement(self.ring, t)

    def __neg__(self):
        return ZElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ZElement(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = normalize(m1 + m2, signed=self.ring.signed)
                if r is not None:
                    facs, s = r
                    t[facs] = t.get(facs, 0) + s * c1 * c2
        return ZElement(self.ring, t)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return other == 0 and not self.terms
        return isinstance(other, ZElement) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (degree(mc[0]), mc[0]))

    def bidegrees(self):
        return {bidegree(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.bidegrees()) <= 1

    def to_json(self):
        return {"n": self.ring.n, "signed": self.ring.signed,
                "terms": [{"factors": [list(f) for f in m], "coeff": c}
                          for m, c in self.sorted_terms()]}

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            s = format_monomial(m, c)
            if not out:
                out = s
            elif s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out


def degree(factors):
    """Negated homological degree: sum of j - i."""
    return sum(_len(f) for f in factors)


def internal_degree(factors):
    """Negated internal degree: sum of L(L+1)/2."""
    return sum(_len(f) * (_len(f) + 1) // 2 for f in factors)


def bidegree(factors):
    return (-degree(factors), -internal_degree(factors))


# -- the bijection with tuples -----------------------------------------------------


def _runs(support):
    runs = []
    for k in sorted(support):
        if runs and k == runs[-1][1] + 1:
            runs[-1][1] = k
        else:
            runs.append([k, k])
    return runs


def f_encode(t):
    """Canonical signless monomial attached to the tuple t (n = len(t) + 1)."""
    t = tuple(int(x) for x in t)
    if any(x < 0 for x in t):
        raise ZError("tuple entries must be nonnegative")
    if not any(t):
        return ()
    prev = f_encode(tuple(max(0, x - 1) for x in t))
    new = [(a, b + 1) for a, b in _runs(k + 1 for k, x in enumerate(t) if x > 0)]
    r = normalize(prev + tuple(new), signed=False)
    if r is None:
        raise AssertionError(f"f_encode produced zero for {t}")
    return r[0]


def f_decode(factors, n):
    t = [0] * (n - 1)
    for i, j in factors:
        a, b = _span((i, j))
        for k in range(a, b):
            t[k - 1] += 1
    return tuple(t)


def enumerate_canonical(n, d):
    """All canonical monomials of degree -d, found by direct search."""
    gens = sorted(((i, j) for i in range(1, n) for j in range(i + 1, n + 1)),
                  key=lambda f: (_len(f), f[0]))
    out = []

    def extend(prefix, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for g in gens:
            L = _len(g)
            if L > left:
                break
            if prefix:
                a = prefix[-1]
                if L < _len(a):
                    continue
                if L == _len(a) and not (a[0] == g[0] or a[1] < g[0]):
                    continue
                if any(relation(p, g) == "overlap" for p in prefix):
                    continue
            prefix.append(g)
            extend(prefix, left - L)
            prefix.pop()

    extend([], d)
    return out


def tuples(n, d):
    """All (n-1)-tuples of nonnegative integers summing to d."""
    if n == 1:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix) + (left,))
            return
        for x in range(left, -1, -1):
            rec(prefix + [x], left - x, slots - 1)

    rec([], d, n - 1)
    return out


def rank(n, d):
    if n < 2 or d < 0:
        raise ZError("need n >= 2 and d >= 0")
    return len(enumerate_canonical(n, d))


def rank_formula(n, d):
    return comb(d + n - 2, n - 2)


# -- involutions and maps -------------------------------------------------------


def star(a):
    """Anti-automorphism fixing each z_{i,j}."""
    R = a.ring
    out = R.zero()
    for m, c in a.terms.items():
        out = out + R.monomial(tuple(reversed(m)), c)
    return out


def dagger(a):
    """Automorphism z_{i,j} -> (-1)^{(n-1)(i-j)} z_{n+1-i,n+1-j}."""
    R = a.ring
    n = R.n
    out = R.zero()
    for m, c in a.terms.items():
        s = 1
        word = []
        for i, j in m:
            if R.signed:
                s *= (-1) ** ((n - 1) * (i - j))
            word.append((n + 1 - i, n + 1 - j))
        out = out + R.monomial(word, s * c)
    return out


def quotient_interval(a, n1, n2):
    """Kill every generator with an index outside [n1, n2]."""
    R = a.ring
    if not (1 <= n1 <= n2 <= R.n):
        raise ZError("need 1 <= n1 <= n2 <= n")
    return ZElement(R, {m: c for m, c in a.terms.items()
                        if all(n1 <= x <= n2 for f in m for x in f)})


def _tuple_reader(t, i, j):
    n = len(t) + 1
    if not (1 <= i < j <= n):
        raise ZError("need 1 <= i < j <= n")
    return lambda k: t[k - 1] if 1 <= k <= n - 1 else 0


def nonzero_mul_criterion(t, i, j):
    """Whether z~_{i,j} f(t) is nonzero, read off from the tuple.

    Every factor of f(t) comes from a run of some level set {k : t_k >= l};
    the product survives iff no such run straddles an end of [i, j].  That
    happens iff max(t_{i-1}, t_j) <= t_k for all i <= k < j, where
    t_0 = t_n = 0.
    """
    T = _tuple_reader(t, i, j)
    return max(T(i - 1), T(j)) <= min(T(k) for k in range(i, j))


def chain_criterion(t, i, j):
    """The chain t_{i-1} <= t_i <= t_k >= t_{j-1} >= t_j for all i <= k < j.

    Sufficient for z~_{i,j} f(t) != 0 but not necessary once n >= 3:
    t = (1, 0), (i, j) = (1, 3) fails the chain, yet z~_{1,3} z~_{1,2} =
    z~_{2,3} z~_{1,3}.
    """
    T = _tuple_reader(t, i, j)
    return all(T(i - 1) <= T(i) <= T(k) >= T(j - 1) >= T(j) for k in range(i, j))
