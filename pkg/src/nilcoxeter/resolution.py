"""The multiple complex resolving Z over the nilCoxeter algebra of S_n.

One free rank-one cell per (n-1)-tuple t of nonnegative integers; the cell
stands for the dual monomial of f(t).  The maps d~_k lower t_k by one and are
right multiplications by elements Y_[i,j];k.  A chain is an integer
combination of pairs (w, t) meaning Y_w (x) cell t.
"""

from functools import lru_cache

from .coxeter import SymmetricGroup
from .nilcox import interval_power_word
from . import zring


class ChainElement:
    __slots__ = ("res", "terms")

    def __init__(self, res, terms=None):
        self.res = res
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return ChainElement(self.res, t)

    def __neg__(self):
        return ChainElement(self.res, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ChainElement(self.res, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            return other == 0 and not self.terms
        return isinstance(other, ChainElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        S = self.res.group
        parts = []
        for (w, t), c in sorted(self.terms.items(), key=lambda x: (sum(x[0][1]), x[0][1], x[0][0])):
            y = "".join(f"Y{i}" for i in S.reduced_word(w)) or "1"
            cell = zring.format_factors(zring.f_encode(t))
            parts.append(f"{c}*{y}.{cell}" if c != 1 else f"{y}.{cell}")
        return " + ".join(parts)


class Resolution:
    def __init__(self, n):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n = n
        self.group = SymmetricGroup(n)
        self.identity = self.group.identity
        self.zero_cell = (0,) * (n - 1)
        self._len = lru_cache(maxsize=None)(self.group.length)
        self._prod = {}

    # -- small helpers ---------------------------------------------------------

    def length(self, w):
        return self._len(w)

    def product(self, u, v):
        """uv when lengths add, else None."""
        key = (u, v)
        if key not in self._prod:
            uv = self.group.multiply(u, v)
            ok = self._len(uv) == self._len(u) + self._len(v)
            self._prod[key] = uv if ok else None
        return self._prod[key]

    def element(self, word):
        w = self.identity
        for i in word:
            w, s = self.group.right_mul_gen(w, i)
            if s < 0:
                raise ValueError(f"word {word} is not reduced")
        return w

    def chain(self, terms=None):
        return ChainElement(self, terms)

    def cell(self, t, w=None, coeff=1):
        t = tuple(t)
        if len(t) != self.n - 1:
            raise ValueError("cell tuple has the wrong length")
        return ChainElement(self, {(w or self.identity, t): coeff})

    def cells(self, d):
        return zring.tuples(self.n, d)

    def cell_internal_degree(self, t):
        return zring.internal_degree(zring.f_encode(t))

    # -- differentials ---------------------------------------------------------

    def generator_coefficient(self, i, j, k):
        """Y_[i,j];1+k-i as a group element, or None when k is outside [i, j)."""
        if not (i <= k < j):
            return None
        return self.element(interval_power_word(i, j, 1 + k - i))

    def tilde_d_on_generator(self, i, j, k, Y=None):
        """d~_k(Y z^_{i,j}) as a chain."""
        if not (1 <= i < j <= self.n and 1 <= k <= self.n - 1):
            raise ValueError("bad indices")
        c = self.generator_coefficient(i, j, k)
        if c is None:
            return self.chain()
        t = [0] * (self.n - 1)
        for m in list(range(i, k)) + list(range(k + 1, j)):
            t[m - 1] += 1
        Y = Y or self.identity
        w = self.product(Y, c)
        if w is None:
            return self.chain()
        return self.cell(t, w)

    @lru_cache(maxsize=None)
    def tilde_data(self, t, k):
        """(coefficient element, target cell) of d~_k on the cell t, or None."""
        t = tuple(t)
        if t[k - 1] == 0:
            return None
        facs = zring.f_encode(t)
        p = next(q for q, (i, j) in enumerate(facs) if i <= k < j)
        # walk the reversal, following factor p and the index k
        items = [[f, q == p] for q, f in enumerate(facs)]
        kk = k
        for pos in range(len(items)):
            m = items[-1]
            a, b = zring._span(m[0])
            moved = []
            for it in items[pos:-1]:
                f, tracked = it
                if zring._span(f) == (a, b):
                    # z_{a,b} past itself: the factor is unchanged but the
                    # index is still reflected
                    if tracked:
                        kk = a + b - kk - 1
                    moved.append(it)
                    continue
                if zring.relation(m[0], f) == "contains":
                    f = zring.reflect(m[0], f)
                    if tracked:
                        kk = a + b - kk - 1
                moved.append([f, tracked])
            items = items[:pos] + [m] + moved
        f = next(f for f, tracked in items if tracked)
        i, j = zring._span(f)
        c = self.generator_coefficient(i, j, kk)
        target = list(t)
        target[k - 1] -= 1
        return c, tuple(target)

    def d_sign(self, t, k):
        return -1 if sum(t[:k - 1]) % 2 else 1

    def _apply(self, k, e, signed):
        out = {}
        for (w, t), c in e.terms.items():
            data = self.tilde_data(t, k)
            if data is None:
                continue
            coef, target = data
            wc = self.product(w, coef)
            if wc is None:
                continue
            s = self.d_sign(t, k) if signed else 1
            key = (wc, target)
            out[key] = out.get(key, 0) + s * c
        return ChainElement(self, out)

    def tilde_d(self, k, e):
        return self._apply(k, e, False)

    def d(self, k, e):
        return self._apply(k, e, True)

    def total_d(self, e):
        out = self.chain()
        for k in range(1, self.n):
            out = out + self.d(k, e)
        return out

    def left_multiply(self, w, e):
        """Y_w . e (the differentials are left-module maps)."""
        out = {}
        for (u, t), c in e.terms.items():
            wu = self.product(w, u)
            if wu is not None:
                out[(wu, t)] = out.get((wu, t), 0) + c
        return ChainElement(self, out)

    # -- contracting homotopy ----------------------------------------------------

    def preimage(self, w, t, k):
        """The monomial (w', t + e_k) with d~_k(Y_w' cell) = Y_w cell t, if any."""
        src = list(t)
        src[k - 1] += 1
        src = tuple(src)
        coef, _ = self.tilde_data(src, k)
        wp = self.group.multiply(w, self.group.inverse(coef))
        if self.length(wp) + self.length(coef) != self.length(w):
            return None
        return wp, src

    def homotopy_monomial(self, w, t):
        """h(Y_w cell t) as a chain (zero on the augmentation generator)."""
        if w == self.identity and not any(t):
            return self.chain()
        for m in range(1, self.n):
            pre = self.preimage(w, t, m)
            if pre is not None:
                wp, src = pre
                # d_m(Y_w' src) = sign * Y_w t, so h(Y_w t) = sign * Y_w' src
                return self.cell(src, wp, self.d_sign(src, m))
            data = self.tilde_data(t, m)
            if data is not None and self.product(w, data[0]) is not None:
                return self.chain()
        raise AssertionError(f"S(Yz) empty for {(w, t)}")

    def homotopy(self, e):
        out = self.chain()
        for (w, t), c in e.terms.items():
            out = out + self.homotopy_monomial(w, t).scale(c)
        return out

    def monomials(self, d):
        for t in self.cells(d):
            for w in self.group.elements():
                yield w, t


# -- verification helpers ----------------------------------------------------------


def check_squares(res, max_degree):
    """Failures of d_k d_k = 0 and d_k d_k' + d_k' d_k = 0 on cells."""
    bad = []
    n = res.n
    for deg in range(max_degree + 1):
        for t in res.cells(deg):
            e = res.cell(t)
            for k in range(1, n):
                dk = res.d(k, e)
                if res.d(k, dk):
                    bad.append(("square", t, k))
                for k2 in range(k + 1, n):
                    if res.d(k, res.d(k2, e)) + res.d(k2, dk):
                        bad.append(("anticommute", t, k, k2))
                    if res.tilde_d(k, res.tilde_d(k2, e)) != res.tilde_d(k2, res.tilde_d(k, e)):
                        bad.append(("commute~", t, k, k2))
    return bad


def check_internal_degree(res, max_degree):
    bad = []
    for deg in range(1, max_degree + 1):
        for t in res.cells(deg):
            base = res.cell_internal_degree(t)
            for k in range(1, res.n):
                data = res.tilde_data(t, k)
                if data is None:
                    continue
                coef, target = data
                if res.length(coef) + res.cell_internal_degree(target) != base:
                    bad.append((t, k))
    return bad


def check_minimality(res, max_degree):
    """Cells whose differential has a unit (identity) coefficient."""
    bad = []
    for deg in range(1, max_degree + 1):
        for t in res.cells(deg):
            for k in range(1, res.n):
                data = res.tilde_data(t, k)
                if data is not None and data[0] == res.identity:
                    bad.append((t, k))
    return bad


def check_homotopy(res, monomials):
    """Monomials where dh + hd differs from the identity."""
    bad = []
    for w, t in monomials:
        if w == res.identity and not any(t):
            continue
        e = res.cell(t, w)
        got = res.total_d(res.homotopy(e)) + res.homotopy(res.total_d(e))
        if got != e:
            bad.append((w, t))
    return bad


def check_cubes(res, monomials):
    """Cube conditions on the signless differentials.

    (1) some d~_i is nonzero or some d~_i hits the monomial;
    (2) d~_i, d~_j nonzero implies d~_i d~_j nonzero;
    (3) two preimages under d~_i, d~_j have a common source.
    """
    bad = []
    n = res.n
    for w, t in monomials:
        if w == res.identity and not any(t):
            continue
        e = res.cell(t, w)
        out = [k for k in range(1, n) if res.tilde_d(k, e)]
        into = {}
        for k in range(1, n):
            pre = res.preimage(w, t, k)
            if pre is not None:
                into[k] = pre
        if not out and not into:
            bad.append(("empty", w, t))
        for a in out:
            for b in out:
                if a < b and not res.tilde_d(a, res.tilde_d(b, e)):
                    bad.append(("joint", w, t, a, b))
        for a in into:
            for b in into:
                if a < b:
                    wa, ta = into[a]
                    q = res.preimage(wa, ta, b)
                    if q is None:
                        bad.append(("square", w, t, a, b))
                        continue
                    wb, tb = into[b]
                    lhs = res.tilde_d(a, res.cell(q[1], q[0]))
                    if lhs != res.cell(tb, wb):
                        bad.append(("square", w, t, a, b))
    return bad


# -- Yoneda products ------------------------------------------------------------------


class YonedaLifter:
    """Products of Ext classes by lifting cocycles through the complex.

    A class of degree s is a functional on the cells of total degree s (the
    resolution is minimal, so every functional is a cocycle and none is a
    coboundary).  beta is lifted to a chain map with beta_0(cell u) =
    beta(u) * 1 and beta_i(cell u) = h(beta_{i-1}(d cell u)); then
    (alpha . beta)(u) = alpha applied to the identity part of beta_s(cell u).
    """

    def __init__(self, res):
        self.res = res

    def lift(self, beta, s_beta, steps):
        res = self.res
        maps = [{}]
        for u in res.cells(s_beta):
            if beta.get(u, 0):
                maps[0][u] = res.cell(res.zero_cell, coeff=beta[u])
        for i in range(1, steps + 1):
            prev = maps[-1]
            cur = {}
            for u in res.cells(s_beta + i):
                du = res.total_d(res.cell(u))
                img = res.chain()
                for (w, v), c in du.terms.items():
                    if v in prev:
                        img = img + res.left_multiply(w, prev[v]).scale(c)
                h = res.homotopy(img)
                if h:
                    cur[u] = h
            maps.append(cur)
        return maps

    def product(self, alpha, s_alpha, beta, s_beta):
        res = self.res
        maps = self.lift(beta, s_beta, s_alpha)
        top = maps[s_alpha]
        out = {}
        for u, chain in top.items():
            val = 0
            for (w, v), c in chain.terms.items():
                if w == res.identity:
                    val += c * alpha.get(v, 0)
            if val:
                out[u] = val
        return out


def generator_cell(n, i, j):
    t = [0] * (n - 1)
    for k in range(i, j):
        t[k - 1] = 1
    return tuple(t)


def generator_classes(n):
    """The degree-(j-i) classes dual to the cells of z^_{i,j}."""
    return {(i, j): ({generator_cell(n, i, j): 1}, j - i)
            for i in range(1, n) for j in range(i + 1, n + 1)}


def yoneda_structure_constants(n):
    """Products of every ordered pair of generator classes.

    Returns {(a, b): functional on cells of degree |a| + |b|}.
    """
    res = Resolution(n)
    Y = YonedaLifter(res)
    gens = generator_classes(n)
    out = {}
    for a, (fa, sa) in gens.items():
        for b, (fb, sb) in gens.items():
            out[(a, b)] = Y.product(fa, sa, fb, sb)
    return out


def presentation_products(pres, n):
    """Yoneda products of the named generators of a type A presentation."""
    res = Resolution(n)
    Y = YonedaLifter(res)
    cls = {a: ({generator_cell(n, i, j): 1}, j - i) for a, (i, j) in pres["generators"].items()}
    out = {}
    for a, (fa, sa) in cls.items():
        for b, (fb, sb) in cls.items():
            out[(a, b)] = Y.product(fa, sa, fb, sb)
    return out
