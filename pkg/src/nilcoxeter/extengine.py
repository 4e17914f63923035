"""Minimal graded resolutions of the trivial module over F_p.

Works for any finite-dimensional graded local algebra generated in degree
one, given by a basis, degrees and structure constants.  Everything is done
one internal degree at a time: a free module P_s = sum_g A e_g splits into
slices (b, g) with deg b + deg g = q, and so do the boundary maps.
"""

import numpy as np

from . import fp
from . import presentations
from .coxeter import CoxeterDiagram, CoxeterError


class FiniteDimAlgebra:
    """Basis 0..N-1 with degrees, unit 0, and products as sparse dicts."""

    def __init__(self, degrees, mult, p, labels=None, supports=None):
        if not fp.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.labels = labels or [str(b) for b in range(self.dim)]
        # mult[a][b] = {c: coeff}
        self.mult = [[{c: v % p for c, v in mult[a][b].items() if v % p}
                      for b in range(self.dim)] for a in range(self.dim)]
        if self.degrees[0] != 0 or any(d <= 0 for d in self.degrees[1:]):
            raise ValueError("basis element 0 must be the unit, all others in positive degree")
        self.top = max(self.degrees)
        self.by_degree = {}
        for b, d in enumerate(self.degrees):
            self.by_degree.setdefault(d, []).append(b)
        self.gens = self.by_degree.get(1, [])
        # optional: for monomial algebras, the set of degree-one generators
        # (1-based) that a basis element involves
        self.supports = supports

    def check_unit(self):
        return all(self.mult[0][b] == {b: 1} and self.mult[b][0] == {b: 1}
                   for b in range(self.dim))

    def product(self, a, b):
        """Multiply two coefficient dicts."""
        out = {}
        for x, cx in a.items():
            for y, cy in b.items():
                for z, cz in self.mult[x][y].items():
                    out[z] = (out.get(z, 0) + cx * cy * cz) % self.p
        return {z: c for z, c in out.items() if c}

    def check_associative(self, triples):
        for a, b, c in triples:
            if self.product(self.product({a: 1}, {b: 1}), {c: 1}) != \
                    self.product({a: 1}, self.product({b: 1}, {c: 1})):
                return False
        return True

    def generated_in_degree_one(self):
        """Whether A_1 . A_{d-1} spans A_d for every d >= 2."""
        for d, basis in self.by_degree.items():
            if d <= 1:
                continue
            pos = {c: k for k, c in enumerate(basis)}
            rows = []
            for a in self.gens:
                for b in self.by_degree.get(d - 1, []):
                    v = [0] * len(basis)
                    for c, x in self.mult[a][b].items():
                        v[pos[c]] = x
                    rows.append(v)
            if not rows or fp.rank(rows, self.p) != len(basis):
                return False
        return True


def nilcoxeter_algebra(diagram, p, max_order=2000):
    """The nilCoxeter algebra of a finite Coxeter group, over F_p."""
    if isinstance(diagram, str):
        diagram = CoxeterDiagram.parse(diagram)
    G = diagram.group
    elems = G.elements()
    if len(elems) > max_order:
        raise CoxeterError(f"group of order {len(elems)} exceeds the cap {max_order}")
    elems = sorted(elems, key=lambda w: (G.length(w), G.reduced_word(w)))
    index = {w: k for k, w in enumerate(elems)}
    lengths = [G.length(w) for w in elems]
    mult = []
    for a, u in enumerate(elems):
        row = []
        for b, v in enumerate(elems):
            uv = G.multiply(u, v)
            row.append({index[uv]: 1} if lengths[index[uv]] == lengths[a] + lengths[b] else {})
        mult.append(row)
    words = [G.reduced_word(w) for w in elems]
    labels = ["Y" + "".join(map(str, wd)) if wd else "1" for wd in words]
    supports = [frozenset(wd) for wd in words]
    return FiniteDimAlgebra(lengths, mult, p, labels, supports)


def exterior_algebra(r, p):
    """Lambda(x_1..x_r); its Ext algebra is polynomial, a handy test case."""
    import itertools

    subsets = sorted((s for k in range(r + 1) for s in itertools.combinations(range(r), k)),
                     key=lambda s: (len(s), s))
    index = {s: k for k, s in enumerate(subsets)}
    mult = []
    for a in subsets:
        row = []
        for b in subsets:
            if set(a) & set(b):
                row.append({})
                continue
            merged = list(a) + list(b)
            inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged))
                      if merged[i] > merged[j])
            row.append({index[tuple(sorted(merged))]: (-1) ** inv})
        mult.append(row)
    return FiniteDimAlgebra([len(s) for s in subsets], mult, p)


class MinimalResolution:
    """Graded minimal free resolution of the trivial module.

    gens[s] lists the internal degrees of the generators of P_s; bound[s][g]
    is d(e_g) as a dict {(b, h): c} over P_{s-1} (empty for s = 0).
    """

    def __init__(self, A, steps):
        self.A = A
        self.p = A.p
        self.gens = [[0]]
        self.bound = [[{}]]
        self.support = [[frozenset()]]
        self._slices = {}
        self._mats = {}
        for s in range(steps):
            self._extend()

    # slices and matrices

    def slice_basis(self, s, q):
        key = (s, q)
        if key not in self._slices:
            basis = []
            for g, dg in enumerate(self.gens[s]):
                for b in self.A.by_degree.get(q - dg, []):
                    basis.append((b, g))
            self._slices[key] = (basis, {x: k for k, x in enumerate(basis)})
        return self._slices[key]

    def left_mul(self, a, vec):
        """a . v for a basis element a and v = {(b, g): c}."""
        out = {}
        p = self.p
        for (b, g), c in vec.items():
            for z, cz in self.A.mult[a][b].items():
                key = (z, g)
                out[key] = (out.get(key, 0) + c * cz) % p
        return {k: c for k, c in out.items() if c}

    def boundary_matrix(self, s, q):
        """Rows: slice (s, q) basis; columns: slice (s-1, q) basis."""
        key = (s, q)
        if key not in self._mats:
            rows, _ = self.slice_basis(s, q)
            cols, cidx = self.slice_basis(s - 1, q)
            m = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for r, (b, g) in enumerate(rows):
                for k, c in self.left_mul(b, self.bound[s][g]).items():
                    m[r, cidx[k]] = c
            self._mats[key] = m
        return self._mats[key]

    def kernel(self, s, q):
        """Basis of ker(d_s) in slice (s, q), as rows."""
        rows, _ = self.slice_basis(s, q)
        if s == 0:
            # kernel of the augmentation: the whole slice when q > 0
            return np.eye(len(rows), dtype=np.int64) if q > 0 else np.zeros((0, len(rows)), dtype=np.int64)
        m = self.boundary_matrix(s, q)
        if m.shape[1] == 0:
            return np.eye(len(rows), dtype=np.int64)
        return fp.left_nullspace(m, self.p)

    def _subsets(self):
        """Node sets in increasing size, or [None] without support data."""
        import itertools

        A = self.A
        if A.supports is None:
            return [None]
        nodes = range(1, len(A.gens) + 1)
        return [frozenset(c) for k in range(len(A.gens) + 1)
                for c in itertools.combinations(nodes, k)]

    def _row_support(self, s, key):
        b, g = key
        return self.A.supports[b] | self.support[s][g]

    def _extend(self):
        s = len(self.gens) - 1
        A = self.A
        lo = min(self.gens[s])
        hi = max(self.gens[s]) + A.top
        new = []
        prev_kernel = None
        subsets = self._subsets()
        for q in range(lo, hi + 1):
            rows, idx = self.slice_basis(s, q)
            K = self.kernel(s, q)
            space = fp.RowSpace(len(rows), self.p)
            if prev_kernel is not None and len(prev_kernel):
                prev_rows, _ = self.slice_basis(s, q - 1)
                for v in prev_kernel:
                    vec = {prev_rows[k]: int(c) for k, c in enumerate(v) if c}
                    for a in A.gens:
                        w = self.left_mul(a, vec)
                        row = np.zeros(len(rows), dtype=np.int64)
                        for key, c in w.items():
                            row[idx[key]] = c
                        space.add(row)
            if len(K):
                # prefer kernel vectors living on a parabolic subalgebra, so
                # that generators carry a well-defined node set
                for S in subsets:
                    if S is None:
                        cand = K
                    else:
                        keep = [r for r, key in enumerate(rows) if self._row_support(s, key) <= S]
                        if not keep:
                            continue
                        cand = self._restricted_kernel(s, q, keep)
                    for v in (fp.rref(cand, self.p)[0] if len(cand) else []):
                        if space.add(v):
                            new.append((q, {rows[k]: int(c) for k, c in enumerate(v) if c}, S))
            prev_kernel = K
        new.sort(key=lambda x: x[0])
        self.gens.append([x[0] for x in new])
        self.bound.append([x[1] for x in new])
        self.support.append([x[2] if x[2] is not None else frozenset() for x in new])

    def _restricted_kernel(self, s, q, keep):
        rows, _ = self.slice_basis(s, q)
        full = np.zeros((0, len(rows)), dtype=np.int64)
        if s == 0:
            if q == 0:
                return full
            out = np.zeros((len(keep), len(rows)), dtype=np.int64)
            for r, k in enumerate(keep):
                out[r, k] = 1
            return out
        m = self.boundary_matrix(s, q)[keep]
        ker = np.eye(len(keep), dtype=np.int64) if m.shape[1] == 0 else fp.left_nullspace(m, self.p)
        out = np.zeros((len(ker), len(rows)), dtype=np.int64)
        out[:, keep] = ker
        return out

    # invariants

    def ranks(self):
        return [len(g) for g in self.gens]

    def bigraded_ranks(self):
        out = {}
        for s, gs in enumerate(self.gens):
            for q in gs:
                out[(s, q)] = out.get((s, q), 0) + 1
        return out

    def is_minimal(self):
        """Every boundary coefficient lies in the radical."""
        return all(b != 0 for s in range(1, len(self.gens))
                   for v in self.bound[s] for (b, _) in v)

    def composites_vanish(self):
        for s in range(2, len(self.gens)):
            for g, v in enumerate(self.bound[s]):
                tot = {}
                for (b, h), c in v.items():
                    for k, x in self.left_mul(b, self.bound[s - 1][h]).items():
                        tot[k] = (tot.get(k, 0) + c * x) % self.p
                if any(tot.values()):
                    return False
        return True

    # Yoneda products

    def apply_lift(self, prev, vec):
        """Extend a lift (generator -> chain) A-linearly to vec."""
        out = {}
        for (b, g), c in vec.items():
            if g in prev:
                for k, x in self.left_mul(b, prev[g]).items():
                    out[k] = (out.get(k, 0) + c * x) % self.p
        return {k: x for k, x in out.items() if x}

    def lift(self, beta, t, steps):
        """Chain map lifting the class beta (dict generator -> coeff) of degree t."""
        A = self.A
        maps = [{g: {(0, 0): c % self.p} for g, c in beta.items() if c % self.p}]
        for i in range(1, steps + 1):
            prev = maps[-1]
            cur = {}
            for g in range(len(self.gens[t + i])):
                target = self.apply_lift(prev, self.bound[t + i][g])
                if not target:
                    continue
                # beta shifts internal degree; read the slice off the target
                b0, h0 = next(iter(target))
                q = A.degrees[b0] + self.gens[i - 1][h0]
                rows, _ = self.slice_basis(i, q)
                cols, cidx = self.slice_basis(i - 1, q)
                b = np.zeros(len(cols), dtype=np.int64)
                for k, c in target.items():
                    b[cidx[k]] = c
                y = fp.solve_left(self.boundary_matrix(i, q), b, self.p)
                if y is None:
                    raise ArithmeticError("lifting failed: the resolution is not exact")
                cur[g] = {rows[k]: int(c) for k, c in enumerate(y) if c}
            maps.append(cur)
        return maps

    def product(self, alpha, s, beta, t):
        """alpha . beta: lift beta by s steps, then evaluate alpha."""
        top = self.lift(beta, t, s)[s]
        out = {}
        for g, chain in top.items():
            val = 0
            for (b, h), c in chain.items():
                if b == 0:
                    val += c * alpha.get(h, 0)
            if val % self.p:
                out[g] = val % self.p
        return out


def minimal_resolution(A, steps):
    return MinimalResolution(A, steps)


def ext_ranks(A, steps):
    return MinimalResolution(A, steps).ranks()


def rank_formula(r, d):
    from math import comb

    return comb(d + r - 1, r - 1)


def yoneda_products_low_degree(res, cap):
    """Products of all dual-basis classes in degrees 1..cap.

    Keys ((s, g), (t, h)); values are dicts over generators of P_{s+t}.
    The resolution must reach degree 2 * cap.
    """
    out = {}
    for s in range(1, cap + 1):
        for t in range(1, cap + 1):
            if s + t >= len(res.gens):
                raise ValueError("resolution too short")
            for h in range(len(res.gens[t])):
                maps = res.lift({h: 1}, t, s)[s]
                for g in range(len(res.gens[s])):
                    val = {}
                    for u, chain in maps.items():
                        c = sum(x for (b, k), x in chain.items() if b == 0 and k == g) % res.p
                        if c:
                            val[u] = c
                    out[((s, g), (t, h))] = val
    return out


def commuting_report(res, cap):
    """Pairs of basis classes (degrees <= cap) whose products differ in the two orders."""
    table = yoneda_products_low_degree(res, cap)
    bad = []
    for (a, b), v in table.items():
        if a < b and v != table[(b, a)]:
            bad.append((a, b))
    return bad


# -- presentations ----------------------------------------------------------


def presentation_table(tag):
    if tag in presentations.TABLE:
        return presentations.TABLE[tag]
    if tag in ("I2-odd", "I2-even"):
        return presentations.dihedral(5 if tag == "I2-odd" else 4)
    if tag.startswith("I2:"):
        return presentations.dihedral(int(tag[3:]))
    raise KeyError(f"unknown presentation {tag!r}")


def parabolic_top_degree(diagram, nodes):
    """Length of the longest element of the parabolic subgroup on `nodes` (1-based)."""
    idx = [k - 1 for k in nodes]
    sub = CoxeterDiagram([[diagram.bond[a][b] for b in idx] for a in idx], "matrix")
    G = sub.group
    return G.length(G.longest_element)


def letter_nodes(pres, letter):
    g = pres["generators"][letter]
    if pres.get("kind") == "subsets":
        return frozenset(g)
    return frozenset(range(g[0], g[1]))


def match_generators(res, diagram, pres):
    """Map presentation letters to Ext dual-basis classes.

    A letter on the node set S (z_{i,j} sits on nodes i..j-1) goes to the
    unique generator of P_{|S|} found on the parabolic subalgebra of S, which
    must also sit in internal degree l(w_0) of that parabolic.  Returns
    {letter: (s, g)}; raises if the match is not unique.
    """
    out = {}
    for letter in pres["generators"]:
        S = letter_nodes(pres, letter)
        s = len(S)
        q = parabolic_top_degree(diagram, sorted(S))
        gs = [g for g in range(len(res.gens[s]))
              if res.support[s][g] == S and res.gens[s][g] == q]
        if len(gs) != 1:
            raise ValueError(f"cannot match generator {letter}: candidates {gs}")
        out[letter] = (s, gs[0])
    return out


def check_presentation(tag, p=3):
    """Compare engine products with a presentation from the table, over F_p.

    Generators are dual-basis classes, fixed up to a scalar; at p = 3 every
    scalar is +-1, so the sign search in check_relations is exhaustive.
    """
    pres = presentation_table(tag)
    diagram = CoxeterDiagram.parse(pres["diagram"])
    A = nilcoxeter_algebra(diagram, p)
    top = max(len(letter_nodes(pres, a)) for a in pres["generators"])
    res = MinimalResolution(A, 2 * top)
    letters = match_generators(res, diagram, pres)
    products = {}
    for a, (s, g) in letters.items():
        for b, (t, h) in letters.items():
            products[(a, b)] = res.product({g: 1}, s, {h: 1}, t)
    return presentations.check_relations(pres, products, p)
