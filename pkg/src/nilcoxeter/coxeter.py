"""Finite Coxeter groups: diagrams, element arithmetic, length, w_0 and psi.

Elements are plain hashable values whose shape depends on the type:

* ``A`` -- permutation of 1..n in one-line notation, ``w[k-1] = w(k)``.
* ``B``/``D`` -- signed permutation in one-line notation.
* ``I2`` -- pair ``(r, f)`` standing for rho**r * f**f in the dihedral group.
* anything else (``H3``, explicit matrices) -- integer index into a Cayley
  table built from reduced words.

Generators are numbered from 1.  Products are composition of functions, so
``w * s_i`` acts by ``s_i`` first; in type A this swaps positions i, i+1 of the
one-line array.
"""

import json
import math
from collections import deque
from functools import cached_property

import numpy as np


class CoxeterError(ValueError):
    pass


class CoxeterDiagram:
    """Coxeter matrix plus a type tag.

    ``bond[i][j]`` is m_ij (0-based indices here; generator i+1 in the
    outside world).  ``math.inf`` is allowed on input but such diagrams are
    rejected as infinite.
    """

    def __init__(self, bond, label=None):
        bond = tuple(tuple(int(x) if x != math.inf else x for x in row) for row in bond)
        r = len(bond)
        if r == 0:
            raise CoxeterError("empty diagram")
        for i in range(r):
            if len(bond[i]) != r:
                raise CoxeterError("bond matrix must be square")
            if bond[i][i] != 1:
                raise CoxeterError("diagonal of the bond matrix must be 1")
            for j in range(r):
                if bond[i][j] != bond[j][i]:
                    raise CoxeterError("bond matrix must be symmetric")
                if i != j and bond[i][j] < 2:
                    raise CoxeterError("off-diagonal bonds must be >= 2")
        self.bond = bond
        self.rank = r
        self.label = label or "matrix"
        if not self.is_finite():
            raise CoxeterError(f"diagram {self.label} defines an infinite group")

    # -- constructors -------------------------------------------------

    @classmethod
    def type_A(cls, r):
        return cls(_chain([3] * (r - 1)), f"A{r}")

    @classmethod
    def type_B(cls, r):
        if r < 2:
            raise CoxeterError("B_n needs n >= 2")
        return cls(_chain([3] * (r - 2) + [4]), f"B{r}")

    @classmethod
    def type_D(cls, r):
        if r < 4:
            raise CoxeterError("D_n needs n >= 4")
        if r == 4:
            # central node 1, leaves 2, 3, 4
            bond = [[1, 3, 3, 3], [3, 1, 2, 2], [3, 2, 1, 2], [3, 2, 2, 1]]
            return cls(bond, "D4")
        bond = [[2] * r for _ in range(r)]
        for i in range(r):
            bond[i][i] = 1
        for i in range(r - 2):
            bond[i][i + 1] = bond[i + 1][i] = 3
        bond[r - 3][r - 1] = bond[r - 1][r - 3] = 3
        return cls(bond, f"D{r}")

    @classmethod
    def dihedral(cls, m):
        if m < 2:
            raise CoxeterError("I2(m) needs m >= 2")
        return cls([[1, m], [m, 1]], f"I2({m})")

    @classmethod
    def type_H(cls, r):
        if r != 3:
            raise CoxeterError("only H3 is supported")
        return cls(_chain([3, 5]), "H3")

    @classmethod
    def parse(cls, text):
        """Parse ``A:4``, ``B:3``, ``D:4``, ``I2:7``, ``H:3``, ``G:2`` or
        ``matrix:[[1,3],[3,1]]``.  The number is the rank (``I2:m`` takes the
        bond)."""
        kind, _, arg = text.partition(":")
        kind = kind.strip().upper()
        if not arg:
            raise CoxeterError(f"bad diagram specification {text!r}")
        if kind == "MATRIX":
            try:
                m = json.loads(arg)
            except json.JSONDecodeError as exc:
                raise CoxeterError(f"bad matrix {arg!r}") from exc
            return cls(m, "matrix")
        try:
            k = int(arg)
        except ValueError as exc:
            raise CoxeterError(f"bad diagram specification {text!r}") from exc
        builders = {"A": cls.type_A, "B": cls.type_B, "D": cls.type_D,
                    "I2": cls.dihedral, "H": cls.type_H}
        if kind == "G" and k == 2:
            return cls([[1, 6], [6, 1]], "G2")
        if kind not in builders:
            raise CoxeterError(f"unsupported type {kind!r}")
        if kind == "A" and k < 1:
            raise CoxeterError("A_n needs n >= 1")
        return builders[kind](k)

    # -- properties ---------------------------------------------------

    def is_finite(self):
        # Positive definiteness of the cosine Gram matrix (Coxeter's criterion).
        r = self.rank
        g = np.empty((r, r))
        for i in range(r):
            for j in range(r):
                m = self.bond[i][j]
                g[i, j] = 1.0 if i == j else (-1.0 if m == math.inf else -math.cos(math.pi / m))
        return bool(np.linalg.eigvalsh(g).min() > 1e-9)

    @property
    def kind(self):
        """Which element representation the group uses."""
        lab = self.label
        if lab.startswith("A") and self == CoxeterDiagram.type_A(self.rank):
            return "A"
        if lab.startswith("B") and self == CoxeterDiagram.type_B(self.rank):
            return "B"
        if lab.startswith("D") and self.rank >= 4 and self == CoxeterDiagram.type_D(self.rank):
            return "D"
        if self.rank == 2:
            return "I2"
        return "generic"

    def spec_string(self):
        lab = self.label
        if self.rank == 2 and self.kind != "A" and self.kind != "B":
            if self.bond[0][1] == 6:
                return "G:2"
            return f"I2:{self.bond[0][1]}"
        for k in ("A", "B", "D", "H"):
            if lab == f"{k}{self.rank}":
                return f"{k}:{self.rank}"
        return "matrix:" + json.dumps([list(r) for r in self.bond])

    def __eq__(self, other):
        return isinstance(other, CoxeterDiagram) and self.bond == other.bond

    def __hash__(self):
        return hash(self.bond)

    def __repr__(self):
        return f"CoxeterDiagram({self.label})"

    @cached_property
    def group(self):
        return make_group(self)


def _chain(bonds):
    r = len(bonds) + 1
    m = [[2] * r for _ in range(r)]
    for i in range(r):
        m[i][i] = 1
    for i, b in enumerate(bonds):
        m[i][i + 1] = m[i + 1][i] = b
    return m


def make_group(diagram, max_order=5000):
    kind = diagram.kind
    if kind == "A":
        return SymmetricGroup(diagram.rank + 1)
    if kind == "B":
        return HyperoctahedralGroup(diagram.rank)
    if kind == "D":
        return EvenSignedGroup(diagram.rank)
    if kind == "I2":
        return DihedralGroup(diagram)
    return CayleyGroup(diagram, max_order=max_order)


class CoxeterGroup:
    """Common interface.  Subclasses provide identity, _mul_gen, is_descent
    and length."""

    diagram = None

    @property
    def rank(self):
        return self.diagram.rank

    def _check(self, i):
        if not (isinstance(i, (int, np.integer)) and 1 <= i <= self.rank):
            raise CoxeterError(f"invalid generator index {i!r} for rank {self.rank}")

    def generator(self, i):
        self._check(i)
        return self._mul_gen(self.identity, i)

    def right_mul_gen(self, w, i):
        """Return (w*s_i, +1) if the length goes up, else (w*s_i, -1)."""
        self._check(i)
        sign = -1 if self.is_descent(w, i) else 1
        return self._mul_gen(w, i), sign

    def left_mul_gen(self, i, w):
        return self.inverse(self._mul_gen(self.inverse(w), i))

    def reduced_word(self, w):
        word = []
        while w != self.identity:
            for i in range(1, self.rank + 1):
                if self.is_descent(w, i):
                    w = self._mul_gen(w, i)
                    word.append(i)
                    break
            else:  # pragma: no cover - would mean a broken length function
                raise CoxeterError("element without a descent")
        return tuple(reversed(word))

    def from_word(self, word):
        w = self.identity
        for i in word:
            self._check(i)
            w = self._mul_gen(w, i)
        return w

    def multiply(self, u, v):
        for i in self.reduced_word(v):
            u = self._mul_gen(u, i)
        return u

    def inverse(self, w):
        return self.from_word(tuple(reversed(self.reduced_word(w))))

    def elements_by_length(self):
        """All elements, as a list of lists indexed by length (BFS)."""
        return self._levels

    @cached_property
    def _levels(self):
        levels = [[self.identity]]
        seen = {self.identity}
        while True:
            nxt = []
            for w in levels[-1]:
                for i in range(1, self.rank + 1):
                    if not self.is_descent(w, i):
                        v = self._mul_gen(w, i)
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            if not nxt:
                return levels
            levels.append(nxt)

    def elements(self):
        return [w for lev in self._levels for w in lev]

    def order(self):
        return sum(len(lev) for lev in self._levels)

    @cached_property
    def longest_element(self):
        w = self.identity
        while True:
            for i in range(1, self.rank + 1):
                if not self.is_descent(w, i):
                    w = self._mul_gen(w, i)
                    break
            else:
                return w

    def psi(self, w):
        w0 = self.longest_element
        return self.multiply(self.multiply(w0, w), w0)

    def diagram_automorphism(self):
        """psi on generators as a tuple: entry i-1 is the index of psi(s_i)."""
        gens = {self.generator(i): i for i in range(1, self.rank + 1)}
        return tuple(gens[self.psi(self.generator(i))] for i in range(1, self.rank + 1))

    def lengths_add(self, u, v):
        return self.length(self.multiply(u, v)) == self.length(u) + self.length(v)


class SymmetricGroup(CoxeterGroup):
    """S_n as the Coxeter group of type A_{n-1}."""

    def __init__(self, n):
        if n < 1:
            raise CoxeterError("n must be positive")
        self.n = n
        self.identity = tuple(range(1, n + 1))

    @cached_property
    def diagram(self):
        return CoxeterDiagram.type_A(self.n - 1) if self.n >= 2 else None

    @property
    def rank(self):
        return self.n - 1

    def _mul_gen(self, w, i):
        w = list(w)
        w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w)

    def is_descent(self, w, i):
        return w[i - 1] > w[i]

    def length(self, w):
        n = len(w)
        return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])

    def multiply(self, u, v):
        return tuple(u[k - 1] for k in v)

    def inverse(self, w):
        inv = [0] * len(w)
        for k, x in enumerate(w, 1):
            inv[x - 1] = k
        return tuple(inv)

    @cached_property
    def longest_element(self):
        return tuple(range(self.n, 0, -1))

    def psi(self, w):
        n = self.n
        return tuple(n + 1 - w[n - k] for k in range(1, n + 1))


class HyperoctahedralGroup(CoxeterGroup):
    """B_n as signed permutations.

    Internally the standard combinatorial labelling is used: t_0 negates the
    first entry and t_k (k >= 1) swaps entries k, k+1; generator i of the
    chain diagram 1 - 2 - ... - (n-1) = n is t_{n-i} (i < n) and t_0 (i = n).
    """

    def __init__(self, n):
        self.n = n
        self.diagram = CoxeterDiagram.type_B(n)
        self.identity = tuple(range(1, n + 1))

    def _internal(self, i):
        return 0 if i == self.n else self.n - i

    def _mul_gen(self, w, i):
        k = self._internal(i)
        w = list(w)
        if k == 0:
            w[0] = -w[0]
        else:
            w[k - 1], w[k] = w[k], w[k - 1]
        return tuple(w)

    def is_descent(self, w, i):
        k = self._internal(i)
        return w[0] < 0 if k == 0 else w[k - 1] > w[k]

    def length(self, w):
        n = len(w)
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        return inv - sum(x for x in w if x < 0)

    def multiply(self, u, v):
        return tuple(u[abs(k) - 1] * (1 if k > 0 else -1) for k in v)


class EvenSignedGroup(HyperoctahedralGroup):
    """D_n as signed permutations with an even number of sign changes.

    Internal generators: t_0 maps (a, b, ...) to (-b, -a, ...), t_k swaps
    entries k, k+1.  For D4 the central node 1 is t_2 and the leaves 2, 3, 4
    are t_1, t_3, t_0.  For n > 4 generator i < n is t_{n-i} and n is t_0.
    """

    def __init__(self, n):
        self.n = n
        self.diagram = CoxeterDiagram.type_D(n)
        self.identity = tuple(range(1, n + 1))

    def _internal(self, i):
        if self.n == 4:
            return (2, 1, 3, 0)[i - 1]
        return 0 if i == self.n else self.n - i

    def _mul_gen(self, w, i):
        k = self._internal(i)
        w = list(w)
        if k == 0:
            w[0], w[1] = -w[1], -w[0]
        else:
            w[k - 1], w[k] = w[k], w[k - 1]
        return tuple(w)

    def is_descent(self, w, i):
        k = self._internal(i)
        return w[0] + w[1] < 0 if k == 0 else w[k - 1] > w[k]

    def length(self, w):
        n = len(w)
        return sum(1 for a in range(n) for b in range(a + 1, n)
                   if w[a] > w[b]) + sum(1 for a in range(n) for b in range(a + 1, n)
                                          if w[a] + w[b] < 0)


class DihedralGroup(CoxeterGroup):
    """I2(m): elements (r, f) = rho**r f**f with s_1 = f and s_2 = rho f."""

    def __init__(self, diagram):
        self.diagram = diagram
        self.m = diagram.bond[0][1]
        self.identity = (0, 0)

    def _mul(self, a, b):
        r1, f1 = a
        r2, f2 = b
        return ((r1 + (-r2 if f1 else r2)) % self.m, f1 ^ f2)

    def _mul_gen(self, w, i):
        return self._mul(w, (0, 1) if i == 1 else (1, 1))

    def length(self, w):
        r, f = w
        m = self.m
        if not f:
            return 2 * min(r, m - r)
        if r == 0:
            return 1
        return min(2 * r - 1, 2 * (m - r) + 1)

    def is_descent(self, w, i):
        return self.length(self._mul_gen(w, i)) < self.length(w)

    def multiply(self, u, v):
        return self._mul(u, v)


class CayleyGroup(CoxeterGroup):
    """Generic finite Coxeter group via a Cayley table.

    Built breadth first.  Each element carries the full set of its reduced
    words; two candidate products are the same element exactly when their
    reduced words are related by braid moves (Matsumoto/Tits), so the word
    set of a new element is the braid-move closure of one reduced word.
    """

    def __init__(self, diagram, max_order=5000):
        self.diagram = diagram
        self.identity = 0
        self.max_order = max_order
        self._build()

    def _braid_closure(self, word):
        bond = self.diagram.bond
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            L = len(w)
            for p in range(L - 1):
                a, b = w[p], w[p + 1]
                if a == b:
                    continue
                m = bond[a - 1][b - 1]
                if p + m > L:
                    continue
                alt = tuple(a if q % 2 == 0 else b for q in range(m))
                if w[p:p + m] == alt:
                    swapped = tuple(b if q % 2 == 0 else a for q in range(m))
                    v = w[:p] + swapped + w[p + m:]
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
        return seen

    def _build(self):
        r = self.rank
        word_id = {(): 0}
        words = [{()}]
        self._len = [0]
        self._table = [[None] * r]
        level = [0]
        while level:
            nxt = []
            for e in level:
                for s in range(1, r + 1):
                    if self._table[e][s - 1] is not None:
                        continue
                    ending = next((w for w in words[e] if w and w[-1] == s), None)
                    if ending is not None:
                        f = word_id[ending[:-1]]
                    else:
                        cand = min(words[e]) + (s,)
                        f = word_id.get(cand)
                        if f is None:
                            f = len(words)
                            if f >= self.max_order:
                                raise CoxeterError("group too large for the Cayley-table path")
                            closure = self._braid_closure(cand)
                            words.append(closure)
                            for w in closure:
                                word_id[w] = f
                            self._len.append(len(cand))
                            self._table.append([None] * r)
                            nxt.append(f)
                    self._table[e][s - 1] = f
                    self._table[f][s - 1] = e
            level = nxt
        self._words = [min(ws) for ws in words]

    def _mul_gen(self, w, i):
        return self._table[w][i - 1]

    def is_descent(self, w, i):
        return self._len[self._table[w][i - 1]] < self._len[w]

    def length(self, w):
        return self._len[w]

    def reduced_word(self, w):
        return self._words[w]
