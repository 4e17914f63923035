"""The nilCoxeter algebra of S_4: relations, Loewy layers and the trace form."""

from nilcoxeter import nilcox
from nilcoxeter.nilcox import NilCoxeterAlgebra

A = NilCoxeterAlgebra.symmetric(4)
y1, y2, y3 = A.gen(1), A.gen(2), A.gen(3)

print("Y1 Y1 =", y1 * y1)
print("Y1 Y3 - Y3 Y1 =", y1 * y3 - y3 * y1)
print("braid relation holds:", y1 * y2 * y1 == y2 * y1 * y2)

# Layer k of the radical filtration is spanned by the Y_w with l(w) = k.
for n in range(2, 7):
    print(f"n = {n}:", " ".join(map(str, nilcox.loewy_dims(n))))

# The top coefficient is a trace, symmetric up to the twist psi: Tr(ab) = Tr(b psi(a)).
G = A.group
w0 = G.longest_element
u = G.from_word((1, 2))
v = G.multiply(G.inverse(u), w0)     # so that Y_u Y_v = Y_{w0}
a, b = A.Y(u), A.Y(v)
print("Tr(ab) =", nilcox.trace(a * b), " Tr(b psi(a)) =", nilcox.trace(b * nilcox.psi(a)),
      " Tr(ba) =", nilcox.trace(b * a))

# Canonical factorisation into interval elements Y_[i, m_i]
w = G.from_word((2, 1, 3, 2))
ms = nilcox.canonical_decompose(w)
print("canonical tuple of s2 s1 s3 s2:", ms, "word", nilcox.canonical_word(ms))
