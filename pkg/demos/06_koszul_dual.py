"""The signed nilcactus algebra X as the quadratic dual of Z."""

from nilcoxeter import koszul

for n in range(2, 6):
    r = koszul.duality_report(n)
    print(f"n = {n}: {r['pairs']} pairs, dim R_Z = {r['dim_Z']}, "
          f"dim R_Z^perp = {r['dim_perp']}, dim R_X = {r['dim_X']}, equal {r['equal']}")

# the other orientation rule for X_{j,i} only survives for n <= 3
for n in (3, 4):
    print(n, {c: koszul.duality_report(n, None, c, "literal")["equal"] for c in koszul.CONVENTIONS})

# graded ranks of X: completion normal forms vs linear algebra
print(koszul.x_graded_ranks(4, 4))
print("obstructions found by completion:", koszul.Rewriting(4, 5).obstructions())
print("Hilbert series identity failures:", koszul.koszul_series_check(4, 5))
