"""Canonical and reversed canonical monomials in Z for n = 9.

The tuple (2,3,3,1,5,4,2,1) labels a canonical monomial; moving its factors
to the front one at a time gives the reversed form.
"""

from nilcoxeter import zring
from nilcoxeter.zring import ZRing

t = (2, 3, 3, 1, 5, 4, 2, 1)
m = zring.f_encode(t)
print("f(t) =", zring.format_factors(m))
for step in zring.reversal_steps(m):
    print("      ", zring.format_factors(step))

rev, sign = zring.reversed_form(m)
R = ZRing(9)
print("signed reversed form:", zring.format_monomial(rev, sign))
print("same element:", R.monomial(rev, sign) == R.monomial(m))

# ranks of Z agree with binomial(d + n - 2, n - 2)
for n in (3, 4, 5):
    print(n, [zring.rank(n, d) for d in range(7)])

# which generators kill f(t)?
for i, j in [(1, 3), (2, 5), (4, 9), (5, 6)]:
    nz = zring.nonzero_mul_criterion(t, i, j)
    print(f"z~_{{{i},{j}}} f(t) nonzero: {nz}")
