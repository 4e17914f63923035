"""Matrix representations of Z of size 2^(n-2), built by doubling."""

import numpy as np

from nilcoxeter import pirep

rep = pirep.rep_symmetric(4, [2, 3, 5])
for g in rep.generators():
    print(g, rep[g].tolist())

print(pirep.verify_homomorphism(rep))
print("conjugation by z_{1,4} failures:", pirep.check_dagger_identity(rep))

for n in (3, 4, 5):
    r = pirep.rep_symmetric(n)
    dims = [pirep.image_dimension(r, p) for p in (2, 3, 5)]
    print(f"n = {n}: image dimension {dims} of {r.size ** 2}")

# flipping one sign breaks the relations
bad = pirep.verify_homomorphism(pirep.corrupt(rep, (2, 3)))
print("corrupted z_{2,3}:", len(bad["failures"]), "failing products")

# the 4 x 4 quotient representation
q = pirep.rep_vxy_quotient(1, 1, 1)
print("Z/(v,x,y) relations hold:", pirep.verify_homomorphism(q)["ok"],
      " image dimension over F_3:", pirep.image_dimension(q, 3))
print("z u == w z:", np.array_equal(q[(1, 4)] @ q[(1, 2)], q[(3, 4)] @ q[(1, 4)]))
