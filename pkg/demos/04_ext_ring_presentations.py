"""Yoneda products for S_4 reproduce the relation list of the Ext ring."""

from nilcoxeter import extengine, presentations, resolution

pres = presentations.TABLE["A3"]
products = resolution.presentation_products(pres, 4)
rep = presentations.check_relations(pres, products, 5)
print("relations:", ", ".join(pres["relations"]))
print("hold:", rep["holds"], " complete:", rep["complete"], " signs:", rep["signs"])

# the generic engine agrees, and also handles the other types
for tag in ("A3", "B2", "B3", "H3"):
    r = extengine.check_presentation(tag, 3)
    print(f"{tag}: holds {r['holds']}, complete {r['complete']}")

# In characteristic 2 the B2 ring is commutative in low degree, the A2 ring is not.
from nilcoxeter.coxeter import CoxeterDiagram

for spec in ("A:2", "B:2"):
    A = extengine.nilcoxeter_algebra(CoxeterDiagram.parse(spec), 2)
    R = extengine.minimal_resolution(A, 4)
    print(spec, "noncommuting pairs over F_2:", extengine.commuting_report(R, 2))
