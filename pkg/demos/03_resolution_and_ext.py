"""The explicit multiple complex for S_4 and the generic Ext engine side by side."""

from nilcoxeter import extengine, resolution
from nilcoxeter.coxeter import CoxeterDiagram

res = resolution.Resolution(4)
print("cells per degree:", [len(list(res.cells(d))) for d in range(6)])
print("d^2 and anticommutation failures:", len(resolution.check_squares(res, 5)))
mons = [m for d in range(5) for m in res.monomials(d)]
print("dh + hd = 1 failures on", len(mons), "monomials:", len(resolution.check_homotopy(res, mons)))
print("minimality failures:", len(resolution.check_minimality(res, 5)))

# Same ranks from plain linear algebra over F_2, with no knowledge of the complex
for spec in ("A:3", "B:3", "H:3"):
    A = extengine.nilcoxeter_algebra(CoxeterDiagram.parse(spec), 2)
    R = extengine.minimal_resolution(A, 4)
    print(spec, "Ext ranks over F_2:", R.ranks())

A = extengine.nilcoxeter_algebra(CoxeterDiagram.parse("A:3"), 3)
R = extengine.minimal_resolution(A, 3)
print("bigraded (s, internal degree):")
for (s, q), v in sorted(R.bigraded_ranks().items()):
    if v:
        print(f"  Ext^{s},{q} = {v}")
