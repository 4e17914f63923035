"""The acceptance checks, shared by the test suite and `verify-all`.

Each check returns a Result; `quick` caps type A computations at n = 4.
"""

import contextlib
import io
import itertools
import random
import time
from dataclasses import dataclass, field
from math import comb

from . import extengine, koszul, nilcox, pirep, presentations, resolution, zring
from .coxeter import CoxeterDiagram, SymmetricGroup


@dataclass
class Result:
    number: int
    name: str
    ok: bool
    budget: float
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def within_budget(self):
        return self.seconds <= self.budget

    def line(self):
        verdict = "PASS" if self.ok and self.within_budget else "FAIL"
        return f"[{verdict}] {self.number:2d} {self.name}"

    def timing_line(self):
        return f"{self.number:2d} {self.name}: {self.seconds:.2f}s (budget {self.budget:.0f}s)"

    def to_json(self):
        # timings are left out so that the report is reproducible byte for byte
        return {"criterion": self.number, "name": self.name, "ok": self.ok,
                "budget": self.budget, "details": _jsonable(self.details)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# Mahonian triangle, rows 1..8; the last two rows are checked only up
# to their 16th entry.
MAHONIAN_ROWS = [
    [1],
    [1, 1],
    [1, 2, 2, 1],
    [1, 3, 5, 6, 5, 3, 1],
    [1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1],
    [1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1],
    [1, 6, 20, 49, 98, 169, 259, 359, 455, 531, 573, 573, 531, 455, 359, 259],
    [1, 7, 27, 76, 174, 343, 602, 961, 1415, 1940, 2493, 3017, 3450, 3736, 3836, 3736],
]

WORKED_TUPLE = (2, 3, 3, 1, 5, 4, 2, 1)
WORKED_CANONICAL = "[5,6][2,4][5,7]^2[1,4][5,8][1,9]"
WORKED_STEPS = [
    "[1,9][5,4][8,6][5,3]^2[9,6][5,2]",
    "[1,9][5,2][2,3][8,6][2,4]^2[9,6]",
    "[1,9][5,2][9,6][2,3][7,9][2,4]^2",
    "[1,9][5,2][9,6][2,4][4,3][7,9][2,4]",
    "[1,9][5,2][9,6][2,4]^2[2,3][7,9]",
    "[1,9][5,2][9,6][2,4]^2[7,9][2,3]",
]


def _timed(number, name, budget, fn):
    t = time.perf_counter()
    ok, details = fn()
    return Result(number, name, bool(ok), budget, time.perf_counter() - t, details)


def _nmax(quick, cap, default):
    n = default if cap is None else min(cap, default)
    return min(n, 4) if quick else n


# -- 1 ----------------------------------------------------------------------------


def check_loewy(quick=False, nmax=None):
    from . import cli

    def run():
        rows = {}
        ok = True
        for k in range(2, 9):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = cli.main(["loewy", "--n", str(k)])
            got = [int(x) for x in buf.getvalue().split()]
            want = MAHONIAN_ROWS[k - 1]
            good = code == 0 and got[:len(want)] == want and len(got) == comb(k, 2) + 1
            # layers by counting permutations by length
            if k <= 6:
                S = SymmetricGroup(k)
                good &= got == [len(x) for x in S.elements_by_length()]
            rows[k] = good
            ok &= good
        return ok, {"rows": rows}

    return _timed(1, "Mahonian/Loewy rows", 1, run)


# -- 2 ----------------------------------------------------------------------------


def check_worked_example(quick=False, nmax=None):
    def run():
        m = zring.f_encode(WORKED_TUPLE)
        canon = zring.format_factors(m)
        steps = [zring.format_factors(s) for s in zring.reversal_steps(m)]
        # the final move is of the last factor onto itself
        got = steps[:len(WORKED_STEPS)]
        ok = canon == WORKED_CANONICAL and got == WORKED_STEPS and steps[-1] == WORKED_STEPS[-1]
        back = zring.f_decode(m, 9) == WORKED_TUPLE
        return ok and back, {"canonical": canon, "steps": steps}

    return _timed(2, "Canonical form worked example", 1, run)


# -- 3 ----------------------------------------------------------------------------


def check_poincare(quick=False, nmax=None):
    def run():
        bad = []
        for n in range(2, 7):
            for d in range(9):
                mons = zring.enumerate_canonical(n, d)
                if len(mons) != zring.rank_formula(n, d):
                    bad.append(("rank", n, d))
                ts = {zring.f_decode(m, n) for m in mons}
                if ts != set(zring.tuples(n, d)):
                    bad.append(("bijection", n, d))
        top = _nmax(quick, nmax, 5)
        ext = {}
        for n in range(2, top + 1):
            res_t = resolution.Resolution(n)
            cells = {}
            for d in range(7):
                for t in res_t.cells(d):
                    key = (d, res_t.cell_internal_degree(t))
                    cells[key] = cells.get(key, 0) + 1
            for p in (2, 3):
                A = extengine.nilcoxeter_algebra(CoxeterDiagram.type_A(n - 1), p)
                R = extengine.minimal_resolution(A, 6)
                ranks = R.ranks()
                want = [zring.rank_formula(n, d) for d in range(7)]
                big = {k: v for k, v in R.bigraded_ranks().items() if v}
                good = ranks == want and big == cells and R.is_minimal()
                ext[f"n={n},p={p}"] = good
                if not good:
                    bad.append(("ext", n, p))
        return not bad, {"failures": bad, "ext": ext}

    return _timed(3, "Poincare series and Ext ranks", 120, run)


# -- 4 ----------------------------------------------------------------------------


def check_complex(quick=False, nmax=None):
    def run():
        out = {}
        for n in range(2, _nmax(quick, nmax, 5) + 1):
            res = resolution.Resolution(n)
            out[n] = len(resolution.check_squares(res, 6)) + len(resolution.check_internal_degree(res, 6))
        return all(v == 0 for v in out.values()), {"failures_by_n": out}

    return _timed(4, "Complex validity (d^2 = 0, anticommutation)", 120, run)


# -- 5 ----------------------------------------------------------------------------


def check_exactness(quick=False, nmax=None, seed=0):
    def run():
        out = {}
        top = _nmax(quick, nmax, 5)
        for n in range(2, top + 1):
            res = resolution.Resolution(n)
            mins = len(resolution.check_minimality(res, 6))
            if n <= 4:
                mons = [m for d in range(7) for m in res.monomials(d)]
            else:
                rng = random.Random(seed)
                pool = [(d, t) for d in range(7) for t in res.cells(d)]
                elems = res.group.elements()
                mons = []
                for _ in range(1000):
                    d, t = rng.choice(pool)
                    mons.append((rng.choice(elems), t))
            hom = len(resolution.check_homotopy(res, mons))
            out[n] = {"checked": len(mons), "homotopy_failures": hom, "minimality_failures": mins}
        ok = all(v["homotopy_failures"] == 0 and v["minimality_failures"] == 0 for v in out.values())
        return ok, out

    return _timed(5, "Exactness (dh + hd = 1) and minimality", 120, run)


# -- 6 ----------------------------------------------------------------------------


def check_ring_structure(quick=False, nmax=None):
    def run():
        out = {}
        for tag, n in (("A2", 3), ("A3", 4)):
            pres = presentations.TABLE[tag]
            products = resolution.presentation_products(pres, n)
            for p in (3, 5):
                rep = presentations.check_relations(pres, products, p)
                # second route: the generic engine's Yoneda products
                eng = extengine.check_presentation(tag, p)
                out[f"{tag},p={p}"] = {"holds": rep["holds"], "complete": rep["complete"],
                                       "signs": rep["signs"],
                                       "engine": eng["holds"] and eng["complete"]}
        ok = all(v["holds"] and v["complete"] and v["engine"] for v in out.values())
        return ok, out

    return _timed(6, "Yoneda ring structure (n = 3, 4)", 180, run)


# -- 7 ----------------------------------------------------------------------------

OTHER_TYPES = [("B:2", 2, 6), ("G:2", 2, 6), ("I2:5", 2, 6), ("I2:7", 2, 6),
               ("B:3", 3, 4), ("H:3", 3, 4), ("D:4", 4, 4)]


def check_other_types(quick=False, nmax=None):
    def run():
        out = {}
        for spec, r, d in OTHER_TYPES:
            for p in (2, 3):
                A = extengine.nilcoxeter_algebra(CoxeterDiagram.parse(spec), p)
                R = extengine.minimal_resolution(A, d)
                want = [extengine.rank_formula(r, k) for k in range(d + 1)]
                out[f"{spec},p={p}"] = R.ranks() == want and R.is_minimal()
        comm = {}
        for spec in ("B:2", "A:2"):
            for p in (2, 3, 5):
                A = extengine.nilcoxeter_algebra(CoxeterDiagram.parse(spec), p)
                R = extengine.minimal_resolution(A, 4)
                comm[f"{spec},p={p}"] = len(extengine.commuting_report(R, 2))
        split = comm["B:2,p=2"] == 0 and all(comm[f"A:2,p={p}"] > 0 for p in (2, 3, 5))
        return all(out.values()) and split, {"ranks": out, "noncommuting_pairs": comm}

    return _timed(7, "Other Coxeter types", 300, run)


# -- 8 ----------------------------------------------------------------------------

PRIMES = [2, 3, 5, 7, 11]


def check_pi_degree(quick=False, nmax=None):
    def run():
        out = {}
        ok = True
        for n in (3, 4, 5):
            rep = pirep.rep_symmetric(n, PRIMES[:n - 1])
            hom = pirep.verify_homomorphism(rep)["ok"] and not pirep.check_dagger_identity(rep)
            dims = {p: pirep.image_dimension(pirep.rep_symmetric(n), p) for p in (2, 3, 5)}
            good = hom and all(v == 4 ** (n - 2) for v in dims.values())
            if n >= 4:
                good &= pirep.distinct_kernels(rep)
            out[n] = {"relations": hom, "image_dimension": dims}
            ok &= good
        det = {}
        for n in range(3, 6):
            for d in range(6):
                count, rk = pirep.detection_rank(n, d)
                det[f"{n},{d}"] = count == rk
        ok &= all(det.values())
        return ok, {"reps": out, "detection": det}

    return _timed(8, "PI degree certificates", 60, run)


# -- 9 ----------------------------------------------------------------------------


def check_koszul(quick=False, nmax=None):
    def run():
        dual = {}
        for n in range(2, 6):
            for p in (None, 2, 3, 5):
                dual[f"{n},{p or 'Q'}"] = koszul.duality_report(n, p)["equal"]
        ranks = {}
        for n in range(2, 5):
            for p in (None, 2, 3, 5):
                nf = koszul.ranks_by_normal_form(n, 4, char2=(p == 2))
                la = koszul.ranks_by_linear_algebra(n, 4, p)
                ranks[f"{n},{p or 'Q'}"] = nf == la
        series = {n: not koszul.koszul_series_check(n, 4) for n in range(2, 5)}
        ok = all(dual.values()) and all(ranks.values()) and all(series.values())
        return ok, {"duality": dual, "ranks": ranks, "series": series}

    return _timed(9, "Koszul duality with the signed nilcactus algebra", 120, run)


# -- 10 ---------------------------------------------------------------------------

SMALL_TYPES = ["A:1", "A:2", "A:3", "A:4", "B:2", "B:3", "D:4", "H:3", "G:2", "I2:5", "I2:7"]


def trace_symmetry_failures(spec):
    A = nilcox.NilCoxeterAlgebra(spec)
    G = A.group
    els = G.elements()
    w0 = G.longest_element
    bad = 0
    for u in els:
        pu = G.psi(u)
        for v in els:
            tab = A.basis_product(u, v) == w0
            tbpa = A.basis_product(v, pu) == w0
            tpba = A.basis_product(G.psi(v), u) == w0
            if not (tab == tbpa == tpba):
                bad += 1
    return bad


def interval_rule_failures(n):
    A = nilcox.NilCoxeterAlgebra.symmetric(n)
    ev = nilcox.evaluate_factors
    bad = {"products": 0, "power_products": 0, "identities": 0}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for ip in range(i, n + 1):
                for jp in range(ip + 1, n + 1):
                    lhs = ev(A, [(ip, jp, 1), (i, j, 1)])
                    if lhs != ev(A, nilcox.interval_product_rule(i, j, ip, jp)):
                        bad["products"] += 1
                    for k in range(1, j - i + 1):
                        lhs = ev(A, [(ip, jp, 1), (i, j, k)])
                        if lhs != ev(A, nilcox.interval_power_product_rule(i, j, k, ip, jp)):
                            bad["power_products"] += 1
                    for k in range(0, j - jp + 1):
                        for kp in range(0, jp - ip + 1):
                            if ev(A, [(ip, jp, kp), (i, j, k)]) != ev(A, [(i, j, k), (ip + k, jp + k, kp)]):
                                bad["identities"] += 1
            for k in range(2, j - i + 1):
                for kp in range(1, k):
                    if ev(A, [(i, j, k), (i, i + k - 1, kp)]) != ev(A, [(i, j, kp), (i + kp, j, k - kp)]):
                        bad["identities"] += 1
    return bad


def witness_failures(n, dmax=5):
    R = zring.ZRing(n)
    bad = {"semiprime": 0, "nonprime": 0}
    left = R.z(1, 2) * R.z(n - 1, n) if n >= 4 else None
    right = R.z(2, n - 1) if n >= 4 else None
    for d in range(dmax + 1):
        for m in zring.enumerate_canonical(n, d):
            x = R.monomial(m)
            if not x * zring.star(x) * x:
                bad["semiprime"] += 1
            if left is not None and left * x * right:
                bad["nonprime"] += 1
    return bad


def check_properties(quick=False, nmax=None):
    def run():
        trace = {spec: trace_symmetry_failures(spec) for spec in SMALL_TYPES}
        rules = {n: interval_rule_failures(n) for n in range(2, 7)}
        wit = {n: witness_failures(n) for n in range(2, 6)}
        ok = (not any(trace.values())
              and all(not any(v.values()) for v in rules.values())
              and all(not any(v.values()) for v in wit.values()))
        return ok, {"trace": trace, "rules": rules, "witnesses": wit}

    return _timed(10, "Property suites", 120, run)


CHECKS = [check_loewy, check_worked_example, check_poincare, check_complex, check_exactness,
          check_ring_structure, check_other_types, check_pi_degree, check_koszul, check_properties]


def run_all(quick=False, nmax=None, only=None, seed=0):
    out = []
    for k, fn in enumerate(CHECKS, 1):
        if only and k not in only:
            continue
        if fn is check_exactness:
            out.append(fn(quick=quick, nmax=nmax, seed=seed))
        else:
            out.append(fn(quick=quick, nmax=nmax))
    return out
