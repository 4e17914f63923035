"""Command line front end: `nilcoxeter <subcommand> [flags]`.

Exit status is 0 when every requested check passes, 1 when one fails (the
failing check is named on stderr) and 2 on bad arguments.
"""

import argparse
import json
import sys

from . import coxeter, extengine, koszul, nilcox, pirep, resolution, zring


class CheckFailed(Exception):
    pass


def _emit(args, data, lines):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _require(ok, name):
    if not ok:
        raise CheckFailed(name)


def _diagram(args):
    if args.type:
        return coxeter.CoxeterDiagram.parse(args.type)
    if args.n:
        return coxeter.CoxeterDiagram.type_A(args.n - 1)
    raise argparse.ArgumentTypeError("give --type or --n")


# -- subcommands ----------------------------------------------------------------


def cmd_group(args):
    D = _diagram(args)
    G = D.group
    layers = [len(x) for x in G.elements_by_length()]
    w0 = G.longest_element
    data = {"type": D.spec_string(), "order": G.order(), "rank": G.rank,
            "length_counts": layers, "longest_word": list(G.reduced_word(w0))}
    _require(sum(layers) == G.order(), "length counts sum to the order")
    _emit(args, data, [f"type {data['type']}", f"order {data['order']}",
                       "lengths " + " ".join(map(str, layers)),
                       "w0 " + " ".join(map(str, data["longest_word"]))])


def cmd_algebra(args):
    D = _diagram(args)
    A = nilcox.NilCoxeterAlgebra(D)
    G = A.group
    els = G.elements()
    w0 = G.longest_element
    bad = 0
    if len(els) <= 250:
        for u in els:
            for v in els:
                if (A.basis_product(u, v) == w0) != (A.basis_product(v, G.psi(u)) == w0):
                    bad += 1
    data = {"type": D.spec_string(), "dimension": len(els),
            "top_degree": G.length(w0), "trace_symmetry_failures": bad,
            "trace_checked": len(els) <= 250}
    _emit(args, data, [f"type {data['type']}", f"dimension {data['dimension']}",
                       f"top degree {data['top_degree']}",
                       f"trace symmetry failures {bad}" + ("" if data["trace_checked"] else " (skipped)")])
    _require(bad == 0, "trace symmetry Tr(ab) = Tr(b psi(a))")


def cmd_loewy(args):
    if args.type:
        row = [len(x) for x in coxeter.CoxeterDiagram.parse(args.type).group.elements_by_length()]
    elif args.n:
        row = nilcox.loewy_dims(args.n)
    else:
        raise argparse.ArgumentTypeError("give --type or --n")
    _emit(args, {"layers": row}, [" ".join(map(str, row))])


def cmd_zring(args):
    if args.action == "normalize":
        if not args.monomial or not args.n:
            raise argparse.ArgumentTypeError("normalize needs --n and a monomial")
        word, coeff = zring.parse_factors(args.monomial)
        bad = [f for f in word if not (1 <= min(f) and max(f) <= args.n and f[0] != f[1])]
        if bad:
            raise argparse.ArgumentTypeError(f"factor {bad[0]} does not fit n = {args.n}")
        r = zring.normalize(word, args.n)
        if r is None:
            _emit(args, {"input": args.monomial, "canonical": "0"}, ["canonical 0"])
            return
        facs, s = r
        rev, rs = zring.reversed_form(facs)
        steps = [zring.format_factors(x) for x in zring.reversal_steps(facs)]
        data = {"input": args.monomial, "canonical": zring.format_monomial(facs, s * coeff),
                "reversed": zring.format_monomial(rev, rs * s * coeff), "steps": steps}
        _emit(args, data, [f"canonical {data['canonical']}", f"reversed {data['reversed']}"]
              + [f"  {x}" for x in steps])
    else:
        n = args.n or 4
        top = args.max_degree if args.max_degree is not None else 6
        rows = []
        for d in range(top + 1):
            rows.append((d, zring.rank(n, d), zring.rank_formula(n, d)))
        _emit(args, {"n": n, "ranks": [[d, a, b] for d, a, b in rows]},
              [f"n {n}", "d enumerated binomial"] + [f"{d} {a} {b}" for d, a, b in rows])
        _require(all(a == b for _, a, b in rows), "rank(n, d) = binomial(d + n - 2, n - 2)")


def cmd_resolve(args):
    n = args.n or 4
    top = args.max_degree if args.max_degree is not None else 4
    res = resolution.Resolution(n)
    sq = resolution.check_squares(res, top)
    deg = resolution.check_internal_degree(res, top)
    mins = resolution.check_minimality(res, top)
    mons = [m for d in range(top + 1) for m in res.monomials(d)]
    hom = resolution.check_homotopy(res, mons)
    ranks = [len(list(res.cells(d))) for d in range(top + 1)]
    data = {"n": n, "max_degree": top, "ranks": ranks, "square_failures": len(sq),
            "degree_failures": len(deg), "minimality_failures": len(mins),
            "homotopy_checked": len(mons), "homotopy_failures": len(hom)}
    _emit(args, data, [f"n {n}", "ranks " + " ".join(map(str, ranks)),
                       f"d^2 and anticommutation failures {len(sq)}",
                       f"internal degree failures {len(deg)}",
                       f"minimality failures {len(mins)}",
                       f"homotopy failures {len(hom)} of {len(mons)}"])
    _require(not sq, "d_k d_k = 0 and anticommutation")
    _require(not deg, "differentials preserve internal degree")
    _require(not mins, "minimality")
    _require(not hom, "dh + hd = 1")


def cmd_ext(args):
    D = _diagram(args)
    p = args.p or 3
    top = args.max_degree if args.max_degree is not None else 4
    A = extengine.nilcoxeter_algebra(D, p)
    R = extengine.minimal_resolution(A, top)
    ranks = R.ranks()
    want = [extengine.rank_formula(D.group.rank, d) for d in range(top + 1)]
    big = sorted((s, q, v) for (s, q), v in R.bigraded_ranks().items() if v)
    data = {"type": D.spec_string(), "p": p, "ranks": ranks, "binomial": want,
            "bigraded": [list(x) for x in big], "minimal": R.is_minimal()}
    _emit(args, data, [f"type {data['type']} p {p}", "ranks " + " ".join(map(str, ranks)),
                       "binomial " + " ".join(map(str, want))]
          + [f"  Ext^{s},{q} = {v}" for s, q, v in big])
    _require(R.is_minimal(), "minimal resolution")
    _require(ranks == want, "Ext ranks = binomial(d + r - 1, r - 1)")


def cmd_pirep(args):
    n = args.n or 4
    primes = [2, 3, 5, 7, 11, 13, 17][:n - 1]
    rep = pirep.rep_symmetric(n, primes)
    hom = pirep.verify_homomorphism(rep)
    dag = pirep.check_dagger_identity(rep)
    p = args.p or 3
    dim = pirep.image_dimension(pirep.rep_symmetric(n), p)
    data = {"n": n, "size": rep.size, "parameters": primes, "relation_failures": hom["failures"],
            "dagger_failures": dag, "p": p, "image_dimension": dim}
    if args.format == "json":
        data["matrices"] = rep.to_json()["matrices"]
    _emit(args, data, [f"n {n} size {rep.size} parameters {' '.join(map(str, primes))}",
                       f"relation failures {len(hom['failures'])} of {hom['checked']}",
                       f"image dimension over F_{p}: {dim} (full: {rep.size ** 2})"])
    _require(hom["ok"], "generator products match normal forms")
    _require(not dag, "conjugation by z_{1,n}")
    _require(dim == rep.size ** 2, "surjectivity onto the matrix algebra")


def cmd_koszul(args):
    n = args.n or 4
    p = args.p
    rep = koszul.duality_report(n, p)
    cap = args.max_degree if args.max_degree is not None else (4 if n <= 4 else 3)
    ranks = koszul.x_graded_ranks(n, cap, p)
    series = koszul.koszul_series_check(n, cap)
    data = dict(rep, ranks={str(k): list(v) for k, v in ranks.items()},
                series_failures=len(series))
    _emit(args, data, [f"n {n} over {'Q' if p is None else 'F_' + str(p)}",
                       f"dim Z relations {rep['dim_Z']}, perpendicular {rep['dim_perp']}, "
                       f"X relations {rep['dim_X']}, equal {rep['equal']}",
                       "X ranks (normal forms / linear algebra) "
                       + " ".join(f"{a}/{b}" for a, b in ranks.values())])
    _require(rep["equal"], "perpendicular of Z relations = X relations")
    _require(all(a == b for a, b in ranks.values()), "X ranks by two routes")
    _require(not series, "Hilbert series identity")


def cmd_verify_all(args):
    from . import verify

    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    results = verify.run_all(quick=args.quick, nmax=args.n, only=only, seed=args.seed)
    over = [r for r in results if not r.within_budget]
    if args.format == "json":
        print(json.dumps({"results": [r.to_json() for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(r.line())
    # wall-clock times vary between runs, so they go to stderr
    for r in results:
        print(r.timing_line(), file=sys.stderr)
    failed = [r.name for r in results if not r.ok] + [f"{r.name} (time budget)" for r in over]
    if failed:
        raise CheckFailed("; ".join(failed))


COMMANDS = {"group": cmd_group, "algebra": cmd_algebra, "loewy": cmd_loewy,
            "zring": cmd_zring, "resolve": cmd_resolve, "ext": cmd_ext,
            "pirep": cmd_pirep, "koszul": cmd_koszul, "verify-all": cmd_verify_all}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--type")
    common.add_argument("--p", type=int)
    common.add_argument("--max-degree", type=int)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--quick", action="store_true")

    parser = argparse.ArgumentParser(prog="nilcoxeter")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        if name == "zring":
            sp = sub.add_parser(name)
            actions = sp.add_subparsers(dest="action", required=True)
            actions.add_parser("normalize", parents=[common]).add_argument("monomial")
            actions.add_parser("rank", parents=[common]).set_defaults(monomial=None)
            continue
        sp = sub.add_parser(name, parents=[common])
        if name == "verify-all":
            sp.add_argument("--only", help="comma separated criterion numbers")
    return parser


def _validate(args):
    if args.n is not None and args.n < 2:
        raise argparse.ArgumentTypeError("--n must be at least 2")
    if args.p is not None and (args.p < 2 or any(args.p % q == 0 for q in range(2, args.p))):
        raise argparse.ArgumentTypeError("--p must be prime")
    if args.max_degree is not None and args.max_degree < 0:
        raise argparse.ArgumentTypeError("--max-degree must be nonnegative")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        _validate(args)
        COMMANDS[args.command](args)
    except CheckFailed as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (argparse.ArgumentTypeError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
