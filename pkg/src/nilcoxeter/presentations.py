"""Presentations of Ext rings of nilCoxeter algebras, as data.

Each entry names its generators (letter -> interval (i, j) of degree j - i,
or for D4 a set of diagram nodes) and lists the quadratic relations as
strings.  "uz=zw" means uz - zw = 0.
The helpers here turn relation strings into coefficient vectors on ordered
pairs of generators.
"""

import itertools
import re

from . import fp

A2 = {
    "diagram": "A:2",
    "generators": {"x": (1, 2), "y": (2, 3), "z": (1, 3)},
    "relations": ["xy=0", "yx=0", "xz+zy=0", "yz+zx=0"],
}

A3 = {
    "diagram": "A:3",
    "generators": {"u": (1, 2), "v": (2, 3), "w": (3, 4),
                   "x": (1, 3), "y": (2, 4), "z": (1, 4)},
    "relations": [
        "uv=0", "vu=0", "vw=0", "wv=0", "uw+wu=0",
        "ux+xv=0", "vx+xu=0", "vy+yw=0", "wy+yv=0",
        "uy=0", "yu=0", "wx=0", "xw=0",
        "uz=zw", "vz=zv", "wz=zu",
        "xy=0", "yx=0", "xz=zy", "yz=zx",
    ],
}

# B2 and G2 (and every even dihedral type) share this ring.
B2 = {
    "diagram": "B:2",
    "generators": {"x": (1, 2), "y": (2, 3), "z": (1, 3)},
    "relations": ["xy=0", "yx=0", "xz+zx=0", "yz+zy=0"],
}

B3 = {
    "diagram": "B:3",
    "generators": A3["generators"],
    "relations": [
        "uv=0", "vu=0", "vw=0", "wv=0", "uw+wu=0",
        "ux+xv=0", "vx+xu=0", "vy+yv=0", "wy+yw=0",
        "uy=0", "yu=0", "wx=0", "xw=0",
        "uz=zu", "vz=zv", "wz=zw",
        "xy=0", "yx=0", "xz+zx=0", "yz=zy",
    ],
}

H3 = {
    "diagram": "H:3",
    "generators": A3["generators"],
    "relations": [
        "uv=0", "vu=0", "vw=0", "wv=0", "uw+wu=0",
        "ux+xv=0", "vx+xu=0", "vy+yw=0", "wy+yv=0",
        "uy=0", "yu=0", "wx=0", "xw=0",
        "uz=zu", "vz=zv", "wz=zw",
        "xy=0", "yx=0", "xz+zx=0", "yz+zy=0",
    ],
}

# Centre node 1 (p); leaves 2, 3, 4 (q, r, s).  t, u, v are the edges
# {1,2}, {1,3}, {1,4}; w, x, y the three-node subdiagrams {1,2,3},
# {1,2,4}, {1,3,4}; z the whole diagram.
D4 = {
    "diagram": "D:4",
    "kind": "subsets",
    "generators": {"p": (1,), "q": (2,), "r": (3,), "s": (4,),
                   "t": (1, 2), "u": (1, 3), "v": (1, 4),
                   "w": (1, 2, 3), "x": (1, 2, 4), "y": (1, 3, 4),
                   "z": (1, 2, 3, 4)},
    "relations": [
        "pq=0", "qp=0", "pr=0", "rp=0", "ps=0", "sp=0", "qr+rq=0", "qs+sq=0", "rs+sr=0",
        "pt+tq=0", "qt+tp=0", "pu+ur=0", "ru+up=0", "pv+vs=0", "sv+vp=0",
        "qu=0", "uq=0", "qv=0", "vq=0", "rt=0", "tr=0", "rv=0", "vr=0", "st=0", "ts=0",
        "su=0", "us=0",
        "pw=wp", "px=xp", "py=yp", "qw=wr", "rw=wq", "qx=xs", "sx=xq", "ry=ys", "sy=yr",
        "qy=0", "yq=0", "rx=0", "xr=0", "sw=0", "ws=0", "tu=0", "ut=0", "tv=0", "vt=0",
        "uv=0", "vu=0",
        "pz+zp=0", "qz+zq=0", "rz+zr=0", "sz+zs=0",
        "tw+wu=0", "uw+wt=0", "tx+xv=0", "vx+xt=0", "uy+yv=0", "vy+yu=0",
        "ty=0", "yt=0", "ux=0", "xu=0", "vw=0", "wv=0", "tz+zt=0", "uz+zu=0", "vz+zv=0",
        "wx=0", "xw=0", "wy=0", "yw=0", "xy=0", "yx=0", "wz=zw", "xz=zx", "yz=zy",
    ],
}

TABLE = {"A2": A2, "A3": A3, "B2": B2, "G2": dict(B2, diagram="G:2"),
         "B3": B3, "H3": H3, "D4": D4}


def dihedral(m):
    """Odd m gives the A2 ring, even m the B2 ring."""
    base = A2 if m % 2 else B2
    return dict(base, diagram=f"I2:{m}")


def generator_degree(pres, letter):
    g = pres["generators"][letter]
    if pres.get("kind") == "subsets":
        return len(g)
    return g[1] - g[0]


_MON = re.compile(r"([+-]?)(\d*)([a-z])([a-z])")


def _side(text):
    if text == "0":
        return {}
    out = {}
    pos = 0
    while pos < len(text):
        m = _MON.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse relation side {text!r}")
        c = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        key = (m.group(3), m.group(4))
        out[key] = out.get(key, 0) + c
        pos = m.end()
    return out


def parse_relation(text):
    """'ux+xv=0' -> {('u','x'): 1, ('x','v'): 1}."""
    lhs, rhs = text.replace(" ", "").split("=")
    out = _side(lhs)
    for k, c in _side(rhs).items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def relation_vectors(pres):
    return [parse_relation(r) for r in pres["relations"]]


def check_relations(pres, products, p):
    """Test the listed relations against computed products over F_p.

    `products[(a, b)]` is the product of generator classes a and b as a
    dict from basis keys to integers.  Each generator may be rescaled by
    +-1; all sign choices are tried.  Returns a report with the signs found
    (or None), and whether the listed relations span every quadratic
    relation between the generators.
    """
    letters = list(pres["generators"])
    rels = relation_vectors(pres)
    keys = sorted({k for v in products.values() for k in v}, key=repr)
    col = {k: c for c, k in enumerate(keys)}

    def vec(d):
        v = [0] * len(keys)
        for k, c in d.items():
            v[col[k]] = c % p
        return v

    pv = {ab: vec(products[ab]) for ab in products}

    def holds(eps):
        for r in rels:
            tot = [0] * len(keys)
            for (a, b), c in r.items():
                s = c * eps[a] * eps[b]
                for i, x in enumerate(pv[(a, b)]):
                    tot[i] += s * x
            if any(x % p for x in tot):
                return False
        return True

    found = None
    for bits in itertools.product((1, -1), repeat=len(letters) - 1):
        eps = dict(zip(letters, (1,) + bits))
        if holds(eps):
            found = eps
            break

    # completeness, degree by degree
    deg = {a: generator_degree(pres, a) for a in letters}
    pairs = [(a, b) for a in letters for b in letters]
    by_degree = {}
    for ab in pairs:
        by_degree.setdefault(deg[ab[0]] + deg[ab[1]], []).append(ab)
    complete = found is not None
    dims = {}
    for D, ps in sorted(by_degree.items()):
        m = [pv[ab] for ab in ps]
        kernel = len(ps) - (fp.rank(m, p) if keys else 0)
        idx = {ab: c for c, ab in enumerate(ps)}
        rrows = []
        for r in rels:
            if all(ab in idx for ab in r):
                row = [0] * len(ps)
                for ab, c in r.items():
                    e = found[ab[0]] * found[ab[1]] if found else 1
                    row[idx[ab]] = (c * e) % p
                rrows.append(row)
        rr = fp.rank(rrows, p) if rrows else 0
        dims[D] = (kernel, rr)
        if kernel != rr:
            complete = False
    return {"signs": found, "holds": found is not None, "complete": complete,
            "kernel_vs_listed": dims}
