"""Octahedral triangulation with quandle coordinates and the L-hat sum.

Each non-degenerate crossing contributes four signed tetrahedra, one per
sector.  A tetrahedron has vertex colors (E, F, R, P): the under piece, the
over arc, the sector region and the base point p.  With s, s*a_l, s*a_k,
(s*a_l)*a_k placed in the sectors as the region rule dictates, the
coordinates are

    sector gh:  +(a_l,      a_k, R_gh, p)
    sector he:  -(a_l,      a_k, R_he, p)
    sector ef:  +(a_l*a_k,  a_k, R_ef, p)
    sector fg:  -(a_l*a_k,  a_k, R_fg, p)

for both crossing signs.  The argument of L-hat is the raw cross-ratio
c = g03 g12 / (g02 g13); the shape of the tetrahedron is c**sign, which
equals the matching ratio of side variables (z_f/z_e on sector ef, ...).
"""

import math
from dataclasses import dataclass, field

from scipy.cluster.hierarchy import DisjointSet

from .dilog import li2, log1m, plog
from .errors import DegenerateTetrahedron, GluingMismatch, NotIntegral
from .quandle import INFINITY, det2, hopf, hopf_distance, is_infinity, qop

PI_I = math.pi * 1j
PI2_6 = math.pi ** 2 / 6
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
SECTOR_SIGN = {"gh": 1, "he": -1, "ef": 1, "fg": -1}
# shape of the sector tetrahedron as a ratio of side variables (num, den)
SECTOR_SHAPE = {"ef": ("f", "e"), "fg": ("g", "f"), "gh": ("h", "g"), "he": ("e", "h")}
TOL_SEP = 1e-9


@dataclass
class SignedTetrahedron:
    sign: int
    coords: tuple
    crossing: int
    role: str
    index: int = -1
    keys: dict = field(default_factory=dict)

    @property
    def hopf_images(self):
        return tuple(hopf(v) for v in self.coords)

    def ghat(self, i, j):
        return det2(self.coords[i], self.coords[j])


@dataclass
class EdgeClass:
    key: object
    members: list
    g: complex


@dataclass
class EdgeClasses:
    classes: list
    lookup: dict

    def g(self, tet_index, pair):
        return self.classes[self.lookup[(tet_index, pair)]].g

    def __len__(self):
        return len(self.classes)


@dataclass
class FlattenedTetrahedron:
    z: complex
    arg: complex
    p: int
    q: int
    sign: int
    residual: float = 0.0
    crossing: int = -1
    role: str = ""

    def to_json(self):
        return {
            "crossing": self.crossing,
            "sector": self.role,
            "sign": self.sign,
            "z": [self.z.real, self.z.imag],
            "p": self.p,
            "q": self.q,
        }


def _check_distinct(t, tol):
    for i, j in PAIRS:
        if hopf_distance(t.coords[i], t.coords[j]) <= tol:
            raise DegenerateTetrahedron(
                f"tetrahedron {t.role} at crossing {t.crossing} has coinciding vertices {i},{j}",
                crossing=t.crossing,
                sector=t.role,
            )


def _degenerate_tetrahedra(c, s):
    al, ak = s.arc_colors[c.arc_l], s.arc_colors[c.arc_k]
    alk = qop(al, ak)
    r = {sec: s.region_colors[c.regions[sec]] for sec in SECTOR_SIGN}
    p = s.p
    return [
        SignedTetrahedron(-1, (ak, r["he"], r["gh"], p), c.index, "FACD"),
        SignedTetrahedron(1, (al, r["he"], r["gh"], p), c.index, "EACD"),
        SignedTetrahedron(-1, (alk, r["ef"], r["fg"], p), c.index, "EACB"),
        SignedTetrahedron(1, (ak, r["ef"], r["fg"], p), c.index, "FACB"),
    ]


def build_tetrahedra(d, s, degenerate=(), debug_degenerate=False, tol=TOL_SEP):
    """Signed tetrahedra of the non-degenerate crossings.

    With ``debug_degenerate`` the canceling tetrahedra of degenerate
    crossings are appended too; they are not part of the triangulation.
    """
    degenerate = set(degenerate)
    tets = []
    for c in d.crossings:
        if c.index in degenerate:
            if debug_degenerate:
                tets.extend(_degenerate_tetrahedra(c, s))
            continue
        al, ak = s.arc_colors[c.arc_l], s.arc_colors[c.arc_k]
        alk = qop(al, ak)
        sd = c.sides
        for sec in ("gh", "he", "ef", "fg"):
            under, under_side = (al, sd["h"]) if sec in ("gh", "he") else (alk, sd["f"])
            over_side = sd["e"] if sec in ("ef", "he") else sd["g"]
            t = SignedTetrahedron(
                SECTOR_SIGN[sec], (under, ak, s.region_colors[c.regions[sec]], s.p), c.index, sec
            )
            t.keys = {
                (0, 1): ("delta", c.index),
                (0, 2): ("beta", under_side),
                (0, 3): ("alpha", under_side),
                (1, 2): ("beta", over_side),
                (1, 3): ("alpha", sd["e"]),
                (2, 3): ("gamma", c.regions[sec]),
            }
            _check_distinct(t, tol)
            tets.append(t)
    for i, t in enumerate(tets):
        t.index = i
    return tets


def raw_cross_ratio(t):
    """[h(v0),h(v1),h(v2),h(v3)] in determinant form."""
    return t.ghat(0, 3) * t.ghat(1, 2) / (t.ghat(0, 2) * t.ghat(1, 3))


def cross_ratio(t):
    """Shape parameter: the raw cross-ratio raised to the tetrahedron's sign."""
    c = raw_cross_ratio(t)
    return c if t.sign > 0 else 1 / c


def cross_ratio_hopf(t):
    """The same cross-ratio from Hopf images, degenerating factors at infinity."""
    v = t.hopf_images
    if is_infinity(v[0]):
        c = (v[2] - v[1]) / (v[3] - v[1])
    elif is_infinity(v[1]):
        c = (v[3] - v[0]) / (v[2] - v[0])
    elif is_infinity(v[2]):
        c = (v[3] - v[0]) / (v[3] - v[1])
    elif is_infinity(v[3]):
        c = (v[2] - v[1]) / (v[2] - v[0])
    else:
        c = (v[3] - v[0]) * (v[2] - v[1]) / ((v[2] - v[0]) * (v[3] - v[1]))
    return c if t.sign > 0 else 1 / c


def ptolemy_check(t):
    g = t.ghat
    return abs(g(0, 2) * g(1, 3) - g(0, 1) * g(2, 3) - g(0, 3) * g(1, 2))


def shape_consistency(tets, sol, d, tol=1e-9):
    """Compare each sector tetrahedron's shape with the side-variable ratio."""
    rows = []
    for t in tets:
        if t.role not in SECTOR_SHAPE:
            continue
        c = d.crossings[t.crossing]
        a, b = SECTOR_SHAPE[t.role]
        expected = sol.z[c.sides[a]] / sol.z[c.sides[b]]
        got = cross_ratio(t)
        err = abs(got - expected)
        rows.append(
            {"crossing": t.crossing, "sector": t.role, "error": err, "ok": err <= tol * max(1.0, abs(expected))}
        )
    return {"ok": all(r["ok"] for r in rows), "rows": rows}


def build_edge_classes(tets, d, degenerate=(), tol=1e-9):
    """Identify tetrahedron edges into edge classes with one long-edge value each."""
    keys = set()
    for t in tets:
        keys.update(t.keys.values())
    ds = DisjointSet(sorted(keys, key=repr))
    for c in d.crossings:
        sd = c.sides
        if c.index in degenerate:
            for q in "fgh":
                for kind in ("alpha", "beta"):
                    a, b = (kind, sd["e"]), (kind, sd[q])
                    ds.add(a)
                    ds.add(b)
                    ds.merge(a, b)
            continue
        for a, b in ((("alpha", sd["e"]), ("alpha", sd["g"])), (("beta", sd["f"]), ("beta", sd["h"]))):
            ds.add(a)
            ds.add(b)
            ds.merge(a, b)

    groups = {}
    for t in tets:
        for pair in PAIRS:
            root = ds[t.keys[pair]]
            groups.setdefault(root, []).append((t.index, pair))
    classes, lookup = [], {}
    for root in sorted(groups, key=repr):
        members = groups[root]
        first_t, first_pair = members[0]
        g = tets[first_t].ghat(*first_pair)
        for ti, pair in members:
            val = tets[ti].ghat(*pair)
            if abs(abs(val) - abs(g)) > tol * max(1.0, abs(g)):
                raise GluingMismatch(
                    f"edge class {root} has |g| {abs(g):.6g} and {abs(val):.6g}",
                    edge_class=repr(root),
                )
            lookup[(ti, pair)] = len(classes)
        classes.append(EdgeClass(key=root, members=members, g=g))
    return EdgeClasses(classes=classes, lookup=lookup)


def flatten(t, classes, tol=1e-9):
    c = raw_cross_ratio(t)
    if abs(c) < 1e-15 or abs(c - 1) < 1e-15:
        raise DegenerateTetrahedron("cross-ratio is 0 or 1", crossing=t.crossing, sector=t.role)
    lg = {pair: plog(classes.g(t.index, pair)) for pair in PAIRS}
    p_val = (-plog(c) + lg[(0, 3)] + lg[(1, 2)] - lg[(0, 2)] - lg[(1, 3)]) / PI_I
    q_val = (log1m(c) + lg[(0, 2)] + lg[(1, 3)] - lg[(0, 1)] - lg[(2, 3)]) / PI_I
    p, q = round(p_val.real), round(q_val.real)
    residual = max(abs(p_val - p), abs(q_val - q))
    if residual > tol:
        raise NotIntegral(
            f"flattening not integral at crossing {t.crossing} sector {t.role} (residual {residual:.3e})",
            crossing=t.crossing,
            residual=residual,
        )
    return FlattenedTetrahedron(
        z=cross_ratio(t), arg=c, p=p, q=q, sign=t.sign, residual=residual,
        crossing=t.crossing, role=t.role,
    )


def lhat(z, p, q):
    """L-hat on a flattened cross-ratio [z; p, q]."""
    lz, l1z = plog(z), log1m(z)
    return li2(z) + 0.5 * lz * l1z + 0.5 * PI_I * (q * lz + p * l1z) - PI2_6


def lhat_flat(f):
    return lhat(f.arg, f.p, f.q)


def total_complex_volume(flats):
    return sum((f.sign * lhat_flat(f) for f in flats), 0j)


def edge_parameter(c, pair):
    """Shape parameter attached to an edge pair for raw cross-ratio c."""
    if pair in ((0, 1), (2, 3)):
        return c
    if pair in ((0, 3), (1, 2)):
        return 1 / (1 - c)
    return 1 - 1 / c


def gluing_products(tets, classes):
    """Product of signed edge parameters around every edge class."""
    out = []
    for cls in classes.classes:
        prod = 1 + 0j
        for ti, pair in cls.members:
            t = tets[ti]
            prod *= edge_parameter(raw_cross_ratio(t), pair) ** t.sign
        out.append(prod)
    return out


@dataclass
class CrossCheck:
    total: complex
    flats: list
    ptolemy_max: float
    gluing_max: float
    flattening_max: float
    n_classes: int

    def to_json(self):
        return {
            "lhat_sum": [self.total.real, self.total.imag],
            "ptolemy_max_residual": self.ptolemy_max,
            "gluing_max_residual": self.gluing_max,
            "flattening_max_residual": self.flattening_max,
            "edge_classes": self.n_classes,
            "tetrahedra": [f.to_json() for f in self.flats],
        }


def cross_check(d, s, degenerate=()):
    tets = build_tetrahedra(d, s, degenerate)
    classes = build_edge_classes(tets, d, degenerate)
    flats = [flatten(t, classes) for t in tets]
    ptol = max((ptolemy_check(t) for t in tets), default=0.0)
    glue = max((abs(x - 1) for x in gluing_products(tets, classes)), default=0.0)
    fres = max((f.residual for f in flats), default=0.0)
    return CrossCheck(total_complex_volume(flats), flats, ptol, glue, fres, len(classes))
