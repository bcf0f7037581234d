"""The potential function V, its logarithmic partials and the value V0.

Per crossing with quadrant sides e, f, g, h:

  non-degenerate:  Li2(z_f/z_e) - Li2(z_f/z_g) + Li2(z_h/z_g) - Li2(z_h/z_e)
  degenerate:      -log w_e log z_e + log w_f log z_f - log w_g log z_g
                   + log w_h log z_h,   with w_h = w_e w_g / w_f

A crossing is degenerate when its two arc colors have the same Hopf image.
The three w's of a degenerate crossing are always free variables, kinks
included; a kink just has two equal side labels among e, f, g, h.
"""

import cmath
import math
from dataclasses import dataclass, field

from scipy.cluster.hierarchy import DisjointSet

from .dilog import li2, log1m, plog
from .errors import ArgumentOnCut, NotAtSaddle
from .quandle import hopf_distance

PI_I = math.pi * 1j
TOL_DEGENERATE = 1e-9
TOL_CUT = 1e-12

# (sign, numerator slot, denominator slot) for the four Li2 terms
LI2_TERMS = ((1, "f", "e"), (-1, "f", "g"), (1, "h", "g"), (-1, "h", "e"))
# sign of log w * log z for the degenerate term, per slot
DEG_SIGNS = {"e": -1, "f": 1, "g": -1, "h": 1}
W_FREE = ("e", "f", "g")


@dataclass(frozen=True)
class CrossingTerm:
    crossing: int
    degenerate: bool
    sides: dict

    def slots_of(self, label):
        return [q for q in ("e", "f", "g", "h") if self.sides[q] == label]


@dataclass
class PotentialFunction:
    terms: list
    sides: list
    degenerate: list = field(default_factory=list)

    @property
    def n_sides(self):
        return len(self.sides)

    def li2_count(self):
        return 4 * sum(1 for t in self.terms if not t.degenerate)


@dataclass
class Assignment:
    z: dict
    w: dict = field(default_factory=dict)
    # optional integer m per side: use log z_k + 2 pi i m instead of the principal log
    log_shift: dict = field(default_factory=dict)

    def logz(self, k):
        return plog(self.z[k]) + 2 * PI_I * self.log_shift.get(k, 0)

    def w_all(self, j):
        we, wf, wg = self.w[j]
        return {"e": we, "f": wf, "g": wg, "h": we * wg / wf}


@dataclass
class HReport:
    max_residual: float
    z_residuals: dict
    w_residuals: dict

    def to_json(self):
        return {
            "max_residual": self.max_residual,
            "z": {str(k): v for k, v in self.z_residuals.items()},
            "w": {f"{j}{q}": v for (j, q), v in self.w_residuals.items()},
        }


def build_potential(d, s, tol=TOL_DEGENERATE):
    terms, degenerate = [], []
    for c in d.crossings:
        deg = hopf_distance(s.arc_colors[c.arc_l], s.arc_colors[c.arc_k]) < tol
        terms.append(CrossingTerm(c.index, deg, dict(c.sides)))
        if deg:
            degenerate.append(c.index)
    return PotentialFunction(terms=terms, sides=list(d.sides), degenerate=degenerate)


def _ratio_log1m(z, num, den):
    r = z[num] / z[den]
    if abs(r - 1) < TOL_CUT:
        raise ArgumentOnCut(f"z_{num}/z_{den} equals 1", num=num, den=den)
    return log1m(r)


def term_value(term, asg):
    z = asg.z
    sd = term.sides
    if not term.degenerate:
        return sum(sgn * li2(z[sd[a]] / z[sd[b]]) for sgn, a, b in LI2_TERMS)
    w = asg.w_all(term.crossing)
    return sum(DEG_SIGNS[q] * plog(w[q]) * asg.logz(sd[q]) for q in ("e", "f", "g", "h"))


def eval_V(pf, asg):
    return sum((term_value(t, asg) for t in pf.terms), 0j)


def _term_grad_z(term, asg, label):
    z = asg.z
    sd = term.sides
    total = 0j
    if not term.degenerate:
        for sgn, a, b in LI2_TERMS:
            if sd[a] == label:
                total += -sgn * _ratio_log1m(z, sd[a], sd[b])
            if sd[b] == label:
                total += sgn * _ratio_log1m(z, sd[a], sd[b])
        return total
    w = asg.w_all(term.crossing)
    for q in term.slots_of(label):
        total += DEG_SIGNS[q] * plog(w[q])
    return total


def grad_z(pf, asg, k):
    """z_k dV/dz_k in closed form."""
    return sum((_term_grad_z(t, asg, k) for t in pf.terms if k in t.sides.values()), 0j)


def grad_w(pf, asg, j, which):
    """w dV/dw for a free w of degenerate crossing j (which in 'e', 'f', 'g').

    This is the exact derivative of V with principal logs, e.g.
    log z_h - log z_e for w_e; its exponential is z_h/z_e.
    """
    term = next(t for t in pf.terms if t.crossing == j)
    if not term.degenerate:
        raise ValueError(f"crossing {j} is not degenerate")
    lz = {q: asg.logz(term.sides[q]) for q in ("e", "f", "g", "h")}
    if which == "e":
        return lz["h"] - lz["e"]
    if which == "f":
        return lz["f"] - lz["h"]
    if which == "g":
        return lz["h"] - lz["g"]
    raise ValueError("which must be 'e', 'f' or 'g'")


def check_H(pf, asg):
    zres = {k: abs(cmath.exp(grad_z(pf, asg, k)) - 1) for k in pf.sides}
    wres = {}
    for j in pf.degenerate:
        for q in W_FREE:
            wres[(j, q)] = abs(cmath.exp(grad_w(pf, asg, j, q)) - 1)
    worst = max(list(zres.values()) + list(wres.values()) + [0.0])
    return HReport(max_residual=worst, z_residuals=zres, w_residuals=wres)


def eval_V0(pf, asg):
    """V minus the logarithmic corrections; well defined modulo pi^2 at a solution."""
    value = eval_V(pf, asg)
    for k in pf.sides:
        value -= grad_z(pf, asg, k) * asg.logz(k)
    for j in pf.degenerate:
        we, wf, wg = asg.w[j]
        for q, wv in zip(W_FREE, (we, wf, wg)):
            value -= grad_w(pf, asg, j, q) * plog(wv)
    return value


def term_V0(pf, asg, j):
    """Contribution of crossing j alone to V0 (its own terms and partials)."""
    term = next(t for t in pf.terms if t.crossing == j)
    sub = PotentialFunction([term], sorted(set(term.sides.values())), [j] if term.degenerate else [])
    return eval_V0(sub, asg)


@dataclass
class SimplifiedPotential:
    pf: PotentialFunction
    classes: dict

    def restrict(self, asg, tol=1e-9):
        z = {}
        for rep, members in self.classes.items():
            vals = [asg.z[m] for m in members]
            if max(abs(v - vals[0]) for v in vals) > tol * max(1.0, abs(vals[0])):
                raise ValueError(f"side class {members} carries unequal z values")
            z[rep] = asg.z[rep]
        return Assignment(z=z)


def build_simplified(pf, asg=None):
    """Drop degenerate terms and merge the four sides around each of them.

    Returns the simplified potential; its ``classes`` map each representative
    (the smallest label) to its member sides.  When ``asg`` is given the
    restricted assignment is checked for equal z within each class.
    """
    ds = DisjointSet(pf.sides)
    for t in pf.terms:
        if t.degenerate:
            sd = t.sides
            for q in ("f", "g", "h"):
                ds.merge(sd["e"], sd[q])
    classes = {}
    for subset in ds.subsets():
        members = sorted(subset)
        classes[members[0]] = members
    rep = {m: r for r, members in classes.items() for m in members}
    terms = [
        CrossingTerm(t.crossing, False, {q: rep[lab] for q, lab in t.sides.items()})
        for t in pf.terms
        if not t.degenerate
    ]
    simplified = SimplifiedPotential(
        PotentialFunction(terms=terms, sides=sorted(classes), degenerate=[]),
        dict(sorted(classes.items())),
    )
    if asg is not None:
        simplified.restrict(asg)
    return simplified


def r_values(pf, asg, tol=1e-9):
    """r_k = (z_k dV/dz_k) / (pi i); must be even integers summing to zero."""
    r = {k: grad_z(pf, asg, k) / PI_I for k in pf.sides}
    bad = [k for k, v in r.items() if abs(v - 2 * round(v.real / 2)) > tol]
    total = sum(r.values(), 0j)
    if bad or abs(total) > tol:
        raise NotAtSaddle(
            "r values are not even integers summing to zero",
            sides=bad,
            total=[total.real, total.imag],
        )
    return r


def mod_pi2_distance(x, y):
    """Distance between complex numbers modulo real multiples of pi^2."""
    diff = complex(x) - complex(y)
    k = round(diff.real / math.pi ** 2)
    return abs(diff - k * math.pi ** 2)
