"""The explicit saddle point built from a shadow-coloring, and (vol, cs) extraction.

For a side with arc color a and region color s on its right,
z = det(a, p) / det(a, s).  At a degenerate crossing with sector regions
R_ef, R_fg, R_gh, R_he the w-values are

    w_e = det(R_he, p) / det(R_ef, p)     w_f = det(R_fg, p) / det(R_ef, p)
    w_g = det(R_fg, p) / det(R_gh, p)     w_h = det(R_he, p) / det(R_gh, p)

which is the same rule for both crossing signs once written by sector.
"""

import math
from dataclasses import dataclass

from .errors import GenericityViolated
from .potential import Assignment
from .quandle import det2

PI2 = math.pi ** 2
TOL_DEN = 1e-12


@dataclass
class ConstructedSolution:
    z: dict
    w: dict

    def assignment(self):
        return Assignment(z=dict(self.z), w={j: v[:3] for j, v in self.w.items()})

    def to_json(self):
        return {
            "z": {str(k): [v.real, v.imag] for k, v in self.z.items()},
            "w": {
                str(j): {q: [x.real, x.imag] for q, x in zip("efgh", v)}
                for j, v in self.w.items()
            },
        }


@dataclass
class ComplexVolumeResult:
    vol: float
    cs_mod_pi2: float
    v0: complex

    def to_json(self):
        return {"vol": self.vol, "cs_mod_pi2": self.cs_mod_pi2, "V0": [self.v0.real, self.v0.imag]}


def _ratio(num, den, what):
    if abs(den) <= TOL_DEN:
        raise GenericityViolated(f"zero denominator in {what}", where=what)
    return num / den


def construct_solution(d, s, degenerate=None):
    """Solution values from the coloring.

    ``degenerate`` lists the degenerate crossings; by default it is read off
    the arc colors the same way the potential function does.
    """
    if degenerate is None:
        from .potential import TOL_DEGENERATE
        from .quandle import hopf_distance

        degenerate = [
            c.index
            for c in d.crossings
            if hopf_distance(s.arc_colors[c.arc_l], s.arc_colors[c.arc_k]) < TOL_DEGENERATE
        ]
    p = s.p
    z = {}
    for lab in d.sides:
        a = s.arc_colors[d.side_arc[lab]]
        r = s.region_colors[d.side_right[lab]]
        z[lab] = _ratio(det2(a, p), det2(a, r), f"z_{lab}")
    w = {}
    for j in degenerate:
        c = d.crossings[j]
        dp = {sec: det2(s.region_colors[c.regions[sec]], p) for sec in ("ef", "fg", "gh", "he")}
        w[j] = (
            _ratio(dp["he"], dp["ef"], f"w_e at crossing {j}"),
            _ratio(dp["fg"], dp["ef"], f"w_f at crossing {j}"),
            _ratio(dp["fg"], dp["gh"], f"w_g at crossing {j}"),
            _ratio(dp["he"], dp["gh"], f"w_h at crossing {j}"),
        )
    return ConstructedSolution(z=z, w=w)


def solution_violations(d, sol, degenerate=(), tol=1e-9):
    """List the side conditions the solution breaks (empty when it is usable)."""
    out = []
    # z = 1 is allowed: both worked examples in the literature contain it
    for k, v in sol.z.items():
        if abs(v) <= tol or not math.isfinite(abs(v)):
            out.append({"kind": "z", "side": k})
    degenerate = set(degenerate) | set(sol.w)
    for j, ws in sol.w.items():
        for q, v in zip("efgh", ws):
            if abs(v) <= tol or abs(v - 1) <= tol:
                out.append({"kind": "w", "crossing": j, "slot": q})
        we, wf, wg, wh = ws
        if abs(wh - we * wg / wf) > 1e-12 * max(1.0, abs(wh)):
            out.append({"kind": "w_h", "crossing": j})
    for c in d.crossings:
        zs = {q: sol.z[c.sides[q]] for q in "efgh"}
        if c.index in degenerate:
            if max(abs(zs[q] - zs["e"]) for q in "fgh") > tol * max(1.0, abs(zs["e"])):
                out.append({"kind": "unequal", "crossing": c.index})
            continue
        for a, b in (("f", "e"), ("g", "f"), ("h", "g"), ("e", "h"), ("g", "e"), ("h", "f")):
            if abs(zs[a] / zs[b] - 1) <= tol:
                out.append({"kind": "ratio", "crossing": c.index, "pair": a + "/" + b})
    return out


def reduce_mod_pi2(x):
    """Representative of a real number modulo pi^2 in (-pi^2/2, pi^2/2]."""
    r = x - PI2 * round(x / PI2)
    if r <= -PI2 / 2:
        r += PI2
    return r


def extract_complex_volume(v0):
    v0 = complex(v0)
    return ComplexVolumeResult(vol=v0.imag, cs_mod_pi2=reduce_mod_pi2(-v0.real), v0=v0)
