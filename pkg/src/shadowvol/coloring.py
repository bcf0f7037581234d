"""Arc-colorings, region-colorings and the genericity conditions.

Orientation rule for regions: if r is the region on the right of a side
whose arc has color a, the region on its left has color qop(r, a).
"""

import random
from collections import deque
from dataclasses import dataclass, field

from .errors import InconsistentPropagation, RelationViolated, SearchExhausted
from .quandle import ParabolicVector, hopf_distance, qop, qop_inv, sign_relative

TOL_REL = 1e-9
TOL_SEP = 1e-9


@dataclass
class ShadowColoring:
    arc_colors: dict
    region_colors: dict
    p: ParabolicVector

    def side_color(self, d, label):
        return self.arc_colors[d.side_arc[label]]

    def right_region(self, d, label):
        return self.region_colors[d.side_right[label]]

    def left_region(self, d, label):
        return self.region_colors[d.side_left[label]]

    def conjugate(self):
        return ShadowColoring(
            {k: v.conjugate() for k, v in self.arc_colors.items()},
            {k: v.conjugate() for k, v in self.region_colors.items()},
            self.p.conjugate(),
        )


@dataclass
class GenericityReport:
    ok: bool
    violations: list = field(default_factory=list)
    min_separation: float = float("inf")

    def to_json(self):
        return {
            "ok": self.ok,
            "min_separation": self.min_separation,
            "violations": self.violations,
        }


def _close(u, v, tol):
    scale = max(1.0, abs(u.alpha), abs(u.beta))
    return abs(u.alpha - v.alpha) <= tol * scale and abs(u.beta - v.beta) <= tol * scale


def check_arc_coloring(d, colors, tol=TOL_REL):
    """Return the list of relation signs eps_j with qop(a_l, a_k) = eps_j * a_out."""
    missing = [a for a in d.arcs if a not in colors]
    if missing:
        raise RelationViolated(f"arcs without colors: {missing}", arcs=missing)
    signs = []
    for c in d.crossings:
        lhs = qop(colors[c.arc_l], colors[c.arc_k])
        rhs = colors[c.arc_out]
        scale = max(1.0, abs(rhs.alpha), abs(rhs.beta))
        eps = sign_relative(lhs, rhs, tol * scale)
        if eps is None:
            residual = min(
                max(abs(lhs.alpha - rhs.alpha), abs(lhs.beta - rhs.beta)),
                max(abs(lhs.alpha + rhs.alpha), abs(lhs.beta + rhs.beta)),
            )
            raise RelationViolated(
                f"relation fails at crossing {c.index} (residual {residual:.3e})",
                crossing=c.index,
                residual=residual,
            )
        signs.append(eps)
    return signs


def propagate_regions(d, arc_colors, seed_region, seed_color, tol=TOL_REL):
    """Spread one region color over the dual graph and check every dual cycle."""
    adj = {r: [] for r in range(d.n_regions)}
    for lab in d.sides:
        a = arc_colors[d.side_arc[lab]]
        right, left = d.side_right[lab], d.side_left[lab]
        adj[right].append((left, a, True, lab))
        adj[left].append((right, a, False, lab))
    colors = {seed_region: seed_color}
    queue = deque([seed_region])
    while queue:
        r = queue.popleft()
        for nb, a, to_left, lab in adj[r]:
            val = qop(colors[r], a) if to_left else qop_inv(colors[r], a)
            if nb not in colors:
                colors[nb] = val
                queue.append(nb)
            elif not _close(colors[nb], val, tol):
                residual = max(
                    abs(colors[nb].alpha - val.alpha), abs(colors[nb].beta - val.beta)
                )
                raise InconsistentPropagation(
                    f"region colors disagree across side {lab} (residual {residual:.3e})",
                    side=lab,
                    residual=residual,
                )
    return dict(sorted(colors.items()))


def check_genericity(s, d, tol=TOL_SEP):
    """Check the side-region triples and the base point condition."""
    violations = []
    min_sep = float("inf")
    for lab in d.sides:
        a = s.arc_colors[d.side_arc[lab]]
        r = s.region_colors[d.side_right[lab]]
        r2 = qop(r, a)
        for name, u, v in (("arc~region", a, r), ("region~next", r, r2), ("next~arc", r2, a)):
            dist = hopf_distance(u, v)
            min_sep = min(min_sep, dist)
            if dist <= tol:
                violations.append(
                    {"kind": "triple", "side": lab, "pair": name, "separation": dist}
                )
    for kind, table in (("arc", s.arc_colors), ("region", s.region_colors)):
        for key, v in table.items():
            dist = hopf_distance(s.p, v)
            min_sep = min(min_sep, dist)
            if dist <= tol:
                violations.append({"kind": "p~" + kind, "index": key, "separation": dist})
    return GenericityReport(ok=not violations, violations=violations, min_separation=min_sep)


def _random_vector(rng, bound):
    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a or b:
            return ParabolicVector(complex(a), complex(b))


def find_region_coloring(
    d, arc_colors, rng_seed=0, max_tries=10000, tol=TOL_SEP, accept=None, regions=None, p=None
):
    """Search for a generic region-coloring and base point with small integer entries.

    Passing ``regions`` or ``p`` fixes that part and only searches the other.
    ``accept`` is an optional extra predicate on the candidate coloring; the
    pipeline uses it to also require non-degenerate solution values.
    """
    if d.n_crossings == 0:
        raise ValueError("region-coloring needs a diagram with crossings")
    check_arc_coloring(d, arc_colors)
    rng = random.Random(rng_seed)
    tries = 1 if regions is not None and p is not None else max_tries
    for attempt in range(tries):
        bound = 3 + attempt // 25
        if regions is None:
            seed_region = rng.randrange(d.n_regions)
            cand_regions = propagate_regions(d, arc_colors, seed_region, _random_vector(rng, bound))
        else:
            cand_regions = dict(regions)
        cand_p = _random_vector(rng, bound) if p is None else p
        cand = ShadowColoring(dict(arc_colors), cand_regions, cand_p)
        if not check_genericity(cand, d, tol).ok:
            continue
        if accept is not None and not accept(cand):
            continue
        return cand
    raise SearchExhausted(f"no generic region-coloring after {tries} tries", tries=tries)
