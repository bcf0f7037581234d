"""End-to-end composition used by the CLI and the acceptance tests."""

from dataclasses import dataclass, field

from .coloring import (
    ShadowColoring,
    check_arc_coloring,
    check_genericity,
    find_region_coloring,
    propagate_regions,
)
from .diagram import build_diagram, parse_pd
from .errors import InconsistentPropagation, InvalidJob, NotAtSaddle, ShadowVolError
from .potential import (
    PI_I,
    TOL_DEGENERATE,
    build_potential,
    build_simplified,
    check_H,
    eval_V0,
    grad_z,
    mod_pi2_distance,
    r_values,
    term_V0,
)
from .quandle import hopf_distance, vector_from_json, vector_to_json
from .solution import construct_solution, extract_complex_volume, solution_violations
from .triangulation import build_tetrahedra, cross_check

DEFAULT_TOLERANCES = {"saddle": 1e-9, "sep": 1e-9, "agree": 1e-6}


@dataclass
class Job:
    pd: object
    arc_colors: dict
    region_colors: list = None
    p: object = None
    seed: int = 0
    signs_hint: list = None
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))


def parse_job(obj):
    if not isinstance(obj, dict):
        raise InvalidJob("job must be a JSON object")
    for key in ("pd", "arc_colors"):
        if key not in obj:
            raise InvalidJob(f"job is missing {key!r}")
    try:
        arcs = {int(k): vector_from_json(v) for k, v in obj["arc_colors"].items()}
        regions = None
        if obj.get("region_colors") is not None:
            regions = []
            for entry in obj["region_colors"]:
                on = entry.get("on", "right")
                if on not in ("left", "right"):
                    raise InvalidJob("region 'on' must be 'left' or 'right'")
                regions.append((int(entry["side"]), on, vector_from_json(entry["color"])))
            if not regions:
                regions = None
        p = vector_from_json(obj["p"]) if obj.get("p") is not None else None
    except (TypeError, ValueError, KeyError, AttributeError) as exc:
        raise InvalidJob(f"bad job field: {exc}") from None
    tol = dict(DEFAULT_TOLERANCES)
    tol.update(obj.get("tolerances") or {})
    return Job(
        pd=parse_pd(obj["pd"]),
        arc_colors=arcs,
        region_colors=regions,
        p=p,
        seed=int(obj.get("seed", 0)),
        signs_hint=obj.get("signs_hint"),
        tolerances=tol,
    )


def _arc_colors(d, by_side):
    colors = {}
    for lab, v in by_side.items():
        if lab not in d.side_arc:
            raise InvalidJob(f"arc color given for unknown side {lab}", side=lab)
        a = d.side_arc[lab]
        if a in colors and colors[a] != v:
            raise InvalidJob(f"conflicting colors for arc {a}", arc=a)
        colors[a] = v
    missing = [a for a in d.arcs if a not in colors]
    if missing:
        raise InvalidJob(f"no color for arcs {missing}", arcs=missing)
    return dict(sorted(colors.items()))


def _region_colors(d, arc_colors, entries, tol):
    def region_of(side, on):
        if side not in d.side_arc:
            raise InvalidJob(f"region color refers to unknown side {side}", side=side)
        return d.side_right[side] if on == "right" else d.side_left[side]

    side, on, color = entries[0]
    regions = propagate_regions(d, arc_colors, region_of(side, on), color)
    for side, on, color in entries[1:]:
        got = regions[region_of(side, on)]
        if abs(got.alpha - color.alpha) > tol or abs(got.beta - color.beta) > tol:
            raise InconsistentPropagation(
                f"given color of the region {on} of side {side} disagrees with propagation",
                side=side,
            )
    return regions


def _usable(d, degenerate):
    def accept(cand):
        try:
            sol = construct_solution(d, cand, degenerate)
            build_tetrahedra(d, cand, degenerate)
        except ShadowVolError:
            return False
        return not solution_violations(d, sol, degenerate)

    return accept


def prepare(job, seed=None):
    """Diagram and shadow-coloring for a job, plus the validation report."""
    d = build_diagram(job.pd)
    crossing_signs = [c.sign for c in d.crossings]
    if job.signs_hint is not None and list(job.signs_hint) != crossing_signs:
        raise InvalidJob(
            "crossing signs differ from signs_hint",
            computed=crossing_signs,
            hint=list(job.signs_hint),
        )
    arcs = _arc_colors(d, job.arc_colors)
    relation_signs = check_arc_coloring(d, arcs)
    sep = job.tolerances["sep"]
    regions = None
    if job.region_colors:
        regions = _region_colors(d, arcs, job.region_colors, 1e-9)
    if regions is not None and job.p is not None:
        s = ShadowColoring(arcs, regions, job.p)
    else:
        probe = ShadowColoring(arcs, {}, job.p)
        degenerate = _degenerate(d, probe)
        s = find_region_coloring(
            d,
            arcs,
            rng_seed=job.seed if seed is None else seed,
            tol=sep,
            accept=_usable(d, degenerate),
            regions=regions,
            p=job.p,
        )
    genericity = check_genericity(s, d, sep)
    return d, s, {"crossing_signs": crossing_signs, "relation_signs": relation_signs, "genericity": genericity}


def _degenerate(d, s):
    return [
        c.index
        for c in d.crossings
        if hopf_distance(s.arc_colors[c.arc_l], s.arc_colors[c.arc_k]) < TOL_DEGENERATE
    ]


def coloring_json(s):
    return {
        "arc_colors": {str(k): vector_to_json(v) for k, v in s.arc_colors.items()},
        "region_colors": {str(k): vector_to_json(v) for k, v in s.region_colors.items()},
        "p": vector_to_json(s.p),
    }


def _c(z):
    return [z.real, z.imag]


def run_check(job, seed=None):
    """Validation only.  Returns (report, exit code)."""
    d, s, info = prepare(job, seed)
    report = {
        "diagram": d.to_json(),
        "crossing_signs": info["crossing_signs"],
        "relation_signs": info["relation_signs"],
        "coloring": coloring_json(s),
        "genericity": info["genericity"].to_json(),
        "ok": info["genericity"].ok,
    }
    return report, 0 if report["ok"] else 1


def run_volume(job, seed=None, cross=False):
    """Full pipeline.  Returns (report, exit code)."""
    d, s, info = prepare(job, seed)
    tol = job.tolerances
    report = {
        "crossing_signs": info["crossing_signs"],
        "relation_signs": info["relation_signs"],
        "coloring": coloring_json(s),
        "genericity": info["genericity"].to_json(),
    }
    if not info["genericity"].ok:
        report["ok"] = False
        return report, 1

    pf = build_potential(d, s)
    sol = construct_solution(d, s, pf.degenerate)
    asg = sol.assignment()
    h = check_H(pf, asg)
    v0 = eval_V0(pf, asg)
    result = extract_complex_volume(v0)
    simplified = build_simplified(pf, asg)
    sasg = simplified.restrict(asg)
    v0_hat = eval_V0(simplified.pf, sasg)
    gates = {"saddle": h.max_residual < tol["saddle"]}
    try:
        r_values(simplified.pf, sasg, tol["saddle"])
        gates["parity"] = True
    except NotAtSaddle:
        gates["parity"] = False
    r_raw = {k: grad_z(simplified.pf, sasg, k) / PI_I for k in simplified.pf.sides}
    report.update(result.to_json())
    report.update(
        {
            "degenerate_crossings": pf.degenerate,
            "solution": sol.to_json(),
            "solution_violations": solution_violations(d, sol, pf.degenerate),
            "H": h.to_json(),
            "r": {str(k): _c(v) for k, v in r_raw.items()},
            "simplified": {
                "classes": {str(k): v for k, v in simplified.classes.items()},
                "V0": _c(v0_hat),
                "distance_to_V0": mod_pi2_distance(v0_hat, v0),
            },
            "degenerate_V0": {str(j): _c(term_V0(pf, asg, j)) for j in pf.degenerate},
        }
    )
    if cross:
        cc = cross_check(d, s, pf.degenerate)
        block = cc.to_json()
        block["distance_to_V0"] = mod_pi2_distance(cc.total, v0)
        report["cross_check"] = block
        gates["cross_check"] = (
            block["distance_to_V0"] < tol["agree"]
            and cc.ptolemy_max < tol["saddle"]
            and cc.gluing_max < tol["saddle"]
        )
    report["gates"] = gates
    report["ok"] = all(gates.values())
    return report, 0 if report["ok"] else 2
