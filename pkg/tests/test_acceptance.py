"""Acceptance criteria 1-8, one recorded pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import cmath
import math
import random

import test_properties as props
from shadowvol.potential import (
    Assignment,
    CrossingTerm,
    PotentialFunction,
    build_potential,
    build_simplified,
    check_H,
    eval_V0,
    mod_pi2_distance,
    r_values,
    term_V0,
)
from shadowvol.solution import construct_solution

from conftest import load

PI2 = math.pi ** 2
FIG8_PRINTED = 2.0299
N_RANDOM = 100


def v0_of(d, s):
    pf = build_potential(d, s)
    asg = construct_solution(d, s).assignment()
    return pf, asg, eval_V0(pf, asg)


def randomized(name, count):
    for seed in range(count):
        yield load(name, randomize=seed)


def test_criterion_1_figure_eight(criterion):
    # fig8_minus uses t = (-1 - sqrt(3) i)/2, fig8_plus its conjugate
    _, _, minus = v0_of(*load("fig8_minus"))
    _, _, plus = v0_of(*load("fig8_plus"))
    ok = (
        abs(minus.imag - FIG8_PRINTED) < 5e-4
        and mod_pi2_distance(-minus.real, 0) < 1e-6
        and abs(plus.imag + FIG8_PRINTED) < 5e-4
        and mod_pi2_distance(-plus.real, 0) < 1e-6
    )
    criterion(1, ok, f"figure-eight Im V0 = {minus.imag:.10f} / {plus.imag:.10f}, Re = {minus.real:.1e}")


def test_criterion_2_trefoil(criterion):
    _, _, v0 = v0_of(*load("trefoil"))
    ok = abs(v0.imag) < 1e-9 and mod_pi2_distance(-v0.real, PI2 / 6) < 1e-6
    criterion(2, ok, f"trefoil V0 = {v0.real:.12f} {v0.imag:+.1e}i, pi^2/6 = {PI2 / 6:.12f}")


def test_criterion_3_saddle(criterion):
    worst = 0.0
    count = 0
    for name in ("fig8_minus", "trefoil"):
        pf, asg, _ = v0_of(*load(name))
        worst = max(worst, check_H(pf, asg).max_residual)
        for d, s in randomized(name, N_RANDOM):
            pf, asg, _ = v0_of(d, s)
            worst = max(worst, check_H(pf, asg).max_residual)
            count += 1
    criterion(3, worst < 1e-9, f"max saddle residual {worst:.1e} over fixtures and {count} random colorings")


def test_criterion_4_coloring_invariance(criterion):
    spreads = {}
    for name in ("fig8_minus", "trefoil"):
        _, _, ref = v0_of(*load(name))
        spreads[name] = max(mod_pi2_distance(v0_of(d, s)[2], ref) for d, s in randomized(name, N_RANDOM))
    worst = max(spreads.values())
    criterion(4, worst < 1e-6, f"V0 mod pi^2 spread over {N_RANDOM} colorings each: {worst:.1e}")


def test_criterion_5_parity(criterion):
    worst = 0.0
    total = 0.0
    for name in ("fig8_minus", "fig8_plus", "trefoil"):
        pf, asg, _ = v0_of(*load(name))
        simplified = build_simplified(pf, asg)
        r = r_values(simplified.pf, simplified.restrict(asg))
        worst = max([worst] + [abs(v - 2 * round(v.real / 2)) for v in r.values()])
        total = max(total, abs(sum(r.values())))
    ok = worst < 1e-9 and total < 1e-9
    criterion(5, ok, f"r_k distance from even integers {worst:.1e}, |sum r_k| {total:.1e}")


def test_criterion_6_degenerate_nullity(criterion):
    rng = random.Random(6)
    term = CrossingTerm(0, True, {"e": 1, "f": 2, "g": 3, "h": 4})
    pf = PotentialFunction([term], [1, 2, 3, 4], [0])

    def point():
        return cmath.rect(rng.uniform(0.1, 10), rng.uniform(-math.pi, math.pi))

    worst = 0.0
    for _ in range(1000):
        z = point()
        asg = Assignment(z={k: z for k in (1, 2, 3, 4)}, w={0: (point(), point(), point())})
        worst = max(worst, abs(term_V0(pf, asg, 0)))
    criterion(6, worst <= 1e-12, f"max |(V_j)_0| on 1000 z-equal points {worst:.1e}")


def test_criterion_7_cross_check(criterion):
    from shadowvol.triangulation import cross_check

    worst = {"distance": 0.0, "ptolemy": 0.0, "gluing": 0.0, "flattening": 0.0}
    runs = 0
    for name in ("fig8_minus", "trefoil"):
        cases = [load(name)] + list(randomized(name, 20))
        for d, s in cases:
            pf, _, v0 = v0_of(d, s)
            cc = cross_check(d, s, pf.degenerate)
            worst["distance"] = max(worst["distance"], mod_pi2_distance(cc.total, v0))
            worst["ptolemy"] = max(worst["ptolemy"], cc.ptolemy_max)
            worst["gluing"] = max(worst["gluing"], cc.gluing_max)
            worst["flattening"] = max(worst["flattening"], cc.flattening_max)
            runs += 1
    ok = worst["distance"] < 1e-6 and all(worst[k] < 1e-9 for k in ("ptolemy", "gluing", "flattening"))
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    criterion(7, ok, f"{runs} triangulations: {detail}")


def test_criterion_8_property_suites(criterion):
    suites = [
        props.test_quandle_axioms,
        props.test_det_invariance,
        props.test_hopf_equivariance,
        props.test_propagation_path_independence,
    ]
    failed = []
    for suite in suites:
        try:
            suite(random.Random(suite.__name__))
        except AssertionError:
            failed.append(suite.__name__)
    criterion(8, not failed, f"{len(suites)} suites x {props.N} cases" + (f", failed: {failed}" if failed else ""))
