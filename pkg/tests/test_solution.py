import math

import pytest

from shadowvol.coloring import ShadowColoring
from shadowvol.errors import GenericityViolated
from shadowvol.pipeline import parse_job, run_volume
from shadowvol.fixtures import get_example
from shadowvol.potential import build_potential, check_H, eval_V0, mod_pi2_distance
from shadowvol.solution import (
    construct_solution,
    extract_complex_volume,
    reduce_mod_pi2,
    solution_violations,
)

from conftest import T_MINUS as t, load

PI2 = math.pi ** 2


def test_fig8_z_values(fig8):
    d, s = fig8
    sol = construct_solution(d, s)
    expected = [2, -2 / (2 * t + 1), 1 / (t + 2), 1, -3 * t - 2, (3 * t + 2) / (2 * t), 1.5, 3]
    for k, value in enumerate(expected, start=1):
        assert abs(sol.z[k] - value) < 1e-12
    assert sol.w == {}


def test_trefoil_values(trefoil):
    d, s = trefoil
    sol = construct_solution(d, s)
    for k, value in enumerate([1.5, 0.5, 1, -2, 2, 3, 3, 3], start=1):
        assert abs(sol.z[k] - value) < 1e-12
    we, wf, wg, wh = sol.w[3]
    # w on side 7 (e and f of the kink) is 5/8, on side 6 (g) it is 5/2
    assert abs(we - 5 / 8) < 1e-12 and abs(wg - 5 / 2) < 1e-12
    assert abs(wf - we) < 1e-12 and abs(wh - wg) < 1e-12
    assert abs(wh - we * wg / wf) < 1e-12


def test_negating_arc_representative_keeps_solution(fig8):
    d, s = fig8
    arcs = dict(s.arc_colors)
    arcs[2] = -arcs[2]
    flipped = construct_solution(d, ShadowColoring(arcs, s.region_colors, s.p))
    base = construct_solution(d, s)
    assert all(abs(flipped.z[k] - base.z[k]) < 1e-15 for k in d.sides)


def test_violations_empty_on_fixtures(fig8, trefoil):
    for d, s in (fig8, trefoil):
        sol = construct_solution(d, s)
        assert solution_violations(d, sol) == []


def test_zero_denominator(fig8):
    d, s = fig8
    regions = dict(s.region_colors)
    lab = 1
    regions[d.side_right[lab]] = s.arc_colors[d.side_arc[lab]]
    with pytest.raises(GenericityViolated):
        construct_solution(d, ShadowColoring(s.arc_colors, regions, s.p))


def test_extract_examples():
    r = extract_complex_volume(2.0299j)
    assert r.vol == 2.0299 and r.cs_mod_pi2 == 0
    r = extract_complex_volume(-1.6449)
    assert r.vol == 0 and abs(r.cs_mod_pi2 - 1.6449) < 1e-15
    a, b = extract_complex_volume(0.3 + 2j), extract_complex_volume(0.3 + PI2 + 2j)
    assert abs(a.cs_mod_pi2 - b.cs_mod_pi2) < 1e-12 and a.vol == b.vol


def test_reduce_range():
    assert reduce_mod_pi2(PI2 / 2) == pytest.approx(PI2 / 2)
    assert reduce_mod_pi2(-PI2 / 2) == pytest.approx(PI2 / 2)
    for x in (-30.0, -5.0, 0.0, 4.0, 29.0):
        r = reduce_mod_pi2(x)
        assert -PI2 / 2 < r <= PI2 / 2
        assert abs((x - r) / PI2 - round((x - r) / PI2)) < 1e-12


@pytest.mark.parametrize("name", ["fig8_minus", "trefoil"])
def test_randomized_colorings_are_solutions(name):
    ref = None
    for seed in range(100):
        d, s = load(name, randomize=seed)
        pf = build_potential(d, s)
        sol = construct_solution(d, s, pf.degenerate)
        asg = sol.assignment()
        assert check_H(pf, asg).max_residual < 1e-9
        assert solution_violations(d, sol, pf.degenerate) == []
        v0 = eval_V0(pf, asg)
        ref = v0 if ref is None else ref
        assert mod_pi2_distance(v0, ref) < 1e-6


def test_conjugate_coloring_conjugates_V0():
    # vol changes sign while cs is kept, as the two figure-eight colorings show
    for seed in range(20):
        d, s = load("fig8_minus", randomize=seed)
        pf = build_potential(d, s)
        v0 = eval_V0(pf, construct_solution(d, s).assignment())
        sc = s.conjugate()
        v0c = eval_V0(build_potential(d, sc), construct_solution(d, sc).assignment())
        assert mod_pi2_distance(v0c, v0.conjugate()) < 1e-9
