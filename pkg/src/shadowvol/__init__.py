"""Complex volume of boundary-parabolic link representations from shadow-colorings."""

from .coloring import (
    ShadowColoring,
    check_arc_coloring,
    check_genericity,
    find_region_coloring,
    propagate_regions,
)
from .diagram import LinkDiagram, PdCode, build_diagram, compute_regions, parse_pd
from .dilog import li2
from .potential import (
    Assignment,
    PotentialFunction,
    build_potential,
    build_simplified,
    check_H,
    eval_V0,
    grad_w,
    grad_z,
    r_values,
)
from .quandle import INFINITY, ParabolicVector, det2, hopf, mobius_apply, qop, qop_inv, to_matrix
from .solution import construct_solution, extract_complex_volume

__version__ = "0.1.0"
