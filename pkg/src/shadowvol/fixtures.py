"""Built-in jobs: the figure-eight knot (both conjugate colorings) and a trefoil with a kink."""

import copy
import math

from .errors import UnknownExample

_SQ3 = math.sqrt(3.0)


def _c(z):
    z = complex(z)
    return [z.real, z.imag]


def _fig8(t):
    return {
        "pd": [[4, 7, 5, 8], [8, 3, 1, 4], [2, 6, 3, 5], [6, 2, 7, 1]],
        "signs_hint": [-1, -1, 1, 1],
        # keyed by a side of each arc: a1 = {1,2}, a2 = {3,4}, a3 = {5,6}, a4 = {7,8}
        "arc_colors": {
            "1": [_c(0), _c(t)],
            "3": [_c(1), _c(0)],
            "5": [_c(-t), _c(1 + t)],
            "7": [_c(-t), _c(t)],
        },
        "region_colors": [{"side": 4, "on": "right", "color": [_c(1), _c(1)]}],
        "p": [_c(2), _c(1)],
    }


EXAMPLES = {
    "fig8_minus": _fig8(complex(-0.5, -_SQ3 / 2)),
    "fig8_plus": _fig8(complex(-0.5, _SQ3 / 2)),
    "trefoil": {
        # the fourth crossing is a negative kink, degenerate for this coloring
        "pd": [[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 8], [7, 6, 8, 7]],
        "signs_hint": [1, 1, 1, -1],
        # a1 = {2,3}, a2 = {4,5}, a3 = {6,7}, a4 = {8,1}
        "arc_colors": {
            "2": [_c(1), _c(0)],
            "4": [_c(0), _c(1)],
            "6": [_c(-1), _c(1)],
            "8": [_c(-1), _c(1)],
        },
        # the unbounded region, left of side 2
        "region_colors": [{"side": 2, "on": "left", "color": [_c(-1), _c(2)]}],
        "p": [_c(2), _c(1)],
    },
}


def get_example(name):
    if name not in EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}", known=sorted(EXAMPLES))
    return copy.deepcopy(EXAMPLES[name])
