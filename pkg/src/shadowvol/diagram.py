"""Oriented link diagrams from PD codes.

PD convention used throughout: each crossing lists its four side labels
counterclockwise, starting from the incoming under-strand.  So position 0 is
the under-strand entering, position 2 the under-strand leaving, and
positions 1 and 3 belong to the over-strand.  Picture position 0 at the
bottom, 1 on the right, 2 at the top and 3 on the left:

        2                     2
        |                     |
   3 ---|--> 1           3 <--|--- 1
        |                     |
        0                     0
    positive              negative

A side is the piece of strand between two consecutive crossings; its PD
label is its name.  Sector q of a crossing is the corner between positions
q and q+1 (counterclockwise).

The quadrant sides e, f, g, h are named counterclockwise starting from the
outgoing over-strand, so h is the under piece on the right of the
over-strand and f the under piece on its left.
"""

import json
from dataclasses import dataclass, field

from .errors import MalformedPd, NonPlanar, TrivialComponent

QUADRANTS = ("e", "f", "g", "h")
# sectors named by the two quadrant sides bounding them, listed ccw from e
SECTORS = ("ef", "fg", "gh", "he")


@dataclass(frozen=True)
class PdCode:
    crossings: tuple

    def __len__(self):
        return len(self.crossings)


@dataclass
class Crossing:
    index: int
    labels: tuple
    sign: int
    e_pos: int
    sides: dict
    over_arc: int = 0
    under_in_arc: int = 0
    under_out_arc: int = 0
    regions: dict = field(default_factory=dict)

    @property
    def arc_k(self):
        """Arc of the over-strand."""
        return self.over_arc

    @property
    def arc_l(self):
        """Arc of the under piece on the right of the over-strand (side h)."""
        return self.under_in_arc if self.sign > 0 else self.under_out_arc

    @property
    def arc_out(self):
        """Arc of the under piece on the left of the over-strand (side f)."""
        return self.under_out_arc if self.sign > 0 else self.under_in_arc

    @property
    def is_kink(self):
        return len(set(self.labels)) < 4

    def sector_corner(self, sector):
        return (self.e_pos + SECTORS.index(sector)) % 4


@dataclass
class Region:
    index: int
    # (side label, +1 if traversed along the side's orientation else -1);
    # the region lies on the left of the traversal
    boundary: list
    corners: list


@dataclass
class LinkDiagram:
    pd: PdCode
    crossings: list
    sides: list
    side_tail: dict
    side_head: dict
    side_arc: dict
    side_left: dict
    side_right: dict
    arcs: dict
    regions: list
    components: list

    @property
    def n_crossings(self):
        return len(self.crossings)

    @property
    def n_arcs(self):
        return len(self.arcs)

    @property
    def n_regions(self):
        return len(self.regions)

    def to_json(self):
        return {
            "crossings": [
                {
                    "index": c.index,
                    "pd": list(c.labels),
                    "sign": c.sign,
                    "sides": dict(c.sides),
                    "over_arc": c.over_arc,
                    "arc_l": c.arc_l,
                    "arc_out": c.arc_out,
                    "regions": dict(c.regions),
                }
                for c in self.crossings
            ],
            "arcs": {str(k): v for k, v in self.arcs.items()},
            "regions": [
                {"index": r.index, "boundary": [[s, d] for s, d in r.boundary]}
                for r in self.regions
            ],
            "components": self.components,
        }


def parse_pd(text):
    """Parse a PD code from JSON text, a dict with key "pd", or a list."""
    if isinstance(text, (str, bytes)):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedPd(f"invalid JSON: {exc}") from None
    else:
        obj = text
    if isinstance(obj, dict):
        if "pd" not in obj:
            raise MalformedPd("missing key 'pd'")
        obj = obj["pd"]
    if not isinstance(obj, (list, tuple)) or len(obj) == 0:
        raise MalformedPd("PD code must be a non-empty list of crossings")
    crossings = []
    for i, x in enumerate(obj):
        if not isinstance(x, (list, tuple)) or len(x) != 4:
            raise MalformedPd(f"crossing {i} must have exactly 4 labels", crossing=i)
        row = []
        for lab in x:
            if isinstance(lab, bool) or not isinstance(lab, int):
                raise MalformedPd(f"crossing {i} has a non-integer label", crossing=i)
            row.append(lab)
        crossings.append(tuple(row))
    seen = {}
    for i, row in enumerate(crossings):
        for lab in row:
            seen.setdefault(lab, []).append(i)
    for lab, where in sorted(seen.items()):
        if len(where) != 2:
            raise MalformedPd(
                f"label {lab} appears {len(where)} times (must be 2)",
                label=lab,
                crossing=where[-1],
            )
    return PdCode(tuple(crossings))


def _occurrences(pd):
    occ = {}
    for c, row in enumerate(pd.crossings):
        for i, lab in enumerate(row):
            occ.setdefault(lab, []).append((c, i))
    return occ


def _other_end(occ, lab, half):
    a, b = occ[lab]
    return b if a == half else a


def _orient(pd, occ):
    """Walk every component; return tails, heads, component side lists."""
    tail, head = {}, {}
    components = []
    visited = set()
    n = len(pd.crossings)
    for c0 in range(n):
        if (c0, 0) in visited:
            continue
        comp = []
        arrive = (c0, 0)
        while arrive not in visited:
            c, i = arrive
            visited.add(arrive)
            out = (c, (i + 2) % 4)
            if out in visited:
                raise MalformedPd("inconsistent strand orientation", crossing=c)
            visited.add(out)
            lab = pd.crossings[c][out[1]]
            nxt = _other_end(occ, lab, out)
            if nxt[1] == 2:
                raise MalformedPd(
                    f"side {lab} leaves two crossings as an outgoing under-strand",
                    crossing=nxt[0],
                )
            tail[lab], head[lab] = out, nxt
            comp.append(lab)
            arrive = nxt
        if arrive != (c0, 0):
            raise MalformedPd("component walk did not close up", crossing=c0)
        components.append(comp)
    if len(visited) != 4 * n:
        raise TrivialComponent("a link component has only over-crossings")
    for comp in components:
        if all(tail[lab][1] == 2 for lab in comp):
            raise TrivialComponent("a link component has only under-crossings")
    return tail, head, components


def _arcs(pd, tail, components):
    side_arc, arcs = {}, {}
    next_id = 1
    for comp in components:
        # start each component at a side leaving an under-pass
        start = next(k for k, lab in enumerate(comp) if tail[lab][1] == 2)
        order = comp[start:] + comp[:start]
        current = None
        for lab in order:
            if tail[lab][1] == 2:
                current = next_id
                arcs[current] = []
                next_id += 1
            side_arc[lab] = current
            arcs[current].append(lab)
    # number arcs by the label of the side that starts them
    order = sorted(arcs, key=lambda a: arcs[a][0])
    renumber = {old: new for new, old in enumerate(order, start=1)}
    side_arc = {lab: renumber[a] for lab, a in side_arc.items()}
    arcs = {renumber[a]: sides for a, sides in arcs.items()}
    return side_arc, dict(sorted(arcs.items()))


def compute_regions(pd):
    """Faces of the planar 4-valent graph, each as a list of (side, corner) steps.

    Returns a list of faces; each face is a list of (label, start_half, corner)
    where ``start_half`` is the half-edge the traversal leaves from and
    ``corner`` is the (crossing, sector) entered at the far end.
    """
    if isinstance(pd, LinkDiagram):
        pd = pd.pd
    occ = _occurrences(pd)
    n = len(pd.crossings)
    used = set()
    faces = []
    for c in range(n):
        for i in range(4):
            if (c, i) in used:
                continue
            face = []
            half = (c, i)
            while half not in used:
                used.add(half)
                lab = pd.crossings[half[0]][half[1]]
                far = _other_end(occ, lab, half)
                corner = (far[0], (far[1] - 1) % 4)
                face.append((lab, half, corner))
                half = (far[0], (far[1] - 1) % 4)
            if half != (c, i):
                raise NonPlanar("face tracing did not close up", crossing=c)
            faces.append(face)
    if n > 0 and len(faces) != n + 2:
        raise NonPlanar(
            f"diagram has {len(faces)} faces, expected {n + 2} "
            "(non-planar PD or split diagram)",
            faces=len(faces),
            crossings=n,
        )
    return faces


def crossing_sign(over_in_pos):
    """Sign from the position where the over-strand enters (3 -> +1, 1 -> -1)."""
    if over_in_pos == 3:
        return 1
    if over_in_pos == 1:
        return -1
    raise ValueError("over-strand must enter at position 1 or 3")


def mirror(pd):
    """Mirror image: reverse the cyclic order at every crossing, keeping position 0."""
    return PdCode(tuple((r[0], r[3], r[2], r[1]) for r in pd.crossings))


def build_diagram(pd):
    if not isinstance(pd, PdCode):
        pd = parse_pd(pd)
    if len(pd.crossings) == 0:
        raise TrivialComponent("diagram without crossings is a trivial component")
    occ = _occurrences(pd)
    tail, head, components = _orient(pd, occ)
    side_arc, arcs = _arcs(pd, tail, components)

    crossings = []
    for c, row in enumerate(pd.crossings):
        # the over-strand enters at whichever of 1, 3 is the head of its side
        in_pos = 3 if head[row[3]] == (c, 3) else 1
        if head[row[in_pos]] != (c, in_pos) or tail[row[(in_pos + 2) % 4]] != (c, (in_pos + 2) % 4):
            raise MalformedPd("over-strand orientation is inconsistent", crossing=c)
        sign = crossing_sign(in_pos)
        e_pos = (in_pos + 2) % 4
        sides = {q: row[(e_pos + k) % 4] for k, q in enumerate(QUADRANTS)}
        cr = Crossing(index=c, labels=row, sign=sign, e_pos=e_pos, sides=sides)
        cr.over_arc = side_arc[row[e_pos]]
        if side_arc[row[(e_pos + 2) % 4]] != cr.over_arc:
            raise MalformedPd("over-strand changes arc", crossing=c)
        cr.under_in_arc = side_arc[row[0]]
        cr.under_out_arc = side_arc[row[2]]
        crossings.append(cr)

    faces = compute_regions(pd)
    regions = []
    side_left, side_right = {}, {}
    corner_region = {}
    for r, face in enumerate(faces):
        boundary = []
        for lab, half, corner in face:
            d = 1 if tail[lab] == half else -1
            boundary.append((lab, d))
            if d == 1:
                side_left[lab] = r
            else:
                side_right[lab] = r
            corner_region[corner] = r
        regions.append(Region(index=r, boundary=boundary, corners=[f[2] for f in face]))
    for cr in crossings:
        cr.regions = {s: corner_region[(cr.index, cr.sector_corner(s))] for s in SECTORS}

    return LinkDiagram(
        pd=pd,
        crossings=crossings,
        sides=sorted(tail),
        side_tail=tail,
        side_head=head,
        side_arc=side_arc,
        side_left=side_left,
        side_right=side_right,
        arcs=arcs,
        regions=regions,
        components=components,
    )
