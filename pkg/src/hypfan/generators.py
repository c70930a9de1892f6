"""Generators for the standard example families.

The 2D examples are doubles of a planar region: a disk with ``g`` holes in
a row along the x-axis, symmetric under both coordinate reflections.  The
surface is the boundary of a thickening of that region; cutting it by the
three coordinate planes (and optionally two extra planes ``x = +-c``) gives
the orbit graph.  Every cut line inside the region becomes a loop made of a
top and a bottom copy; every boundary curve of the region is a loop on the
equator ``z = 0``.

Vertices of the surface are the cut points on the region boundary (one
each) and the crossings of two cut lines inside the region (a top and a
bottom copy each).

The 3D example splits S^3 into two solid tori; each solid torus is cut by
two pairs of meridian disks and by two planes through its core circle.
"""

from dataclasses import dataclass
from typing import Optional

from .fan import Fan
from .surface import SurfaceComplex
from .cells3 import CellComplex3
from .quotient import Involution2, Involution3

_BOUNDARY_SLOTS = {"fwd": 0, "top": 1, "bwd": 2, "bot": 3}
_TOP_SLOTS = {"+x": 0, "+y": 1, "-x": 2, "-y": 3}
_BOT_SLOTS = {"+x": 0, "-y": 1, "-x": 2, "+y": 3}
_OPPOSITE = {"+x": "-x", "-x": "+x", "+y": "-y", "-y": "+y"}


@dataclass
class Example:
    name: str
    complex: object
    fan: Optional[Fan]
    involution: object = None
    betti: tuple = ()

    def __iter__(self):
        return iter((self.complex, self.fan))


class PlanarDouble:
    """Builds the rotation system of a doubled planar cut pattern.

    ``cycles`` are the region's boundary curves as point lists, oriented with
    the region on the left.  ``chains`` are ``(axis, points)`` with points
    ordered along +x (axis ``"h"``) or +y (axis ``"v"``); the first and last
    point of a chain lie on the boundary, the rest are interior crossings.
    """

    def __init__(self, cycles, chains):
        self.cycles = [list(c) for c in cycles]
        self.chains = [(ax, list(pts)) for ax, pts in chains]
        boundary = [p for c in self.cycles for p in c]
        interior = []
        for _, pts in self.chains:
            for q in pts[1:-1]:
                if q not in interior:
                    interior.append(q)
        self.vertices = [(p, None) for p in boundary]
        self.vertices += [(q, s) for q in interior for s in ("top", "bot")]
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.interior = set(interior)

    def dart(self, point, sheet, slot):
        if point in self.interior:
            table = _TOP_SLOTS if sheet == "top" else _BOT_SLOTS
            return 4 * self.vindex[(point, sheet)] + table[slot]
        return 4 * self.vindex[(point, None)] + _BOUNDARY_SLOTS[slot]

    def _end_slot(self, point, sheet, direction):
        """Slot for leaving ``point`` along a chain in ``direction``."""
        if point in self.interior:
            return direction
        return sheet  # boundary points: the 'top'/'bot' slot

    def edges(self):
        out = []
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out.append((self.dart(a, None, "fwd"), self.dart(b, None, "bwd")))
        for ax, pts in self.chains:
            plus = "+x" if ax == "h" else "+y"
            for a, b in zip(pts, pts[1:]):
                for sheet in ("top", "bot"):
                    out.append((self.dart(a, sheet, self._end_slot(a, sheet, plus)),
                                self.dart(b, sheet, self._end_slot(b, sheet, _OPPOSITE[plus]))))
        return out

    def rotations(self):
        return [[4 * i + s for s in range(4)] for i in range(len(self.vertices))]

    def complex(self):
        return SurfaceComplex(self.rotations(), self.edges())

    def point_involution(self, pmap):
        """Dart map of the point reflection ``(x, y, z) -> -(x, y, z)``."""
        n = 4 * len(self.vertices)
        sigma = [None] * n
        for (p, sheet) in self.vertices:
            q = pmap[p]
            if sheet is None:
                for slot, image in (("fwd", "fwd"), ("top", "bot"),
                                    ("bwd", "bwd"), ("bot", "top")):
                    sigma[self.dart(p, None, slot)] = self.dart(q, None, image)
            else:
                other = "bot" if sheet == "top" else "top"
                for slot in _TOP_SLOTS:
                    sigma[self.dart(p, sheet, slot)] = self.dart(q, other, _OPPOSITE[slot])
        return sigma


def _pretzel(g, cut_planes):
    m, odd = divmod(g, 2)[0], g % 2 == 1
    L = [("l", t) for t in range(g + 1)]
    R = [("r", t) for t in range(g + 1)]
    outer = [R[g]] + ([("q1t",)] if cut_planes else []) + [("ot",)] \
        + ([("q2t",)] if cut_planes else []) + [L[0]] \
        + ([("q2b",)] if cut_planes else []) + [("ob",)] \
        + ([("q1b",)] if cut_planes else [])
    cycles = [outer]
    for s in range(1, g + 1):
        if odd and s == m + 1:
            cycles.append([L[s], ("hb",), R[s - 1], ("ht",)])
        else:
            cycles.append([L[s], R[s - 1]])
    chains = []
    for t in range(g + 1):
        inner = []
        if cut_planes and t == 0:
            inner.append(("X2",))
        if not odd and t == m:
            inner.append(("O",))
        if cut_planes and t == g:
            inner.append(("X1",))
        chains.append(("h", [L[t]] + inner + [R[t]]))
    if odd:
        chains += [("v", [("ob",), ("hb",)]), ("v", [("ht",), ("ot",)])]
    else:
        chains.append(("v", [("ob",), ("O",), ("ot",)]))
    if cut_planes:
        chains += [("v", [("q1b",), ("X1",), ("q1t",)]),
                   ("v", [("q2b",), ("X2",), ("q2t",)])]
    pmap = {("ot",): ("ob",), ("ob",): ("ot",), ("ht",): ("hb",), ("hb",): ("ht",),
            ("q1t",): ("q2b",), ("q2b",): ("q1t",), ("q1b",): ("q2t",), ("q2t",): ("q1b",),
            ("O",): ("O",), ("X1",): ("X2",), ("X2",): ("X1",)}
    for t in range(g + 1):
        pmap[L[t]] = R[g - t]
        pmap[R[t]] = L[g - t]
    return PlanarDouble(cycles, chains), pmap


def pretzel_complex(g, cut_planes=False):
    """Orbit complex of the genus-``g`` surface and its antipodal involution."""
    layout, pmap = _pretzel(g, cut_planes)
    c = layout.complex()
    sigma = Involution2(c, layout.point_involution(pmap), reverses_orientation=True)
    return c, sigma


OCTAHEDRAL_FAN = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}


def generate_octahedral():
    """The three-great-circle decomposition of S^2 with its standard fan."""
    c, sigma = pretzel_complex(0)
    return Example("octahedral", c, Fan(2, OCTAHEDRAL_FAN), sigma, (1, 0, 1))


def generate_genus_g(g, variant="eight", budget=10**6):
    """Genus-g surface cut into 8 (or 16) domains, with a searched fan."""
    from . import errors
    from .fansearch import search_fan
    if g < 1:
        raise ValueError("genus must be at least 1")
    variant = {"8": "eight", "16": "sixteen"}.get(str(variant), str(variant))
    if variant not in ("eight", "sixteen"):
        raise ValueError(f"unknown variant {variant!r}")
    c, sigma = pretzel_complex(g, cut_planes=(variant == "sixteen"))
    result = search_fan(c, budget=budget)
    if result.fan is None:
        raise errors.FanSearchFailed(
            f"no fan found for genus {g} ({variant}): {result.status}",
            complex=c, status=result.status)
    return Example(f"genus{g}-{variant}", c, result.fan, sigma, (1, 2 * g, 1))


def generate_nonorientable(g, variant="sixteen", budget=10**6):
    """Quotient of the genus-g example by its point reflection, with a searched fan."""
    from . import errors
    from .fansearch import search_fan
    from .quotient import quotient_by_involution
    if g < 1:
        raise ValueError("genus must be at least 1")
    variant = {"8": "eight", "16": "sixteen"}.get(str(variant), str(variant))
    if variant not in ("eight", "sixteen"):
        raise ValueError(f"unknown variant {variant!r}")
    c, sigma = pretzel_complex(g, cut_planes=(variant == "sixteen"))
    q = quotient_by_involution(c, sigma)
    result = search_fan(q, budget=budget)
    if result.fan is None:
        raise errors.FanSearchFailed(
            f"no fan found for the quotient of genus {g} ({variant}): {result.status}",
            complex=q, status=result.status)
    return Example(f"nonorientable{g + 1}-{variant}", q, result.fan, None, (1, g, 0))


# S^3 as two solid tori

H0 = "H0"
S3_FAN = {
    "H0": (-1, 0, 0),
    "H1_lambda": (1, -1, 0),
    "H1_mu": (1, 1, 0),
    "H2_lambda": (1, 0, -1),
    "H2_mu": (1, 0, 1),
}


def _h(k, i):
    return f"H{k}_lambda" if i % 2 == 0 else f"H{k}_mu"


def s3_complex():
    """Cells of S^3 cut by the torus H0 and the four slope hypersurfaces.

    Torus coordinates: ``i`` indexes the four cuts in the disk angle of the
    first solid torus (which is the core direction of the second), ``j`` the
    four cuts along the core of the first.
    """
    r4 = range(4)

    def T(i, j): return 4 * (i % 4) + j % 4
    def P1(j): return 16 + j % 4
    def P2(i): return 20 + i % 4

    def Ta(i, j): return 4 * (i % 4) + j % 4
    def Tb(i, j): return 16 + 4 * (i % 4) + j % 4
    def C1(j): return 32 + j % 4
    def R1(i, j): return 36 + 4 * (i % 4) + j % 4
    def C2(i): return 52 + i % 4
    def R2(i, j): return 56 + 4 * (i % 4) + j % 4

    edges = [None] * 72
    for i in r4:
        for j in r4:
            edges[Ta(i, j)] = (T(i, j), T(i + 1, j))
            edges[Tb(i, j)] = (T(i, j), T(i, j + 1))
            edges[R1(i, j)] = (P1(j), T(i, j))
            edges[R2(i, j)] = (P2(i), T(i, j))
    for k in r4:
        edges[C1(k)] = (P1(k), P1(k + 1))
        edges[C2(k)] = (P2(k), P2(k + 1))

    def Q(i, j): return 4 * (i % 4) + j % 4
    def D1(i, j): return 16 + 4 * (i % 4) + j % 4
    def W1(i, j): return 32 + 4 * (i % 4) + j % 4
    def D2(i, j): return 48 + 4 * (i % 4) + j % 4
    def W2(i, j): return 64 + 4 * (i % 4) + j % 4

    faces, labels = [None] * 80, [None] * 80
    for i in r4:
        for j in r4:
            faces[Q(i, j)] = (Ta(i, j), Ta(i, j + 1), Tb(i, j), Tb(i + 1, j))
            labels[Q(i, j)] = H0
            faces[D1(i, j)] = (R1(i, j), R1(i + 1, j), Ta(i, j))
            labels[D1(i, j)] = _h(1, j)
            faces[W1(i, j)] = (C1(j), R1(i, j), R1(i, j + 1), Tb(i, j))
            labels[W1(i, j)] = _h(2, i)
            faces[D2(i, j)] = (R2(i, j), R2(i, j + 1), Tb(i, j))
            labels[D2(i, j)] = _h(2, i)
            faces[W2(i, j)] = (C2(i), R2(i, j), R2(i + 1, j), Ta(i, j))
            labels[W2(i, j)] = _h(1, j)

    domains = [None] * 32
    for i in r4:
        for j in r4:
            domains[4 * i + j] = (Q(i, j), W1(i, j), W1(i + 1, j), D1(i, j), D1(i, j + 1))
            domains[16 + 4 * i + j] = (Q(i, j), W2(i, j), W2(i, j + 1), D2(i, j), D2(i + 1, j))

    c = CellComplex3(24, edges, faces, labels, domains)

    def shift(i, j): return (i + 2, j + 2)
    vmap = [None] * 24
    for i in r4:
        for j in r4:
            vmap[T(i, j)] = T(*shift(i, j))
    for k in r4:
        vmap[P1(k)] = P1(k + 2)
        vmap[P2(k)] = P2(k + 2)
    emap = [None] * 72
    for i in r4:
        for j in r4:
            for f in (Ta, Tb, R1, R2):
                emap[f(i, j)] = f(*shift(i, j))
    for k in r4:
        emap[C1(k)] = C1(k + 2)
        emap[C2(k)] = C2(k + 2)
    fmap = [None] * 80
    for i in r4:
        for j in r4:
            for f in (Q, D1, W1, D2, W2):
                fmap[f(i, j)] = f(*shift(i, j))
    dmap = [None] * 32
    for i in r4:
        for j in r4:
            a, b = shift(i, j)
            dmap[4 * i + j] = 4 * (a % 4) + b % 4
            dmap[16 + 4 * i + j] = 16 + 4 * (a % 4) + b % 4
    sigma = Involution3(c, (vmap, emap, fmap, dmap))
    return c, sigma


def generate_s3():
    c, sigma = s3_complex()
    return Example("s3", c, Fan(3, S3_FAN), sigma, (1, 0, 0, 1))


def generate_rp3():
    from .quotient import quotient_by_involution
    s3 = generate_s3()
    q = quotient_by_involution(s3.complex, s3.involution)
    return Example("rp3", q, s3.fan, None, (1, 0, 0, 1))


def generate(name, **kw):
    if name == "octahedral":
        return generate_octahedral()
    if name == "genus":
        return generate_genus_g(kw.get("g", 1), kw.get("variant", "eight"))
    if name == "nonorientable":
        return generate_nonorientable(kw.get("g", 1), kw.get("variant", "sixteen"))
    if name == "s3":
        return generate_s3()
    if name == "rp3":
        return generate_rp3()
    raise ValueError(f"unknown family {name!r}")
