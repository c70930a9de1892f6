"""Parity laws for loop arrangements on the 2-sphere.

Regions are computed by flood fill over the face adjacency graph, never
crossing an edge that lies on one of the given loops.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import errors
from .flow import Report

BLACK, WHITE = "Black", "White"


def require_sphere(c):
    if c.dimension != 2 or c.euler_characteristic() != 2 or not c.orientable:
        raise errors.SurfaceMismatch("this check needs a complex on S^2",
                                     computed=c.surface() if c.dimension == 2 else None)


@dataclass
class FaceColoring:
    colors: tuple  # color per face id

    def __getitem__(self, f):
        return self.colors[f]

    def count(self, faces=None, color=BLACK):
        faces = range(len(self.colors)) if faces is None else faces
        return sum(1 for f in faces if self.colors[f] == color)

    def to_dict(self):
        return {str(f): col for f, col in enumerate(self.colors)}


def bicolor(c):
    """Two-color the faces so that faces sharing an edge differ."""
    col = [None] * c.num_faces
    for root in range(c.num_faces):
        if col[root] is not None:
            continue
        col[root] = BLACK
        todo = [root]
        while todo:
            f = todo.pop()
            for e in c.faces[f].edges:
                a, b = c.edge_faces[e]
                g = b if a == f else a
                want = WHITE if col[f] == BLACK else BLACK
                if col[g] is None:
                    col[g] = want
                    todo.append(g)
                elif col[g] != want:
                    raise errors.NotBipartite(f"edge {e} separates faces of one color",
                                              edge=e)
    return FaceColoring(tuple(col))


def regions(c, loops):
    """Face sets of the components of the complement of ``loops``."""
    loops = set(loops)
    comp = [None] * c.num_faces
    out = []
    for root in range(c.num_faces):
        if comp[root] is not None:
            continue
        comp[root] = len(out)
        members = [root]
        todo = [root]
        while todo:
            f = todo.pop()
            for e in c.faces[f].edges:
                if c.loop_of_edge[e] in loops:
                    continue
                for g in c.edge_faces[e]:
                    if comp[g] is None:
                        comp[g] = len(out)
                        members.append(g)
                        todo.append(g)
        out.append(frozenset(members))
    return out


def sides(c, i):
    """The components of S^2 minus loop ``i``, the one with face 0 first."""
    return regions(c, [i])


def closure_vertices(c, faces):
    return {v for f in faces for v in c.faces[f].vertices}


def interior_vertices(c, faces, loops):
    """Vertices of the region's closure that lie on none of ``loops``."""
    loops = set(loops)
    return sorted(v for v in closure_vertices(c, faces)
                  if not loops & set(c.vertex_loops(v)))


def color_balance(c, coloring, loop=None):
    rep = Report("color-balance")
    if loop is None:
        b, w = coloring.count(), coloring.count(color=WHITE)
        rep.check("balanced on the sphere", b == w, black=b, white=w)
        return rep
    for k, U in enumerate(sides(c, loop)):
        b, w = coloring.count(U), coloring.count(U, WHITE)
        rep.check(f"balanced on side {k} of loop {loop}", b == w, black=b, white=w)
    return rep


@dataclass
class Eye:
    loops: tuple
    faces: frozenset
    corners: tuple
    eyelashes: dict = field(default_factory=dict)
    raw: bool = False

    def to_dict(self):
        return {"loops": list(self.loops), "faces": sorted(self.faces),
                "corners": list(self.corners), "raw": self.raw,
                "eyelashes": {str(k): v for k, v in self.eyelashes.items()}}


def loops_meet(c, i, j):
    return [v for v in range(c.num_vertices) if set(c.vertex_loops(v)) == {i, j}]


def eyes(c, i, j):
    """Components of S^2 minus loops i and j; ``raw`` marks those without 2 corners."""
    if i == j or not loops_meet(c, i, j):
        raise errors.DisjointLoops(f"loops {i} and {j} do not cross", loops=(i, j))
    out = []
    for U in regions(c, [i, j]):
        cl = closure_vertices(c, U)
        corners = tuple(sorted(v for v in cl if set(c.vertex_loops(v)) == {i, j}))
        lashes = {i: [], j: []}
        for v in sorted(cl):
            ls = set(c.vertex_loops(v))
            if v in corners:
                continue
            for k in (i, j):
                if k in ls:
                    lashes[k].append(v)
        out.append(Eye((i, j), U, corners, lashes, raw=len(corners) != 2))
    return out


def corner_face(c, eye, v):
    """The face of the eye whose corner sits at vertex ``v``."""
    return min(f for f in eye.faces if v in c.faces[f].vertices)


def eye_checks(c, eye, coloring):
    rep = Report("eye", data={"eye": eye.to_dict()})
    b, w = coloring.count(eye.faces), coloring.count(eye.faces, WHITE)
    rep.check("balanced inside the eye", b == w, black=b, white=w)
    if len(eye.corners) == 2:
        c1, c2 = (coloring[corner_face(c, eye, v)] for v in eye.corners)
        rep.check("corner domains have different colors", c1 != c2)
    for k in eye.loops:
        n = len(eye.eyelashes.get(k, []))
        rep.check(f"odd eyelashes on loop {k}", n % 2 == 1, count=n)
    return rep


def vertex_parities(c, i):
    on = c.loop_vertices(i)
    rep = Report("vertex-parity", data={"loop": i, "on_loop": len(on)})
    rep.check(f"vertices on loop {i} divisible by 4", len(on) % 4 == 0, count=len(on))
    edges_on = {e for e in range(c.num_edges) if c.loop_of_edge[e] == i}
    for k, U in enumerate(sides(c, i)):
        inside = interior_vertices(c, U, [i])
        rep.check(f"odd vertex count on side {k} of loop {i}", len(inside) % 2 == 1,
                  count=len(inside))
        inner_edges = {e for f in U for e in c.faces[f].edges if e not in edges_on}
        lhs = 4 * len(inside) + 3 * len(on)
        rhs = 2 * (len(inner_edges) + len(edges_on))
        rep.check(f"degree count on side {k} of loop {i}", lhs == rhs, lhs=lhs, rhs=rhs)
    return rep


def parity_theorem(c):
    N, V, F = len(c.loops), c.num_vertices, c.num_faces
    rep = Report("parity-theorem", data={"N": N, "V": V, "F": F})
    a = rep.check("N is odd", N % 2 == 1, N=N)
    b = rep.check("V = 2 mod 4", V % 4 == 2, V=V)
    d = rep.check("F = 0 mod 4", F % 4 == 0, F=F)
    rep.check("conditions agree", a == b == d)
    return rep


@dataclass
class CornerPairing:
    pairs: tuple  # ((v, v'), ...)
    witnesses: tuple  # eye loops (i, j) per pair

    def to_dict(self):
        return {"pairs": [list(p) for p in self.pairs],
                "witnesses": [list(w) for w in self.witnesses]}


def eye_corner_pairs(c):
    """Map vertex pair -> first loop pair whose eye has exactly those corners."""
    found = {}
    for i, j in combinations(c.loop_labels, 2):
        if not loops_meet(c, i, j):
            continue
        for eye in eyes(c, i, j):
            if not eye.raw:
                found.setdefault(eye.corners, (i, j))
    return found


def find_corner_pairing(c, candidates=None):
    """Lexicographically least perfect matching into eye-corner pairs."""
    cand = eye_corner_pairs(c) if candidates is None else candidates
    partners = {v: [] for v in range(c.num_vertices)}
    for a, b in sorted(cand):
        partners[a].append(b)
        partners[b].append(a)
    for v in partners:
        partners[v].sort()
    matched = [None] * c.num_vertices

    def solve():
        v = next((x for x in range(c.num_vertices) if matched[x] is None), None)
        if v is None:
            return True
        for u in partners[v]:
            if matched[u] is None and u != v:
                matched[v], matched[u] = u, v
                if solve():
                    return True
                matched[v] = matched[u] = None
        return False

    if not solve():
        return None
    pairs = tuple((v, matched[v]) for v in range(c.num_vertices) if v < matched[v])
    return CornerPairing(pairs, tuple(cand[p] for p in pairs))


def corner_pairing(c):
    require_sphere(c)
    pairing = find_corner_pairing(c)
    if pairing is None:
        raise errors.NoPairingFound("no perfect matching into eye corners")
    rep = Report("corner-pairing", data={"pairing": pairing.to_dict()})
    side = {}
    for i in c.loop_labels:
        U = sides(c, i)[0]
        side[i] = set(interior_vertices(c, U, [i]))
    P = {i: [p for p in pairing.pairs if len(side[i] & set(p)) == 1] for i in c.loop_labels}
    L = {p: [i for i in c.loop_labels if p in P[i]] for p in pairing.pairs}
    for i in c.loop_labels:
        rep.check(f"P_{i} has odd size", len(P[i]) % 2 == 1, size=len(P[i]))
    for p in pairing.pairs:
        rep.check(f"pair {p} is separated by an odd number of loops", len(L[p]) % 2 == 1,
                  loops=L[p])
    s1, s2 = sum(len(x) for x in P.values()), sum(len(x) for x in L.values())
    rep.check("double counting", s1 == s2, pairs_side=s1, loops_side=s2)
    return pairing, rep


def s2_suite(c, fan=None):
    """Every sphere check, as one report."""
    require_sphere(c)
    rep = Report("check-s2", data={"N": len(c.loops), "V": c.num_vertices,
                                   "F": c.num_faces})
    coloring = bicolor(c)
    rep.check("bicolor", True)
    rep.verdicts += color_balance(c, coloring).verdicts
    for i in c.loop_labels:
        rep.verdicts += color_balance(c, coloring, i).verdicts
        rep.verdicts += vertex_parities(c, i).verdicts
    raw = 0
    for i, j in combinations(c.loop_labels, 2):
        if not loops_meet(c, i, j):
            continue
        for eye in eyes(c, i, j):
            if eye.raw:
                raw += 1
                continue
            for v in eye_checks(c, eye, coloring).verdicts:
                rep.verdicts.append({**v, "check": f"eye {i},{j}: {v['check']}"})
    rep.data["raw_components"] = raw
    rep.verdicts += parity_theorem(c).verdicts
    rep.check("F = 0 mod 8", c.num_faces % 8 == 0, F=c.num_faces)
    try:
        pairing, prep = corner_pairing(c)
        rep.verdicts += prep.verdicts
        rep.data["pairing"] = pairing.to_dict()
    except errors.NoPairingFound:
        rep.data["pairing"] = None  # logged, not asserted
    if fan is not None:
        from .fan import fan_compatible
        rep.check("fan compatible", fan_compatible(c, fan).ok)
    rep.data["coloring"] = coloring.to_dict()
    return rep
