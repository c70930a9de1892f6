"""Sphere insertion and removal around a fixed point, and replayable scripts.

Inserting two small concentric spheres around a vertex ``x`` splits each of
the ``2^n`` domains at ``x`` into three.  The inner sphere gets the vector
``-w'`` (perturbed if that direction is already taken) and the outer sphere
gets ``w'``, a vector strictly inside the corner cone at ``x``.

Insertion keeps every existing cell id and appends the new cells, so removal
can restore the input exactly.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import errors
from .cells3 import CellComplex3, validate_complex3
from .fan import Fan, cone_contains, fan_compatible
from .linalg import as_fraction, positively_proportional
from .surface import SurfaceComplex


@dataclass(frozen=True)
class SpherePair:
    x: int
    inner: object
    outer: object
    w: tuple = ()  # inner sphere vector
    w_prime: tuple = ()  # outer sphere vector

    def to_dict(self):
        return {"x": self.x, "inner": self.inner, "outer": self.outer,
                "w": [str(a) for a in self.w], "w_prime": [str(a) for a in self.w_prime]}


# 2D combinatorics

def split_vertex_2d(c, x):
    """Surround vertex ``x`` by two new loops; returns the new complex.

    The new loops get the next two labels (inner first).
    """
    if not 0 <= x < c.num_vertices:
        raise errors.NotAVertex(f"no vertex {x}", vertex=x)
    V = c.num_vertices
    base = c.num_darts

    def y(k, s):
        return base + 4 * (k % 4) + s

    def z(k, s):
        return base + 16 + 4 * (k % 4) + s

    rotations = [list(r) for r in c.rotations]
    rotations += [[y(k, s) for s in range(4)] for k in range(4)]
    rotations += [[z(k, s) for s in range(4)] for k in range(4)]
    xd = c.rotations[x]
    slot_at_x = {d: k for k, d in enumerate(xd)}
    at_x = set(xd)
    pairs, twisted = [], []
    for i, (a, b) in enumerate(c.edges):
        if a in at_x or b in at_x:
            continue
        pairs.append((a, b))
        if i in c.twisted:
            twisted.append((a, b))
    done = set()
    for k, d in enumerate(xd):
        pairs.append((d, y(k, 0)))
        pairs.append((y(k, 2), z(k, 0)))
        pairs.append((y(k, 3), y(k + 1, 1)))
        pairs.append((z(k, 3), z(k + 1, 1)))
        if k in done:
            continue
        far = c.partner[d]
        t = c.dart_edge[d] in c.twisted
        if far in at_x:  # a self-loop at x runs through both outer points
            m = slot_at_x[far]
            done.add(m)
            e = (z(k, 2), z(m, 2))
        else:
            e = (z(k, 2), far)
        pairs.append(e)
        if t:
            twisted.append(e)
    out = SurfaceComplex(rotations, pairs, twisted=twisted)
    n = len(c.loops)
    return out, (n + 1, n + 2)


def _sphere_structure_2d(c, x, inner, outer):
    """Locate the inserted vertices; raises NotASpherePair on mismatch."""
    try:
        L_in, L_out = c.loop(inner), c.loop(outer)
    except errors.UnknownLabel:
        raise errors.NotASpherePair("unknown sphere labels", labels=(inner, outer)) from None
    Y, Z = sorted(set(L_in.vertices)), sorted(set(L_out.vertices))
    if len(Y) != 4 or len(Z) != 4 or x in Y or x in Z:
        raise errors.NotASpherePair("spheres must cross the two loops at x", x=x)
    legs = []
    for yv in Y:
        r = c.rotations[yv]
        on = lambda ds: {c.loop_of_edge[c.dart_edge[d]] for d in ds}  # noqa: E731
        if on(r[1::2]) == {inner}:
            strand = r[0::2]
        elif on(r[0::2]) == {inner}:
            strand = r[1::2]
        else:
            raise errors.NotASpherePair("inner sphere is not a simple loop", vertex=yv)
        ends = [c.dart_vertex[c.partner[d]] for d in strand]
        if x not in ends:
            raise errors.NotASpherePair("inner sphere vertex not adjacent to x", vertex=yv)
        to_x = strand[ends.index(x)]
        to_z = strand[1 - ends.index(x)]
        zv = c.dart_vertex[c.partner[to_z]]
        if zv not in Z:
            raise errors.NotASpherePair("ray does not reach the outer sphere", vertex=yv)
        legs.append((c.partner[to_x], to_x, to_z))
    if len({leg[0] for leg in legs}) != 4:
        raise errors.NotASpherePair("spheres do not surround x")
    return Y, Z, legs


def unsplit_2d(c, x, inner, outer):
    """Remove the loops ``inner``, ``outer`` around ``x``; combinatorial inverse."""
    Y, Z, legs = _sphere_structure_2d(c, x, inner, outer)
    gone = set(Y) | set(Z)
    tw = lambda d: c.dart_edge[d] in c.twisted  # noqa: E731
    joins = []
    seen = set()
    for dx, y_in, y_out in legs:
        if dx in seen:
            continue
        t = tw(dx)
        z_in = c.partner[y_out]
        t ^= tw(y_out)
        zv = c.dart_vertex[z_in]
        p = c.dart_pos[z_in]
        z_out = c.rotations[zv][(p + 2) % 4]
        far = c.partner[z_out]
        t ^= tw(z_out)
        if c.dart_vertex[far] in gone:  # self-loop: walk back in to x
            fv, fp = c.dart_vertex[far], c.dart_pos[far]
            y2_in = c.partner[c.rotations[fv][(fp + 2) % 4]]
            t ^= tw(y2_in)
            yv2, yp2 = c.dart_vertex[y2_in], c.dart_pos[y2_in]
            back = c.rotations[yv2][(yp2 + 2) % 4]
            t ^= tw(back)
            far = c.partner[back]
        seen.update((dx, far))
        joins.append((dx, far, t))
    keep_v = [v for v in range(c.num_vertices) if v not in gone]
    keep_d = sorted(d for v in keep_v for d in c.rotations[v])
    new_d = {d: i for i, d in enumerate(keep_d)}
    rotations = [[new_d[d] for d in c.rotations[v]] for v in keep_v]
    pairs, twisted = [], []
    for i, (a, b) in enumerate(c.edges):
        if c.dart_vertex[a] in gone or c.dart_vertex[b] in gone:
            continue
        pairs.append((new_d[a], new_d[b]))
        if i in c.twisted:
            twisted.append((new_d[a], new_d[b]))
    for a, b, t in joins:
        pairs.append((new_d[a], new_d[b]))
        if t:
            twisted.append((new_d[a], new_d[b]))
    try:
        out = SurfaceComplex(rotations, pairs, twisted=twisted)
    except errors.NonDiskFace as exc:
        raise errors.WouldCreateDegenerateDomain("removal creates a non-disk domain") from exc
    xn = keep_v.index(x)
    short = [f.id for f in out.faces if xn in f.vertices and len(f) < 3]
    if short:
        raise errors.WouldCreateDegenerateDomain(
            "removal leaves a domain with fewer than 3 corners", faces=short)
    # old label of every surviving loop, read off a surviving dart
    old_of_new = {d: old for old, d in new_d.items()}
    relabel = {}
    for lp in out.loops:
        old = old_of_new[lp.darts[0]]
        relabel[c.loop_of_edge[c.dart_edge[old]]] = lp.label
    return out, relabel


# 3D combinatorics

def split_vertex_3d(c, x, inner, outer):
    if not 0 <= x < c.num_vertices:
        raise errors.NotAVertex(f"no vertex {x}", vertex=x)
    E_x = sorted(c.vertex_edges[x])
    if len(E_x) != 6 or any(c.edges[e][0] == c.edges[e][1] for e in E_x):
        raise errors.IncompatibleInput("vertex link is not octahedral", vertex=x)
    F_x = sorted(c.vertex_faces[x])
    D_x = sorted(c.vertex_domains[x])
    V, nE, nF, nD = c.cell_counts()
    yv = {e: V + k for k, e in enumerate(E_x)}
    zv = {e: V + 6 + k for k, e in enumerate(E_x)}
    edges = [list(e) for e in c.edges]
    for e in E_x:
        edges[e] = [zv[e] if p == x else p for p in edges[e]]
    i_e = {e: len(edges) + k for k, e in enumerate(E_x)}
    edges += [[x, yv[e]] for e in E_x]
    m_e = {e: len(edges) + k for k, e in enumerate(E_x)}
    edges += [[yv[e], zv[e]] for e in E_x]
    at_x = {f: sorted(e for e in c.faces[f] if e in yv) for f in F_x}
    if any(len(v) != 2 for v in at_x.values()):
        raise errors.IncompatibleInput("a face at x does not have two edges at x", vertex=x)
    a_f = {f: len(edges) + k for k, f in enumerate(F_x)}
    edges += [[yv[at_x[f][0]], yv[at_x[f][1]]] for f in F_x]
    b_f = {f: len(edges) + k for k, f in enumerate(F_x)}
    edges += [[zv[at_x[f][0]], zv[at_x[f][1]]] for f in F_x]

    faces = [list(f) for f in c.faces]
    labels = list(c.labels)
    for f in F_x:
        faces[f] = faces[f] + [b_f[f]]
    T_f = {f: len(faces) + k for k, f in enumerate(F_x)}
    for f in F_x:
        e1, e2 = at_x[f]
        faces.append([i_e[e1], a_f[f], i_e[e2]])
        labels.append(c.labels[f])
    C_f = {f: len(faces) + k for k, f in enumerate(F_x)}
    for f in F_x:
        e1, e2 = at_x[f]
        faces.append([m_e[e1], b_f[f], m_e[e2], a_f[f]])
        labels.append(c.labels[f])
    corner = {d: c.corner_facets(d, x) for d in D_x}
    s_D = {d: len(faces) + k for k, d in enumerate(D_x)}
    for d in D_x:
        faces.append([a_f[f] for f in corner[d]])
        labels.append(inner)
    s2_D = {d: len(faces) + k for k, d in enumerate(D_x)}
    for d in D_x:
        faces.append([b_f[f] for f in corner[d]])
        labels.append(outer)

    domains = [list(d) for d in c.domains]
    for d in D_x:
        domains[d] = domains[d] + [s2_D[d]]
    for d in D_x:
        domains.append([T_f[f] for f in corner[d]] + [s_D[d]])
    for d in D_x:
        domains.append([C_f[f] for f in corner[d]] + [s_D[d], s2_D[d]])
    return CellComplex3(V + 12, edges, faces, labels, domains)


def unsplit_3d(c, x, inner, outer):
    S = [f for f, lab in enumerate(c.labels) if lab == inner]
    S2 = [f for f, lab in enumerate(c.labels) if lab == outer]
    Y = sorted({v for f in S for v in c.face_vertices[f]})
    Z = sorted({v for f in S2 for v in c.face_vertices[f]})
    if not S or not S2 or len(Y) != 6 or len(Z) != 6 or x in Y or x in Z:
        raise errors.NotASpherePair("labels do not bound a sphere pair", x=x)
    if any(not any(set(c.edges[e]) == {x, y} for e in c.vertex_edges[y]) for y in Y):
        raise errors.NotASpherePair("inner sphere does not surround x", x=x)
    ball = {x} | set(Y) | set(Z)
    drop_e = {e for e, ends in enumerate(c.edges) if set(ends) <= ball}
    drop_f = {f for f, vs in enumerate(c.face_vertices) if vs <= ball}
    drop_d = {d for d, vs in enumerate(c.domain_vertices) if vs <= ball}
    keep_v = [v for v in range(c.num_vertices) if v not in set(Y) | set(Z)]
    nv = {v: i for i, v in enumerate(keep_v)}
    ke = [e for e in range(len(c.edges)) if e not in drop_e]
    ne = {e: i for i, e in enumerate(ke)}
    kf = [f for f in range(len(c.faces)) if f not in drop_f]
    nf = {f: i for i, f in enumerate(kf)}
    kd = [d for d in range(len(c.domains)) if d not in drop_d]
    try:
        edges = [[nv[x] if p in Z else nv[p] for p in c.edges[e]] for e in ke]
        faces = [[ne[e] for e in c.faces[f] if e in ne] for f in kf]
        domains = [[nf[f] for f in c.domains[d] if f in nf] for d in kd]
    except KeyError:
        raise errors.NotASpherePair("spheres are not isolated around x", x=x) from None
    out = CellComplex3(len(keep_v), edges, faces, [c.labels[f] for f in kf], domains)
    rep = validate_complex3(out)
    if not rep.ok:
        raise errors.WouldCreateDegenerateDomain(
            "removal breaks the cell structure", kinds=rep.kinds())
    return out


# fan handling

def corner_vectors(c, fan, x):
    from .flow import basis_labels
    return [fan[lab] for lab in basis_labels(c, x)]


def auto_vectors(c, fan, x, w_prime=None):
    """``(w, w')`` for the inner and outer sphere at ``x``."""
    gens = corner_vectors(c, fan, x)
    if w_prime is None:
        wp = tuple(sum(col, Fraction(0)) for col in zip(*gens))
    else:
        wp = tuple(as_fraction(a) for a in w_prime)
        if len(wp) != fan.dimension or not cone_contains(gens, wp, strict=True):
            raise errors.VectorOutsideCorner("w' must lie strictly inside the corner cone",
                                             vertex=x)
    w = tuple(-a for a in wp)
    taken = [v for _, v in fan.items()]
    delta = Fraction(1)
    # push -w' toward -(last corner vector) until the direction is new
    while any(positively_proportional(w, v) for v in taken):
        w = tuple(-(a + delta * b) for a, b in zip(wp, gens[-1]))
        delta /= 2
    return w, wp


def _fresh_labels_3d(fan):
    k = 1
    while f"S{k}_in" in fan or f"S{k}_out" in fan:
        k += 1
    return f"S{k}_in", f"S{k}_out"


def insert_spheres(c, fan, x, w_prime=None, check=True):
    """Returns ``(complex, fan, SpherePair)``."""
    if not 0 <= x < c.num_vertices:
        raise errors.NotAVertex(f"no vertex {x}", vertex=x)
    if check and not fan_compatible(c, fan).ok:
        raise errors.IncompatibleInput("fan is not compatible with the complex")
    w, wp = auto_vectors(c, fan, x, w_prime)
    if c.dimension == 2:
        out, (inner, outer) = split_vertex_2d(c, x)
    else:
        inner, outer = _fresh_labels_3d(fan)
        out = split_vertex_3d(c, x, inner, outer)
    new_fan = fan.extended({inner: w, outer: wp})
    if check and not fan_compatible(out, new_fan).ok:
        raise errors.HypfanError("sphere insertion produced an incompatible fan")
    return out, new_fan, SpherePair(x, inner, outer, w, wp)


def remove_spheres(c, fan, pair):
    if c.dimension == 2:
        out, relabel = unsplit_2d(c, pair.x, pair.inner, pair.outer)
        if fan is None:
            return out, None
        vecs = {relabel[lab]: v for lab, v in fan.items()
                if lab not in (pair.inner, pair.outer)}
        new_fan = Fan(2, vecs)
    else:
        out = unsplit_3d(c, pair.x, pair.inner, pair.outer)
        if fan is None:
            return out, None
        new_fan = fan.without([pair.inner, pair.outer])
    if not fan_compatible(out, new_fan).ok:
        raise errors.HypfanError("sphere removal produced an incompatible fan")
    return out, new_fan


def augment(c, fan, k):
    """Insert ``k`` sphere pairs, always around the lowest vertex."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in range(k):
        c, fan, _ = insert_spheres(c, fan, 0)
    return c, fan


# scripts

@dataclass
class MoveState:
    complex: object = None
    fan: object = None
    pairs: list = field(default_factory=list)
    betti: tuple = ()
    log: list = field(default_factory=list)


def random_inserts(c, fan, steps, seed=0):
    """``steps`` insertions at vertices drawn with ``random.Random(seed)``."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(steps):
        x = rng.randrange(c.num_vertices)
        c, fan, pair = insert_spheres(c, fan, x)
        pairs.append(pair)
    return c, fan, pairs


def apply_op(state, op, args):
    from .generators import generate
    if op == "generate":
        ex = generate(args["family"], **{k: v for k, v in args.items() if k != "family"})
        return MoveState(ex.complex, ex.fan, [], ex.betti, state.log + [op])
    if state.complex is None:
        raise errors.HypfanError(f"{op} needs a complex; start the script with generate")
    c, fan = state.complex, state.fan
    pairs = list(state.pairs)
    if op == "insert_spheres":
        c, fan, pair = insert_spheres(c, fan, int(args.get("x", 0)), args.get("w_prime"))
        pairs.append(pair)
    elif op == "remove_spheres":
        if args.get("last", "inner" not in args):
            if not pairs:
                raise errors.NotASpherePair("no inserted pair to remove")
            pair = pairs.pop()
        else:
            pair = SpherePair(int(args["x"]), args["inner"], args["outer"])
        c, fan = remove_spheres(c, fan, pair)
    elif op == "augment":
        for _ in range(int(args.get("k", 1))):
            c, fan, pair = insert_spheres(c, fan, 0)
            pairs.append(pair)
    elif op == "random_inserts":
        c, fan, new = random_inserts(c, fan, int(args.get("steps", 1)),
                                     int(args.get("seed", 0)))
        pairs += new
    else:
        raise ValueError(f"unknown op {op!r}")
    return MoveState(c, fan, pairs, state.betti, state.log + [op])


@dataclass
class MoveScript:
    ops: list

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValueError("a move script is a JSON array")
        return cls([(item["op"], dict(item.get("args", {}))) for item in data])

    def to_json(self):
        return [{"op": op, "args": args} for op, args in self.ops]

    def replay(self, complex=None, fan=None):
        state = MoveState(complex, fan)
        for op, args in self.ops:
            state = apply_op(state, op, args)
        return state

