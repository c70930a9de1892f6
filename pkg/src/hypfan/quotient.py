"""Free involutions of orbit complexes and the quotient complexes they give."""

from . import errors
from .surface import SurfaceComplex
from .cells3 import CellComplex3


def _check_involutive(m, what):
    for x, y in enumerate(m):
        if y is None or not 0 <= y < len(m):
            raise errors.NotInvolutive(f"{what} map is not total", cell=x)
        if m[y] != x:
            raise errors.NotInvolutive(f"{what} map does not square to the identity", cell=x)


class Involution2:
    """An involution of a surface complex, given on darts."""

    def __init__(self, c, dart_map, reverses_orientation=None):
        self.complex = c
        self.dart_map = tuple(int(x) for x in dart_map)
        if len(self.dart_map) != c.num_darts:
            raise errors.NotInvolutive("dart map has the wrong length")
        _check_involutive(self.dart_map, "dart")
        s = self.dart_map
        for d in range(c.num_darts):
            if s[c.partner[d]] != c.partner[s[d]]:
                raise errors.NotIncidencePreserving("edge pairing not preserved", dart=d)
        self.vertex_map = []
        self.local_sign = []
        for v, rot in enumerate(c.rotations):
            img = [s[d] for d in rot]
            u = c.dart_vertex[img[0]]
            if any(c.dart_vertex[d] != u for d in img):
                raise errors.NotIncidencePreserving("vertex star not preserved", vertex=v)
            pos = [c.dart_pos[d] for d in img]
            if all((pos[k + 1] - pos[k]) % 4 == 1 for k in range(3)):
                self.local_sign.append(1)
            elif all((pos[k + 1] - pos[k]) % 4 == 3 for k in range(3)):
                self.local_sign.append(-1)
            else:
                raise errors.NotIncidencePreserving("cyclic order not preserved", vertex=v)
            self.vertex_map.append(u)
        self.reverses_orientation = reverses_orientation
        self.edge_map = [c.dart_edge[s[c.edges[e][0]]] for e in range(c.num_edges)]
        self.face_map = []
        corner_index = {frozenset(f.corners): f.id for f in c.faces}
        for f in c.faces:
            img = set()
            for v, k in f.corners:
                # the corner between slots k, k+1 goes to the corner between their images
                a = c.dart_pos[s[c.rotations[v][k]]]
                b = c.dart_pos[s[c.rotations[v][(k + 1) % 4]]]
                img.add((self.vertex_map[v], a if (b - a) % 4 == 1 else b))
            fid = corner_index.get(frozenset(img))
            if fid is None:
                raise errors.NotIncidencePreserving("faces not preserved", face=f.id)
            self.face_map.append(fid)

    def fixed_cells(self):
        out = []
        out += [("vertex", v) for v, u in enumerate(self.vertex_map) if u == v]
        out += [("edge", e) for e, x in enumerate(self.edge_map) if x == e]
        out += [("face", f) for f, x in enumerate(self.face_map) if x == f]
        return out

    def is_free(self):
        return not self.fixed_cells()

    def require_free(self):
        bad = self.fixed_cells()
        if bad:
            raise errors.NotFree(f"involution fixes {bad[0][0]} {bad[0][1]}", fixed=bad)


class Involution3:
    """An involution of a 3D cell complex, given per dimension."""

    def __init__(self, c, maps):
        self.complex = c
        self.maps = tuple(tuple(int(x) for x in m) for m in maps)
        sizes = (c.num_vertices, len(c.edges), len(c.faces), len(c.domains))
        if len(self.maps) != 4 or tuple(len(m) for m in self.maps) != sizes:
            raise errors.NotInvolutive("cell maps have the wrong shape")
        for k, m in enumerate(self.maps):
            _check_involutive(m, f"{k}-cell")
        vm, em, fm, dm = self.maps
        for e, (a, b) in enumerate(c.edges):
            if {vm[a], vm[b]} != set(c.edges[em[e]]):
                raise errors.NotIncidencePreserving("edge ends not preserved", edge=e)
        for f, bd in enumerate(c.faces):
            if {em[e] for e in bd} != set(c.faces[fm[f]]):
                raise errors.NotIncidencePreserving("face boundary not preserved", face=f)
            if c.labels[fm[f]] != c.labels[f]:
                raise errors.NotIncidencePreserving("labels not preserved", face=f)
        for d, bd in enumerate(c.domains):
            if {fm[f] for f in bd} != set(c.domains[dm[d]]):
                raise errors.NotIncidencePreserving("domain boundary not preserved", domain=d)

    def fixed_cells(self):
        names = ("vertex", "edge", "face", "domain")
        return [(names[k], x) for k, m in enumerate(self.maps)
                for x, y in enumerate(m) if x == y]

    def is_free(self):
        return not self.fixed_cells()

    def require_free(self):
        bad = self.fixed_cells()
        if bad:
            raise errors.NotFree(f"involution fixes {bad[0][0]} {bad[0][1]}", fixed=bad)


def _orbit_index(m):
    reps = [x for x in range(len(m)) if x <= m[x]]
    new = {x: i for i, x in enumerate(reps)}
    return [new[min(x, m[x])] for x in range(len(m))]


def quotient_by_involution(c, sigma):
    """Quotient complex; raises NotFree unless ``sigma`` has no fixed cells."""
    sigma.require_free()
    if isinstance(sigma, Involution3):
        vq, eq, fq, dq = (_orbit_index(m) for m in sigma.maps)
        nv = max(vq) + 1
        edges, faces, labels, domains = {}, {}, {}, {}
        for e, (a, b) in enumerate(c.edges):
            edges.setdefault(eq[e], (vq[a], vq[b]))
        for f, bd in enumerate(c.faces):
            if fq[f] not in faces:
                faces[fq[f]] = tuple(eq[e] for e in bd)
                labels[fq[f]] = c.labels[f]
        for d, bd in enumerate(c.domains):
            domains.setdefault(dq[d], tuple(fq[f] for f in bd))
        return CellComplex3(nv, [edges[i] for i in range(len(edges))],
                            [faces[i] for i in range(len(faces))],
                            [labels[i] for i in range(len(labels))],
                            [domains[i] for i in range(len(domains))])

    s, vm = sigma.dart_map, sigma.vertex_map
    reps = [v for v in range(c.num_vertices) if v < vm[v]]
    new_vertex = {v: i for i, v in enumerate(reps)}

    def qdart(d):
        v = c.dart_vertex[d]
        if v in new_vertex:
            return 4 * new_vertex[v] + c.dart_pos[d], False
        return 4 * new_vertex[vm[v]] + c.dart_pos[s[d]], sigma.local_sign[v] == -1

    pairs, twisted, seen = [], [], set()
    for e, (a, b) in enumerate(c.edges):
        (qa, fa), (qb, fb) = qdart(a), qdart(b)
        key = frozenset((qa, qb))
        if key in seen:
            continue
        seen.add(key)
        pairs.append((qa, qb))
        if (e in c.twisted) ^ fa ^ fb:
            twisted.append((qa, qb))
    rotations = [[4 * i + k for k in range(4)] for i in range(len(reps))]
    return SurfaceComplex(rotations, pairs, twisted=twisted)
