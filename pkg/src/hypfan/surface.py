"""Combinatorial maps for 4-valent graphs embedded in closed surfaces.

A complex is given by a rotation system: every vertex lists its four darts in
cyclic order, and every edge pairs two darts.  Edges may carry a twist flag,
which is how non-orientable surfaces are encoded (a twisted edge reverses the
local sense of rotation when crossed).

Faces are the boundary walks of the map; loops are the "through-strand"
traces that enter a vertex at slot ``p`` and leave it at slot ``p + 2``.
"""

from dataclasses import dataclass
from collections import deque

from . import errors


@dataclass(frozen=True)
class Loop:
    label: int
    darts: tuple  # darts in traversal order, two per edge
    edges: tuple
    vertices: tuple  # with multiplicity, in traversal order

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple  # darts through which the walk leaves a corner
    edges: tuple
    corners: tuple  # (vertex, corner slot); corner slot c sits between slots c, c+1
    sides: tuple  # loop label of every traversed edge, in walk order

    @property
    def vertices(self):
        return tuple(v for v, _ in self.corners)

    def __len__(self):
        return len(self.edges)


def _canonical_edges(pairing):
    return tuple(sorted((min(a, b), max(a, b)) for a, b in pairing))


class SurfaceComplex:
    """Immutable 4-valent combinatorial map with derived faces and loops."""

    def __init__(self, rotations, edges, twisted=(), surface=None):
        rotations = tuple(tuple(int(d) for d in r) for r in rotations)
        if not rotations:
            raise errors.EmptyComplex("a complex needs at least one vertex")
        for v, r in enumerate(rotations):
            if len(r) != 4:
                raise errors.NonQuadrivalentVertex(
                    f"vertex {v} has {len(r)} darts", vertex=v)
        ndarts = 4 * len(rotations)
        seen = {}
        for v, r in enumerate(rotations):
            for p, d in enumerate(r):
                if d in seen:
                    raise errors.InvalidComplex(f"dart {d} listed twice", dart=d)
                seen[d] = (v, p)
        if set(seen) != set(range(ndarts)):
            missing = sorted(set(range(ndarts)) - set(seen))
            raise errors.DanglingDart(
                f"dart ids must be 0..{ndarts - 1}", missing=missing)

        twisted_pairs = {frozenset((int(a), int(b))) for a, b in twisted}
        partner = [None] * ndarts
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise errors.SelfPairedDart(f"dart {a} paired with itself", dart=a)
            for d in (a, b):
                if not 0 <= d < ndarts:
                    raise errors.DanglingDart(f"edge uses unknown dart {d}", dart=d)
                if partner[d] is not None:
                    raise errors.InvalidComplex(f"dart {d} in two edges", dart=d)
            partner[a], partner[b] = b, a
        unpaired = [d for d in range(ndarts) if partner[d] is None]
        if unpaired:
            raise errors.DanglingDart("darts without an edge", darts=unpaired)

        self.rotations = rotations
        self.edges = _canonical_edges(edges)
        self.partner = tuple(partner)
        self.dart_vertex = tuple(seen[d][0] for d in range(ndarts))
        self.dart_pos = tuple(seen[d][1] for d in range(ndarts))
        edge_index = {}
        for i, (a, b) in enumerate(self.edges):
            edge_index[a] = edge_index[b] = i
        self.dart_edge = tuple(edge_index[d] for d in range(ndarts))
        self.twisted = frozenset(
            i for i, e in enumerate(self.edges) if frozenset(e) in twisted_pairs)
        self.declared_surface = surface

        self._check_connected()
        self.loops = self._trace_loops()
        self.loop_of_edge = {}
        for lp in self.loops:
            for e in lp.edges:
                self.loop_of_edge[e] = lp.label
        self.faces = self._trace_faces()
        self.edge_faces = self._edge_faces()
        self.orientable = self._orientable()
        if surface is not None:
            self._check_declared(surface)

    # basic counts

    @property
    def num_vertices(self):
        return len(self.rotations)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def num_faces(self):
        return len(self.faces)

    @property
    def num_darts(self):
        return len(self.partner)

    @property
    def dimension(self):
        return 2

    @property
    def loop_labels(self):
        return tuple(lp.label for lp in self.loops)

    def euler_characteristic(self):
        return self.num_vertices - self.num_edges + self.num_faces

    @property
    def genus(self):
        """Orientable genus, or number of crosscaps when non-orientable."""
        chi = self.euler_characteristic()
        return (2 - chi) // 2 if self.orientable else 2 - chi

    def surface(self):
        return {"orientable": self.orientable, "genus_or_crosscaps": self.genus}

    def dart_at(self, v, slot):
        return self.rotations[v][slot % 4]

    def edge_ends(self, e):
        a, b = self.edges[e]
        return self.dart_vertex[a], self.dart_vertex[b]

    def is_self_loop(self, e):
        u, v = self.edge_ends(e)
        return u == v

    def vertex_loops(self, v):
        """Loop labels of the two strands through ``v`` (slots 0/2, then 1/3)."""
        r = self.rotations[v]
        return (self.loop_of_edge[self.dart_edge[r[0]]],
                self.loop_of_edge[self.dart_edge[r[1]]])

    def other_loop_at(self, d):
        """Label of the strand through the vertex of ``d`` not containing ``d``."""
        v, p = self.dart_vertex[d], self.dart_pos[d]
        return self.loop_of_edge[self.dart_edge[self.rotations[v][(p + 1) % 4]]]

    def loop(self, label):
        for lp in self.loops:
            if lp.label == label:
                return lp
        raise errors.UnknownLabel(f"no loop {label!r}", label=label)

    def loop_vertices(self, label):
        return sorted({v for v in range(self.num_vertices) if label in self.vertex_loops(v)})

    def issues(self):
        """Non-fatal findings: self-loop edges, faces meeting a vertex or edge twice."""
        found = []
        for e in range(self.num_edges):
            if self.is_self_loop(e):
                found.append({"kind": "SelfLoopEdge", "edge": e})
        for f in self.faces:
            if len(set(f.vertices)) != len(f.vertices):
                found.append({"kind": "FaceRevisitsVertex", "face": f.id})
            if len(set(f.edges)) != len(f.edges):
                found.append({"kind": "FaceRevisitsEdge", "face": f.id})
        return found

    # derivations

    def _check_connected(self):
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for d in self.rotations[v]:
                u = self.dart_vertex[self.partner[d]]
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        if len(seen) != self.num_vertices:
            raise errors.InvalidComplex("the underlying graph is disconnected")

    def _trace_loops(self):
        used = [False] * self.num_darts
        traces = []
        for start in range(self.num_darts):
            if used[start]:
                continue
            darts, edges, verts = [], [], []
            d = start
            while True:
                a = self.partner[d]
                used[d] = used[a] = True
                darts += [d, a]
                edges.append(self.dart_edge[d])
                v = self.dart_vertex[a]
                verts.append(v)
                d = self.rotations[v][(self.dart_pos[a] + 2) % 4]
                if d == start:
                    break
            traces.append((darts, edges, verts))
        return tuple(
            Loop(label=i + 1, darts=tuple(ds), edges=tuple(es), vertices=tuple(vs))
            for i, (ds, es, vs) in enumerate(traces))

    def _walk(self, d, eps):
        """Face orbit starting by leaving along dart ``d`` with sense ``eps``."""
        start = (d, eps)
        darts, edges, corners = [], [], []
        while True:
            darts.append(d)
            e = self.dart_edge[d]
            edges.append(e)
            a = self.partner[d]
            if e in self.twisted:
                eps = -eps
            v, p = self.dart_vertex[a], self.dart_pos[a]
            corners.append((v, p if eps == 1 else (p - 1) % 4))
            d = self.rotations[v][(p + eps) % 4]
            if (d, eps) == start:
                return darts, edges, corners

    def _trace_faces(self):
        faces = []
        seen_states = set()
        seen_corner_sets = set()
        for d in range(self.num_darts):
            for eps in (1, -1):
                if (d, eps) in seen_states:
                    continue
                darts, edges, corners = self._walk(d, eps)
                # mark every state of this orbit
                e2 = eps
                for dd, ee in zip(darts, edges):
                    seen_states.add((dd, e2))
                    if ee in self.twisted:
                        e2 = -e2
                key = frozenset(corners)
                if key in seen_corner_sets:
                    continue
                seen_corner_sets.add(key)
                if len(set(darts)) != len(darts):
                    raise errors.NonDiskFace(
                        f"face walk from dart {d} passes a dart twice", dart=d)
                sides = tuple(self.loop_of_edge[e] for e in edges)
                faces.append(Face(len(faces), tuple(darts), tuple(edges),
                                  tuple(corners), sides))
        total = sum(len(f) for f in faces)
        if total != 2 * self.num_edges:
            raise errors.InvalidComplex("face walks do not partition the edge sides")
        return tuple(faces)

    def _edge_faces(self):
        out = [[] for _ in range(self.num_edges)]
        for f in self.faces:
            for e in f.edges:
                out[e].append(f.id)
        return tuple(tuple(x) for x in out)

    def _orientable(self):
        flip = [None] * self.num_vertices
        for root in range(self.num_vertices):
            if flip[root] is not None:
                continue
            flip[root] = 0
            todo = deque([root])
            while todo:
                v = todo.popleft()
                for d in self.rotations[v]:
                    e = self.dart_edge[d]
                    u = self.dart_vertex[self.partner[d]]
                    want = flip[v] ^ (1 if e in self.twisted else 0)
                    if flip[u] is None:
                        flip[u] = want
                        todo.append(u)
                    elif flip[u] != want:
                        return False
        return True

    def _check_declared(self, surface):
        orientable = bool(surface.get("orientable", True))
        g = surface.get("genus_or_crosscaps")
        if orientable != self.orientable or (g is not None and int(g) != self.genus):
            raise errors.SurfaceMismatch(
                f"declared {surface}, computed {self.surface()}",
                declared=surface, computed=self.surface())

    # structural comparison

    def key(self):
        return (self.rotations, self.edges, tuple(sorted(self.twisted)))

    def __eq__(self, other):
        return isinstance(other, SurfaceComplex) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (f"SurfaceComplex(V={self.num_vertices}, E={self.num_edges}, "
                f"F={self.num_faces}, N={len(self.loops)}, chi={self.euler_characteristic()})")


def build_surface_complex(rotations, pairing, twisted=(), surface=None):
    return SurfaceComplex(rotations, pairing, twisted=twisted, surface=surface)


def trace_loops(c):
    return list(c.loops)
