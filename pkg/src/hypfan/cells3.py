"""Incidence complexes for orbit decompositions of 3-manifolds.

Cells are numbered per dimension.  A 1-cell's boundary lists its two end
0-cells, a 2-cell's boundary lists 1-cells, a 3-cell's boundary lists its
facets.  Every 2-cell carries the label of the hypersurface it lies in.
"""

from dataclasses import dataclass, field
from collections import Counter


@dataclass(frozen=True)
class Violation:
    kind: str
    cells: tuple
    detail: str = ""

    def to_dict(self):
        return {"kind": self.kind, "cells": list(self.cells), "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return sorted({v.kind for v in self.violations})

    def add(self, kind, cells, detail=""):
        self.violations.append(Violation(kind, tuple(cells), detail))

    def to_dict(self):
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


class CellComplex3:
    """Immutable cell complex of a closed 3-manifold."""

    def __init__(self, num_vertices, edges, faces, labels, domains):
        self.num_vertices = int(num_vertices)
        self.edges = tuple(tuple(e) for e in edges)
        self.faces = tuple(tuple(f) for f in faces)
        self.labels = tuple(labels)
        self.domains = tuple(tuple(d) for d in domains)
        if len(self.labels) != len(self.faces):
            raise ValueError("every 2-cell needs a hypersurface label")
        self._derive()

    @property
    def dimension(self):
        return 3

    def cell_counts(self):
        return (self.num_vertices, len(self.edges), len(self.faces), len(self.domains))

    def euler_characteristic(self):
        v, e, f, d = self.cell_counts()
        return v - e + f - d

    @property
    def num_faces(self):
        return len(self.faces)

    @property
    def num_domains(self):
        return len(self.domains)

    def hypersurface_labels(self):
        return tuple(sorted(set(self.labels), key=str))

    def _derive(self):
        self.face_vertices = tuple(
            frozenset(v for e in f for v in self.edges[e]) for f in self.faces)
        self.domain_faces = self.domains
        self.domain_edges = tuple(
            frozenset(e for f in d for e in self.faces[f]) for d in self.domains)
        self.domain_vertices = tuple(
            frozenset(v for f in d for v in self.face_vertices[f]) for d in self.domains)
        self.vertex_edges = [[] for _ in range(self.num_vertices)]
        for i, (a, b) in enumerate(self.edges):
            self.vertex_edges[a].append(i)
            self.vertex_edges[b].append(i)
        self.vertex_faces = [[] for _ in range(self.num_vertices)]
        for i, vs in enumerate(self.face_vertices):
            for v in vs:
                self.vertex_faces[v].append(i)
        self.vertex_domains = [[] for _ in range(self.num_vertices)]
        for i, vs in enumerate(self.domain_vertices):
            for v in vs:
                self.vertex_domains[v].append(i)
        self.edge_faces = [[] for _ in self.edges]
        for i, f in enumerate(self.faces):
            for e in f:
                self.edge_faces[e].append(i)
        self.face_domains = [[] for _ in self.faces]
        for i, d in enumerate(self.domains):
            for f in d:
                self.face_domains[f].append(i)

    def vertex_labels(self, v):
        """Hypersurface labels through 0-cell ``v`` (the corner record)."""
        return frozenset(self.labels[f] for f in self.vertex_faces[v])

    def edge_labels(self, e):
        return frozenset(self.labels[f] for f in self.edge_faces[e])

    def corner_facets(self, d, v):
        """Facets of domain ``d`` that contain 0-cell ``v``."""
        return tuple(f for f in self.domains[d] if v in self.face_vertices[f])

    def key(self):
        return (self.num_vertices, self.edges, self.faces, self.labels, self.domains)

    def __eq__(self, other):
        return isinstance(other, CellComplex3) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "CellComplex3(cells=%s, chi=%d)" % (self.cell_counts(), self.euler_characteristic())


def validate_complex3(c):
    """Check every structural invariant; returns a report listing violations."""
    rep = ValidationReport()
    if c.num_vertices == 0:
        rep.add("EmptyComplex", [])
        return rep
    for i, e in enumerate(c.edges):
        if len(e) != 2 or any(not 0 <= v < c.num_vertices for v in e):
            rep.add("BadEdgeBoundary", [i])
        elif e[0] == e[1]:
            rep.add("SelfLoopEdge", [i], "flagged, not forbidden")
    for i, f in enumerate(c.faces):
        if any(not 0 <= e < len(c.edges) for e in f):
            rep.add("BadFaceBoundary", [i])
            continue
        # boundary must be a closed cycle: every vertex used by exactly two edges
        counts = Counter(v for e in f for v in c.edges[e])
        if any(k != 2 for k in counts.values()) or len(set(f)) != len(f):
            rep.add("OpenFaceBoundary", [i])
    if rep.violations:
        return rep

    for v in range(c.num_vertices):
        labels = c.vertex_labels(v)
        if len(labels) != 3:
            rep.add("VertexCorankViolation", [v], f"lies on {len(labels)} hypersurfaces")
        ne = sum(2 if c.edges[e][0] == c.edges[e][1] else 1 for e in c.vertex_edges[v])
        nf, nd = len(c.vertex_faces[v]), len(c.vertex_domains[v])
        if (ne, nf, nd) != (6, 12, 8):
            rep.add("VertexLinkNotOctahedral", [v], f"link counts {(ne, nf, nd)}")
    for e in range(len(c.edges)):
        if len(c.edge_labels(e)) != 2:
            rep.add("EdgeLabelViolation", [e], f"on {len(c.edge_labels(e))} hypersurfaces")
    for f, doms in enumerate(c.face_domains):
        if len(doms) != 2 or doms[0] == doms[1]:
            rep.add("FaceNotTwoSided", [f], f"bounds domains {doms}")
    for d, facets in enumerate(c.domains):
        if len(set(facets)) != len(facets):
            rep.add("RepeatedFacet", [d])
        labs = [c.labels[f] for f in facets]
        if len(set(labs)) != len(labs):
            rep.add("RepeatedFacetLabel", [d], "two facets on one hypersurface")
        for v in c.domain_vertices[d]:
            k = len(c.corner_facets(d, v))
            if k != 3:
                rep.add("NotSimplePolytope", [d, v], f"corner meets {k} facets")
        for e in c.domain_edges[d]:
            k = sum(1 for f in facets if e in c.faces[f])
            if k != 2:
                rep.add("DomainEdgeNotManifold", [d, e], f"edge in {k} facets")
    total_corners = sum(len(vs) for vs in c.domain_vertices)
    if total_corners != 8 * c.num_vertices and not any(
            x.kind == "VertexLinkNotOctahedral" for x in rep.violations):
        rep.add("CornerCountMismatch", [], f"{total_corners} != 8*{c.num_vertices}")
    return rep


def corner_label_sets(c, d):
    """Map corner 0-cell -> labels of the three facets of domain ``d`` through it."""
    return {v: tuple(c.labels[f] for f in c.corner_facets(d, v))
            for v in sorted(c.domain_vertices[d])}


def domain_edge_label_pairs(c, d):
    """Label pairs of facets sharing an edge of domain ``d``, with the edge's ends."""
    out = []
    facets = c.domains[d]
    for e in sorted(c.domain_edges[d]):
        inc = [f for f in facets if e in c.faces[f]]
        if len(inc) == 2:
            out.append((e, tuple(c.labels[f] for f in inc), c.edges[e]))
    return out


