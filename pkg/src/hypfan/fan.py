"""Fans of rational vectors and their compatibility with orbit complexes.

All decisions are made with exact rational arithmetic: angles in the plane
are compared through cross and dot product signs, and 3D cone families are
certified through determinants.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import errors
from .linalg import (as_fraction, cross2, cross3, det, dot, in_span,
                     positively_proportional, rank, solve_combination)


def label_key(label):
    """Sort key mixing integer loop labels and string hypersurface labels."""
    return (0, label, "") if isinstance(label, int) else (1, 0, str(label))


def parse_label(key):
    if isinstance(key, int):
        return key
    s = str(key)
    return int(s) if s.lstrip("-").isdigit() else s


class Fan:
    """Assignment of a nonzero rational vector to every hypersurface label."""

    def __init__(self, dimension, vectors):
        self.dimension = int(dimension)
        vs = {}
        for label, coords in vectors.items():
            v = tuple(as_fraction(x) for x in coords)
            if len(v) != self.dimension:
                raise errors.DimensionMismatch(
                    f"vector {label!r} has {len(v)} coordinates", label=label)
            if all(x == 0 for x in v):
                raise errors.ZeroVector(f"vector {label!r} is zero", label=label)
            vs[label] = v
        self._vectors = vs

    def __getitem__(self, label):
        try:
            return self._vectors[label]
        except KeyError:
            raise errors.UnknownLabel(f"fan has no vector for {label!r}", label=label) from None

    def __contains__(self, label):
        return label in self._vectors

    def __len__(self):
        return len(self._vectors)

    def labels(self):
        return tuple(sorted(self._vectors, key=label_key))

    def items(self):
        return [(lab, self._vectors[lab]) for lab in self.labels()]

    def extended(self, extra):
        vs = dict(self._vectors)
        vs.update(extra)
        return Fan(self.dimension, vs)

    def without(self, labels):
        drop = set(labels)
        return Fan(self.dimension, {k: v for k, v in self._vectors.items() if k not in drop})

    def relabeled(self, mapping):
        return Fan(self.dimension, {mapping.get(k, k): v for k, v in self._vectors.items()})

    def scaled(self, factors):
        return Fan(self.dimension, {k: tuple(Fraction(factors.get(k, 1)) * x for x in v)
                                    for k, v in self._vectors.items()})

    def to_dict(self):
        def enc(x):
            return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]
        return {"dimension": self.dimension,
                "vectors": {str(k): [enc(x) for x in v] for k, v in self.items()}}

    @classmethod
    def from_dict(cls, data):
        return cls(data["dimension"],
                   {parse_label(k): v for k, v in data["vectors"].items()})

    def __eq__(self, other):
        return isinstance(other, Fan) and self.dimension == other.dimension \
            and self._vectors == other._vectors

    def __repr__(self):
        body = ", ".join(f"{k}: ({', '.join(str(x) for x in v)})" for k, v in self.items())
        return f"Fan({self.dimension}; {body})"


@dataclass
class Verdict:
    ok: bool
    reason: str = ""
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "reason": self.reason, "detail": _jsonable(self.detail)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_less(a, b):
    """Strict comparison of polar angles in [0, 2pi), exactly."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    return cross2(a, b) > 0


def face_compatible_2d(face, fan):
    """Whether a face with cyclic side labels ``face`` is compatible with ``fan``.

    The consecutive side vectors must turn strictly in one sense, each step
    by an angle in (0, pi), and go around the origin exactly once.
    """
    seq = list(face)
    vs = [fan[lab] for lab in seq]
    k = len(seq)
    if k < 3:
        return Verdict(False, "Digon", {"length": k})
    signs = []
    for j in range(k):
        a, b = vs[j], vs[(j + 1) % k]
        cr = cross2(a, b)
        if cr == 0:
            reason = "ZeroAngle" if dot(a, b) > 0 else "StraightAngle"
            return Verdict(False, reason, {"pair": (seq[j], seq[(j + 1) % k])})
        signs.append(1 if cr > 0 else -1)
    if len(set(signs)) != 1:
        j = next(i for i in range(k) if signs[i] != signs[0])
        return Verdict(False, "TurningSignFlip", {"at": j, "signs": signs})
    s = signs[0]
    wraps = 0
    for j in range(k):
        a, b = vs[j], vs[(j + 1) % k]
        if (angle_less(b, a) if s > 0 else angle_less(a, b)):
            wraps += 1
    if wraps != 1:
        return Verdict(False, "WindingNumber", {"turns": wraps})
    return Verdict(True, "", {"orientation": s})


def _separated(A, B):
    """True iff some plane through 0 weakly separates cones ``A`` and ``B``.

    An extreme separating normal is orthogonal to two of the generators, so
    the cross products of generator pairs are the only candidates.
    """
    gens = list(A) + list(B)
    for u, v in combinations(gens, 2):
        n = cross3(u, v)
        if all(x == 0 for x in n):
            continue
        for sgn in (1, -1):
            m = tuple(sgn * x for x in n)
            if all(dot(m, a) >= 0 for a in A) and all(dot(m, b) <= 0 for b in B):
                return True
    return False


def interiors_intersect(A, B):
    """Exact test for two full-dimensional simplicial cones in R^3."""
    return not _separated(A, B)


def complete_simplicial_fan_3d(corners, edges, fan):
    """Certify that corner cones form a complete fan dual to a simple polytope.

    ``corners`` maps corner id -> three labels; ``edges`` is a list of
    ``(edge id, (label, label), (corner, corner))``.
    """
    cones = {}
    for p, labs in corners.items():
        vs = [fan[lab] for lab in labs]
        if len(vs) != 3 or det(vs) == 0:
            raise errors.DegenerateCorner(
                f"corner {p} has dependent generators {labs}", corner=p, labels=labs)
        cones[p] = vs
    ids = sorted(cones)
    for p, q in combinations(ids, 2):
        if interiors_intersect(cones[p], cones[q]):
            return Verdict(False, "OverlappingCones", {"corners": (p, q)})
    for e, (l1, l2), (p, q) in edges:
        holders = [r for r in ids if l1 in corners[r] and l2 in corners[r]]
        if sorted(holders) != sorted({p, q}) or p == q:
            return Verdict(False, "UnpairedConeFace",
                           {"edge": e, "labels": (l1, l2), "holders": holders})
        v1, v2 = fan[l1], fan[l2]
        sides = []
        for r in (p, q):
            (third,) = [lab for lab in corners[r] if lab not in (l1, l2)]
            sides.append(det([v1, v2, fan[third]]) > 0)
        if sides[0] == sides[1]:
            return Verdict(False, "ConeFaceOneSided", {"edge": e, "labels": (l1, l2)})
    return Verdict(True)


def domain_compatible_3d(c, d, fan):
    from .cells3 import corner_label_sets, domain_edge_label_pairs
    return complete_simplicial_fan_3d(corner_label_sets(c, d),
                                      domain_edge_label_pairs(c, d), fan)


@dataclass
class FanReport:
    domains: list

    @property
    def ok(self):
        return all(d["ok"] for d in self.domains)

    def failures(self):
        return [d for d in self.domains if not d["ok"]]

    def to_dict(self):
        return {"ok": self.ok, "domains": self.domains}


def fan_compatible(c, fan):
    """Per-domain compatibility of ``fan`` with complex ``c``."""
    if fan.dimension != c.dimension:
        raise errors.DimensionMismatch("fan and complex dimensions differ")
    out = []
    if c.dimension == 2:
        for lab in c.loop_labels:
            fan[lab]
        for f in c.faces:
            v = face_compatible_2d(f.sides, fan)
            out.append({"domain": f.id, "ok": v.ok, "reason": v.reason,
                        "sides": list(f.sides)})
    else:
        for lab in c.hypersurface_labels():
            fan[lab]
        for d in range(c.num_domains):
            try:
                v = domain_compatible_3d(c, d, fan)
            except errors.DegenerateCorner as exc:
                v = Verdict(False, "DegenerateCorner", exc.details)
            out.append({"domain": d, "ok": v.ok, "reason": v.reason})
    return FanReport(out)


def cone_contains(generators, w, strict=False):
    """Exact membership of ``w`` in the cone spanned by independent generators."""
    gens = [tuple(as_fraction(x) for x in g) for g in generators]
    w = tuple(as_fraction(x) for x in w)
    if any(len(g) != len(w) for g in gens):
        raise errors.DimensionMismatch("generator and vector dimensions differ")
    if rank(gens) != len(gens):
        raise errors.DegenerateCorner("cone generators are dependent")
    coeffs = solve_combination(gens, w)
    if coeffs is None:
        return False
    return all(a > 0 for a in coeffs) if strict else all(a >= 0 for a in coeffs)


def vertex_label_sets(c):
    if c.dimension == 2:
        return [tuple(sorted(set(c.vertex_loops(v)), key=label_key))
                for v in range(c.num_vertices)]
    return [tuple(sorted(c.vertex_labels(v), key=label_key)) for v in range(c.num_vertices)]


def is_generic(w, fan, complex=None, strict=False):
    """Return ``(generic, witness)``.

    ``w`` is non-generic when it lies in the span of fewer than n fan vectors.
    Without ``strict`` only label sets that meet at a vertex of ``complex``
    are examined; ``witness`` is the first violating label subset.
    """
    w = tuple(as_fraction(x) for x in w)
    n = fan.dimension
    if len(w) != n:
        raise errors.DimensionMismatch("direction has wrong dimension")
    if all(x == 0 for x in w):
        return False, ()
    if strict or complex is None:
        pools = [fan.labels()]
    else:
        pools = vertex_label_sets(complex)
    candidates = set()
    for pool in pools:
        for k in range(1, n):
            for sub in combinations(pool, k):
                candidates.add(tuple(sorted(sub, key=label_key)))
    for sub in sorted(candidates, key=lambda s: (len(s), [label_key(x) for x in s])):
        if in_span([fan[lab] for lab in sub], w):
            return False, sub
    return True, ()


def same_direction(u, v):
    return positively_proportional(u, v)
