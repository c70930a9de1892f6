"""Test-only builders and oracles, independent of the package internals."""

import math
from fractions import Fraction

import numpy as np

from hypfan.surface import SurfaceComplex


def digon_complex():
    """Two loops crossing exactly twice on the sphere: four digon faces."""
    return SurfaceComplex([[0, 1, 2, 3], [4, 5, 6, 7]],
                          [(0, 4), (2, 6), (1, 7), (3, 5)])


def great_circles(normals):
    """Arrangement of great circles with the given plane normals, from float geometry."""
    ns = [np.array(n, dtype=float) / np.linalg.norm(n) for n in normals]
    points, on = [], []
    for i in range(len(ns)):
        for j in range(i + 1, len(ns)):
            p = np.cross(ns[i], ns[j])
            p /= np.linalg.norm(p)
            for s in (1, -1):
                points.append(s * p)
                on.append((i, j))
    rotations, slot = [], {}
    for k, p in enumerate(points):
        i, j = on[k]
        dirs = {(i, 1): np.cross(ns[i], p), (i, -1): -np.cross(ns[i], p),
                (j, 1): np.cross(ns[j], p), (j, -1): -np.cross(ns[j], p)}
        e1 = dirs[(i, 1)]
        e2 = np.cross(p, e1)
        order = sorted(dirs, key=lambda key: math.atan2(dirs[key] @ e2, dirs[key] @ e1) % (2 * math.pi))
        rotations.append([4 * k + s for s in range(4)])
        for s, key in enumerate(order):
            slot[(k, key)] = 4 * k + s
    edges = []
    for i, n in enumerate(ns):
        e1 = np.cross(n, [1.0, 0.3, 0.7])
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(n, e1)
        ks = sorted((k for k in range(len(points)) if i in on[k]),
                    key=lambda k: math.atan2(points[k] @ e2, points[k] @ e1))
        for a, b in zip(ks, ks[1:] + ks[:1]):
            edges.append((slot[(a, (i, 1))], slot[(b, (i, -1))]))
    return SurfaceComplex(rotations, edges)


def float_face_compatible(seq, vectors):
    """Floating point oracle: signed turning angles in (0, pi), summing to one turn."""
    angles = [math.atan2(float(vectors[lab][1]), float(vectors[lab][0])) for lab in seq]
    k = len(angles)
    if k < 3:
        return False
    steps = []
    for j in range(k):
        d = (angles[(j + 1) % k] - angles[j] + math.pi) % (2 * math.pi) - math.pi
        if abs(d) < 1e-9 or abs(abs(d) - math.pi) < 1e-9:
            return False
        steps.append(d)
    if not (all(s > 0 for s in steps) or all(s < 0 for s in steps)):
        return False
    return abs(abs(sum(steps)) - 2 * math.pi) < 1e-6


def _strictly_inside(gens, x):
    m = np.array(gens, dtype=float).T
    a = np.linalg.solve(m, np.array(x, dtype=float))
    return bool(np.all(a > 1e-9)), bool(np.all(a > -1e-9))


def sampled_cover_oracle(cones, radius=6):
    """Point location over an integer grid of directions.

    Returns ``("overlap", x)`` if a direction is strictly inside two cones,
    ``("uncovered", x)`` if some direction is in no closed cone, else ``("ok", None)``.
    """
    cones = [[tuple(float(a) for a in g) for g in cone] for cone in cones]
    rng = range(-radius, radius + 1)
    for x in ((a, b, c) for a in rng for b in rng for c in rng):
        if x == (0, 0, 0):
            continue
        strict = closed = 0
        for gens in cones:
            s, cl = _strictly_inside(gens, x)
            strict += s
            closed += cl
        if strict > 1:
            return "overlap", x
        if closed == 0:
            return "uncovered", x
    return "ok", None


def interiors_meet_lp(A, B):
    """LP oracle: is there x = A a = B b with a, b >= 1?"""
    from scipy.optimize import linprog
    A = np.array(A, dtype=float).T
    B = np.array(B, dtype=float).T
    k = A.shape[1] + B.shape[1]
    res = linprog(np.zeros(k), A_eq=np.hstack([A, -B]), b_eq=np.zeros(3),
                  bounds=[(1, None)] * k, method="highs")
    return res.status == 0


def frac_vec(v):
    return tuple(Fraction(x) for x in v)
