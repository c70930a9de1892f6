"""Search for a fan compatible with a surface complex.

A fan on the circle is determined, up to what compatibility can see, by the
circular order of its directions and the sizes of the gaps between them.
The search backtracks over circular orders (label 1 fixed first, reflection
fixed by the third label) and prunes any partial order in which some face
is not cyclically monotone.  A complete order is realized by a small linear
program on the gaps; the resulting angles are rounded to integer vectors and
the fan is re-checked exactly.  The linear program only proposes candidates;
acceptance is always decided by ``fan_compatible``.
"""

import math
from dataclasses import dataclass, field

from .fan import Fan, fan_compatible

FOUND, INFEASIBLE, BUDGET = "Found", "Infeasible", "BudgetExhausted"


@dataclass
class SearchResult:
    status: str
    fan: Fan = None
    order: tuple = ()
    nodes: int = 0
    reason: str = ""
    detail: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.status == FOUND

    def to_dict(self):
        return {"status": self.status, "nodes": self.nodes, "reason": self.reason,
                "order": [str(x) for x in self.order],
                "fan": self.fan.to_dict() if self.fan else None, **self.detail}


class _Budget(Exception):
    pass


def _cyclic_direction(ranks):
    """+1 / -1 if the cyclic sequence increases / decreases once around, else 0."""
    m = len(ranks)
    if m <= 2:
        return 2  # any direction works
    down = sum(1 for j in range(m) if ranks[j] > ranks[(j + 1) % m])
    if down == 1:
        return 1
    if down == m - 1:
        return -1
    return 0


def _face_orders_ok(faces, pos):
    for seq in faces:
        ranks = [pos[lab] for lab in seq if lab in pos]
        if _cyclic_direction(ranks) == 0:
            return False
    return True


def _gap_lp(order, faces):
    """Maximal margin gaps for a complete circular order, or ``None``."""
    from scipy.optimize import linprog
    n = len(order)
    pos = {lab: i for i, lab in enumerate(order)}
    rows = set()
    for seq in faces:
        ranks = [pos[lab] for lab in seq]
        s = _cyclic_direction(ranks)
        k = len(ranks)
        for j in range(k):
            a, b = ranks[j], ranks[(j + 1) % k]
            if s < 0:
                a, b = b, a
            rows.add(tuple(sorted((a + m) % n for m in range((b - a) % n))))
    A_ub, b_ub = [], []
    for m in range(n):  # t - g_m <= 0
        A_ub.append([-1.0 if i == m else 0.0 for i in range(n)] + [1.0])
        b_ub.append(0.0)
    for arc in sorted(rows):
        A_ub.append([1.0 if i in arc else 0.0 for i in range(n)] + [1.0])
        b_ub.append(0.5)
    res = linprog([0.0] * n + [-1.0], A_ub=A_ub, b_ub=b_ub,
                  A_eq=[[1.0] * n + [0.0]], b_eq=[1.0],
                  bounds=[(0, None)] * n + [(None, 1)], method="highs")
    if res.status != 0 or res.x[-1] <= 1e-9:
        return None
    return list(res.x[:n])


def _realize(order, gaps, c):
    theta = 0.0
    angles = {}
    for lab, g in zip(order, gaps):
        angles[lab] = theta
        theta += g
    for scale in (10**3, 10**6, 10**9):
        vecs = {}
        for lab, a in angles.items():
            x = round(math.cos(2 * math.pi * a) * scale)
            y = round(math.sin(2 * math.pi * a) * scale)
            d = math.gcd(x, y) or 1
            vecs[lab] = (x // d, y // d)
        fan = Fan(2, vecs)
        if fan_compatible(c, fan).ok:
            return fan
    return None


def _insertion_order(labels, faces):
    """Most-connected-first label order, starting from the smallest label."""
    together = {lab: set() for lab in labels}
    for seq in faces:
        for a in seq:
            together[a].update(seq)
    order = [labels[0]]
    rest = list(labels[1:])
    while rest:
        best = max(rest, key=lambda lab: (len(together[lab] & set(order)), -labels.index(lab)))
        order.append(best)
        rest.remove(best)
    return order


def search_fan(c, budget=10**6):
    """Three-valued search; a returned fan is always verified exactly."""
    labels = list(c.loop_labels)
    faces = [tuple(f.sides) for f in c.faces]
    for f, seq in zip(c.faces, faces):
        if len(seq) < 3:
            return SearchResult(INFEASIBLE, reason="Digon", detail={"face": f.id})
        if len(set(seq)) != len(seq):
            return SearchResult(INFEASIBLE, reason="RepeatedSide", detail={"face": f.id})
    faces_of = {lab: [s for s in faces if lab in s] for lab in labels}
    ins = _insertion_order(labels, faces)
    nodes = 0

    def rec(order, k):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if k == len(ins):
            gaps = _gap_lp(order, faces)
            if gaps is None:
                return None
            fan = _realize(order, gaps, c)
            return (tuple(order), fan) if fan is not None else None
        lab = ins[k]
        slots = [len(order)] if k == 2 else range(1, len(order) + 1)
        for i in slots:
            new = order[:i] + [lab] + order[i:]
            pos = {x: j for j, x in enumerate(new)}
            if _face_orders_ok(faces_of[lab], pos):
                hit = rec(new, k + 1)
                if hit is not None:
                    return hit
        return None

    try:
        hit = rec([ins[0]], 1)
    except _Budget:
        return SearchResult(BUDGET, nodes=budget, reason="node budget exhausted")
    if hit is None:
        return SearchResult(INFEASIBLE, nodes=nodes, reason="no circular order realizes every face")
    order, fan = hit
    return SearchResult(FOUND, fan=fan, order=order, nodes=nodes)


def necessary_conditions(c):
    """Fast rejectors for sphere complexes; ``(name, ok)`` pairs."""
    from itertools import combinations
    from . import sphere2
    out = [("faces have at least 3 sides", all(len(f) >= 3 for f in c.faces))]
    if c.euler_characteristic() != 2 or not c.orientable:
        return out
    out.append(("parity theorem", sphere2.parity_theorem(c).ok))
    out.append(("vertex parities",
                all(sphere2.vertex_parities(c, i).ok for i in c.loop_labels)))
    lashes = True
    for i, j in combinations(c.loop_labels, 2):
        if not sphere2.loops_meet(c, i, j):
            continue
        for eye in sphere2.eyes(c, i, j):
            if not eye.raw and any(len(eye.eyelashes[k]) % 2 == 0 for k in (i, j)):
                lashes = False
    out.append(("eyelash parities", lashes))
    return out


def realizability_report(c, budget=10**6):
    checks = necessary_conditions(c)
    verdicts = [{"check": name, "ok": ok} for name, ok in checks]
    failed = [name for name, ok in checks if not ok]
    if failed:
        return {"report": "realizability", "status": "Rejected", "ok": False,
                "failed": failed[0], "verdicts": verdicts}
    res = search_fan(c, budget)
    verdicts.append({"check": "search", "ok": res.found, "status": res.status})
    status = "Realizable" if res.found else res.status
    return {"report": "realizability", "status": status, "ok": res.found,
            "verdicts": verdicts, "search": res.to_dict()}
