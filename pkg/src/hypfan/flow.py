"""Gradient-like flows of a generic direction ``w``.

Near a fixed point the action is linear in the adapted basis, so a fixed
point's index and the orientation of every 1-dimensional orbit can be read
off from the coordinates of ``w`` in the basis of fan vectors through it.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import errors
from .fan import cone_contains, is_generic, label_key
from .linalg import as_fraction, rank, solve_in_basis


@dataclass(frozen=True)
class Direction:
    w: tuple
    certificate: str = "generic"

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)


def parse_direction(text):
    """Read ``"2,1"`` or ``"3/2,1"`` as a tuple of Fractions."""
    parts = [p for p in str(text).replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError("empty direction")
    return tuple(as_fraction(p) for p in parts)


def make_direction(w, fan, c=None, strict=False):
    """Validate genericity eagerly; raises NonGenericDirection."""
    w = tuple(as_fraction(x) for x in w)
    ok, witness = is_generic(w, fan, c, strict=strict)
    if not ok:
        raise errors.NonGenericDirection(
            f"w = {_fmt(w)} lies in the span of {list(witness)}", witness=witness)
    return Direction(w)


def _fmt(w):
    return "(" + ", ".join(str(x) for x in w) + ")"


def _w(w):
    if isinstance(w, Direction):
        return w.w
    return tuple(as_fraction(x) for x in w)


@dataclass(frozen=True)
class VertexIndex:
    vertex: int
    labels: tuple
    alphas: tuple
    index: int


@dataclass
class IndexCounts:
    counts: tuple

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def n(self):
        return len(self.counts) - 1

    def alternating_sum(self):
        return sum((-1) ** i * x for i, x in enumerate(self.counts))


@dataclass
class FlowGraph:
    num_nodes: int
    dimension: int
    indices: tuple  # VertexIndex per node
    arcs: tuple  # (tail, head, edge id)
    w: tuple = ()

    def index(self, v):
        return self.indices[v].index

    def successors(self):
        out = [[] for _ in range(self.num_nodes)]
        for t, h, _ in self.arcs:
            out[t].append(h)
        return out

    def predecessors(self):
        out = [[] for _ in range(self.num_nodes)]
        for t, h, _ in self.arcs:
            out[h].append(t)
        return out

    def to_dict(self):
        return {
            "w": [str(x) for x in self.w],
            "nodes": [{"id": vi.vertex, "index": vi.index,
                       "labels": [str(x) for x in vi.labels],
                       "alphas": [str(a) for a in vi.alphas]} for vi in self.indices],
            "arcs": [{"tail": t, "head": h, "edge": e} for t, h, e in self.arcs],
        }


def basis_labels(c, v):
    """Labels of the n hypersurfaces through 0-cell ``v``."""
    if c.dimension == 2:
        return tuple(c.vertex_loops(v))
    return tuple(sorted(c.vertex_labels(v), key=label_key))


def vertex_index(c, v, fan, w):
    if not 0 <= v < c.num_vertices:
        raise errors.NotAVertex(f"no vertex {v}", vertex=v)
    w = _w(w)
    labs = basis_labels(c, v)
    basis = [fan[lab] for lab in labs]
    if len(set(labs)) != c.dimension or rank(basis) != c.dimension:
        raise errors.DegenerateCorner(f"vertex {v} has dependent fan vectors", vertex=v,
                                      labels=labs)
    alphas = solve_in_basis(basis, w)
    if any(a == 0 for a in alphas):
        zero = tuple(lab for lab, a in zip(labs, alphas) if a != 0)
        raise errors.NonGenericDirection(
            f"w = {_fmt(w)} has a zero coordinate at vertex {v}", vertex=v, witness=zero)
    return VertexIndex(v, labs, alphas, sum(1 for a in alphas if a > 0))


def all_indices(c, fan, w):
    return tuple(vertex_index(c, v, fan, w) for v in range(c.num_vertices))


def index_counts(c, fan, w, indices=None):
    indices = indices or all_indices(c, fan, w)
    counts = [0] * (c.dimension + 1)
    for vi in indices:
        counts[vi.index] += 1
    return IndexCounts(tuple(counts))


def _edge_ends(c, e):
    """``[(endpoint, transverse label), ...]`` for both ends of 1-cell ``e``."""
    if c.dimension == 2:
        return [(c.dart_vertex[d], c.other_loop_at(d)) for d in c.edges[e]]
    on = c.edge_labels(e)
    out = []
    for p in c.edges[e]:
        rest = [lab for lab in c.vertex_labels(p) if lab not in on]
        if len(rest) != 1:
            raise errors.InconsistentEdgeSigns(
                f"edge {e} has no unique transverse hypersurface at {p}", edge=e)
        out.append((p, rest[0]))
    return out


def orient_edges(c, fan, w):
    w = _w(w)
    indices = all_indices(c, fan, w)
    arcs = []
    num_edges = c.num_edges if c.dimension == 2 else len(c.edges)
    for e in range(num_edges):
        signs = []
        for p, u in _edge_ends(c, e):
            vi = indices[p]
            signs.append((p, vi.alphas[vi.labels.index(u)] > 0))
        (p, hp), (q, hq) = signs
        if hp == hq:
            raise errors.InconsistentEdgeSigns(
                f"edge {e}: both ends {'attract' if hp else 'repel'}", edge=e)
        arcs.append((q, p, e) if hp else (p, q, e))
    return FlowGraph(c.num_vertices, c.dimension, indices, tuple(arcs), w)


def detect_cycles(g):
    """Directed cycles found by depth-first search, one per back arc."""
    succ = [[] for _ in range(g.num_nodes)]
    for t, h, _ in g.arcs:
        succ[t].append(h)
    for s in succ:
        s.sort()
    state = [0] * g.num_nodes  # 0 new, 1 on stack, 2 done
    cycles = []
    for root in range(g.num_nodes):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                state[v] = 2
            elif state[nxt] == 1:
                cycles.append(path[path.index(nxt):] + [nxt])
            elif state[nxt] == 0:
                state[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(succ[nxt])))
    return cycles


def assign_levels(g):
    """Integer levels strictly increasing along arcs (longest-path layering)."""
    indeg = [0] * g.num_nodes
    succ = [[] for _ in range(g.num_nodes)]
    for t, h, _ in g.arcs:
        succ[t].append(h)
        indeg[h] += 1
    level = [0] * g.num_nodes
    ready = sorted(v for v in range(g.num_nodes) if indeg[v] == 0)
    done = 0
    while ready:
        v = ready.pop(0)
        done += 1
        for h in succ[v]:
            level[h] = max(level[h], level[v] + 1)
            indeg[h] -= 1
            if indeg[h] == 0:
                ready.append(h)
    if done != g.num_nodes:
        raise errors.CyclicFlowGraph("flow graph has a directed cycle",
                                     cycles=detect_cycles(g))
    return {v: level[v] for v in range(g.num_nodes)}


def level_report(g, levels):
    bad = [(t, h) for t, h, _ in g.arcs if not levels[t] < levels[h]]
    minima = sorted(v for v, lv in levels.items() if lv == 0)
    repellers = sorted(v for v in range(g.num_nodes) if g.index(v) == 0)
    return {"monotone": not bad, "violations": bad,
            "minima_are_repellers": minima == repellers,
            "max_level": max(levels.values()) if levels else 0}


def saddles_connected(g):
    """True iff every node of index strictly between 0 and n has in- and out-arcs."""
    succ, pred = g.successors(), g.predecessors()
    return all(succ[v] and pred[v] for v in range(g.num_nodes)
               if 0 < g.index(v) < g.dimension)


def _top_cells(c):
    """``[(domain id, [corner vertex, ...]), ...]`` with one entry per corner."""
    if c.dimension == 2:
        return [(f.id, [v for v, _ in f.corners]) for f in c.faces]
    return [(d, sorted(c.domain_vertices[d])) for d in range(c.num_domains)]


@dataclass
class Report:
    name: str
    verdicts: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(v["ok"] for v in self.verdicts)

    def check(self, name, ok, **detail):
        self.verdicts.append({"check": name, "ok": bool(ok), **detail})
        return bool(ok)

    def to_dict(self):
        return {"report": self.name, "ok": self.ok, "verdicts": self.verdicts,
                **self.data}


def check_domain_count(c, fan, w):
    w = _w(w)
    n = c.dimension
    indices = all_indices(c, fan, w)
    counts = index_counts(c, fan, w, indices)
    F = c.num_faces if n == 2 else c.num_domains
    rep = Report("domain-count", data={"counts": list(counts), "domains": F})
    rep.check("F = c_n 2^n", F == counts[n] * 2 ** n, F=F, c_n=counts[n])
    rep.check("F = c_0 2^n", F == counts[0] * 2 ** n, F=F, c_0=counts[0])
    groups = {}
    bad = []
    for d, corners in _top_cells(c):
        att = [v for v in corners if indices[v].index == n]
        rep_ = [v for v in corners if indices[v].index == 0]
        if len(att) != 1 or len(rep_) != 1:
            bad.append(d)
        if len(att) == 1:
            groups.setdefault(att[0], []).append(d)
    rep.check("one attractor and one repeller per domain", not bad, domains=bad)
    sizes = sorted({len(v) for v in groups.values()})
    rep.check("jigsaw pieces have 2^n domains", sizes == [2 ** n] and
              len(groups) == counts[n], sizes=sizes)
    rep.data["jigsaw"] = {str(k): v for k, v in sorted(groups.items())}
    return rep


def attractor_pair_decomposition_s2(c, fan, w):
    """Recount attractors by loop pairs whose open cone contains ``w``."""
    w = _w(w)
    counts = index_counts(c, fan, w)
    crossings = {}
    for v in range(c.num_vertices):
        a, b = c.vertex_loops(v)
        if a != b:
            key = tuple(sorted((a, b)))
            crossings[key] = crossings.get(key, 0) + 1
    total = 0
    contributing = []
    for i, j in combinations(c.loop_labels, 2):
        gens = [fan[i], fan[j]]
        if rank(gens) < 2 or not cone_contains(gens, w, strict=True):
            continue
        k = crossings.get((i, j), 0)
        total += k
        if k:
            contributing.append({"pair": [i, j], "crossings": k})
    rep = Report("attractor-pairs", data={"contributing": contributing, "sum": total})
    rep.check("pair sum equals c_2", total == counts[2], sum=total, c_2=counts[2])
    rep.check("pair sum is even", total % 2 == 0, sum=total)
    return rep


def morse_inequalities(counts, betti, num_vertices=None):
    cs = list(counts)
    bs = list(betti)
    n = len(cs) - 1
    if len(bs) != len(cs):
        raise errors.DimensionMismatch("counts and betti numbers differ in length")
    rep = Report("morse", data={"counts": cs, "betti": bs})
    for i in range(n + 1):
        lhs = sum((-1) ** (i - k) * cs[k] for k in range(i + 1))
        rhs = sum((-1) ** (i - k) * bs[k] for k in range(i + 1))
        rep.check(f"strong inequality {i}", lhs >= rhs, lhs=lhs, rhs=rhs)
        if i == n:
            rep.check("equality at top degree", lhs == rhs, lhs=lhs, rhs=rhs)
    for i in range(n + 1):
        rep.check(f"weak inequality {i}", cs[i] >= bs[i], c=cs[i], b=bs[i])
    V = sum(cs) if num_vertices is None else num_vertices
    rep.check("V >= sum of betti numbers", V >= sum(bs), V=V, total=sum(bs))
    return rep


def flow_report(c, fan, w, betti=None):
    """Everything the CLI prints for a flow analysis."""
    w = _w(w)
    g = orient_edges(c, fan, w)
    counts = index_counts(c, fan, w, g.indices)
    rep = Report("flow", data={"w": [str(x) for x in w], "counts": list(counts)})
    chi = c.euler_characteristic()
    rep.check("alternating sum equals chi", counts.alternating_sum() == chi,
              value=counts.alternating_sum(), chi=chi)
    rep.check("c_0 = c_n", counts[0] == counts[-1])
    dc = check_domain_count(c, fan, w)
    rep.verdicts += dc.verdicts
    cycles = detect_cycles(g)
    if c.dimension == 2:
        rep.check("no cycles", not cycles, cycles=cycles)
    else:
        rep.data["cycles"] = cycles  # open in dimension 3: logged only
    if not cycles:
        levels = assign_levels(g)
        lr = level_report(g, levels)
        rep.check("levels increase along arcs", lr["monotone"])
        rep.data["levels"] = [levels[v] for v in range(g.num_nodes)]
    rep.check("saddles have in- and out-arcs", saddles_connected(g))
    if betti is not None:
        rep.verdicts += morse_inequalities(counts, betti, c.num_vertices).verdicts
    rep.data["graph"] = g.to_dict()
    return rep, g


def random_generic_directions(fan, c, count, seed=0, bound=9):
    """``count`` distinct generic integer directions drawn with ``random.Random(seed)``."""
    import random
    rng = random.Random(seed)
    out, seen = [], set()
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 1000 * count:
            raise errors.NonGenericDirection("could not sample enough generic directions")
        w = tuple(rng.randint(-bound, bound) for _ in range(fan.dimension))
        if w in seen:
            continue
        seen.add(w)
        if is_generic(w, fan, c)[0]:
            out.append(w)
    return out


def _survey_one(args):
    c, fan, w = args
    g = orient_edges(c, fan, w)
    return {"w": [str(x) for x in w], "counts": list(index_counts(c, fan, w, g.indices)),
            "cycles": detect_cycles(g)}


def cycle_survey(c, fan, samples, seed=0, jobs=1):
    """Run cycle detection over seeded random generic directions.

    Results come back in sampling order whatever ``jobs`` is.
    """
    ws = random_generic_directions(fan, c, samples, seed)
    work = [(c, fan, w) for w in ws]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_survey_one, work))
    else:
        results = [_survey_one(x) for x in work]
    return {"samples": len(results), "seed": seed,
            "with_cycles": sum(1 for r in results if r["cycles"]), "runs": results}
