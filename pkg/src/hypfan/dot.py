"""Graphviz DOT rendering of complexes, flows and face colorings."""

_FILL = {"Black": "black", "White": "white"}


def _q(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def export_dot(c, flow=None, coloring=None):
    """Deterministic DOT text.

    Edges are directed along the flow when ``flow`` is given.  With a
    ``coloring`` every face becomes a filled box linked to its corners.
    """
    directed = flow is not None
    kind, arrow = ("digraph", "->") if directed else ("graph", "--")
    lines = [f"{kind} complex {{", "  node [shape=circle];"]
    for v in range(c.num_vertices):
        label = f"v{v}"
        if flow is not None:
            label += f"\\nind {flow.index(v)}"
        lines.append(f"  v{v} [label={_q(label)}];")
    if directed:
        for t, h, e in flow.arcs:
            lines.append(f"  v{t} -> v{h} [label={_q(_edge_label(c, e))}];")
    else:
        for e in range(len(c.edges)):
            a, b = _ends(c, e)
            lines.append(f"  v{a} -- v{b} [label={_q(_edge_label(c, e))}];")
    if coloring is not None and c.dimension == 2:
        for f in c.faces:
            col = _FILL.get(coloring[f.id], "gray")
            font = "white" if col == "black" else "black"
            lines.append(f"  f{f.id} [shape=box, style=filled, fillcolor={col}, "
                         f"fontcolor={font}];")
            for v in sorted(set(f.vertices)):
                lines.append(f"  f{f.id} {arrow} v{v} [style=dotted, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ends(c, e):
    return c.edge_ends(e) if c.dimension == 2 else c.edges[e]


def _edge_label(c, e):
    if c.dimension == 2:
        return f"e{e} L{c.loop_of_edge[e]}"
    return f"e{e}"
