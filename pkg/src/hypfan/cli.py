"""``hypfan`` command line.

Exit codes: 0 all checks pass, 1 some check fails, 2 usage error or
non-generic direction, 3 internal invariant violation.
"""

import argparse
import json
import sys

from . import errors
from .serialize import complex_from_dict, complex_to_dict, dumps

INTERNAL = (errors.InconsistentEdgeSigns, errors.CyclicFlowGraph)


class UsageError(Exception):
    pass


def _read(path, stdin):
    text = stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from None


def _load(args, stdin):
    c, fan = complex_from_dict(_read(args.input, stdin))
    if getattr(args, "fan", None):
        from .fan import Fan
        fan = Fan.from_dict(_read(args.fan, stdin))
    return c, fan


def _betti(text, c):
    if text:
        return [int(x) for x in text.split(",")]
    if c.dimension == 3:
        return [1, 0, 0, 1]
    if c.orientable:
        return [1, 2 * c.genus, 1]
    return [1, c.genus - 1, 0]


def _parse_w(text):
    from .flow import parse_direction
    if not text:
        raise UsageError("--w is required")
    try:
        return parse_direction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad direction {text!r}: {exc}") from None


def _need_fan(fan):
    if fan is None:
        raise UsageError("a fan is required (embedded in the input or via --fan)")
    return fan


def _render(report, fmt, out):
    if fmt == "text":
        out.write(f"{report.get('report', report.get('command', 'report'))}: "
                  f"{'ok' if report.get('ok') else 'FAILED'}\n")
        for v in report.get("verdicts", []):
            out.write(f"  {'PASS' if v['ok'] else 'FAIL'}  {v['check']}\n")
        for key in ("counts", "status", "V", "E", "F", "N", "domains"):
            if key in report:
                out.write(f"  {key}: {report[key]}\n")
    else:
        out.write(dumps(report))


# verbs

def cmd_generate(args, stdin, out):
    from .generators import generate
    kw = {}
    if args.family in ("genus", "nonorientable"):
        kw = {"g": args.g, "variant": args.variant or ("16" if args.family != "genus" else "8")}
    ex = generate(args.family, **kw)
    data = complex_to_dict(ex.complex, ex.fan)
    data["name"] = ex.name
    data["betti"] = list(ex.betti)
    out.write(dumps(data))
    return 0


def cmd_validate(args, stdin, out):
    from .cells3 import validate_complex3
    from .fan import fan_compatible
    c, fan = _load(args, stdin)
    rep = {"command": "validate", "verdicts": []}
    if c.dimension == 2:
        V, E, F = c.num_vertices, c.num_edges, c.num_faces
        rep.update(V=V, E=E, F=F, N=len(c.loops), chi=c.euler_characteristic(),
                   surface=c.surface(), issues=c.issues())
        rep["verdicts"] += [{"check": "E = 2V", "ok": E == 2 * V},
                            {"check": "F = V + chi", "ok": F == V + c.euler_characteristic()}]
    else:
        vr = validate_complex3(c)
        rep.update(cells=list(c.cell_counts()), chi=c.euler_characteristic(),
                   violations=vr.to_dict()["violations"])
        hard = [v for v in vr.violations if v.kind != "SelfLoopEdge"]
        rep["verdicts"].append({"check": "cell structure", "ok": not hard})
    if fan is not None:
        fr = fan_compatible(c, fan)
        rep["fan"] = fr.to_dict()
        rep["verdicts"].append({"check": "fan compatible", "ok": fr.ok})
    rep["ok"] = all(v["ok"] for v in rep["verdicts"])
    _render(rep, args.format, out)
    return 0 if rep["ok"] else 1


def cmd_check_s2(args, stdin, out):
    from .sphere2 import s2_suite
    c, fan = _load(args, stdin)
    if c.dimension != 2:
        raise UsageError("check-s2 needs a surface complex")
    rep = s2_suite(c, fan)
    if args.format == "dot":
        from .dot import export_dot
        from .sphere2 import bicolor
        out.write(export_dot(c, coloring=bicolor(c)))
        return 0 if rep.ok else 1
    _render(rep.to_dict(), args.format, out)
    return 0 if rep.ok else 1


def cmd_flow(args, stdin, out):
    from .flow import cycle_survey, flow_report, make_direction, attractor_pair_decomposition_s2
    c, fan = _load(args, stdin)
    fan = _need_fan(fan)
    w = _parse_w(args.w)
    if len(w) != c.dimension:
        raise UsageError(f"--w needs {c.dimension} components")
    make_direction(w, fan, c)
    rep, g = flow_report(c, fan, w, _betti(args.betti, c))
    if c.dimension == 2 and c.euler_characteristic() == 2 and c.orientable:
        rep.verdicts += attractor_pair_decomposition_s2(c, fan, w).verdicts
    if args.samples:
        rep.data["survey"] = cycle_survey(c, fan, args.samples, args.seed, args.jobs)
    if args.format == "dot":
        from .dot import export_dot
        out.write(export_dot(c, flow=g))
    else:
        _render(rep.to_dict(), args.format, out)
    return 0 if rep.ok else 1


def cmd_move(args, stdin, out):
    from .moves import SpherePair, augment, insert_spheres, remove_spheres
    c, fan = _load(args, stdin)
    fan = _need_fan(fan)
    if args.op == "insert":
        wp = _parse_w(args.w_prime) if args.w_prime else None
        c, fan, pair = insert_spheres(c, fan, args.x, wp)
    elif args.op == "remove":
        if args.inner is None or args.outer is None:
            raise UsageError("remove needs --inner and --outer")
        from .fan import parse_label
        c, fan = remove_spheres(c, fan, SpherePair(args.x, parse_label(args.inner),
                                                   parse_label(args.outer)))
    else:
        c, fan = augment(c, fan, args.k)
    out.write(dumps(complex_to_dict(c, fan)))
    return 0


def cmd_search(args, stdin, out):
    from .fansearch import realizability_report
    c, _ = _load(args, stdin)
    if c.dimension != 2:
        raise UsageError("search handles surface complexes only")
    rep = realizability_report(c, args.budget)
    if rep["ok"] and args.format == "json":
        out.write(dumps(rep["search"]["fan"]))
    else:
        _render(rep, args.format if args.format != "dot" else "json", out)
    return 0 if rep["ok"] else 1


def cmd_replay(args, stdin, out):
    from .moves import MoveScript
    script = MoveScript.from_json(_read(args.script, stdin))
    c = fan = None
    if args.input:
        c, fan = _load(args, stdin)
    state = script.replay(c, fan)
    out.write(dumps(complex_to_dict(state.complex, state.fan)))
    return 0


def cmd_export(args, stdin, out):
    from .dot import export_dot
    c, fan = _load(args, stdin)
    flow = coloring = None
    if args.w:
        from .flow import make_direction, orient_edges
        w = _parse_w(args.w)
        make_direction(w, _need_fan(fan), c)
        flow = orient_edges(c, fan, w)
    if args.coloring:
        from .sphere2 import bicolor
        coloring = bicolor(c)
    out.write(export_dot(c, flow=flow, coloring=coloring))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="hypfan", description=(
        "Check, build and explore orbit complexes of totally hyperbolic actions."))
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, fmt=True, infile=True):
        if infile:
            sp.add_argument("input", nargs="?", default="-",
                            help="complex JSON (default: stdin)")
            sp.add_argument("--fan", help="fan JSON overriding the embedded one")
        if fmt:
            sp.add_argument("--format", choices=["json", "text", "dot"], default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--jobs", type=int, default=1)

    g = sub.add_parser("generate", help="emit an example complex with its fan")
    g.add_argument("family", choices=["octahedral", "genus", "nonorientable", "s3", "rp3"])
    g.add_argument("--g", type=int, default=1)
    g.add_argument("--variant", choices=["8", "16", "eight", "sixteen"],
                   help="domains before any quotient (default 8 for genus, 16 otherwise)")
    common(g, fmt=False, infile=False)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("validate", help="structural and fan checks")
    common(v)
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("check-s2", help="sphere parity suite")
    common(s)
    s.set_defaults(func=cmd_check_s2)

    f = sub.add_parser("flow", help="indices, edge orientations and Morse data for --w")
    common(f)
    f.add_argument("--w", help="direction, e.g. 2,1 or 3/2,1")
    f.add_argument("--betti", help="comma separated Betti numbers")
    f.add_argument("--samples", type=int, default=0,
                   help="also scan this many seeded random directions for cycles")
    f.set_defaults(func=cmd_flow)

    m = sub.add_parser("move", help="sphere insertion, removal, augmentation")
    common(m, fmt=False)
    m.add_argument("--op", choices=["insert", "remove", "augment"], required=True)
    m.add_argument("--x", type=int, default=0)
    m.add_argument("--k", type=int, default=1)
    m.add_argument("--w-prime", dest="w_prime")
    m.add_argument("--inner")
    m.add_argument("--outer")
    m.set_defaults(func=cmd_move)

    se = sub.add_parser("search", help="find a compatible fan")
    common(se)
    se.add_argument("--budget", type=int, default=10**6)
    se.set_defaults(func=cmd_search)

    r = sub.add_parser("replay", help="replay a move script")
    r.add_argument("script")
    r.add_argument("--input", help="starting complex JSON")
    r.add_argument("--fan")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_replay)

    e = sub.add_parser("export", help="DOT rendering")
    common(e, fmt=False)
    e.add_argument("--w")
    e.add_argument("--coloring", action="store_true")
    e.set_defaults(func=cmd_export)
    return p


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdin, out)
    except UsageError as exc:
        err.write(f"hypfan: {exc}\n")
        return 2
    except errors.NonGenericDirection as exc:
        err.write(f"hypfan: NonGenericDirection: {exc}\n")
        return 2
    except INTERNAL as exc:
        err.write(f"hypfan: internal invariant violated: {exc.code}: {exc}\n")
        return 3
    except errors.HypfanError as exc:
        err.write(f"hypfan: {exc.code}: {exc}\n")
        return 1
    except (OSError, KeyError, ValueError, TypeError) as exc:
        err.write(f"hypfan: bad input: {exc}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
