"""JSON formats for complexes, fans and move scripts."""

import json

from .cells3 import CellComplex3
from .fan import Fan
from .surface import SurfaceComplex


def complex_to_dict(c, fan=None):
    if c.dimension == 2:
        data = {
            "dimension": 2,
            "vertices": [list(r) for r in c.rotations],
            "edges": [list(e) for e in c.edges],
        }
        if c.twisted:
            data["twisted"] = sorted(c.twisted)
        data["surface"] = c.surface()
    else:
        data = {
            "dimension": 3,
            "cells": {
                "0": [{"boundary": []} for _ in range(c.num_vertices)],
                "1": [{"boundary": list(e)} for e in c.edges],
                "2": [{"boundary": list(f), "hypersurface": lab}
                      for f, lab in zip(c.faces, c.labels)],
                "3": [{"boundary": list(d)} for d in c.domains],
            },
        }
    if fan is not None:
        data["fan"] = fan.to_dict()
    return data


def complex_from_dict(data):
    """Returns ``(complex, fan or None)``."""
    dim = data.get("dimension")
    if dim == 2:
        edges = [tuple(e) for e in data["edges"]]
        twisted = [edges[i] for i in data.get("twisted", [])]
        c = SurfaceComplex(data["vertices"], edges, twisted=twisted,
                           surface=data.get("surface"))
    elif dim == 3:
        cells = data["cells"]
        c = CellComplex3(len(cells["0"]),
                         [x["boundary"] for x in cells["1"]],
                         [x["boundary"] for x in cells["2"]],
                         [x["hypersurface"] for x in cells["2"]],
                         [x["boundary"] for x in cells["3"]])
    else:
        raise ValueError(f"unsupported dimension {dim!r}")
    fan = Fan.from_dict(data["fan"]) if data.get("fan") else None
    return c, fan


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"
