"""JSON wire formats.

Everything is integers; emitted objects re-parse to equal in-memory
values, and point lists are kept in canonical order so artifact diffs
are meaningful. Loading rejects malformed data loudly (duplicate image
points, foreign assignment points, wrong arities).
"""

import json

from .errors import PreconditionError
from .funcspace import MapFamily, path_from_points, path_length
from .homotopy import Homotopy
from .image import DigitalImage
from .lscat import CategoricalCover
from .maps import DigitalMap
from .verdict import Verdict


def image_to_obj(img):
    return {"dim": img.dim, "points": [list(p) for p in img.points]}


def image_from_obj(obj):
    if not isinstance(obj, dict) or "dim" not in obj or "points" not in obj:
        raise PreconditionError("image object needs 'dim' and 'points'")
    raw = [tuple(int(c) for c in p) for p in obj["points"]]
    if len(set(raw)) != len(raw):
        raise PreconditionError("duplicate points in image file")
    return DigitalImage(obj["dim"], raw)


def map_to_obj(f):
    return {"domain": image_to_obj(f.domain),
            "codomain": image_to_obj(f.codomain),
            "assignment": [[list(p), list(q)] for p, q in f.table()]}


def map_from_obj(obj):
    for key in ("domain", "codomain", "assignment"):
        if key not in obj:
            raise PreconditionError(f"map object needs '{key}'")
    dom = image_from_obj(obj["domain"])
    cod = image_from_obj(obj["codomain"])
    pairs = [(tuple(int(c) for c in src), tuple(int(c) for c in dst))
             for src, dst in obj["assignment"]]
    return DigitalMap.from_pairs(dom, cod, pairs)


def path_to_obj(path):
    return {"length": path_length(path),
            "points": [list(p) for p in path.value_points()]}


def path_from_obj(obj, codomain):
    if "points" not in obj:
        raise PreconditionError("path object needs 'points'")
    pts = [tuple(int(c) for c in p) for p in obj["points"]]
    n = obj.get("length", len(pts) - 1)
    if n != len(pts) - 1:
        raise PreconditionError("path length does not match its points")
    return path_from_points(pts, codomain)


def homotopy_to_obj(h):
    return {"stages": [map_to_obj(s) for s in h.stages]}


def homotopy_from_obj(obj):
    if "stages" not in obj or not obj["stages"]:
        raise PreconditionError("homotopy object needs nonempty 'stages'")
    return Homotopy(tuple(map_from_obj(s) for s in obj["stages"]))


def path_family_to_obj(fam):
    return {"domain": image_to_obj(fam.domain),
            "codomain": image_to_obj(fam.target),
            "length": len(fam.source) - 1,
            "paths": [[list(p) for p in v.value_points()]
                      for v in fam.values]}


def path_family_from_obj(obj):
    for key in ("domain", "codomain", "paths"):
        if key not in obj:
            raise PreconditionError(f"path family object needs '{key}'")
    dom = image_from_obj(obj["domain"])
    cod = image_from_obj(obj["codomain"])
    if len(obj["paths"]) != len(dom.points):
        raise PreconditionError("one path per domain point, in canonical "
                                "order")
    values = [path_from_points([tuple(c) for c in pts], cod)
              for pts in obj["paths"]]
    return MapFamily(dom, values)


def map_family_to_obj(fam):
    return {"domain": image_to_obj(fam.domain),
            "source": image_to_obj(fam.source),
            "codomain": image_to_obj(fam.target),
            "maps": [[list(p) for p in v.value_points()]
                     for v in fam.values]}


def map_family_from_obj(obj):
    for key in ("domain", "source", "codomain", "maps"):
        if key not in obj:
            raise PreconditionError(f"map family object needs '{key}'")
    dom = image_from_obj(obj["domain"])
    src = image_from_obj(obj["source"])
    cod = image_from_obj(obj["codomain"])
    if len(obj["maps"]) != len(dom.points):
        raise PreconditionError("one map per domain point, in canonical "
                                "order")
    values = []
    for row in obj["maps"]:
        if len(row) != len(src.points):
            raise PreconditionError("map rows must be total on the source")
        values.append(DigitalMap(src, cod,
                                 [cod.index(tuple(p)) for p in row]))
    return MapFamily(dom, values)


def render(value):
    """Best-effort JSON rendering of witnesses and obstructions."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, DigitalImage):
        return image_to_obj(value)
    if isinstance(value, DigitalMap):
        return map_to_obj(value)
    if isinstance(value, Homotopy):
        return homotopy_to_obj(value)
    if isinstance(value, MapFamily):
        return map_family_to_obj(value)
    if isinstance(value, CategoricalCover):
        return {"subsets": [image_to_obj(u) for u in value.subsets],
                "witnesses": [render(w) for w in value.witnesses]}
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if hasattr(value, "explanation"):
        return value.explanation()
    return repr(value)


def verdict_to_obj(v):
    return {"outcome": v.outcome,
            "witness": render(v.witness),
            "obstruction": render(v.obstruction),
            "bounds_used": render(dict(v.bounds_used))}


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def load_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
