"""Command-line front door.

All reports are JSON on stdout, diagnostics go to stderr, and exit
codes follow one convention everywhere: 0 = yes/verified, 1 = no,
2 = unknown or error. DIGITOP_MAX_MAPS overrides the enumeration cap.
"""

import argparse
import json
import sys

from . import formats
from .circle import (DiamondLoop, as_loop, circle8, diamond, lift_homotopy,
                     lift_path, sphere, winding_index, winding_number)
from .cofib import (borsuk_filler, based_path_fibration_lift,
                    endpoints_fibration_lift, path_fibration_lift,
                    product_with_cofibration, pushout_filler_verdict,
                    retraction_both_endpoints, retraction_origin_interval,
                    verify_retraction)
from .errors import DigitopError
from .funcspace import maps_adjacent, path_length
from .homotopy import homotopic, is_contractible, is_subdivision_contractible
from .image import cube, interval, product
from .lscat import dcat
from .maps import DigitalMap
from .subdivision import subdivide
from .suite import verify_suite
from .verdict import Verdict


def _emit(obj):
    print(formats.dumps(obj))


def _load_image(path):
    return formats.image_from_obj(formats.load_file(path))


def _load_map(path):
    return formats.map_from_obj(formats.load_file(path))


def _fixture(name):
    if name == "diamond":
        return diamond()
    if name == "circle8":
        return circle8()
    if name.startswith("sphere:"):
        return sphere(int(name.split(":")[1]))
    if name.startswith("interval:"):
        return interval(int(name.split(":")[1]))
    if name.startswith("cube:"):
        _, n, d = name.split(":")
        return cube(int(n), int(d))
    raise DigitopError(f"unknown fixture {name!r}")


def _cmd_fixtures(args):
    _emit(formats.image_to_obj(_fixture(args.name)))
    return 0


def _cmd_check_map(args):
    f = _load_map(args.map)
    cont = f.is_continuous()
    _emit({"continuous": cont, "domain_size": len(f.domain),
           "codomain_size": len(f.codomain)})
    return 0 if cont else 1


def _cmd_product(args):
    x = _load_image(args.x)
    y = _load_image(args.y)
    _emit(formats.image_to_obj(product(x, y)))
    return 0


def _cmd_subdivide(args):
    sub = subdivide(_load_image(args.image), args.factor)
    _emit({"image": formats.image_to_obj(sub.image),
           "projection": formats.map_to_obj(sub.projection)})
    return 0


def _cmd_maps_adjacent(args):
    f = _load_map(args.f)
    g = _load_map(args.g)
    adj = maps_adjacent(f, g)
    _emit({"adjacent": adj})
    return 0 if adj else 1


def _cmd_homotopic(args):
    v = homotopic(_load_map(args.f), _load_map(args.g),
                  max_steps=args.max_steps, max_nodes=args.max_nodes)
    _emit(formats.verdict_to_obj(v))
    return v.exit_code()


def _cmd_contractible(args):
    v = is_contractible(_load_image(args.image), max_steps=args.max_steps,
                        max_nodes=args.max_nodes)
    _emit(formats.verdict_to_obj(v))
    return v.exit_code()


def _cmd_subdivision_contractible(args):
    v = is_subdivision_contractible(_load_image(args.image), args.k_max,
                                    max_steps=args.max_steps,
                                    max_nodes=args.max_nodes)
    _emit(formats.verdict_to_obj(v))
    return v.exit_code()


def _witness_report(w):
    return {"verified": True,
            "factors": {"k": w.k, "l": w.l, "m": w.m},
            "params": dict(w.params),
            "table": formats.map_to_obj(w.table)}


def _cmd_verify(args):
    if args.what == "cofibration-origin":
        w = retraction_origin_interval(args.M, args.N)
        ok = verify_retraction(w)
        _emit(_witness_report(w))
        return 0 if ok else 2
    if args.what == "cofibration-endpoints":
        w = retraction_both_endpoints(args.M, args.N)
        ok = verify_retraction(w)
        _emit(_witness_report(w))
        return 0 if ok else 2
    if args.what == "pushout":
        fam = formats.path_family_from_obj(formats.load_file(args.H))
        f = _load_map(args.f)
        from .funcspace import uncurry
        v = pushout_filler_verdict(fam.domain, f.domain, uncurry(fam), f,
                                   args.l)
        _emit(formats.verdict_to_obj(v))
        return v.exit_code()
    if args.what == "borsuk":
        ffam = formats.map_family_from_obj(formats.load_file(args.f))
        hfam = formats.map_family_from_obj(formats.load_file(args.H))
        a, x, z = hfam.source, ffam.source, ffam.domain
        m = max(p[-1] for p in hfam.domain.points)
        if a.points != (x.points[0],):
            raise DigitopError("deformations along general inclusions have "
                               "no constructive witness here; the sub-image "
                               "must be the least point of an interval")
        n_x = len(x) - 1
        w = product_with_cofibration(retraction_origin_interval(n_x, m), z)
        fw = borsuk_filler(a, x, w, ffam, hfam)
        _emit({"verified": fw.revalidate(), "kind": fw.kind,
               "factors": fw.factors,
               "filler": formats.map_family_to_obj(fw.family)})
        return 0
    if args.what == "suite":
        results = verify_suite(args.scope)
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            print(f"{status} [{r['id']}] {r['name']} "
                  f"({r['elapsed']}s/{r['limit']}s)", file=sys.stderr)
        _emit({"results": results,
               "passed": all(r["passed"] for r in results)})
        return 0 if all(r["passed"] for r in results) else 1
    raise DigitopError(f"unknown verification {args.what!r}")


def _lift_report(fw):
    return {"verified": fw.revalidate(), "kind": fw.kind,
            "factors": fw.factors,
            "checks": fw.check_names(),
            "filler": formats.map_family_to_obj(fw.family)}


def _cmd_lift(args):
    if args.what == "path-fibration":
        fam = formats.path_family_from_obj(formats.load_file(args.f))
        h = _load_map(args.H)
        fw = path_fibration_lift(fam, h)
        _emit(_lift_report(fw))
        return 0
    if args.what == "endpoints-fibration":
        fam = formats.path_family_from_obj(formats.load_file(args.f))
        h = _load_map(args.H)
        fw = endpoints_fibration_lift(fam, h)
        _emit(_lift_report(fw))
        return 0
    if args.what == "based-path-fibration":
        fam = formats.path_family_from_obj(formats.load_file(args.f))
        h = _load_map(args.H)
        basepoint = tuple(int(c) for c in args.basepoint.split(","))
        fw = based_path_fibration_lift(fam, h, basepoint)
        _emit(_lift_report(fw))
        return 0
    if args.what == "diamond-path":
        path = formats.path_from_obj(formats.load_file(args.loop), diamond())
        cert = lift_path(path, args.start)
        _emit({"verified": cert.revalidate(), "start": cert.start,
               "window": cert.bound,
               "lift": [cert.lift((t,))[0]
                        for t in range(path_length(path) + 1)]})
        return 0
    if args.what == "diamond-homotopy":
        h = _load_map(args.H)
        n = max(p[0] for p in h.domain.points)
        bottom = DigitalMap.from_function(interval(n), diamond(),
                                          lambda t: h((t[0], 0)))
        initial = lift_path(bottom, args.start)
        cert = lift_homotopy(h, initial)
        _emit({"verified": cert.revalidate(), "start": cert.start,
               "window": cert.bound,
               "lift": formats.map_to_obj(cert.lift)})
        return 0
    raise DigitopError(f"unknown lift {args.what!r}")


def _cmd_winding(args):
    path = formats.path_from_obj(formats.load_file(args.loop), diamond())
    loop = as_loop(path)
    raw = winding_number(loop)
    _emit({"raw": raw, "index": raw // 4})
    return 0


def _cmd_dcat(args):
    x = _load_image(args.image)
    subsets = None
    if args.subsets:
        subsets = [formats.image_from_obj(o)
                   for o in formats.load_file(args.subsets)]
    v = dcat(x, candidate_subsets=subsets, k_max=args.k_max,
             max_steps=args.max_steps, max_nodes=args.max_nodes,
             exact_cover_limit=args.exact_cover_limit,
             threads=args.threads)
    lower = v.bounds_used.get("lower")
    upper = v.bounds_used.get("upper")
    report = {"lower": lower, "upper": upper,
              "witness": formats.render(v.witness),
              "obstruction": formats.render(v.obstruction)}
    _emit(report)
    return 0 if (v.is_yes and lower == upper) else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="digitop",
        description="Exact homotopy computations for lattice images")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for cover searches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixtures", help="emit a canonical image")
    p.add_argument("--name", required=True,
                   help="diamond | circle8 | sphere:N | interval:N | "
                        "cube:N:D")
    p.set_defaults(run=_cmd_fixtures)

    p = sub.add_parser("check-map", help="continuity of a map file")
    p.add_argument("--map", required=True)
    p.set_defaults(run=_cmd_check_map)

    p = sub.add_parser("product", help="product of two images")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(run=_cmd_product)

    p = sub.add_parser("subdivide", help="refine an image")
    p.add_argument("--image", required=True)
    p.add_argument("--factor", type=int, required=True)
    p.set_defaults(run=_cmd_subdivide)

    p = sub.add_parser("maps-adjacent", help="function-space adjacency")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(run=_cmd_maps_adjacent)

    p = sub.add_parser("homotopic", help="decide homotopy of two maps")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(run=_cmd_homotopic)

    p = sub.add_parser("contractible", help="deform the identity to a point")
    p.add_argument("--image", required=True)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(run=_cmd_contractible)

    p = sub.add_parser("subdivision-contractible",
                       help="deform a refinement projection to a point")
    p.add_argument("--image", required=True)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(run=_cmd_subdivision_contractible)

    p = sub.add_parser("verify", help="constructive witnesses and the "
                                      "acceptance battery")
    p.add_argument("what", choices=["cofibration-origin",
                                    "cofibration-endpoints", "pushout",
                                    "borsuk", "suite"])
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--N", type=int, default=1)
    p.add_argument("--H")
    p.add_argument("--f")
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--scope", default="all")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("lift", help="lifting constructions")
    p.add_argument("what", choices=["path-fibration", "endpoints-fibration",
                                    "based-path-fibration", "diamond-path",
                                    "diamond-homotopy"])
    p.add_argument("--f")
    p.add_argument("--H")
    p.add_argument("--loop")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--basepoint", default="1,0")
    p.set_defaults(run=_cmd_lift)

    p = sub.add_parser("winding", help="winding number of a diamond loop")
    p.add_argument("--loop", required=True)
    p.set_defaults(run=_cmd_winding)

    p = sub.add_parser("dcat", help="category bounds with witness cover")
    p.add_argument("--image", required=True)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--subsets")
    p.add_argument("--exact-cover-limit", type=int, default=12)
    p.set_defaults(run=_cmd_dcat)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "threads"):
        args.threads = 1
    try:
        return args.run(args)
    except DigitopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
