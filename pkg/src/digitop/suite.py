"""Acceptance battery: one callable per criterion, exact checks only.

Each criterion returns a record with pass/fail, elapsed seconds, and
its wall-clock budget. Expected values are either forced by hand
arithmetic or recomputed here by independent oracles (full enumeration,
brute-force lifting) rather than read back from the code paths under
test.
"""

import time
from itertools import product as iproduct

from .circle import (as_loop, cover_point, diamond, lift_path,
                     winding_index, winding_number)
from .cofib import (borsuk_filler, exhaustive_filler_search, hep_filler,
                    based_path_fibration_lift, endpoints_fibration_lift,
                    path_fibration_lift, product_with_cofibration,
                    pushout_filler_verdict, retraction_both_endpoints,
                    retraction_origin_interval, verify_retraction)
from .funcspace import (MapFamily, continuous_extensions, curry,
                        maps_adjacent, path_from_points, uncurry,
                        values_adjacent)
from .homotopy import Homotopy, is_contractible, verify_homotopy
from .image import DigitalImage, interval, point_image, product
from .lscat import (dcat, diamond_lower_bound, is_subdivision_categorical,
                    section_check, section_to_homotopy)
from .maps import DigitalMap, compose, constant_map, inclusion_map
from .subdivision import (iso_iterated, iso_product_subdivision, subdivide,
                          subdivide_inclusion)

PT = point_image((0,))


def _record(cid, name, module, limit, fn):
    start = time.perf_counter()
    try:
        passed, details = fn()
    except Exception as exc:  # a crash is a failure with its reason
        passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        passed = False
        details = {**details, "over_time_budget": True}
    return {"id": cid, "name": name, "module": module, "passed": passed,
            "elapsed": round(elapsed, 3), "limit": limit,
            "details": details}


# ---------------------------------------------------------------------------


def _criterion_1():
    d = diamond()
    v = is_contractible(d)
    if not v.is_no:
        return False, {"outcome": v.outcome}
    # independent cross-check: materialize the whole function space,
    # build its adjacency graph pairwise, and walk the identity component
    maps = list(continuous_extensions(d, d))
    ident = DigitalMap.identity(d)
    component = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for f in frontier:
            for g in maps:
                if g not in component and maps_adjacent(f, g):
                    component.add(g)
                    nxt.append(g)
        frontier = nxt
    constants = [m for m in component
                 if len(set(m.values)) == 1]
    return (not constants), {"space_size": len(maps),
                             "component_size": len(component),
                             "constants_in_component": len(constants)}


def _criterion_2():
    checked = []
    for m in range(1, 7):
        im = interval(m)
        v = is_contractible(im)
        if not v.is_yes:
            return False, {"m": m, "outcome": v.outcome}
        # the explicit clamp deformation: stage t sends s to min(s, m-t)
        stages = tuple(
            DigitalMap.from_function(im, im,
                                     lambda p, t=t: (min(p[0], m - t),))
            for t in range(m + 1))
        h = Homotopy(stages)
        if not verify_homotopy(h, DigitalMap.identity(im),
                               constant_map(im, (0,), im)):
            return False, {"m": m, "explicit_formula": "failed"}
        checked.append(m)
    return True, {"lengths": checked}


def _exp_law_corpus():
    return [PT, interval(1), interval(2), interval(3), diamond(),
            DigitalImage(1, [(0,), (5,)])]


def _criterion_3():
    corpus = _exp_law_corpus()
    total = 0
    for x in corpus:
        for y in corpus:
            for n in (1, 2):
                t_img = interval(n)
                dom = product(x, t_img)
                for big in continuous_extensions(dom, y):
                    fam = curry(big, x, t_img)
                    if not fam.preserves_adjacency():
                        return False, {"direction": "preserve",
                                       "x": len(x), "y": len(y), "n": n}
                    if uncurry(fam) != big:
                        return False, {"direction": "round-trip"}
                    total += 1
                # reflection: break one entry so the map is discontinuous
                # and check the curried family detects it
                bad = _first_discontinuous_perturbation(dom, y)
                if bad is not None:
                    fam = curry(bad, x, t_img)
                    if fam.preserves_adjacency():
                        return False, {"direction": "reflect"}
    return True, {"maps_checked": total}


def _first_discontinuous_perturbation(dom, cod):
    for big in continuous_extensions(dom, cod):
        vals = list(big.values)
        for i in range(len(vals)):
            for v in range(len(cod.points)):
                if v == vals[i]:
                    continue
                cand = DigitalMap(dom, cod,
                                  vals[:i] + [v] + vals[i + 1:])
                if not cand.is_continuous():
                    return cand
        break
    return None


def _criterion_4():
    count = 0
    for m in range(1, 5):
        for n in range(1, 5):
            w = retraction_origin_interval(m, n)
            if not verify_retraction(w):
                return False, {"m": m, "n": n}
            count += 1
    return True, {"witnesses": count}


def _criterion_5():
    chosen = {}
    for m in range(1, 4):
        for n in range(1, 4):
            w = retraction_both_endpoints(m, n)
            if not verify_retraction(w):
                return False, {"m": m, "n": n}
            chosen[f"{m},{n}"] = dict(w.params)["p"]
    return True, {"smallest_p": chosen}


def _example_42_data():
    a, x, y = interval(0), interval(2), interval(3)
    h = DigitalMap.from_function(product(a, interval(1)), y,
                                 lambda p: (1 - p[1],))
    f = DigitalMap.from_function(x, y, lambda p: (p[0] + 1,))
    return a, x, y, h, f


def _nonpush_data():
    d = diamond()
    a, x = interval(0), interval(1)
    h = DigitalMap.from_function(product(a, interval(1)), d,
                                 lambda p: (1, 0) if p[1] == 0 else (0, 1))
    f = DigitalMap.from_function(x, d,
                                 lambda p: (1, 0) if p[0] == 0 else (0, -1))
    return a, x, h, f


def _criterion_6():
    a, x, y, h, f = _example_42_data()
    unsub = exhaustive_filler_search(a, x, h, f, 1, 1)
    sub = exhaustive_filler_search(a, x, h, f, 2, 2)
    a2, x2, h2, f2 = _nonpush_data()
    glue1 = pushout_filler_verdict(a2, x2, h2, f2, 1)
    glue2 = pushout_filler_verdict(a2, x2, h2, f2, 2)
    rect1 = exhaustive_filler_search(a2, x2, h2, f2, 1, 1)
    ok = (unsub.is_no and sub.is_yes and glue1.is_no and glue2.is_yes
          and rect1.is_no)
    return ok, {"example_unsubdivided": unsub.outcome,
                "example_subdivided": sub.outcome,
                "gluing_l1": glue1.outcome, "gluing_l2": glue2.outcome,
                "gluing_rectangle_l1": rect1.outcome}


def _walk(y, length, twist=0):
    """A deterministic walk in y: step through neighbor lists."""
    pts = [y.points[twist % len(y.points)]]
    for i in range(length):
        nbrs = y.neighbors(pts[-1])
        pts.append(nbrs[(i + twist) % len(nbrs)])
    return pts


def _criterion_7():
    ys = [interval(2), diamond()]
    zs = [PT, interval(1)]
    built = {"borsuk": 0, "path": 0, "endpoints": 0, "based": 0}
    for y in ys:
        for z in zs:
            for m in (1, 2, 3):
                walk = _walk(y, m)
                h0 = DigitalMap.from_function(
                    product(z, interval(m)), y, lambda p: walk[p[-1]])
                # lifting a path against a moving start point
                for n in (1, 2, 3):
                    alpha = path_from_points(_walk(y, n, twist=0), y)
                    if alpha((0,)) != walk[0]:
                        alpha = path_from_points([walk[0]] * (n + 1), y)
                    fam = MapFamily(z, [alpha] * len(z.points))
                    lw = path_fibration_lift(fam, h0)
                    if not lw.revalidate():
                        return False, {"kind": "path", "y": len(y), "n": n}
                    built["path"] += 1
                # endpoint and based variants need length >= 2
                for n in (2, 3):
                    alpha_pts = _walk(y, n)
                    alpha = path_from_points(alpha_pts, y)
                    fam = MapFamily(z, [alpha] * len(z.points))
                    w0 = _walk(y, m, twist=0)
                    wn = [alpha_pts[-1]] * (m + 1)
                    h2 = DigitalMap.from_function(
                        product(z, interval(m)), product(y, y),
                        lambda p: w0[p[-1]] + wn[p[-1]])
                    if (alpha((0,)), alpha((n,))) == (w0[0], wn[0]):
                        lw = endpoints_fibration_lift(fam, h2)
                        if not lw.revalidate():
                            return False, {"kind": "endpoints", "n": n}
                        built["endpoints"] += 1
                    hb = DigitalMap.from_function(
                        product(z, interval(m)), y,
                        lambda p: _walk(y, m, twist=1)[p[-1]])
                    if hb(z.points[0] + (0,)) == alpha((n,)):
                        lb = based_path_fibration_lift(fam, hb,
                                                       alpha((0,)))
                        if not lb.revalidate():
                            return False, {"kind": "based", "n": n}
                        built["based"] += 1
                # deformation of restricted maps along {0} -> interval(1)
                a, xx = interval(0), interval(1)
                fmap = DigitalMap.from_function(
                    xx, y, lambda p: _walk(y, 1)[p[0]])
                ffam = MapFamily(z, [fmap] * len(z.points))
                hvals = [DigitalMap.from_function(
                    a, y, lambda p, t=t: walk[t]) for t in range(m + 1)]
                hfam = MapFamily(product(z, interval(m)),
                                 [hvals[zp[-1]] for zp in
                                  product(z, interval(m)).points])
                w = retraction_origin_interval(1, m)
                bw = borsuk_filler(a, xx, product_with_cofibration(w, z),
                                   ffam, hfam)
                if not bw.revalidate():
                    return False, {"kind": "borsuk", "m": m}
                built["borsuk"] += 1
    return True, built


def _all_paths_in_diamond(n):
    d = diamond()
    return continuous_extensions(interval(n), d)


def _brute_force_lifts(path_pts, start, bound):
    """Oracle: depth-first enumeration of every integer sequence with
    unit steps that projects to the path and starts at start."""
    sols = []
    seq = [start]

    def rec(t):
        if t == len(path_pts) - 1:
            sols.append(tuple(seq))
            return
        for step in (-1, 0, 1):
            nxt = seq[-1] + step
            if abs(nxt) <= bound and cover_point(nxt) == path_pts[t + 1]:
                seq.append(nxt)
                rec(t + 1)
                seq.pop()

    rec(0)
    return sols


def _criterion_8():
    checked = 0
    for n in range(1, 7):
        for path in _all_paths_in_diamond(n):
            pts = path.value_points()
            base = 0
            while cover_point(base) != pts[0]:
                base += 1
            for start in (base - 8, base - 4, base, base + 4, base + 8):
                cert = lift_path(path, start)
                oracle = _brute_force_lifts(pts, start, cert.bound)
                got = tuple(cert.lift((t,))[0] for t in range(n + 1))
                if len(oracle) != 1 or oracle[0] != got:
                    return False, {"n": n, "start": start,
                                   "oracle_count": len(oracle)}
                checked += 1
    return True, {"lifts_checked": checked}


def _criterion_9():
    d = diamond()
    inbrs = {}
    csets = d.nbr_index_sets()
    pairs_checked = 0
    for n in range(1, 7):
        loops = [p for p in _all_paths_in_diamond(n)
                 if p((0,)) == p((n,))]
        windings = [winding_number(as_loop(p)) for p in loops]
        if n not in inbrs:
            inbrs[n] = interval(n).nbr_indices()
        for i, a in enumerate(loops):
            for j in range(i, len(loops)):
                if values_adjacent(inbrs[n], csets, a.values,
                                   loops[j].values):
                    if windings[i] != windings[j]:
                        return False, {"n": n, "pair": (i, j)}
                    pairs_checked += 1
    canon = as_loop(path_from_points(
        [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)], d))
    if winding_number(canon) != 4 or winding_index(canon) != 1:
        return False, {"canonical_loop": "wrong winding"}
    return True, {"adjacent_loop_pairs": pairs_checked}


def _criterion_10():
    d = diamond()
    # explicit cover: complement of a point plus that point
    u = d.subimage([(0, -1), (0, 1), (1, 0)])
    p = d.subimage([(-1, 0)])
    vu = is_subdivision_categorical(u, d, 2)
    vp = is_subdivision_categorical(p, d, 2)
    if not (vu.is_yes and vp.is_yes):
        return False, {"cover_members": (vu.outcome, vp.outcome)}
    for k in range(2, 5):
        if diamond_lower_bound(k)["projected_winding"] == 0:
            return False, {"k": k}
    v = dcat(d, k_max=4)
    ok = v.is_yes and v.witness["value"] == 1 \
        and v.witness["cover"].revalidate()
    return ok, {"dcat": v.outcome,
                "value": v.witness["value"] if v.is_yes else None,
                "bounds": {"lower": v.bounds_used.get("lower"),
                           "upper": v.bounds_used.get("upper")}}


def _criterion_11():
    d = diamond()
    i3 = interval(3)
    fixtures = [
        (d.subimage([(1, 0)]), d),
        (d.subimage([(0, -1), (0, 1), (1, 0)]), d),
        (i3.subimage([(0,), (1,)]), i3),
    ]
    results = []
    for u, x in fixtures:
        cat = is_subdivision_categorical(u, x, 2)
        if not cat.is_yes:
            return False, {"fixture": len(results), "cat": cat.outcome}
        sect = None
        params = None
        for k in (1, 2):
            for n in (1, 2, 3, 4):
                for x0 in x.points:
                    v = section_check(u, x, k, n, x0)
                    if v.is_yes:
                        sect, params = v, (k, n, x0)
                        break
                if sect:
                    break
            if sect:
                break
        if sect is None:
            return False, {"fixture": len(results), "section": "none"}
        # the section witness converts back into a deformation and
        # revalidates end-to-end
        h = section_to_homotopy(sect, u, x)
        k = sect.witness["k"]
        from .subdivision import refine
        sub = refine(u, k)
        start = constant_map(sub.image, sect.witness["basepoint"], x)
        end = compose(inclusion_map(u, x), sub.projection)
        if not verify_homotopy(h, start, end):
            return False, {"fixture": len(results),
                           "section_homotopy": "failed"}
        results.append({"cat_k": cat.witness["k"],
                        "section_params": [params[0], params[1],
                                           list(params[2])]})
    return True, {"fixtures": results}


def _criterion_12():
    # subdivided intervals are longer intervals
    for n in range(0, 9):
        for k in range(2, 6):
            if subdivide(interval(n), k).image != interval(k * n + k - 1):
                return False, {"interval": (n, k)}
    fixtures = [interval(2), diamond(), product(interval(1), interval(1)),
                DigitalImage(2, [(0, 0), (1, 1), (2, 1)])]
    for x in fixtures:
        for k in range(2, 5):
            sub = subdivide(x, k)
            if len(sub.image) != len(x) * k ** x.dim:
                return False, {"cardinality": (len(x), k)}
            if not sub.projection.is_continuous():
                return False, {"projection": (len(x), k)}
            if set(sub.projection.value_points()) != set(x.points):
                return False, {"surjective": (len(x), k)}
    # inclusions commute with the projections
    d = diamond()
    incl_fixtures = [(d.subimage([(1, 0), (0, 1)]), d),
                     (interval(1).subimage([(0,)]), interval(1)),
                     (interval(3).subimage([(0,), (3,)]), interval(3))]
    for a, x in incl_fixtures:
        j = inclusion_map(a, x)
        for k in range(2, 5):
            jk = subdivide_inclusion(j, k)
            left = compose(subdivide(x, k).projection, jk)
            right = compose(j, subdivide(a, k).projection)
            if left.values != right.values:
                return False, {"covering": (len(a), len(x), k)}
    for x in [interval(1), diamond()]:
        for k in (2, 3, 4):
            for l in (2, 3, 4):
                iso_iterated(x, k, l)
    for k in (2, 3, 4):
        iso_product_subdivision(interval(1), interval(2), k)
        iso_product_subdivision(interval(1), diamond(), k)
    return True, {"fixtures": len(fixtures)}


CRITERIA = [
    ("1", "diamond is not contractible", "homotopy", 10, _criterion_1),
    ("2", "intervals contract, explicit clamp deformation validates",
     "homotopy", 6, _criterion_2),
    ("3", "exponential correspondence preserves, reflects, round-trips",
     "funcspace", 60, _criterion_3),
    ("4", "origin retraction verifies for all lengths up to 4", "cofib",
     10, _criterion_4),
    ("5", "endpoints retraction verifies with least power recorded",
     "cofib", 30, _criterion_5),
    ("6", "negative extension fixtures refute unsubdivided, pass "
     "subdivided", "cofib", 10, _criterion_6),
    ("7", "lifting battery revalidates all commuting squares", "cofib",
     60, _criterion_7),
    ("8", "path lifts are the unique brute-force lifts", "circle", 60,
     _criterion_8),
    ("9", "adjacent loops wind identically; canonical loop winds once",
     "circle", 60, _criterion_9),
    ("10", "diamond category equals one with revalidating cover",
     "lscat", 120, _criterion_10),
    ("11", "deformability and sections agree on the fixture set",
     "lscat", 120, _criterion_11),
    ("12", "subdivision algebra: lengths, cardinalities, coverings, "
     "canonical isomorphisms", "subdivision", 30, _criterion_12),
]


def run_criterion(cid):
    for c in CRITERIA:
        if c[0] == cid:
            return _record(c[0], c[1], c[2], c[3], c[4])
    raise KeyError(f"no criterion {cid}")


def verify_suite(scope="all"):
    """Run the battery, optionally restricted to one module name."""
    out = []
    for cid, name, module, limit, fn in CRITERIA:
        if scope not in ("all", module, cid):
            continue
        out.append(_record(cid, name, module, limit, fn))
    return out
