"""Category of digital images by covers of deformable subsets.

A subset is categorical in its ambient image when its inclusion can be
deformed to a constant; allowing the subset to be refined first (any
factor) gives the subdivision-relaxed notion, and the category of an
image is one less than the smallest cover by such subsets. The searches
here are bounded in both refinement factor and deformation length, so
negative answers need an obstruction; the one that ships detects the
diamond, whose refinements carry an innermost loop of nonzero winding
that no deformation through loops can unwind.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Tuple

from concurrent.futures import ThreadPoolExecutor

from .circle import as_loop, diamond, winding_number
from .errors import PreconditionError
from .funcspace import continuous_extensions, curry
from .homotopy import Homotopy, reach_any_constant, verify_homotopy
from .image import DigitalImage, interval, product
from .maps import DigitalMap, compose, constant_map, inclusion_map
from .subdivision import refine
from .verdict import Verdict


def _require_subset(u, x):
    if u.dim != x.dim:
        raise PreconditionError("subset has the wrong ambient dimension")
    for p in u.points:
        if p not in x:
            raise PreconditionError(f"{p} is not a point of the ambient "
                                    "image")


def is_categorical(u, x, max_steps=None, max_nodes=None):
    """Can the inclusion of u be deformed to a constant inside x?"""
    _require_subset(u, x)
    v = reach_any_constant(inclusion_map(u, x), max_steps=max_steps,
                           max_nodes=max_nodes)
    if v.is_yes:
        point, h = v.witness
        return Verdict.yes(witness={"k": 1, "point": point, "homotopy": h},
                           **v.bounds_used)
    return v


def is_subdivision_categorical(u, x, k_max, max_steps=None, max_nodes=None,
                               obstructions=None):
    """Deformability of some refinement of u inside x.

    Tries the unrefined inclusion first, then factors 2..k_max. A search
    that comes up empty at every factor is Unknown; No requires a
    registered obstruction that applies to (u, x).
    """
    _require_subset(u, x)
    if k_max < 1:
        raise PreconditionError("k_max must be >= 1")
    if obstructions is None:
        obstructions = DEFAULT_OBSTRUCTIONS
    for ob in obstructions:
        cert = ob(u, x, k_max)
        if cert is not None:
            return Verdict.no(obstruction=cert, k_max=k_max)
    per_k = {}
    for k in range(1, k_max + 1):
        sub = refine(u, k)
        start = compose(inclusion_map(u, x), sub.projection)
        v = reach_any_constant(start, max_steps=max_steps,
                               max_nodes=max_nodes)
        per_k[k] = v.outcome
        if v.is_yes:
            point, h = v.witness
            return Verdict.yes(witness={"k": k, "point": point,
                                        "homotopy": h}, per_k=per_k)
    return Verdict.unknown(per_k=per_k, k_max=k_max,
                           obstruction="no factor up to k_max admitted a "
                           "deformation; larger factors undecided")


# ---------------------------------------------------------------------------
# the diamond obstruction


@dataclass(frozen=True)
class DiamondObstruction:
    """Per-factor certificates that the diamond cannot be unwound.

    For each refinement factor the innermost cycle of the refined
    diamond projects to a loop of nonzero winding; a deformation of the
    projection to a constant would restrict along that cycle to a
    deformation through loops from nonzero winding to zero. The
    unrefined case is settled by exhausting the component of the
    identity, which contains no constant.
    """

    winding_by_factor: Tuple
    identity_component_size: int

    def explanation(self):
        ks = ", ".join(f"{k}:{w}" for k, w in self.winding_by_factor)
        return ("innermost loops of the refined diamond have nonzero "
                f"winding (factor:winding = {ks}); the identity component "
                f"has {self.identity_component_size} map(s) and no "
                "constant")


def innermost_refined_loop(k):
    """The length-4k cycle hugging the inner rim of the refined diamond."""
    if k < 2:
        raise PreconditionError("refinement factor must be >= 2")
    pts = []
    pts += [(k, t) for t in range(k)]
    pts += [(k - 1 - s, k) for s in range(k)]
    pts += [(-1, k - 1 - t) for t in range(k)]
    pts += [(s, -1) for s in range(k)]
    pts.append((k, 0))
    sub = refine(diamond(), k)
    dom = interval(4 * k)
    return DigitalMap.from_function(dom, sub.image, lambda t: pts[t[0]])


def diamond_lower_bound(k):
    """Certificate for one refinement factor: the innermost loop of the
    refined diamond projects to a loop of nonzero winding."""
    loop = innermost_refined_loop(k)
    sub = refine(diamond(), k)
    projected = compose(sub.projection, loop)
    w = winding_number(as_loop(projected))
    if w == 0:
        raise PreconditionError("innermost loop unexpectedly unwound")
    return {"k": k, "loop": loop, "projected_winding": w,
            "winding_index": w // 4}


def _diamond_obstruction(u, x, k_max):
    """Applies only to the diamond included in itself."""
    d = diamond()
    if u != d or x != d:
        return None
    ident = reach_any_constant(DigitalMap.identity(d))
    if not ident.is_no:
        return None
    certs = tuple((k, diamond_lower_bound(k)["projected_winding"])
                  for k in range(2, max(k_max, 2) + 1))
    return DiamondObstruction(certs, ident.bounds_used.get("visited", 0))


DEFAULT_OBSTRUCTIONS = (_diamond_obstruction,)


# ---------------------------------------------------------------------------
# covers and the category bound


@dataclass(frozen=True)
class CategoricalCover:
    """A cover by deformable subsets, each with a revalidating witness."""

    ambient: DigitalImage
    subsets: Tuple
    witnesses: Tuple

    def revalidate(self):
        covered = set()
        for u in self.subsets:
            covered.update(u.points)
        if covered != set(self.ambient.points):
            return False
        for u, wit in zip(self.subsets, self.witnesses):
            k = wit["k"]
            sub = refine(u, k)
            start = compose(inclusion_map(u, self.ambient), sub.projection)
            const = constant_map(sub.image, wit["point"], self.ambient)
            if not verify_homotopy(wit["homotopy"], const, start) and \
               not verify_homotopy(wit["homotopy"], start, const):
                return False
        return True

    def size(self):
        return len(self.subsets)


def default_candidate_subsets(x, exact_cover_limit=12):
    """Candidate family: the image itself, complements of points, axis
    halves, singletons; the full family of proper subsets when the image
    is small enough."""
    cands = [x]
    pts = list(x.points)
    if len(pts) > 1:
        for p in pts:
            cands.append(x.subimage([q for q in pts if q != p]))
    for d in range(x.dim):
        coords = sorted({p[d] for p in pts})
        for c in coords:
            lower = [p for p in pts if p[d] <= c]
            upper = [p for p in pts if p[d] >= c]
            if 0 < len(lower) < len(pts):
                cands.append(x.subimage(lower))
            if 0 < len(upper) < len(pts):
                cands.append(x.subimage(upper))
    for p in pts:
        cands.append(x.subimage([p]))
    if len(pts) <= exact_cover_limit:
        for r in range(1, len(pts)):
            for combo in combinations(pts, r):
                cands.append(x.subimage(combo))
    seen = set()
    out = []
    for c in cands:
        if c.points not in seen:
            seen.add(c.points)
            out.append(c)
    return out


def _minimal_cover(x, yes_subsets):
    """Exact smallest cover from the usable subsets, greedy bound first."""
    universe = set(x.points)
    usable = [set(u.points) for u in yes_subsets]
    if not usable or set().union(*usable) != universe:
        return None

    # greedy upper bound
    remaining = set(universe)
    greedy = []
    while remaining:
        best = max(range(len(usable)),
                   key=lambda i: (len(usable[i] & remaining), -i))
        if not usable[best] & remaining:
            return None
        greedy.append(best)
        remaining -= usable[best]

    for size in range(1, len(greedy)):
        for combo in combinations(range(len(usable)), size):
            if set().union(*(usable[i] for i in combo)) == universe:
                return list(combo)
    return greedy


def dcat(x, candidate_subsets=None, k_max=4, max_steps=None, max_nodes=None,
         exact_cover_limit=12, threads=1):
    """Interval estimate of the category, exact when the ends meet.

    Upper bound: smallest cover by subsets that pass the bounded
    deformability search. Lower bound: 0, raised to 1 when a registered
    obstruction rules out deforming the whole image. Yes only when the
    bounds coincide; the witness cover revalidates member by member.
    """
    if candidate_subsets is None:
        candidate_subsets = default_candidate_subsets(
            x, exact_cover_limit=exact_cover_limit)
    for u in candidate_subsets:
        _require_subset(u, x)

    def check(u):
        return is_subdivision_categorical(u, x, k_max, max_steps=max_steps,
                                          max_nodes=max_nodes)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(check, candidate_subsets))
    else:
        verdicts = [check(u) for u in candidate_subsets]

    yes_pairs = [(u, v) for u, v in zip(candidate_subsets, verdicts)
                 if v.is_yes]
    lower = 0
    whole = next((v for u, v in zip(candidate_subsets, verdicts)
                  if u == x), None)
    if whole is None:
        whole = is_subdivision_categorical(x, x, k_max, max_steps=max_steps,
                                           max_nodes=max_nodes)
    obstruction = whole.obstruction if whole.is_no else None
    if whole.is_no:
        lower = 1

    cover_idx = _minimal_cover(x, [u for u, _ in yes_pairs])
    if cover_idx is None:
        return Verdict.unknown(obstruction="no cover of usable subsets "
                               "found within bounds",
                               lower=lower, upper=None, k_max=k_max)
    chosen = [yes_pairs[i] for i in cover_idx]
    cover = CategoricalCover(x, tuple(u for u, _ in chosen),
                             tuple(v.witness for _, v in chosen))
    upper = cover.size() - 1
    bounds = {"lower": lower, "upper": upper, "k_max": k_max,
              "candidates": len(candidate_subsets)}
    if lower == upper:
        return Verdict.yes(witness={"value": upper, "cover": cover,
                                    "obstruction": obstruction}, **bounds)
    return Verdict.unknown(obstruction=obstruction, **bounds)


# ---------------------------------------------------------------------------
# sections of the far-endpoint evaluation


def section_check(u, x, k, n, basepoint):
    """Search for a family of based paths tracking the refined inclusion.

    A section assigns each point u' of the refined subset a path of
    length n from the basepoint to its projection, adjacent points
    getting adjacent paths. Equivalently a continuous map on
    S(u,k) x interval(n) pinned at both time ends, which is how the
    search runs. No means this exact (k, n, basepoint) is exhausted.
    """
    _require_subset(u, x)
    basepoint = tuple(basepoint)
    if basepoint not in x:
        raise PreconditionError("basepoint is not in the ambient image")
    if n < 1:
        raise PreconditionError("path length must be >= 1")
    if k < 1:
        raise PreconditionError("refinement factor must be >= 1")
    sub = refine(u, k)
    dom = product(sub.image, interval(n))
    pins = {}
    for up in sub.image.points:
        pins[up + (0,)] = basepoint
        pins[up + (n,)] = tuple(c // k for c in up)
    found = None
    for sol in continuous_extensions(dom, x, pinned=pins):
        found = sol
        break
    if found is None:
        return Verdict.no(obstruction="no based path family exists at "
                          "these parameters", k=k, n=n,
                          basepoint=basepoint)
    section = curry(found, sub.image, interval(n))
    if not section.preserves_adjacency():
        raise PreconditionError("extension search produced a non-adjacent "
                                "family")
    return Verdict.yes(witness={"section": section, "k": k, "n": n,
                                "basepoint": basepoint})


def section_to_homotopy(section_verdict, u, x):
    """Read a deformation constant -> refined inclusion off a section."""
    wit = section_verdict.witness
    section = wit["section"]
    n = wit["n"]
    stages = []
    sub_img = section.domain
    for t in range(n + 1):
        stages.append(DigitalMap.from_function(
            sub_img, x, lambda up, t=t: section(up)((t,))))
    return Homotopy(tuple(stages))
