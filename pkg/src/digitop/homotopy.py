"""Homotopy of digital maps, decided by search.

An N-stage homotopy between maps f, g : X -> Y is exactly a length-N
path in the function space map(X, Y), so homotopy decision is
connectivity in a finite graph: breadth-first search from f over
function-space neighbors. BFS gives minimal stage counts for free, a
fully exhausted component is a genuine No, and a truncated search is
always reported as Unknown, never No.
"""

from dataclasses import dataclass
from typing import Tuple

import random

from .errors import PreconditionError, SignatureMismatch
from .funcspace import (adjacent_value_tables, constant_path,
                        continuous_extensions, maps_adjacent,
                        values_adjacent)
from .image import DigitalImage, interval, product
from .maps import DigitalMap, compose, constant_map, require_continuous
from .subdivision import refine
from .verdict import Verdict


@dataclass(frozen=True)
class Homotopy:
    """A deformation certificate: N+1 continuous stages, consecutive
    stages adjacent in the function space."""

    stages: Tuple[DigitalMap, ...]

    def __post_init__(self):
        if not self.stages:
            raise ValueError("a homotopy needs at least one stage")

    @property
    def length(self):
        return len(self.stages) - 1

    @property
    def domain(self):
        return self.stages[0].domain

    @property
    def codomain(self):
        return self.stages[0].codomain

    @property
    def start(self):
        return self.stages[0]

    @property
    def end(self):
        return self.stages[-1]

    def as_product_map(self):
        """The same deformation as one map on domain x interval(N).

        Degenerate length 0 is widened to a 1-stage constant deformation
        so the product form always has an honest time axis.
        """
        stages = self.stages if self.length >= 1 else self.stages * 2
        n = len(stages) - 1
        dom = product(self.domain, interval(n))
        dx = self.domain.dim
        return DigitalMap.from_function(
            dom, self.codomain, lambda p: stages[p[dx]](p[:dx]))

    @classmethod
    def from_product_map(cls, big, x, n):
        """Read the stages off a map on product(x, interval(n))."""
        stages = []
        for t in range(n + 1):
            stages.append(DigitalMap.from_function(
                x, big.codomain, lambda p, t=t: big(p + (t,))))
        return cls(tuple(stages))

    @classmethod
    def constant(cls, f, n=0):
        return cls((f,) * (n + 1))


def verify_homotopy(h, f, g):
    """Check a certificate end to end.

    Endpoints must match, every stage must be continuous, and each
    consecutive pair must be adjacent in the function space; this is
    equivalent to continuity of the product-form deformation with the
    prescribed restrictions.
    """
    if h.stages[0] != f or h.stages[-1] != g:
        return False
    for s in h.stages:
        if not s.is_continuous():
            return False
    for a, b in zip(h.stages, h.stages[1:]):
        if not maps_adjacent(a, b):
            return False
    return True


def concat(h1, h2):
    """Join two deformations at a shared junction stage."""
    if h1.stages[-1] != h2.stages[0]:
        raise PreconditionError("homotopies do not share a junction stage")
    return Homotopy(h1.stages + h2.stages[1:])


def prolong(h, n):
    """Pad a deformation to length n by repeating its final stage."""
    if n < h.length:
        raise PreconditionError("cannot prolong to a shorter homotopy")
    return Homotopy(h.stages + (h.stages[-1],) * (n - h.length))


def reverse(h):
    return Homotopy(tuple(reversed(h.stages)))


def neighbors_in_mapspace(f):
    """Stream the continuous maps adjacent to f (including f itself)."""
    from .funcspace import adjacent_maps
    return adjacent_maps(f)


def _bfs(domain, codomain, start_values, targets, max_steps=None,
         max_nodes=None):
    """Layered BFS over the function-space graph.

    targets: set of value tables to reach. Returns (verdict_kind, path,
    stats) where verdict_kind is "yes" (path found), "no" (component
    exhausted), or "unknown" (a bound truncated the search). Each
    frontier is expanded in canonical (sorted) order so the reported
    witness is deterministic.
    """
    parent = {start_values: None}
    if start_values in targets:
        return "yes", [start_values], {"visited": 1, "steps": 0}
    frontier = [start_values]
    steps = 0
    visited = 1
    while frontier:
        if max_steps is not None and steps >= max_steps:
            return "unknown", None, {"visited": visited, "steps": steps,
                                     "truncated_by": "max_steps"}
        next_frontier = []
        for fv in frontier:
            for gv in adjacent_value_tables(domain, codomain, fv):
                if gv in parent:
                    continue
                parent[gv] = fv
                visited += 1
                if max_nodes is not None and visited > max_nodes:
                    return "unknown", None, {
                        "visited": visited, "steps": steps,
                        "truncated_by": "max_nodes"}
                if gv in targets:
                    path = [gv]
                    while path[-1] is not None:
                        prev = parent[path[-1]]
                        if prev is None:
                            break
                        path.append(prev)
                    path.reverse()
                    return "yes", path, {"visited": visited,
                                         "steps": steps + 1}
                next_frontier.append(gv)
        next_frontier.sort()
        frontier = next_frontier
        steps += 1
    return "no", None, {"visited": visited, "steps": steps}


def _values_path_to_homotopy(domain, codomain, path):
    stages = tuple(DigitalMap(domain, codomain, v, _continuous=True)
                   for v in path)
    return Homotopy(stages)


def homotopic(f, g, max_steps=None, max_nodes=None):
    """Decide whether f and g are homotopic, with a minimal certificate.

    Yes carries a Homotopy with the fewest possible stages. No means the
    entire reachable component of f was enumerated without meeting g.
    """
    if not (f.domain == g.domain and f.codomain == g.codomain):
        raise SignatureMismatch("homotopy needs equal signatures")
    require_continuous(f, g)
    kind, path, stats = _bfs(f.domain, f.codomain, f.values, {g.values},
                             max_steps=max_steps, max_nodes=max_nodes)
    bounds = {"max_steps": max_steps, "max_nodes": max_nodes, **stats}
    if kind == "yes":
        h = _values_path_to_homotopy(f.domain, f.codomain, path)
        return Verdict.yes(witness=h, **bounds)
    if kind == "no":
        return Verdict.no(obstruction="component of the start map "
                          "exhausted", **bounds)
    return Verdict.unknown(**bounds)


def reach_any_constant(f, max_steps=None, max_nodes=None):
    """BFS from f to the nearest constant map, if any is reachable.

    One search settles reachability of every constant at once, since all
    searches from f explore the same component.
    """
    require_continuous(f)
    cod = f.codomain
    n = len(f.domain.points)
    targets = {(c,) * n: c for c in range(len(cod.points))}
    kind, path, stats = _bfs(f.domain, cod, f.values, set(targets),
                             max_steps=max_steps, max_nodes=max_nodes)
    bounds = {"max_steps": max_steps, "max_nodes": max_nodes, **stats}
    if kind == "yes":
        h = _values_path_to_homotopy(f.domain, cod, path)
        endpoint = cod.points[targets[path[-1]]]
        return Verdict.yes(witness=(endpoint, h), **bounds)
    if kind == "no":
        return Verdict.no(obstruction="component contains no constant map",
                          **bounds)
    return Verdict.unknown(**bounds)


def is_contractible(x, max_steps=None, max_nodes=None):
    """Can the identity be deformed to a constant?"""
    v = reach_any_constant(DigitalMap.identity(x), max_steps=max_steps,
                           max_nodes=max_nodes)
    if v.is_yes:
        point, h = v.witness
        return Verdict.yes(witness={"point": point, "homotopy": h},
                           **v.bounds_used)
    return v


def is_subdivision_contractible(x, k_max, max_steps=None, max_nodes=None):
    """Search for a deformation of some refinement projection to a constant.

    Tries factors k = 2..k_max. A failed search at one factor proves
    nothing about larger factors, so without an obstruction the negative
    outcome is Unknown, never No.
    """
    if k_max < 2:
        raise PreconditionError("k_max must be >= 2")
    per_k = {}
    for k in range(2, k_max + 1):
        sub = refine(x, k)
        v = reach_any_constant(sub.projection, max_steps=max_steps,
                               max_nodes=max_nodes)
        per_k[k] = v.outcome
        if v.is_yes:
            point, h = v.witness
            return Verdict.yes(witness={"k": k, "point": point,
                                        "homotopy": h},
                               per_k=per_k)
    return Verdict.unknown(per_k=per_k, k_max=k_max,
                           obstruction="no factor up to k_max admitted a "
                           "contraction; larger factors undecided")


def homotopy_equivalent(x, y, cap_maps=1000, max_steps=None, max_nodes=None):
    """Bounded search for maps f: x->y, g: y->x with both composites
    homotopic to identities.

    The component count of an image is preserved by homotopy
    equivalence, which gives the only definitive No here; otherwise the
    outcome is Yes with a full witness tuple or Unknown when the caps
    run out.
    """
    from .errors import EnumerationOverflow
    from .funcspace import enumerate_maps
    from .maps import find_isomorphism

    nx, ny = len(x.components()), len(y.components())
    if nx != ny:
        return Verdict.no(obstruction="component counts differ "
                          f"({nx} vs {ny})")

    iso = find_isomorphism(x, y)
    if iso.is_yes:
        f, g = iso.witness
        return Verdict.yes(witness={
            "forward": f, "backward": g,
            "on_x": Homotopy.constant(DigitalMap.identity(x)),
            "on_y": Homotopy.constant(DigitalMap.identity(y))},
            via="isomorphism")

    def bounded(source, target):
        out = []
        try:
            for m in enumerate_maps(source, target, cap=cap_maps):
                out.append(m)
        except EnumerationOverflow:
            return out, True
        return out, False

    fs, f_overflow = bounded(x, y)
    gs, g_overflow = bounded(y, x)
    idx = DigitalMap.identity(x)
    idy = DigitalMap.identity(y)
    for f in fs:
        for g in gs:
            hx = homotopic(compose(g, f), idx, max_steps=max_steps,
                           max_nodes=max_nodes)
            if not hx.is_yes:
                continue
            hy = homotopic(compose(f, g), idy, max_steps=max_steps,
                           max_nodes=max_nodes)
            if hy.is_yes:
                return Verdict.yes(witness={
                    "forward": f, "backward": g,
                    "on_x": hx.witness, "on_y": hy.witness},
                    cap_maps=cap_maps)
    return Verdict.unknown(cap_maps=cap_maps,
                           maps_truncated=f_overflow or g_overflow,
                           obstruction="candidate pairs exhausted under "
                           "the caps")


# ---------------------------------------------------------------------------
# the start-evaluation contraction of a path space


@dataclass(frozen=True)
class PathSpaceContraction:
    """Witness that evaluating paths at time 0 is a homotopy equivalence.

    section(y) is the constant path at y; stage s clamps a path to
    alpha(min(t, N-s)), deforming the identity of the path space to
    section-after-evaluation in N stages.
    """

    target: DigitalImage
    length: int

    def section(self, y):
        return constant_path(y, self.target, self.length)

    def stage(self, path, s):
        n = self.length
        if not 0 <= s <= n:
            raise PreconditionError("stage index out of range")
        pts = path.value_points()
        clamped = [pts[min(t, n - s)] for t in range(n + 1)]
        return DigitalMap.from_function(
            interval(n), self.target, lambda t: clamped[t[0]])


def ev0_homotopy_equivalence_witness(y, n, sample_pairs=400, seed=7,
                                     exhaustive_limit=300):
    """Build and validate the contraction of the length-n path space of y.

    Checks: the section composed with start evaluation is the identity
    on y; stage 0 is the identity and stage n is section-after-
    evaluation; and the deformation preserves path adjacency, checked on
    every pair of adjacent paths when the path space is small and on a
    seeded sample otherwise.
    """
    if n < 1:
        raise PreconditionError("path length must be >= 1")
    w = PathSpaceContraction(y, n)

    # section is a right inverse of start evaluation
    for q in y.points:
        if w.section(q)((0,)) != q:
            raise PreconditionError("section fails to invert evaluation")

    paths = []
    overflow = False
    for i, p in enumerate(continuous_extensions(interval(n), y)):
        paths.append(p)
        if len(paths) > exhaustive_limit:
            overflow = True
            break

    inbrs = interval(n).nbr_indices()
    ysets = y.nbr_index_sets()

    def paths_adjacent(a, b):
        return values_adjacent(inbrs, ysets, a.values, b.values)

    checked = 0
    if not overflow:
        pairs = [(a, b) for i, a in enumerate(paths)
                 for b in paths[i:] if paths_adjacent(a, b)]
    else:
        rng = random.Random(seed)
        pairs = []
        while len(pairs) < sample_pairs:
            a = _random_path(y, n, rng)
            b = _random_adjacent_path(a, rng)
            pairs.append((a, b))

    for a, b in pairs:
        if w.stage(a, 0) != a:
            raise PreconditionError("stage 0 is not the identity")
        if w.stage(a, n) != w.section(a((0,))):
            raise PreconditionError("final stage is not section after "
                                    "evaluation")
        for s in range(n + 1):
            for s2 in (s, s + 1):
                if s2 > n:
                    continue
                if not paths_adjacent(w.stage(a, s), w.stage(b, s2)):
                    raise PreconditionError(
                        "contraction failed to preserve adjacency")
        checked += 1

    return w, {"pairs_checked": checked, "exhaustive": not overflow}


def _random_path(y, n, rng):
    pts = [rng.choice(y.points)]
    for _ in range(n):
        pts.append(rng.choice(y.neighbors(pts[-1])))
    return DigitalMap.from_function(interval(n), y, lambda t: pts[t[0]])


def _random_adjacent_path(path, rng):
    from .funcspace import adjacent_maps
    nbrs = list(adjacent_maps(path))
    return rng.choice(nbrs)
