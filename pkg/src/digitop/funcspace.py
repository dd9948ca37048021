"""Function spaces of continuous maps, and path spaces.

The space map(Y, Z) of continuous maps carries an adjacency relation:
f and g are adjacent when f(y) ~ g(y') for every adjacent pair y ~ y'
in the source (including y = y'). Path spaces are the special case of
an interval source; a function into a function space is continuous when
it sends adjacent arguments to adjacent maps.

Nothing here materializes a function space eagerly. Consumers work with
the adjacency predicate, on-demand neighbor streams, and a backtracking
enumerator; full spaces are exponentially large.
"""

from itertools import islice

from . import config
from .errors import (EnumerationOverflow, NotContinuous, PreconditionError,
                     SearchBudgetExceeded, SignatureMismatch)
from .image import DigitalImage, interval, product, split_point
from .maps import DigitalMap, compose, require_continuous, same_signature
from .verdict import Verdict


def maps_adjacent(f, g):
    """Adjacency in the function space; symmetric, reflexive on maps."""
    if not same_signature(f, g):
        raise SignatureMismatch("adjacency needs equal domains and codomains")
    require_continuous(f, g)
    return values_adjacent(f.domain.nbr_indices(),
                           f.codomain.nbr_index_sets(), f.values, g.values)


def values_adjacent(dom_nbrs, cod_sets, fv, gv):
    # Ordered check over closed neighborhoods covers both orders because
    # the underlying relations are symmetric.
    for i, row in enumerate(dom_nbrs):
        fi = cod_sets[fv[i]]
        for j in row:
            if gv[j] not in fi:
                return False
    return True


def continuous_extensions(domain, codomain, pinned=None, cap=None,
                          node_budget=None, cap_override=None):
    """Stream all continuous maps domain -> codomain extending `pinned`.

    Backtracking in canonical point order; the candidates for each point
    are cut down to the intersection of the closed neighborhoods of the
    values already chosen on adjacent points. With no pins this streams
    the whole function space.

    Raises EnumerationOverflow when more than `cap` maps are produced,
    and SearchBudgetExceeded when the number of visited search nodes
    passes `node_budget` (used by refutation searches that must not
    silently give up).
    """
    cap = config.max_maps_cap(cap_override) if cap is None else cap
    pts = domain.points
    n = len(pts)
    dnbrs = domain.nbr_indices()
    csets = codomain.nbr_index_sets()
    ncod = len(codomain.points)
    pin = {}
    if pinned:
        for p, q in pinned.items():
            pin[domain.index(p)] = codomain.index(q)

    earlier = [tuple(j for j in dnbrs[i] if j < i) for i in range(n)]
    values = [0] * n
    produced = 0
    nodes = 0

    def candidates(i):
        allowed = None
        for j in earlier[i]:
            s = csets[values[j]]
            allowed = s if allowed is None else allowed & s
            if not allowed:
                return ()
        if i in pin:
            v = pin[i]
            if allowed is None or v in allowed:
                return (v,)
            return ()
        if allowed is None:
            return list(range(ncod))
        return sorted(allowed)

    # Explicit-stack backtracking so deep domains do not hit the
    # interpreter recursion limit.
    stack = [iter(candidates(0))]
    while stack:
        i = len(stack) - 1
        try:
            v = next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(node_budget)
        values[i] = v
        if i + 1 == n:
            produced += 1
            if produced > cap:
                raise EnumerationOverflow(cap)
            yield DigitalMap(domain, codomain, tuple(values),
                             _continuous=True)
        else:
            stack.append(iter(candidates(i + 1)))


def enumerate_maps(source, target, cap=None):
    """All continuous maps source -> target, canonically ordered."""
    return continuous_extensions(source, target, cap=cap)


def count_maps(source, target, cap=None):
    return sum(1 for _ in enumerate_maps(source, target, cap=cap))


def adjacent_maps(f, cap=None, node_budget=None):
    """Stream every continuous g adjacent to f in map(dom, cod).

    Each g(y) is constrained to the common closed neighborhood of the
    f-values on the closed neighborhood of y, and to continuity against
    the values of g already chosen.
    """
    require_continuous(f)
    dom, cod = f.domain, f.codomain
    dnbrs = dom.nbr_indices()
    csets = cod.nbr_index_sets()
    fv = f.values
    allowed = []
    for i, row in enumerate(dnbrs):
        s = None
        for j in row:
            t = csets[fv[j]]
            s = t if s is None else s & t
        allowed.append(sorted(s))
    for values in _extend_with_allowed(dnbrs, csets, allowed,
                                       cap=cap, node_budget=node_budget):
        yield DigitalMap(dom, cod, values, _continuous=True)


def adjacent_value_tables(domain, codomain, fv):
    """Neighbor stream at the raw table level (search engine hot path)."""
    dnbrs = domain.nbr_indices()
    csets = codomain.nbr_index_sets()
    allowed = []
    for i, row in enumerate(dnbrs):
        s = None
        for j in row:
            t = csets[fv[j]]
            s = t if s is None else s & t
        allowed.append(sorted(s))
    return _extend_with_allowed(dnbrs, csets, allowed)


def _extend_with_allowed(dnbrs, csets, allowed, cap=None, node_budget=None):
    n = len(dnbrs)
    earlier = [tuple(j for j in dnbrs[i] if j < i) for i in range(n)]
    values = [0] * n
    produced = 0
    nodes = 0

    def candidates(i):
        out = []
        early = earlier[i]
        for v in allowed[i]:
            for j in early:
                if v not in csets[values[j]]:
                    break
            else:
                out.append(v)
        return out

    stack = [iter(candidates(0))]
    while stack:
        i = len(stack) - 1
        try:
            v = next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded(node_budget)
        values[i] = v
        if i + 1 == n:
            produced += 1
            if cap is not None and produced > cap:
                raise EnumerationOverflow(cap)
            yield tuple(values)
        else:
            stack.append(iter(candidates(i + 1)))


class MapSpace:
    """Handle on map(source, target); lazily enumerable, never stored."""

    def __init__(self, source, target):
        self.source = source
        self.target = target

    def __iter__(self):
        return enumerate_maps(self.source, self.target)

    def take(self, n):
        return list(islice(iter(self), n))

    def count(self, cap=None):
        return count_maps(self.source, self.target, cap=cap)

    def adjacent(self, f, g):
        self._check(f)
        self._check(g)
        return maps_adjacent(f, g)

    def neighbors(self, f):
        self._check(f)
        return adjacent_maps(f)

    def _check(self, f):
        if f.domain != self.source or f.codomain != self.target:
            raise SignatureMismatch("map does not live in this space")


# ---------------------------------------------------------------------------
# paths


def path_space(target, n):
    """P_n(target) = map(interval(n), target)."""
    return MapSpace(interval(n), target)


def path_from_points(points, target):
    """Build a path of length len(points)-1 through the given points."""
    pts = [tuple(p) for p in points]
    if len(pts) < 1:
        raise ValueError("a path needs at least one point")
    dom = interval(len(pts) - 1)
    return DigitalMap.from_function(dom, target,
                                    lambda t: pts[t[0]])


def path_points(path):
    return path.value_points()


def path_length(path):
    return len(path.domain) - 1


def is_path(f):
    return f.domain.dim == 1 and f.domain.points[0] == (0,) and all(
        p == (i,) for i, p in enumerate(f.domain.points))


def ev(path, t):
    """Evaluation of a path at an endpoint (t = 0 or t = length)."""
    require_continuous(path)
    n = path_length(path)
    if t not in (0, n):
        raise PreconditionError(f"evaluation time {t} is not an endpoint "
                                f"of a length-{n} path")
    return path((t,))


def endpoints(path):
    """The pair (start, end) of a path."""
    require_continuous(path)
    n = path_length(path)
    return path((0,)), path((n,))


def constant_path(y, target, n):
    from .maps import constant_map
    return constant_map(interval(n), y, target)


def prolong_path(path, n):
    """Trivial extension: hold the final value out to length n."""
    m = path_length(path)
    if n < m:
        raise PreconditionError("cannot prolong to a shorter length")
    clamp = DigitalMap.from_function(interval(n), interval(m),
                                     lambda t: (min(t[0], m),))
    return compose(path, clamp)


class BasedPathSpace:
    """Paths of a fixed length with a pinned start point."""

    def __init__(self, target, basepoint, n):
        basepoint = tuple(basepoint)
        if basepoint not in target:
            raise PreconditionError(
                f"basepoint {basepoint} is not in the target image")
        if n < 1:
            raise PreconditionError("based path length must be >= 1")
        self.target = target
        self.basepoint = basepoint
        self.length = n
        self.source = interval(n)

    def __iter__(self):
        return continuous_extensions(self.source, self.target,
                                     pinned={(0,): self.basepoint})

    def count(self, cap=None):
        return sum(1 for _ in continuous_extensions(
            self.source, self.target, pinned={(0,): self.basepoint},
            cap=cap))

    def contains(self, path):
        return (path.domain == self.source and path.codomain == self.target
                and path((0,)) == self.basepoint and path.is_continuous())

    def ev_end(self, path):
        if not self.contains(path):
            raise PreconditionError("not a based path of this space")
        return path((self.length,))


def based_paths(target, basepoint, n):
    return BasedPathSpace(target, basepoint, n)


# ---------------------------------------------------------------------------
# induced functions and the exponential correspondence


def pullback(f):
    """g |-> g o f; preserves function-space adjacency when f is continuous."""
    require_continuous(f)

    def act(g):
        if g.domain != f.codomain:
            raise SignatureMismatch("pullback target does not compose with f")
        return compose(g, f)

    return act


def pushforward(f):
    """g |-> f o g; preserves function-space adjacency when f is continuous."""
    require_continuous(f)

    def act(g):
        if g.codomain != f.domain:
            raise SignatureMismatch("pushforward source does not compose "
                                    "with f")
        return compose(f, g)

    return act


class MapFamily:
    """A function from an image into a function space.

    Values are maps with a common signature, aligned with the domain's
    canonical point order. Continuity means adjacent arguments are sent
    to adjacent maps.
    """

    def __init__(self, domain, values):
        values = tuple(values)
        if len(values) != len(domain.points):
            raise ValueError("family is not total on its domain")
        if not values:
            raise ValueError("empty family")
        src, tgt = values[0].domain, values[0].codomain
        for v in values:
            if v.domain != src or v.codomain != tgt:
                raise SignatureMismatch("family values have mixed signatures")
        self.domain = domain
        self.values = values
        self.source = src
        self.target = tgt

    @classmethod
    def from_function(cls, domain, fn):
        return cls(domain, [fn(p) for p in domain.points])

    def __call__(self, p):
        return self.values[self.domain.index(p)]

    def __eq__(self, other):
        return (isinstance(other, MapFamily) and self.domain == other.domain
                and self.values == other.values)

    def preserves_adjacency(self):
        if not all(v.is_continuous() for v in self.values):
            return False
        dnbrs = self.domain.nbr_indices()
        snbrs = self.source.nbr_indices()
        csets = self.target.nbr_index_sets()
        for i, row in enumerate(dnbrs):
            for j in row:
                if j < i:
                    continue
                if not values_adjacent(snbrs, csets, self.values[i].values,
                                       self.values[j].values):
                    return False
        return True


def curry(big, x, y):
    """Split a map on product(x, y) into the family x -> map(y, cod).

    The family preserves adjacency exactly when the original map is
    continuous; this is the exponential correspondence.
    """
    if big.domain != product(x, y):
        raise SignatureMismatch("map is not defined on the stated product")
    cod = big.codomain

    def slice_at(p):
        return DigitalMap.from_function(y, cod, lambda q: big(p + q))

    return MapFamily.from_function(x, slice_at)


def uncurry(family):
    """Inverse of curry: reassemble a map on product(domain, source)."""
    dom = product(family.domain, family.source)
    dx = family.domain.dim

    def fn(p):
        a, b = split_point(p, dx)
        return family(a)(b)

    return DigitalMap.from_function(dom, family.target, fn)


def family_as_paths(family):
    """Interpret a family with interval source as a path family."""
    if family.source.points[0] != (0,):
        raise PreconditionError("family source is not an interval at 0")
    return family


def identify_point_maps(target):
    """The adjacency-preserving bijection map({pt}, Y) <-> Y."""
    pt = DigitalImage(1, [(0,)])

    def to_point(f):
        return f((0,))

    def from_point(y):
        from .maps import constant_map
        return constant_map(pt, y, target)

    return to_point, from_point
