"""Maps between digital images.

A map is a total assignment table from the domain's points into the
codomain, stored densely in the domain's canonical point order. Tables
are hashed constantly during searches, so the values are codomain point
indices rather than raw coordinate tuples. Non-continuous assignments
are representable; operations that require continuity check the
memoized flag and raise.
"""

from .errors import (NotAMember, NotContinuous, PreconditionError,
                     SignatureMismatch)
from .image import DigitalImage, adjacent, product, split_point
from .verdict import Verdict


class DigitalMap:
    __slots__ = ("domain", "codomain", "values", "_continuous", "_hash")

    def __init__(self, domain, codomain, values, _continuous=None):
        values = tuple(values)
        if len(values) != len(domain.points):
            raise ValueError("assignment table is not total on the domain")
        ncod = len(codomain.points)
        for v in values:
            if not 0 <= v < ncod:
                raise ValueError("assignment value out of codomain range")
        self.domain = domain
        self.codomain = codomain
        self.values = values
        self._continuous = _continuous
        self._hash = None

    @classmethod
    def from_function(cls, domain, codomain, fn):
        return cls(domain, codomain,
                   [codomain.index(fn(p)) for p in domain.points])

    @classmethod
    def from_pairs(cls, domain, codomain, pairs):
        table = {tuple(src): tuple(dst) for src, dst in pairs}
        missing = [p for p in domain.points if p not in table]
        if missing:
            raise ValueError(f"assignment missing {len(missing)} points, "
                             f"first {missing[0]}")
        if len(table) != len(domain.points):
            extra = set(table) - set(domain.points)
            raise NotAMember(f"assignment mentions foreign points {extra}")
        return cls.from_function(domain, codomain, lambda p: table[p])

    @classmethod
    def identity(cls, x):
        return cls(x, x, range(len(x.points)), _continuous=True)

    def __call__(self, p):
        return self.codomain.points[self.values[self.domain.index(p)]]

    def value_points(self):
        cod = self.codomain.points
        return tuple(cod[v] for v in self.values)

    def table(self):
        return tuple(zip(self.domain.points, self.value_points()))

    def is_continuous(self):
        if self._continuous is None:
            self._continuous = _check_continuity(self)
        return self._continuous

    def image_points(self):
        cod = self.codomain.points
        return tuple(sorted({cod[v] for v in self.values}))

    def __eq__(self, other):
        return (isinstance(other, DigitalMap)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.values == other.values)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.codomain, self.values))
        return self._hash

    def __repr__(self):
        return (f"DigitalMap(|dom|={len(self.domain)}, "
                f"|cod|={len(self.codomain)}, values={self.values})")


def _check_continuity(f):
    dnbrs = f.domain.nbr_indices()
    csets = f.codomain.nbr_index_sets()
    vals = f.values
    for i, row in enumerate(dnbrs):
        vi_set = csets[vals[i]]
        for j in row:
            if j > i and vals[j] not in vi_set:
                return False
    return True


def is_continuous(f):
    return f.is_continuous()


def require_continuous(*fs):
    for f in fs:
        if not f.is_continuous():
            raise NotContinuous("operation requires a continuous map")


def same_signature(f, g):
    return f.domain == g.domain and f.codomain == g.codomain


def compose(g, f):
    """Pointwise composition g(f(-)); continuous when both inputs are."""
    if f.codomain != g.domain:
        raise SignatureMismatch("codomain of inner map differs from domain "
                                "of outer map")
    cont = True if (f._continuous and g._continuous) else None
    return DigitalMap(f.domain, g.codomain,
                      [g.values[v] for v in f.values], _continuous=cont)


def product_map(f1, f2):
    """(f1 x f2)(a, b) = (f1(a), f2(b)) on the product images."""
    dom = product(f1.domain, f2.domain)
    cod = product(f1.codomain, f2.codomain)
    d1 = f1.domain.dim

    def fn(p):
        a, b = split_point(p, d1)
        return f1(a) + f2(b)

    return DigitalMap.from_function(dom, cod, fn)


def diagonal(x):
    """x |-> (x, x) into the product; continuous under strong adjacency."""
    return DigitalMap.from_function(x, product(x, x), lambda p: p + p)


def constant_map(x, y, codomain):
    y = tuple(y)
    if y not in codomain:
        raise NotAMember(f"{y} is not a point of the codomain")
    idx = codomain.index(y)
    return DigitalMap(x, codomain, [idx] * len(x.points), _continuous=True)


def inclusion_map(a, x):
    """The coordinate-identity inclusion of a sub-image."""
    if a.dim != x.dim:
        raise SignatureMismatch("inclusion needs equal ambient dimensions")
    return DigitalMap.from_function(a, x, lambda p: p)


def is_inclusion(j):
    return (j.domain.dim == j.codomain.dim
            and all(j(p) == p for p in j.domain.points))


def projections(x, y):
    """The two continuous projections out of product(x, y)."""
    prod = product(x, y)
    d1 = x.dim
    p1 = DigitalMap.from_function(prod, x, lambda p: p[:d1])
    p2 = DigitalMap.from_function(prod, y, lambda p: p[d1:])
    return p1, p2


def restrict(f, a):
    """Restriction of f to a sub-image of its domain."""
    return DigitalMap.from_function(a, f.codomain, f)


def _degree_profile(x):
    nbrs = x.nbr_indices()
    return sorted(len(row) for row in nbrs)


def find_isomorphism(x, y):
    """Search for a continuous bijection with continuous inverse.

    Exhaustive backtracking in lexicographic candidate order; for finite
    images an isomorphism is exactly an adjacency-preserving and
    adjacency-reflecting bijection. Returns Yes with (f, f_inverse), or
    No with the obstruction that closed the search.
    """
    if x.dim != y.dim:
        # A translation cannot fix this, but a re-embedding could; the
        # search is over coordinate tables in the given ambient spaces.
        pass
    if len(x) != len(y):
        return Verdict.no(obstruction="cardinality mismatch "
                          f"({len(x)} vs {len(y)})")
    if _degree_profile(x) != _degree_profile(y):
        return Verdict.no(obstruction="adjacency degree profiles differ")

    xn = x.nbr_index_sets()
    yn = y.nbr_index_sets()
    n = len(x)
    assign = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        xi_nbrs = xn[i]
        for c in range(n):
            if used[c]:
                continue
            ok = True
            for j in range(i):
                j_adj = j in xi_nbrs
                c_adj = assign[j] in yn[c]
                if j_adj != c_adj:
                    ok = False
                    break
            if ok:
                assign[i] = c
                used[c] = True
                if extend(i + 1):
                    return True
                used[c] = False
                assign[i] = None
        return False

    if extend(0):
        f = DigitalMap(x, y, list(assign), _continuous=True)
        inv = [0] * n
        for i, c in enumerate(assign):
            inv[c] = i
        g = DigitalMap(y, x, inv, _continuous=True)
        return Verdict.yes(witness=(f, g))
    return Verdict.no(obstruction="exhaustive backtracking found no "
                      "adjacency-preserving bijection")


def validate_inclusion(a, x):
    if a.dim != x.dim:
        raise PreconditionError("sub-image has wrong ambient dimension")
    for p in a.points:
        if p not in x:
            raise PreconditionError(f"{p} is not a point of the ambient image")
