"""Digital images: finite point sets in the integer lattice.

Two points are adjacent when every coordinate differs by at most one
(Chebyshev distance <= 1). The relation is reflexive, and it is never
stored as an edge list: it is recomputed from coordinates on demand,
with per-point closed neighborhoods cached after first use because
they are the hot path of every search in this package.
"""

from collections import deque
from itertools import product as iproduct

from .errors import DimensionMismatch, NotAMember

Point = tuple


def as_point(coords):
    return tuple(int(c) for c in coords)


def adjacent(x, y):
    """Chebyshev adjacency; reflexive and symmetric."""
    if len(x) != len(y):
        raise DimensionMismatch(f"points of dimension {len(x)} and {len(y)}")
    for a, b in zip(x, y):
        if a - b > 1 or b - a > 1:
            return False
    return True


class DigitalImage:
    """An immutable finite subset of Z^dim with derived adjacency.

    Points are deduplicated and kept in lexicographic order; every
    enumeration and tie-break in the package follows that order.
    """

    __slots__ = ("dim", "points", "_index", "_nbrs", "_nbr_sets", "_hash",
                 "_connected")

    def __init__(self, dim, points):
        dim = int(dim)
        if dim <= 0:
            raise ValueError("dimension must be positive")
        pts = sorted({as_point(p) for p in points})
        if not pts:
            raise ValueError("a digital image needs at least one point")
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(
                    f"point {p} does not have dimension {dim}")
        self.dim = dim
        self.points = tuple(pts)
        self._index = {p: i for i, p in enumerate(self.points)}
        self._nbrs = None
        self._nbr_sets = None
        self._hash = None
        self._connected = None

    @classmethod
    def from_points(cls, points):
        pts = list(points)
        if not pts:
            raise ValueError("a digital image needs at least one point")
        return cls(len(pts[0]), pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._index

    def __eq__(self, other):
        return (isinstance(other, DigitalImage)
                and self.dim == other.dim and self.points == other.points)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.points))
        return self._hash

    def __repr__(self):
        if len(self) <= 6:
            return f"DigitalImage(dim={self.dim}, points={list(self.points)})"
        return f"DigitalImage(dim={self.dim}, |points|={len(self)})"

    def index(self, p):
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise NotAMember(f"{p} is not a point of this image") from None

    def _build_nbrs(self):
        # Closed neighborhoods, as index tuples. Quadratic scan is fine at
        # the sizes handled here and runs once per image.
        pts = self.points
        n = len(pts)
        nbrs = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                if adjacent(pts[i], pts[j]):
                    nbrs[i].append(j)
                    if i != j:
                        nbrs[j].append(i)
        self._nbrs = tuple(tuple(sorted(row)) for row in nbrs)
        self._nbr_sets = tuple(frozenset(row) for row in self._nbrs)

    def nbr_indices(self):
        if self._nbrs is None:
            self._build_nbrs()
        return self._nbrs

    def nbr_index_sets(self):
        if self._nbr_sets is None:
            self._build_nbrs()
        return self._nbr_sets

    def neighbors(self, p):
        """Closed neighborhood of p (includes p itself)."""
        i = self.index(p)
        return tuple(self.points[j] for j in self.nbr_indices()[i])

    def is_connected(self):
        if self._connected is None:
            nbrs = self.nbr_indices()
            seen = {0}
            queue = deque([0])
            while queue:
                i = queue.popleft()
                for j in nbrs[i]:
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
            self._connected = len(seen) == len(self.points)
        return self._connected

    def components(self):
        """Partition of the point set into connectivity classes."""
        nbrs = self.nbr_indices()
        seen = set()
        comps = []
        for start in range(len(self.points)):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                i = queue.popleft()
                for j in nbrs[i]:
                    if j not in seen:
                        seen.add(j)
                        comp.add(j)
                        queue.append(j)
            comps.append(tuple(self.points[i] for i in sorted(comp)))
        return tuple(comps)

    def subimage(self, points):
        """Image on a subset of this image's points, same ambient dimension."""
        pts = [as_point(p) for p in points]
        for p in pts:
            if p not in self._index:
                raise NotAMember(f"{p} is not a point of this image")
        return DigitalImage(self.dim, pts)


def interval(n):
    """The digital interval {0, ..., n} in Z."""
    n = int(n)
    if n < 0:
        raise ValueError("interval length must be >= 0")
    return DigitalImage(1, [(i,) for i in range(n + 1)])


def point_image(coords=(0,)):
    return DigitalImage(len(tuple(coords)), [coords])


def window(lo, hi):
    """The interval [lo, hi] of Z as a 1-dimensional image."""
    if lo > hi:
        raise ValueError("empty window")
    return DigitalImage(1, [(i,) for i in range(lo, hi + 1)])


def product(x, y):
    """Cartesian product by coordinate concatenation.

    The derived Chebyshev adjacency on the result is exactly the strong
    product rule: (a, b) ~ (a', b') iff a ~ a' and b ~ b'.
    """
    pts = [p + q for p in x.points for q in y.points]
    return DigitalImage(x.dim + y.dim, pts)


def product_many(*images):
    if not images:
        raise ValueError("need at least one factor")
    out = images[0]
    for im in images[1:]:
        out = product(out, im)
    return out


def is_connected(x):
    return x.is_connected()


def split_point(p, dim_left):
    return p[:dim_left], p[dim_left:]


def cube(n, d):
    """The d-fold product of intervals {0..n}: a lattice cube in Z^d."""
    if d <= 0:
        raise ValueError("cube dimension must be positive")
    return DigitalImage(d, iproduct(range(n + 1), repeat=d))
