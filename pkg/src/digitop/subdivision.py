"""k-fold subdivision of digital images.

Subdividing blows every point up to a k^dim cubical block:
the block of x is { k*x + t : t in {0..k-1}^dim }, and the canonical
projection back to the base is coordinate-wise floor division by k.
The result depends on the ambient embedding, so subsets are always
subdivided with their own coordinates.

Only inclusions are subdivided as maps; a general map between images
does not induce a map of subdivisions in any canonical way.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import InternalVerificationError, NotAMember, PreconditionError
from .image import DigitalImage, interval, product
from .maps import DigitalMap, is_inclusion


def _scaled_points(x, k):
    offsets = list(iproduct(range(k), repeat=x.dim))
    return [tuple(k * c + t for c, t in zip(p, off))
            for p in x.points for off in offsets]


def _floor_projection(img, base, k):
    return DigitalMap.from_function(
        img, base, lambda p: tuple(c // k for c in p))


@dataclass(frozen=True)
class Subdivision:
    base: DigitalImage
    factor: int
    image: DigitalImage
    projection: DigitalMap

    def __post_init__(self):
        if not self.projection.is_continuous():
            raise InternalVerificationError(
                "subdivision projection failed its continuity check")


def subdivide(x, k):
    """The k-fold subdivision of x together with its projection, k >= 2."""
    k = int(k)
    if k < 2:
        raise PreconditionError("subdivision factor must be >= 2")
    img = DigitalImage(x.dim, _scaled_points(x, k))
    expected = len(x) * k ** x.dim
    if len(img) != expected:
        raise InternalVerificationError(
            f"expected {expected} subdivided points, got {len(img)}")
    return Subdivision(x, k, img, _floor_projection(img, x, k))


def refine(x, k):
    """Like subdivide but also admits k = 1 (the identity refinement)."""
    if k == 1:
        return Subdivision(x, 1, x, DigitalMap.identity(x))
    return subdivide(x, k)


def fiber(sub, x):
    """The block of points projecting to x: a cubical lattice of k^dim points."""
    x = tuple(x)
    if x not in sub.base:
        raise NotAMember(f"{x} is not a point of the base image")
    k = sub.factor
    return tuple(sorted(
        tuple(k * c + t for c, t in zip(x, off))
        for off in iproduct(range(k), repeat=sub.base.dim)))


def subdivide_inclusion(j, k):
    """Subdivide an inclusion A -> X to the inclusion S(A,k) -> S(X,k).

    On the block of a the induced map sends k*a + t to k*j(a) + t; for a
    coordinate-identity inclusion that is again the identity on
    coordinates. Commutes with the projections by construction, which is
    re-checked here.
    """
    if not is_inclusion(j):
        raise PreconditionError("only inclusions induce subdivided maps")
    sub_a = subdivide(j.domain, k)
    sub_x = subdivide(j.codomain, k)
    jk = DigitalMap.from_function(sub_a.image, sub_x.image, lambda p: p)
    if not jk.is_continuous():
        raise InternalVerificationError("subdivided inclusion not continuous")
    from .maps import compose
    left = compose(sub_x.projection, jk)
    right = compose(j, sub_a.projection)
    if left.values != right.values:
        raise InternalVerificationError(
            "subdivided inclusion does not cover the original")
    return jk


def iso_iterated(x, k, l):
    """Canonical isomorphism from S(S(x,k),l) onto S(x,kl).

    Subdividing twice produces the same point set as subdividing once by
    the product factor, so the table is the coordinate identity; the
    interesting content is that it intertwines the iterated projections,
    which is verified.
    """
    if k < 2 or l < 2:
        raise PreconditionError("subdivision factors must be >= 2")
    inner = subdivide(x, k)
    outer = subdivide(inner.image, l)
    combined = subdivide(x, k * l)
    if outer.image.points != combined.image.points:
        raise InternalVerificationError(
            "iterated and single-step subdivisions disagree as point sets")
    iso = DigitalMap.identity(outer.image)
    iso = DigitalMap(outer.image, combined.image, iso.values,
                     _continuous=True)
    from .maps import compose
    two_step = compose(inner.projection, outer.projection)
    one_step = compose(combined.projection, iso)
    if two_step.values != one_step.values:
        raise InternalVerificationError(
            "iterated projection does not factor through the isomorphism")
    return iso


def iso_product_subdivision(x, y, k):
    """Canonical isomorphism S(x * y, k) -> S(x,k) * S(y,k).

    Coordinate regrouping: both sides are literally the same subset of
    the ambient lattice, and the projection on the product is identified
    with the product of the factor projections (verified).
    """
    if k < 2:
        raise PreconditionError("subdivision factor must be >= 2")
    sub_xy = subdivide(product(x, y), k)
    target = product(subdivide(x, k).image, subdivide(y, k).image)
    if sub_xy.image.points != target.points:
        raise InternalVerificationError(
            "product subdivision does not match the subdivided product")
    iso = DigitalMap(sub_xy.image, target,
                     range(len(target.points)), _continuous=True)
    from .maps import compose, product_map
    rho_pair = product_map(subdivide(x, k).projection,
                           subdivide(y, k).projection)
    left = compose(rho_pair, iso)
    if left.values != sub_xy.projection.values:
        raise InternalVerificationError(
            "product projection does not factor as the product of "
            "projections")
    return iso


def subdivided_interval_length(n, k):
    """Length of the subdivision of {0..n} by k: an interval again."""
    return k * n + k - 1


def interval_subdivision(n, k):
    """Subdivision of the interval {0..n}; its image is {0..kn+k-1}."""
    sub = subdivide(interval(n), k)
    assert sub.image == interval(subdivided_interval_length(n, k))
    return sub
