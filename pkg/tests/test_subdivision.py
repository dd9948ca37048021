import pytest

from digitop.errors import NotAMember, PreconditionError
from digitop.image import DigitalImage, interval, product
from digitop.maps import DigitalMap, compose, inclusion_map
from digitop.subdivision import (fiber, iso_iterated,
                                 iso_product_subdivision, subdivide,
                                 subdivide_inclusion)


def test_subdivided_unit_interval_is_i3():
    assert subdivide(interval(1), 2).image == interval(3)


def test_subdivided_diamond_has_sixteen_points(d):
    assert len(subdivide(d, 2).image) == 16


def test_subdivided_point_is_interval():
    for k in (2, 3, 5):
        assert subdivide(interval(0), k).image == interval(k - 1)


def test_factor_below_two_rejected():
    with pytest.raises(PreconditionError):
        subdivide(interval(1), 1)


def test_fiber_of_unit_interval():
    sub = subdivide(interval(1), 2)
    assert fiber(sub, (1,)) == ((2,), (3,))


def test_fiber_of_diamond_point(d):
    sub = subdivide(d, 2)
    assert fiber(sub, (1, 0)) == ((2, 0), (2, 1), (3, 0), (3, 1))


def test_fiber_size_is_factor_power_dim(d, corpus):
    for x in corpus:
        for k in (2, 3):
            sub = subdivide(x, k)
            for p in x.points:
                assert len(fiber(sub, p)) == k ** x.dim


def test_fiber_requires_base_point(d):
    with pytest.raises(NotAMember):
        fiber(subdivide(d, 2), (5, 5))


def test_projection_continuous_and_surjective(corpus):
    for x in corpus:
        for k in (2, 3, 4):
            sub = subdivide(x, k)
            assert sub.projection.is_continuous()
            assert set(sub.projection.value_points()) == set(x.points)


def test_interval_subdivision_lengths():
    for n in range(0, 9):
        for k in range(2, 6):
            assert subdivide(interval(n), k).image == \
                interval(k * n + k - 1)


def test_cardinality_formula(corpus):
    for x in corpus:
        for k in (2, 3, 4):
            assert len(subdivide(x, k).image) == len(x) * k ** x.dim


def test_subdivide_inclusion_origin_into_interval():
    j = inclusion_map(interval(2).subimage([(0,)]), interval(2))
    jk = subdivide_inclusion(j, 2)
    assert jk.domain == interval(1)
    assert jk.codomain == interval(5)


def test_subdivide_identity_inclusion(d):
    j = inclusion_map(d, d)
    jk = subdivide_inclusion(j, 2)
    assert jk == DigitalMap.identity(subdivide(d, 2).image)


def test_subdivide_two_endpoint_inclusion():
    n = 4
    ends = interval(n).subimage([(0,), (n,)])
    jk = subdivide_inclusion(inclusion_map(ends, interval(n)), 2)
    assert set(jk.domain.points) == {(0,), (1,), (2 * n,), (2 * n + 1,)}


def test_subdivide_inclusion_rejects_non_inclusions():
    f = DigitalMap.from_function(interval(1), interval(1),
                                 lambda p: (1 - p[0],))
    with pytest.raises(PreconditionError):
        subdivide_inclusion(f, 2)


def test_inclusion_covers_original(d):
    fixtures = [
        (d.subimage([(1, 0), (0, 1)]), d),
        (interval(3).subimage([(0,), (3,)]), interval(3)),
        (interval(2).subimage([(0,)]), interval(2)),
    ]
    for a, x in fixtures:
        j = inclusion_map(a, x)
        for k in (2, 3, 4):
            jk = subdivide_inclusion(j, k)
            left = compose(subdivide(x, k).projection, jk)
            right = compose(j, subdivide(a, k).projection)
            assert left.values == right.values


def test_iso_iterated_on_unit_interval():
    iso = iso_iterated(interval(1), 2, 2)
    assert iso.domain == interval(7)
    assert iso.codomain == interval(7)


def test_iso_iterated_diamond(d):
    iso = iso_iterated(d, 2, 3)
    assert len(iso.domain) == 4 * 36
    assert iso.is_continuous()


def test_iso_product_subdivision():
    iso = iso_product_subdivision(interval(1), interval(1), 2)
    assert len(iso.domain) == 16
    assert iso.is_continuous()


def test_iso_product_subdivision_with_diamond(d):
    for k in (2, 3):
        iso_product_subdivision(interval(1), d, k)


def test_subdivision_uses_own_embedding(d):
    # a subset keeps its coordinates, so its refinement sits where the
    # ambient refinement of those points sits
    u = d.subimage([(1, 0)])
    sub = subdivide(u, 2)
    assert set(sub.image.points) == {(2, 0), (2, 1), (3, 0), (3, 1)}
