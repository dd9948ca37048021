import pytest
from hypothesis import given, strategies as st

from digitop.errors import DimensionMismatch
from digitop.image import (DigitalImage, adjacent, cube, interval,
                           is_connected, point_image, product, window)

points = st.integers(-4, 4)


def coords(dim):
    return st.tuples(*([points] * dim))


def test_adjacent_diagonal_pair():
    assert adjacent((1, 0), (0, 1))


def test_adjacent_reflexive_on_equal_points():
    assert adjacent((3, -2), (3, -2))


def test_not_adjacent_when_a_coordinate_differs_by_two():
    assert not adjacent((0, 0), (2, 0))


def test_adjacent_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        adjacent((0,), (0, 0))


@given(coords(3), coords(3))
def test_adjacency_symmetric(x, y):
    assert adjacent(x, y) == adjacent(y, x)


@given(coords(2))
def test_adjacency_reflexive(x):
    assert adjacent(x, x)


def test_interval_basics():
    assert interval(1).points == ((0,), (1,))
    assert interval(0).points == ((0,),)
    assert interval(2).points == ((0,), (1,), (2,))


def test_interval_rejects_negative_length():
    with pytest.raises(ValueError):
        interval(-1)


def test_image_dedupes_and_sorts():
    img = DigitalImage(1, [(3,), (1,), (3,), (2,)])
    assert img.points == ((1,), (2,), (3,))


def test_image_rejects_empty():
    with pytest.raises(ValueError):
        DigitalImage(1, [])


def test_product_of_unit_intervals():
    sq = product(interval(1), interval(1))
    assert len(sq) == 4
    assert adjacent((0, 0), (1, 1))
    assert (0, 0) in sq and (1, 1) in sq


def test_product_with_point_is_isomorphic_copy():
    from digitop.maps import find_isomorphism
    x = interval(2)
    prod = product(x, point_image((7,)))
    assert find_isomorphism(x, prod).is_yes


def test_product_diamond_interval_size(d):
    assert len(product(d, interval(1))) == 8


@given(st.integers(0, 3), st.integers(0, 3))
def test_product_cardinality(n, m):
    assert len(product(interval(n), interval(m))) == (n + 1) * (m + 1)


def test_connectivity(d):
    assert is_connected(d)
    assert not is_connected(DigitalImage(1, [(0,), (5,)]))
    assert is_connected(point_image((0,)))


def test_components_split():
    img = DigitalImage(1, [(0,), (1,), (5,)])
    assert img.components() == (((0,), (1,)), ((5,),))


def test_neighbors_are_closed(d):
    assert (1, 0) in d.neighbors((1, 0))
    assert set(d.neighbors((1, 0))) == {(1, 0), (0, 1), (0, -1)}


def test_window_and_cube():
    assert window(-2, 2).points == tuple((i,) for i in range(-2, 3))
    assert len(cube(1, 3)) == 8


def test_subimage_requires_membership(d):
    with pytest.raises(Exception):
        d.subimage([(5, 5)])
