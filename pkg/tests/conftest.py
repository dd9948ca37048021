import pytest

from digitop.circle import circle8, diamond
from digitop.image import DigitalImage, interval, point_image, product


@pytest.fixture
def d():
    return diamond()


@pytest.fixture
def c8():
    return circle8()


@pytest.fixture
def pt():
    return point_image((0,))


@pytest.fixture
def corpus():
    """Small images covering the shapes the searches care about:
    a point, intervals, a square, the diamond, a disconnected pair."""
    return [
        point_image((0,)),
        interval(1),
        interval(2),
        product(interval(1), interval(1)),
        diamond(),
        DigitalImage(1, [(0,), (5,)]),
    ]
