import random
from itertools import product as iproduct

import pytest

from digitop import config
from digitop.errors import (EnumerationOverflow, PreconditionError,
                            SignatureMismatch)
from digitop.funcspace import (BasedPathSpace, MapSpace, based_paths,
                               constant_path, continuous_extensions, curry,
                               endpoints, enumerate_maps, ev,
                               identify_point_maps, maps_adjacent,
                               path_from_points, prolong_path, pullback,
                               pushforward, uncurry)
from digitop.image import DigitalImage, interval, point_image, product
from digitop.maps import DigitalMap, constant_map
from digitop.subdivision import subdivide


def brute_force_continuous(x, y):
    """Oracle: filter every raw function table for continuity."""
    out = []
    for vals in iproduct(range(len(y.points)), repeat=len(x.points)):
        f = DigitalMap(x, y, vals)
        if f.is_continuous():
            out.append(f)
    return out


def test_enumeration_matches_brute_force(d):
    cases = [(interval(2), interval(2)), (d, interval(1)),
             (interval(1), d), (interval(1), interval(3))]
    for x, y in cases:
        assert set(enumerate_maps(x, y)) == set(brute_force_continuous(x, y))


def test_unit_interval_selfmaps_count():
    assert sum(1 for _ in enumerate_maps(interval(1), interval(1))) == 4


def test_point_source_gives_target_count(d):
    assert sum(1 for _ in enumerate_maps(point_image((0,)), d)) == 4


def test_disconnected_target_only_constants():
    far = DigitalImage(1, [(0,), (5,)])
    ms = list(enumerate_maps(interval(1), far))
    assert len(ms) == 2
    assert all(len(set(m.values)) == 1 for m in ms)


def test_enumeration_cap_overflow():
    with pytest.raises(EnumerationOverflow):
        list(enumerate_maps(interval(2), interval(2), cap=3))


def test_env_var_overrides_cap(monkeypatch):
    monkeypatch.setenv(config.ENV_MAX_MAPS, "2")
    with pytest.raises(EnumerationOverflow) as exc:
        list(enumerate_maps(interval(1), interval(1)))
    assert exc.value.cap == 2


def test_adjacent_constants():
    c0 = constant_path((0,), interval(2), 2)
    c1 = constant_path((1,), interval(2), 2)
    assert maps_adjacent(c0, c1)


def test_paths_with_far_ends_not_adjacent(d):
    a = path_from_points([(1, 0), (0, 1)], d)
    b = path_from_points([(1, 0), (0, -1)], d)
    assert not maps_adjacent(a, b)


def test_adjacency_reflexive_on_maps(d):
    f = DigitalMap.identity(d)
    assert maps_adjacent(f, f)


def test_adjacency_symmetric(corpus):
    rng = random.Random(11)
    space = list(enumerate_maps(interval(2), interval(2)))
    for _ in range(100):
        f, g = rng.choice(space), rng.choice(space)
        assert maps_adjacent(f, g) == maps_adjacent(g, f)


def test_adjacency_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        maps_adjacent(DigitalMap.identity(interval(1)),
                      DigitalMap.identity(interval(2)))


def test_ev_and_endpoints(d):
    c = constant_path((1, 0), d, 3)
    assert ev(c, 0) == ev(c, 3) == (1, 0)
    assert endpoints(c) == ((1, 0), (1, 0))
    a = path_from_points([(1, 0), (0, 1)], d)
    assert endpoints(a) == ((1, 0), (0, 1))
    with pytest.raises(PreconditionError):
        ev(a, 2)


def test_evaluation_preserves_adjacency(d):
    rng = random.Random(3)
    paths = list(enumerate_maps(interval(3), d))
    for _ in range(300):
        a, b = rng.choice(paths), rng.choice(paths)
        if maps_adjacent(a, b):
            assert all(abs(u - v) <= 1 for u, v in
                       zip(ev(a, 0), ev(b, 0)))
            ea, eb = endpoints(a), endpoints(b)
            assert all(abs(u - v) <= 1
                       for u, v in zip(ea[0] + ea[1], eb[0] + eb[1]))


def test_pullback_pushforward_identity(d):
    ident = DigitalMap.identity(d)
    f = path_from_points([(1, 0), (0, 1)], d)
    assert pullback(ident)(DigitalMap.identity(d)) == ident
    assert pushforward(ident)(f) == f


def test_pullback_preserves_adjacency(d):
    rho = subdivide(interval(2), 2).projection
    act = pullback(rho)
    paths = list(enumerate_maps(interval(2), d))
    rng = random.Random(9)
    checked = 0
    for _ in range(200):
        a, b = rng.choice(paths), rng.choice(paths)
        if maps_adjacent(a, b):
            ra, rb = act(a), act(b)
            assert ra.domain == interval(5)
            assert maps_adjacent(ra, rb)
            checked += 1
    assert checked > 10


def test_refined_paths_are_longer(d):
    rho = subdivide(interval(2), 3).projection
    a = path_from_points([(1, 0), (0, 1), (0, 1)], d)
    refined = pullback(rho)(a)
    assert refined.domain == interval(8)
    assert refined((0,)) == (1, 0)


def test_trivial_extension(d):
    a = path_from_points([(1, 0), (0, 1)], d)
    ext = prolong_path(a, 4)
    assert ext.value_points() == ((1, 0), (0, 1), (0, 1), (0, 1), (0, 1))
    assert maps_adjacent(ext, ext)


def test_pushforward_preserves_adjacency(d):
    rho = subdivide(d, 2).projection
    act = pushforward(rho)
    sub = subdivide(d, 2).image
    paths = list(enumerate_maps(interval(1), sub))
    rng = random.Random(2)
    checked = 0
    for _ in range(300):
        a, b = rng.choice(paths), rng.choice(paths)
        if maps_adjacent(a, b):
            assert maps_adjacent(act(a), act(b))
            checked += 1
    assert checked > 10


def test_curry_of_projection_is_constant_family():
    x, y = interval(1), interval(2)
    proj = DigitalMap.from_function(product(x, y), y, lambda p: (p[1],))
    fam = curry(proj, x, y)
    assert fam((0,)) == fam((1,)) == DigitalMap.identity(y)
    assert fam.preserves_adjacency()


def test_curry_uncurry_round_trip_exhaustive():
    x, y, z = interval(1), interval(1), interval(2)
    dom = product(x, y)
    for big in enumerate_maps(dom, z):
        fam = curry(big, x, y)
        assert fam.preserves_adjacency()
        assert uncurry(fam) == big


def test_uncurry_of_adjacency_preserving_family_is_continuous(d):
    fam_values = [constant_path((1, 0), d, 2),
                  constant_path((0, 1), d, 2)]
    from digitop.funcspace import MapFamily
    fam = MapFamily(interval(1), fam_values)
    assert fam.preserves_adjacency()
    assert uncurry(fam).is_continuous()


def test_based_paths_point_target():
    bp = based_paths(point_image((0,)), (0,), 2)
    assert bp.count() == 1


def test_based_paths_diamond_counts(d):
    assert based_paths(d, (1, 0), 1).count() == 3
    assert based_paths(d, (1, 0), 2).count() == 9


def test_based_paths_reject_foreign_basepoint(d):
    with pytest.raises(PreconditionError):
        based_paths(d, (5, 5), 1)


def test_point_source_identification(d):
    to_pt, from_pt = identify_point_maps(d)
    ms = list(enumerate_maps(point_image((0,)), d))
    assert sorted(to_pt(m) for m in ms) == list(d.points)
    for m in ms:
        assert from_pt(to_pt(m)) == m
    for m in ms:
        for m2 in ms:
            assert maps_adjacent(m, m2) == \
                (abs(to_pt(m)[0] - to_pt(m2)[0]) <= 1
                 and abs(to_pt(m)[1] - to_pt(m2)[1]) <= 1)


def test_mapspace_enumeration_deterministic(d):
    space = MapSpace(interval(1), d)
    assert list(space) == list(space)


def test_continuous_extensions_respect_pins(d):
    pins = {(0,): (1, 0), (2,): (0, 1)}
    for m in continuous_extensions(interval(2), d, pinned=pins):
        assert m((0,)) == (1, 0) and m((2,)) == (0, 1)
