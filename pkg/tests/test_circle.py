import pytest

from digitop.circle import (DiamondLoop, as_loop, circle8, cover_map,
                            cover_point, diamond, lift_homotopy, lift_path,
                            sphere, winding_index, winding_number,
                            winding_obstruction)
from digitop.errors import PreconditionError
from digitop.funcspace import (continuous_extensions, path_from_points,
                               values_adjacent)
from digitop.image import interval, product
from digitop.maps import DigitalMap, compose


def loop4():
    return path_from_points([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 0)],
                            diamond())


def test_fixture_shapes():
    d = diamond()
    assert len(d) == 4 and d.is_connected()
    c = circle8()
    assert set(c.points) == {(2, 0), (1, 1), (0, 2), (-1, 1), (-2, 0),
                             (-1, -1), (0, -2), (1, -1)}
    assert c.is_connected()
    s2 = sphere(2)
    assert len(s2) == 6 and s2.is_connected()
    assert sphere(1) == d


def test_sphere_adjacency_is_octahedral():
    s2 = sphere(2)
    # poles are adjacent to everything except their own antipode
    north = (0, 0, 1)
    nbrs = set(s2.neighbors(north))
    assert (0, 0, -1) not in nbrs
    assert len(nbrs) == 5


def test_cover_point_values():
    assert cover_point(0) == (1, 0)
    assert cover_point(4) == (1, 0)
    assert cover_point(-1) == (0, -1)


def test_cover_map_continuous():
    assert cover_map(-6, 6).is_continuous()


def test_lift_constant_path():
    c = path_from_points([(1, 0)] * 4, diamond())
    cert = lift_path(c, 0)
    assert [cert.lift((t,))[0] for t in range(4)] == [0, 0, 0, 0]


def test_lift_full_loop():
    cert = lift_path(loop4(), 0)
    assert [cert.lift((t,))[0] for t in range(5)] == [0, 1, 2, 3, 4]
    cert4 = lift_path(loop4(), 4)
    assert [cert4.lift((t,))[0] for t in range(5)] == [4, 5, 6, 7, 8]


def test_lift_rejects_wrong_start():
    with pytest.raises(PreconditionError):
        lift_path(loop4(), 1)


def test_lift_projects_back():
    cert = lift_path(loop4(), 0)
    assert cert.revalidate()
    p = cover_map(-cert.bound, cert.bound)
    assert compose(p, cert.lift).values == loop4().values


def brute_force_lifts(path_pts, start, bound):
    sols = []
    seq = [start]

    def rec(t):
        if t == len(path_pts) - 1:
            sols.append(tuple(seq))
            return
        for step in (-1, 0, 1):
            nxt = seq[-1] + step
            if abs(nxt) <= bound and cover_point(nxt) == path_pts[t + 1]:
                seq.append(nxt)
                rec(t + 1)
                seq.pop()

    rec(0)
    return sols


def test_lift_uniqueness_small():
    d = diamond()
    for n in (1, 2, 3, 4):
        for path in continuous_extensions(interval(n), d):
            pts = path.value_points()
            start = next(s for s in range(4) if cover_point(s) == pts[0])
            cert = lift_path(path, start)
            sols = brute_force_lifts(pts, start, cert.bound)
            got = tuple(cert.lift((t,))[0] for t in range(n + 1))
            assert sols == [got]


def test_winding_examples():
    const = DiamondLoop(path_from_points([(1, 0)] * 3, diamond()))
    assert winding_number(const) == 0
    assert winding_number(as_loop(loop4())) == 4
    assert winding_index(as_loop(loop4())) == 1
    rev = path_from_points(list(reversed(loop4().value_points())),
                           diamond())
    assert winding_number(as_loop(rev)) == -4


def test_winding_requires_loop():
    open_path = path_from_points([(1, 0), (0, 1)], diamond())
    with pytest.raises(PreconditionError):
        DiamondLoop(open_path)


def test_winding_start_independent():
    for start in (0, 4, -4):
        cert = lift_path(loop4(), start)
        assert cert.lift((4,))[0] - cert.lift((0,))[0] == 4


def test_all_small_loops_wind_in_multiples_of_four():
    d = diamond()
    for n in (1, 2, 3, 4, 5):
        for path in continuous_extensions(interval(n), d):
            if path((0,)) == path((n,)):
                assert winding_number(as_loop(path)) % 4 == 0


def test_lift_constant_homotopy():
    d = diamond()
    h = DigitalMap.from_function(product(interval(2), interval(2)), d,
                                 lambda p: (1, 0))
    initial = lift_path(path_from_points([(1, 0)] * 3, d), 0)
    cert = lift_homotopy(h, initial)
    assert cert.revalidate()
    assert all(cert.lift((s, t)) == (0,) for s in range(3)
               for t in range(3))


def test_lift_rotation_homotopy():
    d = diamond()
    base = loop4().value_points()
    rotated = base[1:] + (base[1],)
    rows = {0: base, 1: rotated}
    h = DigitalMap.from_function(product(interval(4), interval(1)), d,
                                 lambda p: rows[p[1]][p[0]])
    assert h.is_continuous()
    initial = lift_path(loop4(), 0)
    cert = lift_homotopy(h, initial)
    assert cert.revalidate()
    # both rows lift; the endpoint columns move by the same constant
    col0 = cert.lift((0, 1))[0] - cert.lift((0, 0))[0]
    col4 = cert.lift((4, 1))[0] - cert.lift((4, 0))[0]
    assert col0 == col4 == 1


def test_homotopy_lift_uniqueness_tiny():
    d = diamond()
    h = DigitalMap.from_function(product(interval(1), interval(1)), d,
                                 lambda p: [[(1, 0), (0, 1)],
                                            [(0, 1), (0, 1)]][p[0]][p[1]])
    assert h.is_continuous()
    initial = lift_path(path_from_points([(1, 0), (0, 1)], d), 0)
    cert = lift_homotopy(h, initial)
    # oracle: enumerate all lifts of the square fixing the bottom row
    win = range(-cert.bound, cert.bound + 1)
    sols = []
    for a in win:
        for b in win:
            tab = {(0, 0): 0, (1, 0): 1, (0, 1): a, (1, 1): b}
            if all(cover_point(tab[(s, t)]) == h((s, t))
                   for s in (0, 1) for t in (0, 1)):
                ok = all(abs(tab[p] - tab[q]) <= 1
                         for p in tab for q in tab
                         if abs(p[0] - q[0]) <= 1 and abs(p[1] - q[1]) <= 1)
                if ok:
                    sols.append(tab)
    assert len(sols) == 1
    assert sols[0][(0, 1)] == cert.lift((0, 1))[0]
    assert sols[0][(1, 1)] == cert.lift((1, 1))[0]


def test_adjacent_loops_equal_winding_small():
    d = diamond()
    csets = d.nbr_index_sets()
    for n in (2, 3, 4):
        inbrs = interval(n).nbr_indices()
        loops = [p for p in continuous_extensions(interval(n), d)
                 if p((0,)) == p((n,))]
        ws = [winding_number(as_loop(p)) for p in loops]
        for i, a in enumerate(loops):
            for j in range(i + 1, len(loops)):
                if values_adjacent(inbrs, csets, a.values, loops[j].values):
                    assert ws[i] == ws[j]


def test_winding_obstruction(d):
    const = path_from_points([(1, 0)] * 5, diamond())
    ob = winding_obstruction(loop4(), const)
    assert ob is not None
    assert "winding numbers differ" in ob.explanation()
    base = loop4().value_points()
    rotated = path_from_points(base[1:] + (base[1],), diamond())
    assert winding_obstruction(loop4(), rotated) is None
    assert winding_obstruction(loop4(), loop4()) is None


def test_winding_obstruction_needs_equal_lengths():
    const = path_from_points([(1, 0)] * 3, diamond())
    with pytest.raises(PreconditionError):
        winding_obstruction(loop4(), const)
