import pytest

from digitop.errors import PreconditionError, SignatureMismatch
from digitop.funcspace import enumerate_maps, maps_adjacent
from digitop.homotopy import (Homotopy, concat, ev0_homotopy_equivalence_witness,
                              homotopic, homotopy_equivalent, is_contractible,
                              is_subdivision_contractible,
                              neighbors_in_mapspace, prolong, reverse,
                              verify_homotopy)
from digitop.image import DigitalImage, interval, point_image, product
from digitop.maps import DigitalMap, constant_map


def interval_clamp_contraction(m):
    """Stage t sends s to min(s, m - t): identity down to the constant."""
    im = interval(m)
    stages = tuple(DigitalMap.from_function(
        im, im, lambda p, t=t: (min(p[0], m - t),)) for t in range(m + 1))
    return Homotopy(stages)


def test_explicit_interval_contraction_verifies():
    for m in (1, 2, 4):
        h = interval_clamp_contraction(m)
        im = interval(m)
        assert verify_homotopy(h, DigitalMap.identity(im),
                               constant_map(im, (0,), im))


def test_single_stage_homotopy_iff_adjacent(d):
    maps = list(enumerate_maps(interval(1), d))
    for f in maps[:6]:
        for g in maps[:6]:
            h = Homotopy((f, g))
            assert verify_homotopy(h, f, g) == maps_adjacent(f, g)


def test_nonadjacent_stages_rejected(d):
    from digitop.funcspace import path_from_points
    a = path_from_points([(1, 0), (0, 1)], d)
    b = path_from_points([(1, 0), (0, -1)], d)
    assert not verify_homotopy(Homotopy((a, b)), a, b)


def test_neighbors_of_isolated_constant():
    far = DigitalImage(1, [(0,), (5,)])
    c = constant_map(far, (5,), far)
    nbrs = list(neighbors_in_mapspace(c))
    # the two constants are the only continuous maps and they are not
    # adjacent, so c sees only itself
    assert nbrs == [c]


def test_neighbors_of_identity_on_unit_interval():
    ident = DigitalMap.identity(interval(1))
    assert len(list(neighbors_in_mapspace(ident))) == 4


def test_neighbors_match_brute_force_filter(d):
    ident = DigitalMap.identity(d)
    space = list(enumerate_maps(d, d))
    oracle = {g for g in space if maps_adjacent(ident, g)}
    assert set(neighbors_in_mapspace(ident)) == oracle


def test_homotopic_equal_maps_zero_stages(d):
    f = DigitalMap.identity(d)
    v = homotopic(f, f)
    assert v.is_yes and v.witness.length == 0


def test_interval_identity_homotopic_to_constant():
    im = interval(4)
    v = homotopic(DigitalMap.identity(im), constant_map(im, (0,), im))
    assert v.is_yes
    assert verify_homotopy(v.witness, DigitalMap.identity(im),
                           constant_map(im, (0,), im))
    # minimality: no longer than the explicit clamp deformation
    assert v.witness.length <= 4


def test_diamond_identity_not_homotopic_to_constant(d):
    v = homotopic(DigitalMap.identity(d), constant_map(d, (1, 0), d))
    assert v.is_no
    assert v.bounds_used["visited"] == 1


def test_homotopic_signature_mismatch(d):
    with pytest.raises(SignatureMismatch):
        homotopic(DigitalMap.identity(d), DigitalMap.identity(interval(1)))


def test_homotopic_symmetric_outcomes(d):
    im = interval(2)
    fixtures = [
        (DigitalMap.identity(im), constant_map(im, (2,), im)),
        (constant_map(d, (1, 0), d), constant_map(d, (-1, 0), d)),
        (DigitalMap.identity(d), constant_map(d, (0, 1), d)),
    ]
    for f, g in fixtures:
        assert homotopic(f, g).outcome == homotopic(g, f).outcome


def test_homotopic_unknown_on_truncation():
    im = interval(3)
    f = DigitalMap.identity(im)
    g = constant_map(im, (0,), im)
    v = homotopic(f, g, max_steps=1)
    assert v.is_unknown
    assert v.bounds_used["truncated_by"] == "max_steps"


def test_concat_and_prolong():
    h = interval_clamp_contraction(2)
    const = Homotopy.constant(h.end, 2)
    joined = concat(h, const)
    assert joined.length == 4
    assert joined.start == h.start and joined.end == h.end
    assert prolong(h, h.length) == h
    assert prolong(h, 5).length == 5
    im = interval(2)
    assert verify_homotopy(prolong(h, 5), DigitalMap.identity(im),
                           constant_map(im, (0,), im))


def test_concat_junction_mismatch():
    h = interval_clamp_contraction(2)
    with pytest.raises(PreconditionError):
        concat(h, reverse(prolong(h, 3)))


def test_homotopy_is_equivalence_relation():
    im = interval(2)
    f = DigitalMap.identity(im)
    g = constant_map(im, (0,), im)
    k = constant_map(im, (2,), im)
    # reflexive, symmetric, transitive via concatenation
    assert homotopic(f, f).is_yes
    hfg = homotopic(f, g).witness
    hgf = reverse(hfg)
    assert verify_homotopy(hgf, g, f)
    hgk = homotopic(g, k).witness
    joined = concat(hfg, hgk)
    assert verify_homotopy(joined, f, k)


def test_left_right_interconversion_preserves_stage_count():
    im = interval(3)
    h = interval_clamp_contraction(3)
    big = h.as_product_map()
    assert big.is_continuous()
    back = Homotopy.from_product_map(big, im, h.length)
    assert back == h


def test_contractible_fixtures(d):
    assert is_contractible(interval(5)).is_yes
    assert is_contractible(d).is_no
    assert is_contractible(point_image((0,))).is_yes
    assert is_contractible(product(interval(2), interval(1))).is_yes


def test_contractibility_witness_revalidates():
    im = product(interval(1), interval(1))
    v = is_contractible(im)
    w = v.witness
    assert verify_homotopy(w["homotopy"], DigitalMap.identity(im),
                           constant_map(im, w["point"], im))


def test_subdivision_contractible_for_contractible_images():
    v = is_subdivision_contractible(interval(2), 2)
    assert v.is_yes and v.witness["k"] == 2


def test_subdivision_contractible_point():
    assert is_subdivision_contractible(point_image((0,)), 2).is_yes


def test_subdivision_contractible_diamond_unknown_from_search(d):
    v = is_subdivision_contractible(d, 2, max_nodes=3000)
    assert v.is_unknown


def test_diamond_component_has_no_constant(d):
    from digitop.homotopy import reach_any_constant
    v = reach_any_constant(DigitalMap.identity(d))
    assert v.is_no


def test_homotopy_equivalent_isomorphic(d):
    shifted = DigitalImage(2, [(p[0] + 3, p[1]) for p in d.points])
    assert homotopy_equivalent(d, shifted).is_yes


def test_homotopy_equivalent_point_and_interval():
    v = homotopy_equivalent(point_image((0,)), interval(3))
    assert v.is_yes
    w = v.witness
    assert verify_homotopy(
        w["on_y"],
        __import__("digitop.maps", fromlist=["compose"]).compose(
            w["forward"], w["backward"]),
        DigitalMap.identity(interval(3)))


def test_homotopy_equivalent_component_count_obstruction():
    two = DigitalImage(1, [(0,), (5,)])
    assert homotopy_equivalent(two, interval(1)).is_no


def test_diamond_vs_bigger_circle_not_shown_equivalent(d, c8):
    v = homotopy_equivalent(d, c8, cap_maps=200, max_nodes=4000)
    assert v.outcome in ("no", "unknown")


def test_ev0_witness_small_exhaustive():
    w, stats = ev0_homotopy_equivalence_witness(interval(1), 2)
    assert stats["exhaustive"]
    assert w.section((0,)).value_points() == ((0,), (0,), (0,))


def test_ev0_witness_diamond_sampled(d):
    w, stats = ev0_homotopy_equivalence_witness(d, 3, sample_pairs=60)
    assert stats["pairs_checked"] >= 60 or stats["exhaustive"]


def test_ev0_witness_point():
    w, stats = ev0_homotopy_equivalence_witness(point_image((0,)), 1)
    assert stats["exhaustive"]
