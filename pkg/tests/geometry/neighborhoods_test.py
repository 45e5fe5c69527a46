import pytest

from gatebound.codes import LatticeGeometry, Region, build_bacon_shor, build_toric, toric_edge
from gatebound.geometry import ball, neighborhood


def test_radius_zero_is_the_region_itself():
    code = build_toric(4)
    region = Region([0, 5, 17], code.n)
    assert neighborhood(code.require_geometry(), region, 0) == region


def test_radius_zero_leaves_out_the_qubit_sharing_the_site():
    code = build_toric(4)
    edge = toric_edge(4, 1, 2, False)
    partner = toric_edge(4, 1, 2, True)
    assert partner not in neighborhood(code.require_geometry(), [edge], 0)
    assert partner in neighborhood(code.require_geometry(), [edge], 1)


def test_single_site_on_a_torus():
    geometry = LatticeGeometry.hypercubic(2, 5)
    grown = neighborhood(geometry, [0], 1)
    expected = {r % 5 * 5 + c % 5 for r in (-1, 0, 1) for c in (-1, 0, 1)}
    assert grown.qubits == frozenset(expected)


def test_toric_sites_hold_two_qubits():
    code = build_toric(5)
    grown = neighborhood(code.require_geometry(), [toric_edge(5, 2, 2, False)], 1)
    assert len(grown) == 18
    assert toric_edge(5, 1, 1, True) in grown
    assert toric_edge(5, 0, 0, True) not in grown


def test_open_boundaries_do_not_wrap():
    code = build_bacon_shor(3)
    assert neighborhood(code.require_geometry(), [0], 1).qubits == frozenset([0, 1, 3, 4])


def test_everything_stays_everything():
    code = build_toric(3)
    assert neighborhood(code.require_geometry(), Region.everything(code.n), 2) == Region.everything(code.n)


def test_large_radius_covers_the_lattice():
    geometry = LatticeGeometry.hypercubic(2, 4)
    assert len(neighborhood(geometry, [5], 7)) == 16


def test_ball_around_a_point():
    geometry = LatticeGeometry.hypercubic(1, 10)
    assert ball(geometry, (0,), 2).qubits == frozenset([8, 9, 0, 1, 2])


def test_negative_radius():
    with pytest.raises(ValueError):
        neighborhood(LatticeGeometry.hypercubic(1, 4), [0], -1)
