import itertools
import random

import pytest

from helpers import P1P1_Z3_RES, P1P1_Z2_RES, XHAT, XHAT_WEIGHTS, random_blowup_fan
from torstab.automorphisms import root_system
from torstab.constructions import hirzebruch, p1xp1, projective_plane
from torstab.deformations import (
    WeightSystem,
    certifying_rays_general,
    def_weights_surface,
    euler_check,
    gamma_graph,
    h1_total,
    is_def_weight_general,
    omega_set,
    weight_label,
)
from torstab.errors import BadNormalization, NotSmooth
from torstab.fan import validate_surface_fan


@pytest.mark.parametrize("R, label", [((1, 0), "e1*"), ((-1, 0), "-e1*"), ((2, -1), "2e1*-e2*"), ((0, 0), "0"), ((-3, 1), "-3e1*+e2*")])
def test_weight_label(R, label):
    assert weight_label(R) == label


def test_gamma_graph_examples():
    g = gamma_graph(projective_plane(), (1, 0), (1, 0))
    assert g.vertices == () and g.components == 0
    p1p1_z2_res = validate_surface_fan(P1P1_Z2_RES)
    g = gamma_graph(p1p1_z2_res, (-1, 0), (-1, 0))
    assert set(g.vertices) == {(-1, 1), (-1, -1)} and g.edges == () and g.components == 2
    g = gamma_graph(p1xp1(), (1, 0), (1, 1))
    assert g.vertices == ((0, 1),) and g.components == 1
    with pytest.raises(BadNormalization):
        gamma_graph(p1xp1(), (1, 0), (2, 0))


def test_omega_set_examples():
    assert omega_set(projective_plane(), (1, 0)) == []
    # every ray pairing to 1 with -e1* sees the other two, so all three qualify;
    # only -e1 has a disconnected graph
    p1p1_z2_res = validate_surface_fan(P1P1_Z2_RES)
    assert set(omega_set(p1p1_z2_res, (-1, 0))) == {(-1, 1), (-1, 0), (-1, -1)}
    assert [rho for rho in omega_set(p1p1_z2_res, (-1, 0)) if gamma_graph(p1p1_z2_res, rho, (-1, 0)).components >= 2] == [(-1, 0)]
    assert omega_set(validate_surface_fan(P1P1_Z2_RES), (0, 0)) == []


def test_rigid_surfaces_have_no_weights():
    box = [R for R in itertools.product(range(-4, 5), repeat=2)]
    for fan in (p1xp1(), projective_plane()):
        assert not any(is_def_weight_general(fan, R) for R in box)
        assert len(def_weights_surface(fan)) == 0
    assert is_def_weight_general(validate_surface_fan(P1P1_Z2_RES), (-1, 0))


@pytest.mark.parametrize("a", range(1, 8))
def test_hirzebruch_weights(a):
    ws = def_weights_surface(hirzebruch(a))
    assert set(ws.weights) == {(x, 1) for x in range(1 - a, 0)}
    assert all(d == 1 for d in ws.dims)
    assert h1_total(ws) == a - 1


def test_golden_weight_systems():
    ws = def_weights_surface(validate_surface_fan(P1P1_Z2_RES))
    assert ws.weights == ((1, 0), (-1, 0), (0, 1), (0, -1)) and ws.dims == (1, 1, 1, 1)
    assert h1_total(ws) == 4
    ws = def_weights_surface(validate_surface_fan(P1P1_Z3_RES)).as_dict()
    assert ws == {(1, 0): 2, (-1, 0): 2, (2, -1): 1, (-2, 1): 1, (1, -1): 1, (-1, 1): 1}
    assert set(def_weights_surface(validate_surface_fan(XHAT)).weights) == XHAT_WEIGHTS


def test_surface_rule_agrees_with_graph_criterion():
    """Weights and dims from the segment rule equal those from the general
    graph criterion over a box that contains every weight."""
    rng = random.Random(5)
    for _ in range(25):
        fan = random_blowup_fan(rng, max_blowups=5)
        ws = def_weights_surface(fan).as_dict()
        bound = max([3] + [max(abs(c) for c in R) + 1 for R in ws])
        general = {}
        for R in itertools.product(range(-bound, bound + 1), repeat=2):
            n = len(certifying_rays_general(fan, R))
            if n:
                general[R] = n
        assert general == ws


def test_euler_identity_examples():
    assert euler_check(validate_surface_fan(P1P1_Z2_RES)).ok
    assert euler_check(validate_surface_fan(P1P1_Z2_RES)).expected == 4
    assert euler_check(projective_plane()).expected == 0
    for a in range(1, 6):
        ec = euler_check(hirzebruch(a))
        assert ec.ok and ec.expected == a - 1


def test_euler_identity_random():
    rng = random.Random(9)
    for _ in range(60):
        fan = random_blowup_fan(rng)
        ec = euler_check(fan, def_weights_surface(fan), root_system(fan))
        assert ec.ok, fan.rays


def test_singular_fan_rejected():
    with pytest.raises(NotSmooth):
        def_weights_surface(validate_surface_fan([(1, 0), (1, 3), (-1, 0), (-1, -3)]))


def test_weight_system_from_mapping_orders_opposites_together():
    ws = WeightSystem.from_mapping({(0, -1): 1, (1, 0): 1, (0, 1): 1, (-1, 0): 1})
    assert ws.weights == ((1, 0), (-1, 0), (0, 1), (0, -1))
