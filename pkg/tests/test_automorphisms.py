import random

import pytest

from helpers import P1P1_Z3_RES, P1P1_Z2_RES, XHAT, random_blowup_fan
from torstab.automorphisms import blup_criterion, is_reductive_part_torus, root_restriction_check, root_system
from torstab.constructions import hirzebruch, p1xp1, projective_plane
from torstab.errors import NotARefinement, TooFewBlowups
from torstab.fan import blow_up, validate_surface_fan
from torstab.lattice import pairing


def _brute_roots(fan, bound=8):
    out = set()
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            vals = [pairing((x, y), r) for r in fan.rays]
            if vals.count(1) == 1 and all(v <= 0 for v in vals if v != 1):
                out.add((x, y))
    return out


def test_root_examples():
    assert set(root_system(p1xp1()).roots) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(root_system(projective_plane()).roots) == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
    for a in range(1, 7):
        roots = set(root_system(hirzebruch(a)).roots)
        assert roots == {(1, 0), (-1, 0)} | {(k, 1) for k in range(-a, 1)}
        assert len(roots) == a + 3


def test_roots_against_brute_force():
    rng = random.Random(2)
    for _ in range(30):
        fan = random_blowup_fan(rng, max_blowups=5)
        rs = root_system(fan)
        assert rs.verify(fan)
        assert set(rs.roots) == _brute_roots(fan)


def test_torus_maximality():
    for rays in (P1P1_Z3_RES, P1P1_Z2_RES, XHAT):
        assert is_reductive_part_torus(root_system(validate_surface_fan(rays)))
    for fan in (projective_plane(), p1xp1(), hirzebruch(1), hirzebruch(3)):
        assert not is_reductive_part_torus(root_system(fan))


def test_blup_criterion():
    assert blup_criterion(0, [(1, 1), (-1, -1), (1, -1), (-1, 1)])
    assert blup_criterion(2, [(2, -1), (1, -1), (-2, -1), (-1, -1)])
    assert not blup_criterion(1, [(1, 1), (2, 1)])
    with pytest.raises(TooFewBlowups):
        blup_criterion(1, [(1, 1)])


def test_blup_criterion_is_sufficient():
    """Whenever the criterion holds, the blown-up fan has no opposite roots."""
    rng = random.Random(4)
    hits = 0
    for _ in range(80):
        a = rng.randint(0, 4)
        base = hirzebruch(a)
        fan = base
        for _ in range(rng.randint(2, 5)):
            fan = blow_up(fan, rng.randrange(len(fan)))
        new = [r for r in fan.rays if r not in set(base.rays)]
        if blup_criterion(a, new):
            hits += 1
            assert is_reductive_part_torus(root_system(fan))
    assert hits > 5


def test_root_restriction():
    assert root_restriction_check(p1xp1(), validate_surface_fan(P1P1_Z2_RES))
    f2 = hirzebruch(2)
    assert root_restriction_check(f2, blow_up(f2, 0))
    assert root_restriction_check(f2, f2)
    with pytest.raises(NotARefinement):
        root_restriction_check(validate_surface_fan(P1P1_Z2_RES), p1xp1())
    rng = random.Random(6)
    for _ in range(20):
        base = random_blowup_fan(rng, max_blowups=3)
        up = blow_up(base, rng.randrange(len(base)))
        assert root_restriction_check(base, up)
