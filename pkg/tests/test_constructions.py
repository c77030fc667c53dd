import random

import pytest

from helpers import P1P1_Z3, P1P1_Z3_RES, P1P1_Z2_RES, F2_Z3, XHAT, random_complete_fan
from torstab.constructions import (
    QuotientSpec,
    StandardFanSpec,
    cyclic_quotient,
    hirzebruch,
    hj_resolve,
    hj_string,
    p1xp1,
    parse_construct_spec,
    projective_plane,
    quotient_fan,
    standard_fan,
    xhat2,
)
from torstab.errors import BadParameter
from torstab.fan import blow_down, contractible_rays, validate_surface_fan
from torstab.lattice import det2


def test_standard_fans():
    assert set(hirzebruch(2).rays) == {(1, 0), (0, 1), (0, -1), (-1, -2)}
    assert set(standard_fan(StandardFanSpec("p1xp1")).rays) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    p2 = projective_plane()
    assert p2.smooth and p2.complete and len(p2) == 3
    with pytest.raises(BadParameter):
        StandardFanSpec("hirzebruch", -1)


def test_quotients():
    assert set(quotient_fan(QuotientSpec("p1xp1", 3)).rays) == set(P1P1_Z3)
    assert set(quotient_fan(QuotientSpec("hirzebruch", 3, 2)).rays) == set(F2_Z3)
    # the generic invariant basis at q = 2; its resolution is the blown-up P1 x P1 up to a shear
    generic = cyclic_quotient(p1xp1(), [(-1, 1), (-2, 0)])
    assert set(generic.rays) == {(1, 0), (1, 2), (-1, 0), (-1, -2)}
    shear = [[1, 0], [-1, 1]]
    assert set(hj_resolve(generic).transform(shear).rays) == set(P1P1_Z2_RES)


def test_resolutions_match_known_fans():
    assert set(hj_resolve(quotient_fan(QuotientSpec("p1xp1", 3))).rays) == set(P1P1_Z3_RES)
    assert set(hj_resolve(quotient_fan(QuotientSpec("p1xp1", 2))).rays) == set(P1P1_Z2_RES)
    assert set(hj_resolve(quotient_fan(QuotientSpec("hirzebruch", 3, 2))).rays) == set(XHAT)


def test_hj_string_continued_fraction():
    assert hj_string((1, 0), (1, 3)) == [(1, 1), (1, 2)]
    assert hj_string((1, 0), (2, 5))  # nonempty
    u, v = (1, 0), (2, 5)
    chain = [u] + hj_string(u, v) + [v]
    assert all(det2(a, b) == 1 for a, b in zip(chain, chain[1:]))


def _is_minimal(original, resolved):
    """No inserted ray is a (-1)-curve: a ray a + b with neighbours a, b."""
    added = set(resolved.rays) - set(original.rays)
    return not any(resolved[i] in added for i in contractible_rays(resolved))


def test_hj_resolve_idempotent_and_minimal():
    rng = random.Random(11)
    n = 0
    while n < 50:
        fan = random_complete_fan(rng)
        if fan.smooth:
            continue
        n += 1
        res = hj_resolve(fan)
        assert res.smooth and res.complete
        assert set(fan.rays) <= set(res.rays)
        assert hj_resolve(res) == res
        assert _is_minimal(fan, res)


def test_blow_down_consistency():
    """The resolutions of P1 x P1 / Z_3 and / Z_2 contract to P1 x P1 through (-1)-curves that
    are not rays of P1 x P1."""
    base = set(p1xp1().rays)
    for rays, steps in ((P1P1_Z3_RES, 6), (P1P1_Z2_RES, 4)):
        fan = validate_surface_fan(rays)
        for _ in range(steps):
            fan = blow_down(fan, [i for i in contractible_rays(fan) if fan[i] not in base][0])
        assert len(fan) == 4 and fan.smooth
        assert set(fan.rays) == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_xhat2():
    fan = xhat2(2, 3)
    assert len(fan) == 12 and fan.smooth and fan.complete
    assert set(fan.rays) == set(XHAT) | {(1, 1), (-1, 1)}


@pytest.mark.parametrize(
    "text, n",
    [("p2", 3), ("p1xp1", 4), ("hirzebruch:3", 4), ("quotient-p1p1:3", 4), ("quotient-fa:2,3", 4), ("xhat2", 12)],
)
def test_parse_construct_spec(text, n):
    assert len(parse_construct_spec(text)) == n


@pytest.mark.parametrize("text", ["p3", "hirzebruch", "hirzebruch:x", "quotient-p1p1:1", "quotient-fa:0,3"])
def test_parse_construct_spec_errors(text):
    with pytest.raises(BadParameter):
        parse_construct_spec(text)
