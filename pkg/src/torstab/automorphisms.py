"""Demazure roots of a complete surface fan and the torus-maximality test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from torstab.deformations import weight_sort_key
from torstab.errors import BadParameter, NotARefinement, NotComplete, TooFewBlowups
from torstab.fan import Fan2D
from torstab.lattice import Vector, dual_segment, neg, pairing, vec


@dataclass(frozen=True)
class RootSystem:
    """Roots ``alpha`` with ``<alpha, rho> = 1`` for one ray and ``<= 0`` on
    all others; ``certificates[k]`` is that ray for ``roots[k]``."""

    roots: tuple[Vector, ...]
    certificates: tuple[Vector, ...]

    @property
    def semisimple_pairs(self) -> tuple[Vector, ...]:
        s = set(self.roots)
        return tuple(a for a in self.roots if neg(a) in s)

    def verify(self, fan: Fan2D) -> bool:
        for a, rho in zip(self.roots, self.certificates):
            if pairing(a, rho) != 1:
                return False
            if any(pairing(a, r) > 0 for r in fan.rays if r != rho):
                return False
        return True


def root_system(fan: Fan2D) -> RootSystem:
    """All Demazure roots of a complete surface fan.

    For each ray the condition ``<alpha, rho> = 1`` fixes a line; the other
    rays cut it down to a segment, which is bounded because the fan is
    complete (some ray lies strictly on each side of ``rho``).
    """
    if not fan.complete:
        raise NotComplete("root system requires a complete fan")
    found: dict[Vector, Vector] = {}
    for rho in fan.rays:
        for a in dual_segment(rho, 1, [(r, 0) for r in fan.rays if r != rho]):
            found[a] = rho
    roots = sorted(found, key=weight_sort_key)
    rs = RootSystem(tuple(roots), tuple(found[a] for a in roots))
    assert rs.verify(fan)
    return rs


def is_reductive_part_torus(rs: RootSystem) -> bool:
    """No opposite pair of roots: the reductive part of Aut^0 is the torus."""
    return not rs.semisimple_pairs


def blup_criterion(a: int, blowup_rays: Sequence[Sequence[int]]) -> bool:
    """Sufficient condition for torus-maximality of a blow-up of F_a.

    For ``a >= 1`` some new ray must have positive and some negative first
    coordinate; for ``a = 0`` two new rays must be opposite.
    """
    rays = [vec(r) for r in blowup_rays]
    if len(rays) < 2:
        raise TooFewBlowups("the criterion needs at least two blow-ups")
    if a < 0:
        raise BadParameter("a must be non-negative")
    if a >= 1:
        return any(r[0] > 0 for r in rays) and any(r[0] < 0 for r in rays)
    s = set(rays)
    return any(neg(r) in s for r in rays)


def root_restriction_check(fan: Fan2D, blown_up: Fan2D) -> bool:
    """Roots of a blow-up are the roots of the base that pair non-positively
    with every new ray."""
    old = set(fan.rays)
    if not old <= set(blown_up.rays):
        raise NotARefinement("second fan does not contain the rays of the first")
    new_rays = [r for r in blown_up.rays if r not in old]
    predicted = {a for a in root_system(fan).roots if all(pairing(a, r) <= 0 for r in new_rays)}
    return predicted == set(root_system(blown_up).roots)
