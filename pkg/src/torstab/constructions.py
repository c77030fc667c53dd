"""Standard toric surfaces, cyclic quotients and their minimal resolutions.

Quotients.  ``Z_p`` acts on the torus coordinates ``(Z, Y) = (chi^{e1*},
chi^{e2*})`` by ``(xi Z, xi Y)``.  The invariant characters form the
sublattice ``{m : m_1 + m_2 = 0 mod p}`` of index ``p``; the quotient fan
has the same rays, read in the dual of that sublattice.  Concretely, if
``m, m'`` is a basis of the invariant characters, a ray ``v`` becomes the
primitive vector on ``(<m, v>, <m', v>)``.  The bases used are

* ``P^1 x P^1 / Z_q``: ``m = Y Z^{-1}``, ``m' = Z^{-q}``, which puts the
  rays at ``e1, e1 + q e2, -e1, -e1 - q e2``.  For ``q = 2`` the basis
  ``m = ZY``, ``m' = ZY^{-1}`` is used instead; it gives the rays
  ``+-e1 +- e2``, whose resolution is the blow-up of ``P^1 x P^1`` at its
  four fixed points written in the lattice of ``P^1 x P^1``;
* ``F_a / Z_p``: ``m = Z^p``, ``m' = Z^{-1} Y``, which for ``F_2 / Z_3``
  gives ``e2, 3e1 - e2, -e2, -3e1 - e2``.

Resolutions.  Each singular cone ``(u, v)`` with ``det(u, v) = d > 1`` is
subdivided greedily: the next ray ``w`` is the lattice point with
``det(u, w) = 1`` inside the cone that minimises ``det(w, v)``; repeat on
``(w, v)``.  These are the boundary lattice points of the convex hull of
the cone's nonzero lattice points, i.e. the Hirzebruch-Jung string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from torstab.errors import BadParameter
from torstab.fan import Fan2D, blow_up, validate_surface_fan
from torstab.lattice import Vector, bezout, add, det2, pairing, primitive


@dataclass(frozen=True)
class StandardFanSpec:
    kind: str  # "p2" | "p1xp1" | "hirzebruch"
    a: int = 0

    def __post_init__(self):
        if self.kind not in ("p2", "p1xp1", "hirzebruch"):
            raise BadParameter(f"unknown surface {self.kind!r}")
        if self.kind == "hirzebruch" and self.a < 0:
            raise BadParameter("Hirzebruch surfaces need a >= 0")


@dataclass(frozen=True)
class QuotientSpec:
    kind: str  # "p1xp1" | "hirzebruch"
    p: int
    a: int = 0

    def __post_init__(self):
        if self.kind not in ("p1xp1", "hirzebruch"):
            raise BadParameter(f"unknown quotient {self.kind!r}")
        if self.p < 2:
            raise BadParameter("the cyclic group order must be at least 2")
        if self.kind == "hirzebruch" and self.a < 1:
            raise BadParameter("F_a quotients need a >= 1")


def projective_plane() -> Fan2D:
    return validate_surface_fan([(1, 0), (0, 1), (-1, -1)])


def p1xp1() -> Fan2D:
    return validate_surface_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])


def hirzebruch(a: int) -> Fan2D:
    """``F_a`` with rays ``e1, e2, -e2, -e1 - a e2``."""
    if a < 0:
        raise BadParameter("Hirzebruch surfaces need a >= 0")
    return validate_surface_fan([(1, 0), (0, 1), (0, -1), (-1, -a)])


def standard_fan(spec: StandardFanSpec) -> Fan2D:
    if spec.kind == "p2":
        return projective_plane()
    if spec.kind == "p1xp1":
        return p1xp1()
    return hirzebruch(spec.a)


def cyclic_quotient(fan: Fan2D, character_basis: Sequence[Sequence[int]]) -> Fan2D:
    """Re-read ``fan`` in the lattice dual to the given character basis."""
    m1, m2 = character_basis
    return validate_surface_fan([primitive((pairing(m1, v), pairing(m2, v))) for v in fan.rays])


def quotient_fan(spec: QuotientSpec) -> Fan2D:
    p = spec.p
    if spec.kind == "p1xp1":
        if p == 2:
            return cyclic_quotient(p1xp1(), [(1, 1), (1, -1)])
        return cyclic_quotient(p1xp1(), [(-1, 1), (-p, 0)])
    return cyclic_quotient(hirzebruch(spec.a), [(p, 0), (-1, 1)])


def hj_string(u: Sequence[int], v: Sequence[int]) -> list[Vector]:
    """Rays strictly inside the cone ``(u, v)`` (counterclockwise) that the
    minimal resolution inserts, in order from ``u`` to ``v``."""
    out: list[Vector] = []
    u = tuple(u)
    d = det2(u, v)
    while d > 1:
        x, y = bezout(u[0], u[1])
        w0 = (-y, x)  # det(u, w0) = 1
        c = det2(w0, v)
        # det(w0 + t u, v) = c + t d; take the representative in [1, d - 1]
        t = (1 - c) // d + (1 if (1 - c) % d else 0)
        w = (w0[0] + t * u[0], w0[1] + t * u[1])
        assert det2(u, w) == 1 and 0 < det2(w, v) < d
        out.append(w)
        u, d = w, det2(w, v)
    return out


def hj_resolve(fan: Fan2D) -> Fan2D:
    """Minimal resolution of a complete surface fan."""
    new = []
    for i in fan.singular_cones:
        new.extend(hj_string(*fan.cone(i)))
    if not new:
        return fan
    out = validate_surface_fan(fan.rays + tuple(new))
    assert out.smooth
    return out


def blow_up_at(fan: Fan2D, target: Sequence[int]) -> Fan2D:
    """Blow up the cone whose two generators sum to ``target``."""
    target = tuple(target)
    for i in range(len(fan)):
        if add(*fan.cone(i)) == target:
            return blow_up(fan, i)
    raise BadParameter(f"no cone of the fan has generators summing to {target}")


def xhat(a: int = 2, p: int = 3) -> Fan2D:
    return hj_resolve(quotient_fan(QuotientSpec("hirzebruch", p, a)))


def xhat2(a: int = 2, p: int = 3) -> Fan2D:
    """Resolution of ``F_a / Z_p`` blown up further at ``e1 + e2`` and
    ``-e1 + e2``."""
    fan = xhat(a, p)
    for target in ((1, 1), (-1, 1)):
        fan = blow_up_at(fan, target)
    return fan


def parse_construct_spec(text: str) -> Fan2D:
    """``p2 | p1xp1 | hirzebruch:a | quotient-p1p1:q | quotient-fa:a,p | xhat2``."""
    name, _, arg = text.strip().partition(":")
    try:
        nums = [int(x) for x in arg.split(",")] if arg else []
    except ValueError as e:
        raise BadParameter(f"bad parameters in {text!r}") from e
    if name == "p2" and not nums:
        return standard_fan(StandardFanSpec("p2"))
    if name == "p1xp1" and not nums:
        return standard_fan(StandardFanSpec("p1xp1"))
    if name == "hirzebruch" and len(nums) == 1:
        return standard_fan(StandardFanSpec("hirzebruch", nums[0]))
    if name == "quotient-p1p1" and len(nums) == 1:
        return quotient_fan(QuotientSpec("p1xp1", nums[0]))
    if name == "quotient-fa" and len(nums) == 2:
        return quotient_fan(QuotientSpec("hirzebruch", nums[1], nums[0]))
    if name == "xhat2" and len(nums) in (0, 2):
        return xhat2(*nums)
    raise BadParameter(f"unrecognised construction {text!r}")
