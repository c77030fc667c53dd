"""Fans: complete surface fans as a cyclic ray list, and a general container.

A complete 2-dimensional fan is determined by its rays; the cones are the
consecutive pairs.  :class:`Fan2D` stores the rays counterclockwise starting
from the smallest polar angle in ``[0, 2pi)``, so two fans with the same
ray set compare equal.  Angles are compared exactly (half-plane, then sign
of the cross product).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from itertools import combinations
from pathlib import Path
from typing import Any, Sequence, Union

from torstab.errors import (
    NotComplete,
    NotSmooth,
    ParallelRays,
    RankMismatch,
    SingularCone,
    ToricError,
    TooFewRays,
)
from torstab.lattice import Vector, add, change_of_basis, det2, primitive, vec


def _half(v: Sequence[int]) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(u: Sequence[int], v: Sequence[int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    d = det2(u, v)
    return -1 if d > 0 else (1 if d < 0 else 0)


def sort_by_angle(rays: Sequence[Sequence[int]]) -> list[Vector]:
    return sorted((vec(r) for r in rays), key=cmp_to_key(_angle_cmp))


@dataclass(frozen=True)
class Fan2D:
    """Complete fan in ``Z^2`` given by its cyclically ordered rays.

    Build one with :func:`validate_surface_fan`; the constructor trusts its
    input.
    """

    rays: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.rays)

    def __getitem__(self, i: int) -> Vector:
        return self.rays[i % len(self.rays)]

    def cone(self, i: int) -> tuple[Vector, Vector]:
        """Generators of the ``i``-th maximal cone, ``(rho_i, rho_{i+1})``."""
        return self[i], self[i + 1]

    @cached_property
    def determinants(self) -> tuple[int, ...]:
        return tuple(det2(self[i], self[i + 1]) for i in range(len(self)))

    @property
    def complete(self) -> bool:
        return all(d > 0 for d in self.determinants)

    @property
    def singular_cones(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.determinants) if d != 1)

    @property
    def smooth(self) -> bool:
        return not self.singular_cones

    def index(self, ray: Sequence[int]) -> int:
        return self.rays.index(vec(ray))

    def neighbors(self, i: Union[int, Sequence[int]]) -> tuple[Vector, Vector]:
        return neighbors(self, i)

    def require_smooth(self) -> None:
        if not self.complete:
            raise NotComplete("fan is not complete")
        if not self.smooth:
            raise NotSmooth(f"fan has singular cones {list(self.singular_cones)}")

    def transform(self, M: Sequence[Sequence[int]]) -> "Fan2D":
        return validate_surface_fan([change_of_basis(M, r) for r in self.rays])

    def to_general(self) -> "GeneralFan":
        l = len(self)
        return GeneralFan(2, self.rays, tuple((i, (i + 1) % l) for i in range(l)))

    def to_json(self) -> dict[str, Any]:
        l = len(self)
        return {
            "rank": 2,
            "rays": [list(r) for r in self.rays],
            "cones": [[i, (i + 1) % l] for i in range(l)],
        }


def validate_surface_fan(raw_rays: Sequence[Sequence[int]]) -> Fan2D:
    """Primitivize, deduplicate and sort ``raw_rays`` into a complete fan.

    Identical inputs are merged silently.  Two different inputs on the same
    ray (``(1, 0)`` and ``(2, 0)``) raise :class:`ParallelRays`.
    """
    seen: dict[Vector, Vector] = {}
    for r in raw_rays:
        r = vec(r)
        if len(r) != 2:
            raise RankMismatch(f"surface fan ray {r} is not of rank 2")
        p = primitive(r)
        if p in seen and seen[p] != r:
            raise ParallelRays(f"rays {seen[p]} and {r} are positively parallel")
        seen.setdefault(p, r)
    rays = sort_by_angle(seen)
    if len(rays) < 3:
        raise TooFewRays(f"a complete surface fan needs at least 3 rays, got {len(rays)}")
    fan = Fan2D(tuple(rays))
    if not fan.complete:
        raise NotComplete(f"rays {rays} do not positively span the plane")
    return fan


def neighbors(fan: Fan2D, i: Union[int, Sequence[int]]) -> tuple[Vector, Vector]:
    """Cyclic predecessor and successor of the ray at index ``i`` (or of the
    ray ``i`` itself)."""
    if not isinstance(i, int):
        i = fan.index(i)
    return fan[i - 1], fan[i + 1]


def blow_up(fan: Fan2D, i: int) -> Fan2D:
    """Equivariant blow-up of the fixed point of cone ``i``: insert
    ``rho_i + rho_{i+1}``."""
    if not fan.complete:
        raise NotComplete("blow-up needs a complete fan")
    if fan.determinants[i % len(fan)] != 1:
        raise SingularCone(f"cone {i} is not smooth")
    u, v = fan.cone(i)
    out = validate_surface_fan(fan.rays + (add(u, v),))
    return out


def contractible_rays(fan: Fan2D) -> list[int]:
    """Indices of rays equal to the sum of their neighbours (the (-1)-curves
    coming from a blow-up)."""
    return [i for i in range(len(fan)) if add(fan[i - 1], fan[i + 1]) == fan[i]]


def blow_down(fan: Fan2D, i: int) -> Fan2D:
    if i not in contractible_rays(fan):
        raise ToricError(f"ray {fan[i]} is not the sum of its neighbours")
    return validate_surface_fan(fan.rays[:i] + fan.rays[i + 1:])


# -- general fans ----------------------------------------------------------


def _matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c] != 0:
                f = A[i][c] / A[rank][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class GeneralFan:
    """Rays plus maximal cones given as index sets.  No completeness or
    smoothness checks beyond simpliciality."""

    rank: int
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]
    simplicial: bool = True
    _cone_sets: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rays = tuple(vec(r) for r in self.rays)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", tuple(tuple(sorted(c)) for c in self.max_cones))
        for r in rays:
            if len(r) != self.rank:
                raise RankMismatch(f"ray {r} does not have rank {self.rank}")
            if primitive(r) != r:
                raise ToricError(f"ray {r} is not primitive")
        used = {i for c in self.max_cones for i in c}
        if used != set(range(len(rays))):
            raise ToricError("every ray must lie in some cone and cone indices must be valid")
        if self.simplicial:
            for c in self.max_cones:
                if _matrix_rank([rays[i] for i in c]) != len(c):
                    raise ToricError(f"cone {c} is not simplicial")
        object.__setattr__(self, "_cone_sets", frozenset(frozenset(c) for c in self.max_cones))

    def spans_cone(self, indices: Sequence[int]) -> bool:
        """Whether the given rays generate a cone of the fan (i.e. are a
        face of some maximal cone)."""
        s = set(indices)
        return any(s <= c for c in self._cone_sets)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(len(self.rays)), 2) if self.spans_cone((i, j))]


# -- file format -----------------------------------------------------------


def fan_from_json(doc: dict[str, Any]) -> Union[Fan2D, GeneralFan]:
    """Parse ``{"rank": n, "rays": [...], "cones": [...]?}``."""
    try:
        rank = int(doc["rank"])
        rays = [vec(r) for r in doc["rays"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ToricError(f"malformed fan document: {e}") from e
    cones = doc.get("cones")
    if rank == 2:
        fan = validate_surface_fan(rays)
        if cones is not None:
            given = {frozenset(rays[i] for i in c) for c in cones}
            derived = {frozenset(fan.cone(i)) for i in range(len(fan))}
            if given != derived:
                raise ToricError("declared cones do not match the cyclic adjacency of the rays")
        return fan
    if cones is None:
        raise ToricError("fans of rank other than 2 must list their cones")
    return GeneralFan(rank, tuple(rays), tuple(tuple(c) for c in cones))


def fan_to_json(fan: Union[Fan2D, GeneralFan]) -> dict[str, Any]:
    if isinstance(fan, Fan2D):
        return fan.to_json()
    return {"rank": fan.rank, "rays": [list(r) for r in fan.rays], "cones": [list(c) for c in fan.max_cones]}


def load_fan(path: Union[str, Path]) -> Union[Fan2D, GeneralFan]:
    with open(path, encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise ToricError(f"{path}: not valid JSON ({e})") from e
    if not isinstance(doc, dict):
        raise ToricError(f"{path}: fan document must be a JSON object")
    return fan_from_json(doc)


def dumps_fan(fan: Union[Fan2D, GeneralFan]) -> str:
    return json.dumps(fan_to_json(fan), separators=(", ", ": ")) + "\n"
