"""Torus weights on H^1(X, Theta_X) for a smooth complete toric variety.

For a general fan the only available test is the graph criterion: ``R`` is
a deformation weight when, for some ray ``rho`` with ``<rho, R> = -1``, the
rays pairing negatively with ``R`` (other than ``rho``) split into at least
two groups that no cone of the fan connects.  :func:`gamma_graph` builds
that graph in the normalisation ``<rho, R> = 1``, so the membership test
looks at ``gamma_graph(fan, rho, -R)``.

For surfaces the criterion reduces to "some ray has ``<rho_i, R> = -1`` and
both of its neighbours pair strictly negatively", and every solution lies
on a bounded segment of the line ``<rho_i, R> = -1``, which
:func:`def_weights_surface` enumerates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import networkx as nx

from torstab.errors import BadNormalization
from torstab.fan import Fan2D, GeneralFan
from torstab.lattice import Vector, dual_segment, neg, pairing, vec

AnyFan = Union[Fan2D, GeneralFan]


def _general(fan: AnyFan) -> GeneralFan:
    return fan.to_general() if isinstance(fan, Fan2D) else fan


def weight_label(R: Sequence[int]) -> str:
    """``(2, -1)`` -> ``"2e1*-e2*"``."""
    out = ""
    for k, c in enumerate(R, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if out else "")
        out += f"{sign}{mag}e{k}*"
    return out or "0"


def weight_sort_key(R: Sequence[int]):
    """Canonical order: opposite weights adjacent, ``R`` before ``-R`` when
    ``R``'s first nonzero coordinate is positive; pairs in decreasing
    lexicographic order of that representative."""
    first = next((c for c in R if c), 0)
    rep = tuple(R) if first >= 0 else neg(R)
    return tuple(-c for c in rep), 0 if first >= 0 else 1


@dataclass(frozen=True)
class GammaGraph:
    base_ray: Vector
    weight: Vector
    vertices: tuple[Vector, ...]
    edges: tuple[tuple[Vector, Vector], ...]
    components: int


def gamma_graph(fan: AnyFan, rho: Sequence[int], R: Sequence[int]) -> GammaGraph:
    """Graph on the rays ``tau != rho`` with ``<tau, R> > 0``; two vertices
    are joined when they span a cone of the fan.  Requires ``<R, rho> = 1``."""
    rho, R = vec(rho), vec(R)
    if pairing(R, rho) != 1:
        raise BadNormalization(f"<{R}, {rho}> = {pairing(R, rho)}, expected 1")
    gf = _general(fan)
    idx = [i for i, tau in enumerate(gf.rays) if tau != rho and pairing(R, tau) > 0]
    g = nx.Graph()
    g.add_nodes_from(idx)
    g.add_edges_from((i, j) for i, j in gf.edges() if i in g and j in g)
    return GammaGraph(
        base_ray=rho,
        weight=R,
        vertices=tuple(gf.rays[i] for i in idx),
        edges=tuple((gf.rays[i], gf.rays[j]) for i, j in sorted(g.edges())),
        components=nx.number_connected_components(g),
    )


def omega_set(fan: AnyFan, R: Sequence[int]) -> list[Vector]:
    """Rays ``rho`` with ``<rho, R> = 1`` whose graph has a vertex."""
    R = vec(R)
    return [
        rho for rho in _general(fan).rays
        if pairing(R, rho) == 1 and gamma_graph(fan, rho, R).vertices
    ]


def certifying_rays_general(fan: AnyFan, R: Sequence[int]) -> list[Vector]:
    R = vec(R)
    return [
        rho for rho in _general(fan).rays
        if pairing(R, rho) == -1 and gamma_graph(fan, rho, neg(R)).components >= 2
    ]


def is_def_weight_general(fan: AnyFan, R: Sequence[int]) -> bool:
    """Graph-criterion membership of ``R`` in the deformation weight set."""
    return bool(certifying_rays_general(fan, R))


# -- surfaces --------------------------------------------------------------


@dataclass(frozen=True)
class WeightSystem:
    """Distinct weights with the dimension of each weight space."""

    weights: tuple[Vector, ...]
    dims: tuple[int, ...]
    fan_rays: Optional[int] = None

    def __post_init__(self):
        assert len(self.weights) == len(self.dims)
        assert len(set(self.weights)) == len(self.weights), "weights must be distinct"
        assert all(d >= 1 for d in self.dims)

    def __len__(self) -> int:
        return len(self.weights)

    def as_dict(self) -> dict[Vector, int]:
        return dict(zip(self.weights, self.dims))

    def labels(self) -> list[str]:
        return [weight_label(R) for R in self.weights]

    @classmethod
    def from_mapping(cls, dims: dict, fan_rays: Optional[int] = None) -> "WeightSystem":
        ws = sorted(dims, key=weight_sort_key)
        return cls(tuple(ws), tuple(dims[R] for R in ws), fan_rays)


def segment_weights(fan: Fan2D, i: int) -> list[Vector]:
    """All ``R`` with ``<rho_i, R> = -1`` and both neighbours of ``rho_i``
    pairing to at most ``-1``."""
    # the neighbours lie strictly on either side of rho, so the segment is bounded
    return dual_segment(fan[i], -1, [(fan[i - 1], -1), (fan[i + 1], -1)])


def def_weights_surface(fan: Fan2D) -> WeightSystem:
    """Deformation weights of a smooth complete toric surface.

    The dimension of a weight space is the number of rays certifying the
    weight.  This is the graph criterion counted ray by ray: in a surface
    the vertices of each graph form one arc of the fan, and removing a ray
    with both neighbours on the arc splits it into exactly two pieces.
    """
    fan.require_smooth()
    dims: dict[Vector, int] = {}
    for i in range(len(fan)):
        for R in segment_weights(fan, i):
            dims[R] = dims.get(R, 0) + 1
    return WeightSystem.from_mapping(dims, fan_rays=len(fan))


def h1_total(ws: WeightSystem) -> int:
    return sum(ws.dims)


@dataclass(frozen=True)
class EulerCheck:
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def euler_check(fan: Fan2D, ws: Optional[WeightSystem] = None, roots=None) -> EulerCheck:
    """Compare ``h^1(Theta_X)`` with what Riemann-Roch predicts.

    For a smooth projective surface ``chi(Theta_X) = 2 K^2 - 10 chi(O_X)``.
    A smooth complete toric surface with ``l`` rays has ``chi(O_X) = 1``,
    ``c_2 = l`` and, by Noether, ``K^2 = 12 - l``; so ``chi = 14 - 2 l``.
    With ``h^2 = 0`` and ``h^0 = 2 + #roots`` (torus plus one vector field
    per Demazure root), ``h^1 = 2 + #roots + 2 l - 14``.
    """
    from torstab.automorphisms import root_system

    fan.require_smooth()
    if ws is None:
        ws = def_weights_surface(fan)
    if roots is None:
        roots = root_system(fan)
    expected = 2 + len(roots.roots) + 2 * len(fan) - 14
    return EulerCheck(expected, h1_total(ws))
