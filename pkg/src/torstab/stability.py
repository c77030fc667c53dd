"""Torus GIT on H^1(X, Theta_X): semistable and polystable supports.

A point ``x = sum x_i`` of H^1 is described up to the torus action by its
support ``I = {i : x_i != 0}``; stability only depends on ``I``.  Supports
are tuples of 0-based indices into a :class:`WeightSystem` (the CLI prints
them 1-based).

* ``I`` is *semistable* (detected by a non-constant invariant) iff some
  subfamily of its weights is balanced.
* ``I`` is *polystable* iff additionally no one-parameter subgroup ``p``
  has ``<R_i, p> >= 0`` on all of ``I`` and ``> 0`` somewhere, i.e. the
  cone spanned by the weights is a linear subspace.

Both conditions are decided by exact feasibility and every answer carries a
certificate that re-verifies with integer arithmetic alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from torstab.automorphisms import is_reductive_part_torus, root_system
from torstab.deformations import WeightSystem, def_weights_surface, weight_label
from torstab.errors import EmptyIndexSet, InvalidSplitting, TooManyWeights
from torstab.fan import Fan2D
from torstab.lattice import (
    PositiveRelation,
    SeparatingVector,
    SubspaceWitness,
    Vector,
    determinant,
    nonnegative_kernel_vector,
    pairing,
    positive_kernel_vector,
    positive_span_is_subspace,
    strictly_positive_vector,
    vec,
)

ENUMERATION_CAP = 20

SupportSet = tuple[int, ...]


def _family(ws: WeightSystem, I: Sequence[int]) -> list[Vector]:
    return [ws.weights[i] for i in I]


def _subsets(ws: WeightSystem):
    s = len(ws)
    if s > ENUMERATION_CAP:
        raise TooManyWeights(f"{s} weights exceed the enumeration cap of {ENUMERATION_CAP}")
    for k in range(1, s + 1):
        yield from combinations(range(s), k)


def _canonical(sets) -> list[SupportSet]:
    return sorted({tuple(sorted(I)) for I in sets})


def is_balanced(ws: WeightSystem, I: Sequence[int]) -> Optional[PositiveRelation]:
    if not I:
        raise EmptyIndexSet("a balanced family must be nonempty")
    return positive_kernel_vector(_family(ws, I))


def nu_sigma(ws: WeightSystem) -> list[SupportSet]:
    """Supports whose weights form a balanced family."""
    return _canonical(I for I in _subsets(ws) if is_balanced(ws, I) is not None)


def has_balanced_subfamily(ws: WeightSystem, I: Sequence[int]) -> bool:
    return bool(I) and nonnegative_kernel_vector(_family(ws, I)) is not None


def satisfies_subspace_condition(ws: WeightSystem, I: Sequence[int]) -> bool:
    return positive_span_is_subspace(_family(ws, I))[0]


def mu_sigma(ws: WeightSystem) -> list[SupportSet]:
    """Polystable supports: a balanced subfamily exists and the weights
    positively span a linear subspace."""
    return _canonical(
        I for I in _subsets(ws)
        if has_balanced_subfamily(ws, I) and satisfies_subspace_condition(ws, I)
    )


def minimal_sets(sets: Sequence[SupportSet]) -> list[SupportSet]:
    ss = [set(I) for I in sets]
    return [I for I, S in zip(sets, ss) if not any(T < S for T in ss)]


# -- strata ----------------------------------------------------------------


@dataclass(frozen=True)
class Stratum:
    """``S_I``: points whose nonzero components are exactly those in ``I``."""

    indices: SupportSet
    weights: tuple[Vector, ...]
    dims: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    @property
    def description(self) -> str:
        if not self.indices:
            return "{0}"
        spaces = " + ".join(f"H1({weight_label(R)})" for R in self.weights)
        return f"({spaces}) minus {{some component = 0}}"


def strata(ws: WeightSystem, supports: Optional[Sequence[SupportSet]] = None) -> list[Stratum]:
    """The origin followed by one stratum per polystable support."""
    if supports is None:
        supports = mu_sigma(ws) if len(ws) else []
    out = [Stratum((), (), ())]
    for I in supports:
        out.append(Stratum(tuple(I), tuple(ws.weights[i] for i in I), tuple(ws.dims[i] for i in I)))
    return out


# -- classification --------------------------------------------------------

POLYSTABLE = "Polystable"
STRICTLY_SEMISTABLE = "StrictlySemistable"
UNSTABLE = "Unstable"


@dataclass(frozen=True)
class Classification:
    kind: str
    support: SupportSet
    balanced_subfamily: Optional[SupportSet] = None
    relation: Optional[tuple[int, ...]] = None
    witness: Optional[SubspaceWitness] = None
    separating: Optional[Vector] = None
    destabilizing: Optional[Vector] = None

    def verify(self, ws: WeightSystem) -> bool:
        fam = _family(ws, self.support)
        if self.kind == UNSTABLE:
            p = self.destabilizing
            return p is not None and all(pairing(R, p) > 0 for R in fam)
        if not self.support:
            return self.kind == POLYSTABLE
        J = self.balanced_subfamily
        if not J or not set(J) <= set(self.support):
            return False
        if not PositiveRelation(self.relation).verify(_family(ws, J)):
            return False
        if self.kind == POLYSTABLE:
            return self.witness is not None and self.witness.verify(fam)
        return self.separating is not None and SeparatingVector(self.separating).verify(fam)


def classify_support(ws: WeightSystem, I: Sequence[int]) -> Classification:
    """Hilbert-Mumford classification of the support ``I``.

    Unstable supports come with ``p`` pairing strictly positively with every
    weight of ``I`` (the whole point flows to 0); strictly semistable ones
    with ``p`` that is non-negative on ``I`` and positive somewhere.
    """
    I = tuple(sorted(set(I)))
    if not I:
        return Classification(POLYSTABLE, ())
    fam = _family(ws, I)
    a = nonnegative_kernel_vector(fam)
    if a is None:
        p = strictly_positive_vector(fam)
        assert p is not None, "Gordan alternative must hold"
        out = Classification(UNSTABLE, I, destabilizing=p)
    else:
        J = tuple(i for i, c in zip(I, a) if c > 0)
        rel = positive_kernel_vector(_family(ws, J))
        assert rel is not None
        ok, cert = positive_span_is_subspace(fam)
        if ok:
            out = Classification(POLYSTABLE, I, J, rel.coefficients, witness=cert)
        else:
            out = Classification(STRICTLY_SEMISTABLE, I, J, rel.coefficients, separating=cert.p)
    assert out.verify(ws)
    return out


def one_ps_limit(ws: WeightSystem, I: Sequence[int], p: Sequence[int]) -> Optional[SupportSet]:
    """Limit of ``lambda_p(t) . x`` as ``t -> 0`` for ``x`` supported on ``I``.

    ``None`` when some component blows up, otherwise the support of the
    limit point (the components of weight zero against ``p``).
    """
    values = {i: pairing(ws.weights[i], p) for i in I}
    if any(v < 0 for v in values.values()):
        return None
    return tuple(sorted(i for i, v in values.items() if v == 0))


# -- relative stability ----------------------------------------------------


def _complete_basis(fixed: Sequence[Vector], rank: int) -> list[Vector]:
    """Vectors completing ``fixed`` to a basis of ``Z^rank``.

    Column-reduce the matrix of ``fixed`` to ``[L | 0]`` with a unimodular
    ``U``; the trailing rows of ``U^{-1}`` complete the basis provided ``L``
    is unimodular (``fixed`` spans a saturated sublattice).
    """
    from torstab.lattice import integer_inverse

    d = len(fixed)
    F = [list(f) for f in fixed]
    U = [[int(i == j) for j in range(rank)] for i in range(rank)]

    def colop(i, j, q):  # col_j -= q col_i
        for row in F:
            row[j] -= q * row[i]
        for row in U:
            row[j] -= q * row[i]

    def swap(i, j):
        for row in F:
            row[i], row[j] = row[j], row[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    for l in range(d):
        while True:
            nz = [j for j in range(l, rank) if F[l][j] != 0]
            if not nz:
                raise InvalidSplitting("fixed vectors are linearly dependent")
            j0 = min(nz, key=lambda j: abs(F[l][j]))
            if j0 != l:
                swap(l, j0)
            done = True
            for j in range(l + 1, rank):
                if F[l][j]:
                    colop(l, j, F[l][j] // F[l][l])
                    if F[l][j]:
                        done = False
            if done:
                break
        if abs(F[l][l]) != 1:
            raise InvalidSplitting("fixed vectors do not span a saturated sublattice")
    V = integer_inverse(U)
    return [tuple(V[k]) for k in range(d, rank)]


@dataclass(frozen=True)
class Splitting:
    """``N = N_f + N_a``: ``fixed`` spans ``N_f``, ``complement`` spans
    ``N_a``."""

    fixed: tuple[Vector, ...]
    complement: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        fixed = tuple(vec(f) for f in self.fixed)
        object.__setattr__(self, "fixed", fixed)
        comp = tuple(vec(c) for c in self.complement)
        object.__setattr__(self, "complement", comp)
        basis = list(fixed) + list(comp)
        n = len(basis)
        if any(len(b) != n for b in basis) or (n and abs(determinant(basis)) != 1):
            raise InvalidSplitting("fixed and complement bases do not form a basis of N")

    @classmethod
    def from_fixed(cls, fixed: Sequence[Sequence[int]], rank: int = 2) -> "Splitting":
        fixed = [vec(f) for f in fixed]
        if any(len(f) != rank for f in fixed):
            raise InvalidSplitting(f"fixed vectors must have rank {rank}")
        return cls(tuple(fixed), tuple(_complete_basis(fixed, rank)))

    @classmethod
    def parse(cls, text: str, rank: int = 2) -> "Splitting":
        """``"0,1"`` or ``"1,0;0,1"``; an empty string is the trivial subtorus."""
        text = text.strip()
        if not text:
            return cls.from_fixed([], rank)
        try:
            fixed = [[int(c) for c in part.split(",")] for part in text.split(";")]
        except ValueError as e:
            raise InvalidSplitting(f"cannot parse splitting {text!r}") from e
        return cls.from_fixed(fixed, rank)


def restricted_indices(ws: WeightSystem, split: Splitting) -> SupportSet:
    return tuple(i for i, R in enumerate(ws.weights) if all(pairing(R, f) == 0 for f in split.fixed))


def restrict_weights(ws: WeightSystem, split: Splitting) -> WeightSystem:
    """Weights vanishing on every fixed direction, dims carried over."""
    keep = restricted_indices(ws, split)
    return WeightSystem(tuple(ws.weights[i] for i in keep), tuple(ws.dims[i] for i in keep), ws.fan_rays)


def mu_relative(ws: WeightSystem, split: Splitting) -> list[SupportSet]:
    """Polystable supports of the ``T_f``-fixed part, as index sets into
    ``ws``."""
    keep = restricted_indices(ws, split)
    sub = restrict_weights(ws, split)
    return _canonical(tuple(keep[j] for j in I) for I in mu_sigma(sub))


# -- verdicts --------------------------------------------------------------

HYPOTHESIS_SOURCE = "no opposite pair of Demazure roots"
NECESSITY = "also necessary when the Kahler class is integral and the torus hypothesis holds"


@dataclass(frozen=True)
class Verdict:
    kind: str  # "cscK" | "extremal"
    hypothesis_torus_maximal: bool
    hypothesis_source: str
    exists_balanced: bool
    strata: tuple[Stratum, ...]
    statement: str
    sufficiency: str
    necessity: str
    fixed_directions: tuple[Vector, ...] = ()

    @property
    def positive(self) -> bool:
        return self.exists_balanced


def _hypothesis(fan: Fan2D) -> bool:
    return is_reductive_part_torus(root_system(fan))


def cscK_verdict(fan: Fan2D, ws: Optional[WeightSystem] = None) -> Verdict:
    fan.require_smooth()
    ws = def_weights_surface(fan) if ws is None else ws
    hyp = _hypothesis(fan)
    mu = mu_sigma(ws) if len(ws) else []
    exists = bool(mu)
    if exists:
        statement = "admits nontrivial CSCK deformations"
    else:
        statement = "admits no nontrivial CSCK deformations from polystable points"
    if not hyp:
        statement += " (criterion conditional: the torus is not maximal in Aut)"
    return Verdict(
        kind="cscK",
        hypothesis_torus_maximal=hyp,
        hypothesis_source=HYPOTHESIS_SOURCE,
        exists_balanced=exists,
        strata=tuple(strata(ws, mu)),
        statement=statement,
        sufficiency="every small deformation in a listed stratum carries a CSCK metric in the same class",
        necessity=NECESSITY,
    )


def extremal_verdict(fan: Fan2D, split: Splitting, ws: Optional[WeightSystem] = None) -> Verdict:
    """Verdict for deformations preserving a subtorus ``T_f`` that contains
    the extremal vector field (supplied by the caller)."""
    fan.require_smooth()
    ws = def_weights_surface(fan) if ws is None else ws
    hyp = _hypothesis(fan)
    mu = mu_relative(ws, split) if len(ws) else []
    exists = bool(mu)
    if exists:
        statement = "admits extremal deformations relative to T_f"
    else:
        statement = "admits no projective extremal deformation relative to T_f"
    if not hyp:
        statement += " (criterion conditional: the torus is not maximal in Aut)"
    return Verdict(
        kind="extremal",
        hypothesis_torus_maximal=hyp,
        hypothesis_source=HYPOTHESIS_SOURCE,
        exists_balanced=exists,
        strata=tuple(strata(ws, mu)),
        statement=statement,
        sufficiency="every small T_f-invariant deformation in a listed stratum carries an extremal metric",
        necessity="also necessary for polarized deformations when T_f is a maximal torus of the deformed surface",
        fixed_directions=split.fixed,
    )
