"""Exact lattice arithmetic and the two cone-feasibility tests.

Vectors of ``N`` and of the dual lattice ``N*`` are plain tuples of Python
ints (arbitrary precision).  Which lattice a tuple lives in is a matter of
context; :func:`change_of_basis` is the one place where the distinction
matters, and it takes a ``dual`` flag.

Everything that decides a convex-geometric question goes through the exact
simplex in :mod:`torstab._simplex` and returns a certificate that can be
re-checked with nothing more than :func:`pairing`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Union

from torstab._simplex import feasible_point
from torstab.errors import EmptyFamily, NotUnimodular, RankMismatch, ZeroVector

Vector = tuple[int, ...]
LatticeVector = Vector
DualVector = Vector


def vec(coords: Sequence[int]) -> Vector:
    return tuple(int(c) for c in coords)


def primitive(v: Sequence[int]) -> Vector:
    """Shortest lattice vector on the ray through ``v``."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)} has no primitive generator")
    return tuple(c // g for c in v)


def pairing(R: Sequence[int], v: Sequence[int]) -> int:
    if len(R) != len(v):
        raise RankMismatch(f"cannot pair rank {len(R)} with rank {len(v)}")
    return sum(a * b for a, b in zip(R, v))


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def neg(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * a for a in v)


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def linear_combination(coeffs: Sequence[int], family: Sequence[Sequence[int]]) -> Vector:
    n = len(family[0])
    out = [0] * n
    for a, R in zip(coeffs, family):
        for k in range(n):
            out[k] += a * R[k]
    return tuple(out)


def _check_family(family: Sequence[Sequence[int]]) -> int:
    if not family:
        raise EmptyFamily("family of dual vectors is empty")
    n = len(family[0])
    for R in family:
        if len(R) != n:
            raise RankMismatch("dual vectors of different ranks in one family")
    return n


def _clear_denominators(xs: Sequence[Fraction]) -> list[int]:
    m = 1
    for x in xs:
        m = lcm(m, x.denominator)
    ints = [int(x * m) for x in xs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def bezout(a: int, b: int) -> tuple[int, int]:
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def dual_segment(
    rho: Sequence[int], value: int, bounds: Sequence[tuple[Sequence[int], int]]
) -> list[Vector]:
    """Lattice points ``R`` of ``Z^2`` with ``<R, rho> = value`` and
    ``<R, v> <= c`` for every ``(v, c)`` in ``bounds``.

    ``rho`` must be primitive.  The solutions form ``R0 + t d`` with ``d``
    orthogonal to ``rho``; each bound clips ``t`` from one side.  Returns an
    empty list if the bounds leave ``t`` unbounded on either side.
    """
    x, y = bezout(rho[0], rho[1])
    R0 = (value * x, value * y)
    assert pairing(R0, rho) == value, "rho must be primitive"
    d = (-rho[1], rho[0])
    lo = hi = None
    for v, c in bounds:
        c0, c1 = pairing(R0, v), pairing(d, v)
        # c0 + t c1 <= c
        if c1 > 0:
            t = (c - c0) // c1
            hi = t if hi is None else min(hi, t)
        elif c1 < 0:
            t = -((c - c0) // -c1)
            lo = t if lo is None else max(lo, t)
        elif c0 > c:
            return []
    if lo is None or hi is None:
        return []
    return [(R0[0] + t * d[0], R0[1] + t * d[1]) for t in range(lo, hi + 1)]


# -- balanced relations ----------------------------------------------------


@dataclass(frozen=True)
class PositiveRelation:
    """Integers ``a_i >= 1`` with ``sum a_i R_i = 0``."""

    coefficients: tuple[int, ...]

    def verify(self, family: Sequence[Sequence[int]]) -> bool:
        return (
            len(self.coefficients) == len(family)
            and all(a >= 1 for a in self.coefficients)
            and not any(linear_combination(self.coefficients, family))
        )


def positive_kernel_vector(family: Sequence[Sequence[int]]) -> Optional[PositiveRelation]:
    """Find a strictly positive integer relation among ``family``, if any.

    Substituting ``a = 1 + x`` turns ``{a >= 1, sum a_i R_i = 0}`` into the
    standard form ``sum x_i R_i = -sum R_i, x >= 0``.
    """
    n = _check_family(family)
    r = len(family)
    A = [[family[i][k] for i in range(r)] for k in range(n)]
    b = [-sum(R[k] for R in family) for k in range(n)]
    x = feasible_point(A, b, minimize=[1] * r)
    if x is None:
        return None
    a = _clear_denominators([1 + xi for xi in x])
    rel = PositiveRelation(tuple(a))
    assert rel.verify(family)
    return rel


def nonnegative_kernel_vector(family: Sequence[Sequence[int]]) -> Optional[tuple[int, ...]]:
    """Find ``a >= 0``, ``a != 0`` with ``sum a_i R_i = 0``.

    The indices with ``a_i > 0`` form a balanced subfamily, so this decides
    "some subfamily is balanced" with one feasibility problem instead of a
    scan over subsets.  Normalisation is ``sum a_i = 1`` before scaling.
    """
    n = _check_family(family)
    r = len(family)
    A = [[family[i][k] for i in range(r)] for k in range(n)]
    A.append([1] * r)
    b = [0] * n + [1]
    x = feasible_point(A, b)
    if x is None:
        return None
    a = tuple(_clear_denominators(x))
    assert not any(linear_combination(a, family)) and any(a) and min(a) >= 0
    return a


# -- cone is a subspace ----------------------------------------------------


@dataclass(frozen=True)
class SubspaceWitness:
    """``combinations[i]`` are non-negative integers with
    ``sum_j combinations[i][j] R_j = -R_i``."""

    combinations: tuple[tuple[int, ...], ...]

    def verify(self, family: Sequence[Sequence[int]]) -> bool:
        if len(self.combinations) != len(family):
            return False
        for R, c in zip(family, self.combinations):
            if len(c) != len(family) or min(c) < 0:
                return False
            if linear_combination(c, family) != neg(R):
                return False
        return True


@dataclass(frozen=True)
class SeparatingVector:
    """A lattice vector ``p`` with ``<R_i, p> >= 0`` for all ``i`` and
    ``> 0`` for at least one."""

    p: LatticeVector

    def verify(self, family: Sequence[Sequence[int]]) -> bool:
        values = [pairing(R, self.p) for R in family]
        return min(values) >= 0 and max(values) > 0


ConeCertificate = Union[SubspaceWitness, SeparatingVector]


def _minus_in_cone(family: Sequence[Sequence[int]], i: int) -> Optional[tuple[int, ...]]:
    """Non-negative integer ``c`` with ``sum_j c_j R_j = -R_i``, or ``None``."""
    n = len(family[0])
    r = len(family)
    A = [[family[j][k] for j in range(r)] for k in range(n)]
    b = [-family[i][k] for k in range(n)]
    x = feasible_point(A, b)
    if x is None:
        return None
    # x rational: m * (-R_i) = sum (m x_j) R_j; move m R_i to the right side
    m = 1
    for xj in x:
        m = lcm(m, xj.denominator)
    c = [int(xj * m) for xj in x]
    c[i] += m - 1
    return tuple(c)


def separating_vector(family: Sequence[Sequence[int]], strict_index: int) -> Optional[LatticeVector]:
    """Lattice ``p`` with ``<R_j, p> >= 0`` for all ``j`` and
    ``<R_strict_index, p> > 0``, or ``None`` if no such ``p`` exists."""
    return _solve_pairing_system(family, {strict_index})


def strictly_positive_vector(family: Sequence[Sequence[int]]) -> Optional[LatticeVector]:
    """Lattice ``p`` with ``<R_j, p> > 0`` for every ``j``, or ``None``."""
    return _solve_pairing_system(family, set(range(len(family))))


def _solve_pairing_system(family, strict: set[int]) -> Optional[LatticeVector]:
    # variables p+ (n), p- (n), slack s (r):  <R_j, p+ - p-> - s_j = [j in strict]
    n = len(family[0])
    r = len(family)
    A = []
    b = []
    for j, R in enumerate(family):
        row = list(R) + [-c for c in R] + [0] * r
        row[2 * n + j] = -1
        A.append(row)
        b.append(1 if j in strict else 0)
    x = feasible_point(A, b, minimize=[1] * (2 * n) + [0] * r)
    if x is None:
        return None
    p = [x[k] - x[n + k] for k in range(n)]
    m = 1
    for c in p:
        m = lcm(m, c.denominator)
    p_int = [int(c * m) for c in p]
    if not any(p_int):
        return None
    return primitive(p_int)


def positive_span_is_subspace(family: Sequence[Sequence[int]]) -> tuple[bool, ConeCertificate]:
    """Decide whether the cone positively spanned by ``family`` is a linear
    subspace.

    Equivalently: no lattice vector pairs non-negatively with every member
    and positively with one.  Returns ``(True, SubspaceWitness)`` or
    ``(False, SeparatingVector)``.
    """
    _check_family(family)
    combos = []
    for i in range(len(family)):
        c = _minus_in_cone(family, i)
        if c is None:
            p = separating_vector(family, i)
            assert p is not None, "Farkas alternative must hold"
            cert = SeparatingVector(p)
            assert cert.verify(family)
            return False, cert
        combos.append(c)
    cert = SubspaceWitness(tuple(combos))
    assert cert.verify(family)
    return True, cert


# -- change of basis -------------------------------------------------------


def _det(M: Sequence[Sequence[int]]) -> int:
    # Bareiss fraction-free elimination
    n = len(M)
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def determinant(M: Sequence[Sequence[int]]) -> int:
    return _det(M)


def integer_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix."""
    n = len(M)
    if any(len(row) != n for row in M) or abs(_det(M)) != 1:
        raise NotUnimodular(f"matrix {M} is not unimodular")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        r = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[r] = aug[r], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [[int(x) for x in row[n:]] for row in aug]


def matvec(M: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    if len(M[0]) != len(v):
        raise RankMismatch(f"{len(M[0])}-column matrix applied to rank {len(v)} vector")
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def change_of_basis(M: Sequence[Sequence[int]], v: Sequence[int], dual: bool = False) -> Vector:
    """Apply the lattice automorphism ``M``.

    Lattice vectors map to ``M v``; dual vectors to ``M^{-T} R`` so that
    ``pairing(M^{-T} R, M v) == pairing(R, v)``.
    """
    Minv = integer_inverse(M)
    if dual:
        MinvT = [list(col) for col in zip(*Minv)]
        return matvec(MinvT, v)
    return matvec(M, v)
