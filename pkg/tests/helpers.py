"""Random generators, golden fixtures and brute-force oracles shared by the
test modules.  Oracles here deliberately avoid the library's LP code."""

from __future__ import annotations

import itertools
import random
from math import gcd

from torstab.constructions import hirzebruch, projective_plane
from torstab.deformations import WeightSystem
from torstab.fan import Fan2D, blow_up, validate_surface_fan

P1P1_Z3 = [(1, 0), (1, 3), (-1, 0), (-1, -3)]
F2_Z3 = [(0, 1), (3, -1), (0, -1), (-3, -1)]
P1P1_Z3_RES = [(1, 0), (1, 1), (1, 2), (1, 3), (0, 1), (-1, 0), (-1, -1), (-1, -2), (-1, -3), (0, -1)]
P1P1_Z2_RES = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
XHAT = [(1, 0), (3, -1), (2, -1), (1, -1), (0, -1), (-1, 0), (-3, -1), (-2, -1), (-1, -1), (0, 1)]
XHAT_WEIGHTS = {(0, 1), (-1, -1), (-1, -2), (1, -1), (1, -2)}
XHAT2_EXTRA_RAYS = [(1, 1), (-1, 1)]
XHAT2_WEIGHTS = XHAT_WEIGHTS | {(0, -1), (1, 0), (-1, 0)}


def golden_fans() -> dict[str, Fan2D]:
    return {
        "p1p1_z3_res": validate_surface_fan(P1P1_Z3_RES),
        "p1p1_z2_res": validate_surface_fan(P1P1_Z2_RES),
        "xhat": validate_surface_fan(XHAT),
        "xhat2": validate_surface_fan(XHAT + XHAT2_EXTRA_RAYS),
    }


def random_blowup_fan(rng: random.Random, max_blowups: int = 8) -> Fan2D:
    fan = projective_plane() if rng.random() < 0.3 else hirzebruch(rng.randint(0, 5))
    for _ in range(rng.randint(0, max_blowups)):
        fan = blow_up(fan, rng.randrange(len(fan)))
    return fan


def random_unimodular(rng: random.Random, n: int = 2, steps: int = 6) -> list[list[int]]:
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        for c in range(n):
            M[i][c] += k * M[j][c]
        if rng.random() < 0.3:
            M[i] = [-x for x in M[i]]
    return M


def random_complete_fan(rng: random.Random, box: int = 5) -> Fan2D:
    """Random complete surface fan with primitive rays in a box, usually
    singular."""
    while True:
        rays = set()
        for _ in range(rng.randint(3, 7)):
            x, y = rng.randint(-box, box), rng.randint(-box, box)
            if (x, y) != (0, 0) and gcd(x, y) == 1:
                rays.add((x, y))
        try:
            return validate_surface_fan(sorted(rays))
        except ValueError:
            continue


def random_weight_system(rng: random.Random) -> WeightSystem:
    rank = rng.randint(1, 3)
    s = rng.randint(1, 6)
    ws = set()
    while len(ws) < s:
        R = tuple(rng.randint(-3, 3) for _ in range(rank))
        if any(R):
            ws.add(R)
        if rank == 1 and len(ws) == 6:
            break
    ws = sorted(ws)
    return WeightSystem(tuple(ws), tuple(rng.randint(1, 3) for _ in ws))


def box_vectors(rank: int, bound: int = 5):
    for p in itertools.product(range(-bound, bound + 1), repeat=rank):
        if any(p):
            yield p


def brute_force_kind(weights, bound: int = 5) -> str:
    """Hilbert-Mumford by enumeration of one-parameter subgroups in a box.

    ``lambda_p(t)`` scales the weight-``R`` component by ``t^<R,p>``.  The
    orbit of a point with the given support is unstable when some ``p``
    sends every component to 0, and fails to be closed when some ``p`` has
    a limit (all pairings >= 0) that leaves the orbit (some pairing > 0).
    """
    if not weights:
        return "Polystable"
    rank = len(weights[0])
    semistable_break = False
    for p in box_vectors(rank, bound):
        vals = [sum(a * b for a, b in zip(R, p)) for R in weights]
        if all(v > 0 for v in vals):
            return "Unstable"
        if all(v >= 0 for v in vals) and any(v > 0 for v in vals):
            semistable_break = True
    return "StrictlySemistable" if semistable_break else "Polystable"


def brute_force_balanced(weights, bound: int = 6) -> bool:
    """A positive integer relation with coefficients up to ``bound``."""
    rank = len(weights[0])
    for a in itertools.product(range(1, bound + 1), repeat=len(weights)):
        if all(sum(c * R[k] for c, R in zip(a, weights)) == 0 for k in range(rank)):
            return True
    return False
