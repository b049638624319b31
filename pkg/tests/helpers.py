"""Random ring elements and matrices for property tests."""

from __future__ import annotations

import random

from skewchain.fields import QQ, GF, QuadraticField
from skewchain.matrixlab import RMatrix
from skewchain.rings import Ring, gf3_quaternions, matrix_ring, quaternions, field_ring

RINGS = {
    "Q": field_ring(QQ),
    "Q(sqrt5)": field_ring(QuadraticField(5)),
    "GF(7)": field_ring(GF(7)),
    "H": quaternions(QQ),
    "H(sqrt5)": quaternions(QuadraticField(5)),
    "M2Q": matrix_ring(2, QQ),
    "M3GF5": matrix_ring(3, GF(5)),
    "R3": gf3_quaternions(),
}


def rand_element(ring: Ring, rng: random.Random, bound: int = 5, zero_rate: float = 0.0):
    if zero_rate and rng.random() < zero_rate:
        return ring.zero
    F = ring.field
    return ring.element(tuple(F.random(rng, bound) for _ in range(ring.dim)))


def rand_matrix(ring: Ring, rng: random.Random, r: int, c: int, bound: int = 5,
                zero_rate: float = 0.0, rows=None, cols=None) -> RMatrix:
    grid = [[rand_element(ring, rng, bound, zero_rate) for _ in range(c)] for _ in range(r)]
    return RMatrix.build(ring, grid, rows, cols)


def rand_unit(ring: Ring, rng: random.Random, bound: int = 5):
    while True:
        x = rand_element(ring, rng, bound)
        if x.is_unit():
            return x
