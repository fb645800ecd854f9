"""Shared helpers for the test suite: seeded random descriptor generators."""

from __future__ import annotations

import math
import random

from seifinv import BaseSurface, SeifertInvariants


def coprime_pair(rng: random.Random, q_max: int = 9, p_span: int = 12) -> tuple[int, int]:
    q = rng.randint(1, q_max)
    while True:
        p = rng.randint(-p_span, p_span)
        if math.gcd(p, q) == 1:
            return (q, p)


def random_descriptor(rng: random.Random, orientable: bool | None = None) -> SeifertInvariants:
    if orientable is None:
        orientable = rng.random() < 0.8
    genus = rng.randint(0, 8) if orientable else rng.randint(1, 8)
    pairs = tuple(coprime_pair(rng) for _ in range(rng.randint(0, 5)))
    return SeifertInvariants(BaseSurface(genus, orientable), pairs, rng.randint(-6, 6))
