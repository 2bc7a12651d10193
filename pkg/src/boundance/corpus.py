"""Seeded instance streams for cross-checking the decision routes.

An instance is a small random complex plus a random list of
top-codimension cycles; identical (count, seed) always reproduce the
same stream, so every corpus failure is replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from . import complexes, generate
from .complexes import Chain, Complex
from .gf2 import kernel

# (n, vertex count, density) rotations tuned to keep |S_n| <= 8
_SHAPES = [
    (1, 4, 0.7),
    (2, 5, 0.45),
    (3, 6, 0.25),
    (1, 5, 0.5),
    (2, 6, 0.3),
    (3, 5, 0.6),
]


@dataclass(frozen=True)
class Instance:
    name: str
    complex: Complex
    cycles: list[Chain]


def random_cycle_list(
    K: Complex,
    rng: random.Random,
    max_cycles: int = 3,
    trivial_prob: float = 0.1,
) -> list[Chain]:
    """Random (n-1)-cycles of K, repetitions and the trivial cycle allowed."""
    d = K.n - 1
    M = K.boundary_matrix(d)
    basis = kernel.nullspace_masked(list(M.rows), M.ncols, (1 << M.ncols) - 1)
    out = []
    for _ in range(rng.randint(1, max_cycles)):
        if not basis or rng.random() < trivial_prob:
            out.append(K.chain_from_mask(d, 0))
            continue
        mask = 0
        while mask == 0:
            combo = rng.getrandbits(len(basis)) or 1
            mask = 0
            for i in range(len(basis)):
                if (combo >> i) & 1:
                    mask ^= basis[i]
        out.append(K.chain_from_mask(d, mask))
    return out


def complexes_stream(count: int, seed: int = 0) -> Iterator[tuple[str, Complex]]:
    """Deterministic stream of small random complexes (|S_n| <= 8)."""
    for i in range(count):
        n, v, density = _SHAPES[i % len(_SHAPES)]
        doc = generate.random_complex(n, v, density, seed * 100003 + i, max_top=8)
        yield f"random-n{n}-i{i}", complexes.from_json(doc)


def instances(count: int, seed: int = 0) -> Iterator[Instance]:
    """Deterministic stream of (complex, cycle list) instances."""
    rng = random.Random(seed * 7919 + 13)
    for name, K in complexes_stream(count, seed):
        yield Instance(name, K, random_cycle_list(K, rng))
