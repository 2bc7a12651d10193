"""Shared fixtures and brute-force oracles.

The oracles enumerate: rank via the size of the row span, solve via all
candidate vectors, k-boundance via all assignments of top simplices to
chain slots.  They are deliberately independent of the elimination and
search code they check.
"""

from __future__ import annotations

from itertools import combinations, product

import pytest

from boundance import generate
from boundance.complexes import Complex


@pytest.fixture(scope="session")
def tetra2() -> Complex:
    return generate.build_family("tetra2")


@pytest.fixture(scope="session")
def tetra2_subdiv() -> Complex:
    return generate.build_family("tetra2-subdiv")


@pytest.fixture(scope="session")
def sphere2() -> Complex:
    return generate.build_family("hollow-simplex", n=2)


@pytest.fixture(scope="session")
def triangle_graph() -> Complex:
    return generate.build_family("hollow-simplex", n=1)


@pytest.fixture(scope="session")
def sheets():
    return lambda k: generate.build_family("sheets", k=k)


def triangle_cycle(K: Complex):
    return K.chain(1, ["e12", "e13", "e23"])


# -- oracles -----------------------------------------------------------


def brute_rank(rows: list[int], ncols: int) -> int:
    span = {0}
    for row in rows:
        span |= {row ^ s for s in span}
    size = len(span)
    rank = 0
    while size > 1:
        size >>= 1
        rank += 1
    return rank


def brute_solutions(rows: list[int], ncols: int, rhs: int) -> list[int]:
    out = []
    for x in range(1 << ncols):
        y = 0
        for i, row in enumerate(rows):
            if (row & x).bit_count() & 1:
                y |= 1 << i
        if y == rhs:
            out.append(x)
    return out


def brute_k_boundant(K: Complex, cycles, k: int) -> bool:
    """Try every assignment of top simplices to k chain slots."""
    if k == 0:
        return True
    targets = {c.mask for c in cycles}
    if not targets:
        return False
    m = K.size(K.n)
    cols = K.boundary_columns(K.n)
    for assign in product(range(k + 1), repeat=m):
        masks = [0] * k
        for i, slot in enumerate(assign):
            if slot:
                masks[slot - 1] ^= cols[i]
        if all(mask in targets for mask in masks):
            return True
    return False


def brute_robust(K: Complex, cycles, k: int) -> bool:
    """All deletions of size <= k-1, each checked by exhaustive bounding."""
    targets = {c.mask for c in cycles}
    if not targets:
        return False
    m = K.size(K.n)
    cols = K.boundary_columns(K.n)
    for size in range(min(k - 1, m) + 1):
        for drop in combinations(range(m), size):
            keep = [i for i in range(m) if i not in drop]
            reachable = {0}
            for i in keep:
                reachable |= {cols[i] ^ r for r in reachable}
            if not (reachable & targets):
                return False
    return True
