"""Degree-stratified subcomplexes, F2 homology, and the Gamma invariants.

Everything here is combinatorial: the degree-d stratum is generated by
the (n-1)-simplices of degree d (top simplices count as interior degree
2), and Gamma lives in the chain basis of the ambient complex so that
its elements can be fed straight back into the boundance decisions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import decide, gf2
from .complexes import Chain, Complex, SimplexRef
from .gf2 import Gf2Vector, kernel

GAMMA_ENUM_BOUND = 20


class DimensionTooLarge(ValueError):
    """Gamma is too big to enumerate element by element."""


@dataclass(frozen=True, eq=False)
class Stratification:
    """Degree buckets of the (n-1)-simplices, with derived subcomplexes."""

    complex: Complex
    buckets: dict[int, tuple[SimplexRef, ...]]

    def bucket(self, d: int) -> tuple[SimplexRef, ...]:
        return self.buckets.get(d, ())

    def x_refs(self, d: int) -> set[SimplexRef]:
        """Simplices of the closed degree-d stratum."""
        K = self.complex
        gens: list[SimplexRef] = list(self.bucket(d))
        if d == 2:
            gens.extend(K.refs(K.n))
        return K.closure_refs(gens)

    def y_refs(self, d: int) -> set[SimplexRef]:
        """Simplices of the closed degree->=d locus."""
        K = self.complex
        gens: list[SimplexRef] = []
        for deg, refs in self.buckets.items():
            if deg >= d:
                gens.extend(refs)
        if d <= 2:
            gens.extend(K.refs(K.n))
        return K.closure_refs(gens)

    def x_complex(self, d: int) -> Complex:
        K = self.complex
        return K.restrict(self.x_refs(d), K.n if d == 2 else K.n - 1)

    def y_complex(self, d: int) -> Complex:
        K = self.complex
        return K.restrict(self.y_refs(d), K.n if d <= 2 else K.n - 1)


def stratify(K: Complex) -> Stratification:
    if K.n < 1:
        raise ValueError("stratification needs n >= 1")
    buckets: dict[int, list[SimplexRef]] = {}
    for ref, deg in zip(K.refs(K.n - 1), K.degrees()):
        buckets.setdefault(deg, []).append(ref)
    return Stratification(K, {d: tuple(v) for d, v in sorted(buckets.items())})


def irregularity_skeleton(K: Complex) -> Complex:
    """K without its top simplices and without degree-2 (n-1)-simplices."""
    if K.n < 1:
        raise ValueError("irregularity skeleton needs n >= 1")
    keep = [ref for d in range(K.n - 1) for ref in K.refs(d)]
    keep += [ref for ref, deg in zip(K.refs(K.n - 1), K.degrees()) if deg != 2]
    return K.restrict(keep, K.n - 1)


def homology_dim(K: Complex, d: int, reduced: bool = True) -> int:
    """dim of Cycle_d / Bound_d over F2.

    For d=0 the reduced flavor takes cycles as the kernel of the
    augmentation (all-ones) map, the unreduced one as the kernel of the
    zero map; for d=n there are no boundaries.
    """
    if not 0 <= d <= K.n:
        raise ValueError(f"dimension {d} out of range")
    if d == 0 and not reduced:
        cycle_dim = K.size(0)
    else:
        cycle_dim = K.size(d) - gf2.rank(K.boundary_matrix(d))
    bound_dim = 0 if d == K.n else gf2.rank(K.boundary_matrix(d + 1))
    return cycle_dim - bound_dim


def _high_degree_mask(K: Complex) -> int:
    mask = 0
    for i, deg in enumerate(K.degrees()):
        if deg >= 3:
            mask |= 1 << i
    return mask


def gamma(K: Complex) -> list[Chain]:
    """Canonical basis of the cycles of the degree->=3 locus that bound in K.

    The degree->=3 subcomplex has no top simplices, so its (n-1)-homology
    is its (n-1)-cycle space; intersecting with the boundaries of K gives
    the kernel of the inclusion-induced map.
    """
    if K.n < 1:
        raise ValueError("gamma needs n >= 1")
    strat = stratify(K)
    skel = irregularity_skeleton(K)
    assert all(
        skel.has_id(K.record(ref).id) for ref in strat.y_refs(3)
    ), "degree->=3 locus must sit inside the irregularity skeleton"
    length = K.size(K.n - 1)
    allowed = _high_degree_mask(K)
    M = K.boundary_matrix(K.n - 1)
    cyc = [Gf2Vector(length, m) for m in kernel.nullspace_masked(list(M.rows), M.ncols, allowed)]
    bound = [Gf2Vector(length, col) for col in K.boundary_columns(K.n) if col]
    basis = gf2.intersect_subspaces(cyc, bound)
    return [Chain(K.n - 1, v) for v in basis]


@dataclass(frozen=True)
class GammaReport:
    """Gamma plus, for one k, its k-boundant elements."""

    gamma_basis: tuple[Chain, ...]
    k: int
    elements: tuple[Chain, ...]
    closed_under_addition: bool
    k_basis: tuple[Chain, ...] | None

    @property
    def gamma_dim(self) -> int:
        return len(self.gamma_basis)

    @property
    def k_dim(self) -> int | None:
        return len(self.k_basis) if self.k_basis is not None else None

    def to_json(self, K: Complex) -> dict:
        return {
            "gamma_dim": self.gamma_dim,
            "gamma_basis": [K.chain_to_json(c) for c in self.gamma_basis],
            "k": self.k,
            "gamma_k_elements": [K.chain_to_json(c) for c in self.elements],
            "closed_under_addition": self.closed_under_addition,
            "gamma_k_dim": self.k_dim,
        }


def gamma_k(K: Complex, k: int, method: str = "primal") -> GammaReport:
    """Enumerate Gamma and keep the k-boundant elements.

    Closure under addition is measured, not assumed, because it
    genuinely fails (two disjoint 3-boundant triangles on the full
    two-skeleton of the 4-simplex sum to a non-3-boundant cycle): when
    the subset is closed a canonical basis is emitted, otherwise the
    raw elements stand with ``closed_under_addition`` false.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    basis = gamma(K)
    dim = len(basis)
    if dim > GAMMA_ENUM_BOUND:
        raise DimensionTooLarge(f"gamma has dimension {dim} > {GAMMA_ENUM_BOUND}")
    length = K.size(K.n - 1)
    kept: list[Chain] = []
    for combo in range(1 << dim):
        mask = 0
        for i in range(dim):
            if (combo >> i) & 1:
                mask ^= basis[i].mask
        h = Chain(K.n - 1, Gf2Vector(length, mask))
        if decide.is_k_boundant(K, [h], k, method):
            kept.append(h)
    kept_masks = {c.mask for c in kept}
    closed = all(
        (a.mask ^ b.mask) in kept_masks for a in kept for b in kept
    )
    k_basis: tuple[Chain, ...] | None = None
    if closed:
        vecs = gf2.rref_basis([c.vector for c in kept if not c.is_zero])
        k_basis = tuple(Chain(K.n - 1, v) for v in vecs)
    return GammaReport(tuple(basis), k, tuple(kept), closed, k_basis)
