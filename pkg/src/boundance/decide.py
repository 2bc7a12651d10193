"""Deciding k-boundance of cycle lists, three independent ways.

A list of top-codimension cycles is k-boundant when k pairwise
simplex-disjoint top-dimension chains each bound some list element.  The
primal route searches for such a packing directly; the dual route checks
that the list still bounds after every deletion of k-1 top simplices;
the recursive route peels one bounding chain at a time through a surgery
that cuts the chain's exclusive closure out of the complex.

The primal and recursive routes decide the same predicate.  The dual
route is implied by it (disjoint chains survive any k-1 deletions) but
is strictly weaker: there are complexes where a cycle survives every
deletion yet admits no packing (see tests/test_falsification.py for
exhaustively verified instances, the smallest being a 4-edge graph).
``method="all"`` therefore raises MethodDisagreement, with a serialized
reproducer, exactly on such gap instances; contradictions are raised
loudly, never papered over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .complexes import Chain, Complex, SimplexRef, transfer_chain
from .gf2 import kernel

METHODS = ("primal", "dual", "recursive", "all")

# Solution cosets are materialized and sorted up to this nullity so that
# search order (ascending chain mask) is stable and documented.
_COSET_SORT_BOUND = 20


class _Unbounded:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


class NotACycle(ValueError):
    pass


class TheoremViolation(Exception):
    """A claimed equivalence failed on a concrete instance.

    Carries a JSON reproducer so the instance can be replayed and
    minimized; raised only by the explicitly cross-checking entry
    points, never by the single-route decision procedures.
    """

    def __init__(self, message: str, reproducer: dict | None = None):
        super().__init__(message)
        self.reproducer = reproducer

    def reproducer_json(self) -> str:
        return json.dumps(self.reproducer, indent=1)


class MethodDisagreement(TheoremViolation):
    pass


class CobordanceNotTransitive(TheoremViolation):
    pass


@dataclass(frozen=True)
class BoundanceWitness:
    """k pairwise disjoint chains plus, per chain, the bounded list index."""

    chains: tuple[Chain, ...]
    assignment: tuple[int, ...]

    def validate(self, K: Complex, cycles: Sequence[Chain]) -> None:
        if len(self.chains) != len(self.assignment):
            raise ValueError("witness arity mismatch")
        for a, chain in zip(self.assignment, self.chains):
            if not 0 <= a < len(cycles):
                raise ValueError(f"assignment index {a} out of range")
            if chain.dim != K.n:
                raise ValueError("witness chain has wrong dimension")
            if K.boundary(chain) != cycles[a]:
                raise ValueError("witness chain does not bound its assigned cycle")
        for i in range(len(self.chains)):
            for j in range(i + 1, len(self.chains)):
                if self.chains[i].mask & self.chains[j].mask:
                    raise ValueError(f"witness chains {i} and {j} share a summand")


def _require_cycles(K: Complex, cycles: Sequence[Chain]) -> None:
    want = K.n - 1
    for c in cycles:
        if c.dim != want:
            raise NotACycle(f"expected dimension {want}, got {c.dim}")
        if not K.is_cycle(c):
            raise NotACycle(f"chain {K.ids_of(c) if c.dim >= 0 else c} is not a cycle")


def _distinct(cycles: Sequence[Chain]) -> list[tuple[int, Chain]]:
    """Distinct cycle values with their first list index, in list order.

    Sublists repeat elements freely, so only distinct values matter for
    boundance decisions.
    """
    seen: dict[int, int] = {}
    out = []
    for i, c in enumerate(cycles):
        if c.mask not in seen:
            seen[c.mask] = i
            out.append((i, c))
    return out


def _coset(base: int, nulls: list[int]) -> list[int]:
    """All solutions base + span(nulls), sorted ascending by mask."""
    if len(nulls) > _COSET_SORT_BOUND:
        raise RuntimeError(
            f"solution space too large to enumerate (2^{len(nulls)} chains)"
        )
    sols = [base]
    for nv in nulls:
        sols += [s ^ nv for s in sols]
    sols.sort()
    return sols


def is_boundary(K: Complex, c: Chain) -> Chain | None:
    """Some top-dimension chain bounding c, or None; trivial gives empty."""
    _require_cycles(K, [c])
    rows = list(K.boundary_matrix(K.n).rows)
    full = (1 << K.size(K.n)) - 1
    x = kernel.solve_masked(rows, K.size(K.n), c.mask, full)
    if x is None:
        return None
    return K.chain_from_mask(K.n, x)


def disjoint_chains(K: Complex, cycles: Sequence[Chain], k: int) -> BoundanceWitness | None:
    """Primal k-boundance: a disjoint-chain witness, or None.

    Backtracks over chain slots; each slot tries every distinct cycle and
    enumerates the affine solution coset restricted to still-unused top
    simplices.  Slots are filled with strictly increasing chain masks
    (witnesses are unordered, so this only removes duplicates), and the
    first witness under that order is returned, which makes goldens
    stable.
    """
    if k < 0:
        raise ValueError("k must be a natural number")
    _require_cycles(K, cycles)
    if k == 0:
        return BoundanceWitness((), ())
    for i, c in enumerate(cycles):
        if c.is_zero:
            empty = K.chain(K.n)
            return BoundanceWitness((empty,) * k, (i,) * k)
    distinct = _distinct(cycles)
    if not distinct:
        return None
    m = K.size(K.n)
    rows = list(K.boundary_matrix(K.n).rows)
    full = (1 << m) - 1

    slots: list[tuple[int, int]] = []  # (list index, chain mask)

    def extend(used: int, prev_mask: int) -> bool:
        if len(slots) == k:
            return True
        allowed = full & ~used
        nulls = None  # shared by every cycle at this slot
        for idx, c in distinct:
            base = kernel.solve_masked(rows, m, c.mask, allowed)
            if base is None:
                continue
            if nulls is None:
                nulls = kernel.nullspace_masked(rows, m, allowed)
            for sol in _coset(base, nulls):
                if sol <= prev_mask:
                    continue
                slots.append((idx, sol))
                if extend(used | sol, sol):
                    return True
                slots.pop()
        return False

    if not extend(0, 0):
        return None
    chains = tuple(K.chain_from_mask(K.n, mask) for _, mask in slots)
    assignment = tuple(idx for idx, _ in slots)
    return BoundanceWitness(chains, assignment)


def robust_under_deletion(K: Complex, cycles: Sequence[Chain], k: int) -> bool:
    """Deletion robustness: the list still bounds after every deletion of
    k-1 (or, when fewer exist, all) top simplices.

    A necessary condition for k-boundance, not a sufficient one: a
    k-packing survives every such deletion, but robust instances without
    a packing exist (see the falsification tests).

    Only subsets of size exactly min(k-1, |top|) are enumerated; smaller
    deletions are implied because removing fewer simplices only enlarges
    the boundary image.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_cycles(K, cycles)
    distinct = _distinct(cycles)
    if not distinct:
        return False
    m = K.size(K.n)
    rows = list(K.boundary_matrix(K.n).rows)
    full = (1 << m) - 1
    size = min(k - 1, m)
    for combo in combinations(range(m), size):
        forbidden = 0
        for i in combo:
            forbidden |= 1 << i
        allowed = full & ~forbidden
        if not any(
            kernel.solve_masked(rows, m, c.mask, allowed) is not None
            for _, c in distinct
        ):
            return False
    return True


def closure_set(K: Complex, P: Chain) -> frozenset[SimplexRef]:
    """Exclusive closure of a top-dimension chain.

    Layer by layer downward: a face joins when every simplex of the
    dimension above that contains it already belongs to the layer above.
    """
    if P.dim != K.n:
        raise ValueError(f"expected a {K.n}-chain")
    K.check_chain(P)
    layer: set[SimplexRef] = set(P.refs())
    out: set[SimplexRef] = set(layer)
    for d in range(K.n - 1, -1, -1):
        cofaces: dict[SimplexRef, list[SimplexRef]] = {}
        for up in K.refs(d + 1):
            for face in K.record(up).faces:
                cofaces.setdefault(face, []).append(up)
        next_layer: set[SimplexRef] = set()
        for up in layer:
            for face in K.record(up).faces:
                if all(owner in layer for owner in cofaces[face]):
                    next_layer.add(face)
        out |= next_layer
        layer = next_layer
    return frozenset(out)


def surgery(K: Complex, P: Chain, c: Chain) -> Complex:
    """Cut P's exclusive closure out of K, protecting the closure of c.

    The result is K with every simplex of closure_set(P) deleted except
    those lying in c's closure; it is always face-closed.
    """
    if K.boundary(P) != c:
        raise ValueError("boundary mismatch: the chain does not bound the cycle")
    cut = closure_set(K, P) - K.closure_refs(c.refs())
    keep = [ref for ref in K.all_refs() if ref not in cut]
    return K.restrict(keep)


def recursive_boundant(K: Complex, c: Chain, k: int) -> bool:
    """k-boundance of a single cycle by repeated peel-and-cut surgery.

    True for k=0; otherwise some chain P bounding c must leave the cycle
    (k-1)-boundant in the cut complex.  States repeat across orderings of
    the peeled chains, so results are memoized on the surviving top
    simplex ids (the lower-dimensional content is a function of those).
    """
    if k < 0:
        raise ValueError("k must be a natural number")
    _require_cycles(K, [c])
    memo: dict[tuple[frozenset[str], int], bool] = {}

    def go(K2: Complex, c2: Chain, depth: int) -> bool:
        if depth == 0 or c2.is_zero:
            return True
        key = (frozenset(rec.id for rec in K2.tables[K2.n]), depth)
        if key in memo:
            return memo[key]
        m = K2.size(K2.n)
        rows = list(K2.boundary_matrix(K2.n).rows)
        full = (1 << m) - 1
        base = kernel.solve_masked(rows, m, c2.mask, full)
        result = False
        if base is not None:
            nulls = kernel.nullspace_masked(rows, m, full)
            for sol in _coset(base, nulls):
                P = K2.chain_from_mask(K2.n, sol)
                K3 = surgery(K2, P, c2)
                if go(K3, transfer_chain(K2, c2, K3), depth - 1):
                    result = True
                    break
        memo[key] = result
        return result

    return go(K, c, k)


def is_k_boundant(K: Complex, cycles: Sequence[Chain], k: int, method: str = "all") -> bool:
    """Decide k-boundance by the requested route.

    ``primal`` and ``recursive`` decide the defining packing predicate;
    ``dual`` decides deletion robustness, which the packing implies but
    which does not imply it back.  ``all`` runs every applicable route
    and raises MethodDisagreement with a serialized reproducer whenever
    the verdicts differ, which happens exactly on the gap instances.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if k < 0:
        raise ValueError("k must be a natural number")
    _require_cycles(K, cycles)
    if k == 0:
        return True
    if method == "primal":
        return disjoint_chains(K, cycles, k) is not None
    if method == "dual":
        return robust_under_deletion(K, cycles, k)
    distinct = _distinct(cycles)
    if method == "recursive":
        if len(distinct) != 1:
            raise ValueError("recursive method applies to single-cycle lists")
        return recursive_boundant(K, distinct[0][1], k)
    verdicts = {
        "primal": disjoint_chains(K, cycles, k) is not None,
        "dual": robust_under_deletion(K, cycles, k),
    }
    if len(distinct) == 1:
        verdicts["recursive"] = recursive_boundant(K, distinct[0][1], k)
    if len(set(verdicts.values())) > 1:
        raise MethodDisagreement(
            f"k-boundance methods disagree: {verdicts}",
            reproducer={
                "complex": K.to_json(),
                "cycles": K.cycles_to_json(cycles),
                "k": k,
                "verdicts": verdicts,
            },
        )
    return verdicts["primal"]


def max_boundance(K: Complex, cycles: Sequence[Chain], method: str = "primal"):
    """Largest k for which the list is k-boundant.

    UNBOUNDED when the list contains the trivial cycle; otherwise at most
    the number of top simplices (disjoint nonempty chains need one each).
    """
    cycles = list(cycles)
    if not cycles:
        raise ValueError("empty cycle list")
    _require_cycles(K, cycles)
    if any(c.is_zero for c in cycles):
        return UNBOUNDED
    best = 0
    for k in range(1, K.size(K.n) + 1):
        if not is_k_boundant(K, cycles, k, method):
            break
        best = k
    return best


def cobordant(K: Complex, c1: Chain, c2: Chain, k: int, method: str = "primal") -> bool:
    """Whether the k-copy list of c1 + c2 is k-boundant."""
    _require_cycles(K, [c1, c2])
    if k < 0:
        raise ValueError("k must be a natural number")
    return is_k_boundant(K, [c1 + c2] * max(k, 1), k, method)


def cobordance_classes(
    K: Complex, cycles: Sequence[Chain], k: int, method: str = "primal"
) -> list[list[int]]:
    """Partition the input indices under k-cobordance.

    k-cobordance is reflexive and symmetric but NOT transitive in
    general (the falsification tests pin a triple), so transitivity is
    verified on every triple rather than assumed; a violation raises
    CobordanceNotTransitive with a reproducer instead of returning a
    bogus partition.
    """
    cycles = list(cycles)
    _require_cycles(K, cycles)
    m = len(cycles)
    rel = [[True] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            r = cobordant(K, cycles[i], cycles[j], k, method)
            rel[i][j] = rel[j][i] = r
    for i in range(m):
        for j in range(m):
            if not rel[i][j]:
                continue
            for l in range(m):
                if rel[j][l] and not rel[i][l]:
                    raise CobordanceNotTransitive(
                        f"cobordance not transitive on indices ({i}, {j}, {l})",
                        reproducer={
                            "complex": K.to_json(),
                            "cycles": K.cycles_to_json(cycles),
                            "k": k,
                            "triple": [i, j, l],
                        },
                    )
    classes: list[list[int]] = []
    assigned = [False] * m
    for i in range(m):
        if assigned[i]:
            continue
        cls = [j for j in range(m) if rel[i][j]]
        for j in cls:
            assigned[j] = True
        classes.append(cls)
    return classes
