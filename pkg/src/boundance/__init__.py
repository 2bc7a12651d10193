"""F2 simplicial chain algebra, k-boundance decisions, and degree invariants."""

from .complexes import (
    AmbiguousFace,
    BadFaceBinding,
    Chain,
    Complex,
    ComplexError,
    DuplicateId,
    MissingFace,
    RepeatedVertex,
    SimplexRecord,
    SimplexRef,
    build,
    dump_complex,
    from_json,
    load_complex,
    transfer_chain,
)
from .decide import (
    UNBOUNDED,
    BoundanceWitness,
    CobordanceNotTransitive,
    MethodDisagreement,
    NotACycle,
    TheoremViolation,
    closure_set,
    cobordance_classes,
    cobordant,
    disjoint_chains,
    is_boundary,
    is_k_boundant,
    max_boundance,
    recursive_boundant,
    robust_under_deletion,
    surgery,
)
from .gf2 import BACKEND, Gf2Matrix, Gf2Vector, intersect_subspaces, nullspace_basis, rank, solve
from .graphs import NoPath, Path, extract_path, k_edge_connected_flow, pairs_boundant, path_to_chain
from .invariants import (
    DimensionTooLarge,
    GammaReport,
    Stratification,
    gamma,
    gamma_k,
    homology_dim,
    irregularity_skeleton,
    stratify,
)

__version__ = "0.1.0"
