"""Simplicial complexes with multiplicity and explicit face bindings.

A complex is a per-dimension table of simplex records.  Several records
may share one vertex tuple (parallel simplices), so every record of
dimension d >= 1 carries d+1 explicit references to its faces; the
builder fills them in automatically whenever the face tuple is
unambiguous.  Chains are bit vectors over a dimension's table, indexed
in file order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .gf2 import Gf2Matrix, Gf2Vector


class ComplexError(ValueError):
    """Invalid complex description."""


class RepeatedVertex(ComplexError):
    pass


class MissingFace(ComplexError):
    pass


class AmbiguousFace(ComplexError):
    pass


class BadFaceBinding(ComplexError):
    pass


class DuplicateId(ComplexError):
    pass


class SimplexRef(NamedTuple):
    dim: int
    index: int


@dataclass(frozen=True)
class SimplexRecord:
    id: str
    vertices: tuple[str, ...]
    faces: tuple[SimplexRef, ...]


@dataclass(frozen=True)
class Chain:
    """F2 chain: a dimension plus a support bit vector over its table.

    Dimension -1 is the one-dimensional augmentation target, so the
    boundary of a 0-chain is again a Chain.
    """

    dim: int
    vector: Gf2Vector

    def __add__(self, other: Chain) -> Chain:
        if self.dim != other.dim:
            raise ValueError("chain dimension mismatch")
        return Chain(self.dim, self.vector ^ other.vector)

    __xor__ = __add__

    @property
    def is_zero(self) -> bool:
        return self.vector.is_zero

    @property
    def mask(self) -> int:
        return self.vector.mask

    def refs(self) -> tuple[SimplexRef, ...]:
        return tuple(SimplexRef(self.dim, i) for i in self.vector.support())


class Complex:
    """Immutable validated complex; all queries are pure."""

    def __init__(self, n: int, tables: tuple[tuple[SimplexRecord, ...], ...]):
        if n < 0 or len(tables) != n + 1:
            raise ComplexError("table count must be n+1")
        self.n = n
        self.tables = tables
        self._id_map: dict[str, SimplexRef] = {}
        self._tuple_map: dict[tuple[int, tuple[str, ...]], list[SimplexRef]] = {}
        for d, table in enumerate(tables):
            for i, rec in enumerate(table):
                ref = SimplexRef(d, i)
                if rec.id in self._id_map:
                    raise DuplicateId(f"duplicate simplex id {rec.id!r}")
                self._id_map[rec.id] = ref
                self._tuple_map.setdefault((d, rec.vertices), []).append(ref)
        self._bnd_cols: dict[int, list[int]] = {}
        self._degrees: list[int] | None = None

    # -- basic queries -------------------------------------------------

    def size(self, d: int) -> int:
        if d == -1:
            return 1
        if not 0 <= d <= self.n:
            raise ValueError(f"dimension {d} out of range")
        return len(self.tables[d])

    def record(self, ref: SimplexRef) -> SimplexRecord:
        return self.tables[ref.dim][ref.index]

    def refs(self, d: int) -> Iterable[SimplexRef]:
        return (SimplexRef(d, i) for i in range(self.size(d)))

    def all_refs(self) -> Iterable[SimplexRef]:
        for d in range(self.n + 1):
            yield from self.refs(d)

    def id_ref(self, simplex_id: str) -> SimplexRef:
        try:
            return self._id_map[simplex_id]
        except KeyError:
            raise ValueError(f"unknown simplex id {simplex_id!r}") from None

    def has_id(self, simplex_id: str) -> bool:
        return simplex_id in self._id_map

    def refs_by_vertices(self, d: int, vertices: tuple[str, ...]) -> list[SimplexRef]:
        return list(self._tuple_map.get((d, vertices), []))

    def vertex_ids(self) -> list[str]:
        return [rec.id for rec in self.tables[0]]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Complex)
            and self.n == other.n
            and self.tables == other.tables
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        sizes = " ".join(f"S{d}={self.size(d)}" for d in range(self.n + 1))
        return f"<Complex n={self.n} {sizes}>"

    # -- chains ----------------------------------------------------------

    def chain(self, dim: int, ids: Iterable[str] = ()) -> Chain:
        """Chain from simplex ids; repeated ids cancel (F2)."""
        if not -1 <= dim <= self.n:
            raise ValueError(f"chain dimension {dim} out of range")
        mask = 0
        for simplex_id in ids:
            ref = self.id_ref(simplex_id)
            if ref.dim != dim:
                raise ValueError(
                    f"simplex {simplex_id!r} has dimension {ref.dim}, expected {dim}"
                )
            mask ^= 1 << ref.index
        return Chain(dim, Gf2Vector(self.size(dim), mask))

    def chain_from_refs(self, dim: int, refs: Iterable[SimplexRef]) -> Chain:
        mask = 0
        for ref in refs:
            if ref.dim != dim:
                raise ValueError("ref dimension mismatch")
            mask ^= 1 << ref.index
        return Chain(dim, Gf2Vector(self.size(dim), mask))

    def chain_from_mask(self, dim: int, mask: int) -> Chain:
        return Chain(dim, Gf2Vector(self.size(dim), mask))

    def ids_of(self, chain: Chain) -> list[str]:
        return [self.record(ref).id for ref in chain.refs()]

    def check_chain(self, chain: Chain) -> None:
        if not -1 <= chain.dim <= self.n:
            raise ValueError(f"chain dimension {chain.dim} out of range")
        if chain.vector.length != self.size(chain.dim):
            raise ValueError("chain support length does not match the table")

    # -- boundary --------------------------------------------------------

    def boundary_columns(self, d: int) -> list[int]:
        """Per-simplex boundary masks over the (d-1) table."""
        if d not in self._bnd_cols:
            if not 0 <= d <= self.n:
                raise ValueError(f"dimension {d} out of range")
            if d == 0:
                cols = [1] * self.size(0)
            else:
                cols = []
                for rec in self.tables[d]:
                    mask = 0
                    for face in rec.faces:
                        mask ^= 1 << face.index
                    cols.append(mask)
            self._bnd_cols[d] = cols
        return self._bnd_cols[d]

    def boundary_matrix(self, d: int) -> Gf2Matrix:
        """Matrix of the boundary map from d-chains to (d-1)-chains.

        Row space is the (d-1) table; d=0 gives the 1 x |V| augmentation
        row of all ones.
        """
        cols = self.boundary_columns(d)
        return Gf2Matrix.from_columns(self.size(d - 1), cols)

    def boundary(self, chain: Chain) -> Chain:
        self.check_chain(chain)
        if chain.dim < 0:
            raise ValueError("dimension out of range for boundary")
        cols = self.boundary_columns(chain.dim)
        mask = 0
        for i in chain.vector.support():
            mask ^= cols[i]
        return Chain(chain.dim - 1, Gf2Vector(self.size(chain.dim - 1), mask))

    def is_cycle(self, chain: Chain) -> bool:
        self.check_chain(chain)
        if chain.dim == -1:
            return True
        return self.boundary(chain).is_zero

    # -- degrees -----------------------------------------------------------

    def degrees(self) -> list[int]:
        """Degree of every (n-1)-simplex, counted over parallel records."""
        if self._degrees is None:
            counts = [0] * self.size(self.n - 1) if self.n >= 1 else []
            if self.n >= 1:
                for rec in self.tables[self.n]:
                    for face in rec.faces:
                        counts[face.index] += 1
            self._degrees = counts
        return self._degrees

    def degree(self, ref: SimplexRef) -> int:
        if ref.dim != self.n - 1:
            raise ValueError(f"degree applies to ({self.n - 1})-simplices, got dim {ref.dim}")
        return self.degrees()[ref.index]

    # -- derived complexes -------------------------------------------------

    def delete_top_simplices(self, refs: Iterable[SimplexRef]) -> Complex:
        """New complex with the given top-dimension records removed."""
        drop = set()
        for ref in refs:
            if ref.dim != self.n:
                raise ValueError(f"can only delete {self.n}-simplices, got dim {ref.dim}")
            if not 0 <= ref.index < self.size(self.n):
                raise ValueError(f"ref {ref} out of range")
            drop.add(ref.index)
        top = tuple(rec for i, rec in enumerate(self.tables[self.n]) if i not in drop)
        return Complex(self.n, self.tables[: self.n] + (top,))

    def closure_refs(self, refs: Iterable[SimplexRef]) -> set[SimplexRef]:
        """The given simplices together with all their iterated faces."""
        out: set[SimplexRef] = set()
        stack = list(refs)
        while stack:
            ref = stack.pop()
            if ref in out:
                continue
            out.add(ref)
            stack.extend(self.record(ref).faces)
        return out

    def restrict(self, keep: Iterable[SimplexRef], n: int | None = None) -> Complex:
        """Subcomplex on the kept refs, re-indexed; must be face-closed."""
        new_n = self.n if n is None else n
        keep_set = set(keep)
        index_map: dict[SimplexRef, SimplexRef] = {}
        tables: list[tuple[SimplexRecord, ...]] = []
        for d in range(new_n + 1):
            recs = []
            for ref in self.refs(d):
                if ref not in keep_set:
                    continue
                rec = self.record(ref)
                try:
                    faces = tuple(index_map[f] for f in rec.faces)
                except KeyError:
                    raise ValueError(
                        f"restriction is not face-closed at {rec.id!r}"
                    ) from None
                index_map[ref] = SimplexRef(d, len(recs))
                recs.append(SimplexRecord(rec.id, rec.vertices, faces))
            tables.append(tuple(recs))
        return Complex(new_n, tuple(tables))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        simplices = []
        for d in range(1, self.n + 1):
            for rec in self.tables[d]:
                simplices.append(
                    {
                        "dim": d,
                        "id": rec.id,
                        "vertices": list(rec.vertices),
                        "faces": [self.record(f).id for f in rec.faces],
                    }
                )
        return {"n": self.n, "vertices": self.vertex_ids(), "simplices": simplices}

    def chain_to_json(self, chain: Chain) -> dict:
        if chain.dim < 0:
            raise ValueError("augmentation chains have no serialized form")
        return {"dim": chain.dim, "simplices": self.ids_of(chain)}

    def chain_from_json(self, obj: dict) -> Chain:
        if not isinstance(obj, dict) or "dim" not in obj or "simplices" not in obj:
            raise ComplexError("chain object needs 'dim' and 'simplices'")
        return self.chain(int(obj["dim"]), obj["simplices"])

    def cycles_from_json(self, obj: dict) -> list[Chain]:
        if not isinstance(obj, dict) or "cycles" not in obj:
            raise ComplexError("cycle list object needs a 'cycles' field")
        return [self.chain_from_json(c) for c in obj["cycles"]]

    def cycles_to_json(self, cycles: Iterable[Chain]) -> dict:
        return {"cycles": [self.chain_to_json(c) for c in cycles]}


def build(
    n: int,
    vertices: Iterable[str],
    simplices: Iterable[dict],
    *,
    create_missing_faces: bool = False,
) -> Complex:
    """Validate raw simplex descriptions and bind faces.

    ``simplices`` entries look like the file format: ``{"dim": d, "id":
    id, "vertices": [...], "faces": [ids]}`` with "faces" optional.  When
    faces are omitted each face binds to the unique simplex carrying the
    matching vertex tuple; with ``create_missing_faces`` absent tuples
    are created on the fly (one simplex per needed tuple, vertices must
    still be declared).
    """
    if n < 0:
        raise ComplexError("n must be a natural number")
    ids_seen: set[str] = set()
    table0: list[SimplexRecord] = []
    for v in vertices:
        v = str(v)
        if v in ids_seen:
            raise DuplicateId(f"duplicate vertex id {v!r}")
        ids_seen.add(v)
        table0.append(SimplexRecord(v, (v,), ()))

    by_dim: dict[int, list[dict]] = {d: [] for d in range(1, n + 1)}
    for raw in simplices:
        d = int(raw.get("dim", -1))
        if d < 1 or d > n:
            raise ComplexError(
                f"simplex {raw.get('id')!r} has dim {d}; expected 1..{n}"
                " (vertices are given by the 'vertices' list)"
            )
        by_dim[d].append(raw)

    tables: list[list[SimplexRecord]] = [table0] + [[] for _ in range(n)]
    id_map: dict[str, SimplexRef] = {rec.id: SimplexRef(0, i) for i, rec in enumerate(table0)}
    tuple_map: dict[tuple[int, tuple[str, ...]], list[SimplexRef]] = {
        (0, rec.vertices): [SimplexRef(0, i)] for i, rec in enumerate(table0)
    }
    created: dict[tuple[int, tuple[str, ...]], SimplexRef] = {}

    def fresh_id(base: str) -> str:
        cand = base
        bump = 1
        while cand in ids_seen:
            bump += 1
            cand = f"{base}~{bump}"
        return cand

    def add_record(d: int, simplex_id: str, verts: tuple[str, ...],
                   faces: tuple[SimplexRef, ...]) -> SimplexRef:
        ref = SimplexRef(d, len(tables[d]))
        tables[d].append(SimplexRecord(simplex_id, verts, faces))
        ids_seen.add(simplex_id)
        id_map[simplex_id] = ref
        tuple_map.setdefault((d, verts), []).append(ref)
        return ref

    def resolve_face(d: int, verts: tuple[str, ...], owner: str) -> SimplexRef:
        """Face of dimension d with the given tuple, creating if allowed."""
        existing = tuple_map.get((d, verts), [])
        if len(existing) == 1:
            return existing[0]
        if len(existing) > 1:
            raise AmbiguousFace(
                f"simplex {owner!r}: {len(existing)} simplices share the tuple "
                f"{verts}; explicit face ids required"
            )
        if not create_missing_faces or d == 0:
            raise MissingFace(f"simplex {owner!r}: no {d}-simplex with vertices {verts}")
        key = (d, verts)
        if key in created:
            return created[key]
        sub_faces = tuple(
            resolve_face(d - 1, verts[:i] + verts[i + 1 :], owner) for i in range(len(verts))
        ) if d >= 1 else ()
        ref = add_record(d, fresh_id("-".join(verts)), verts, sub_faces)
        created[key] = ref
        return ref

    for d in range(1, n + 1):
        for raw in by_dim[d]:
            simplex_id = str(raw.get("id"))
            if simplex_id in ids_seen:
                raise DuplicateId(f"duplicate simplex id {simplex_id!r}")
            verts = tuple(str(v) for v in raw.get("vertices", ()))
            if len(verts) != d + 1:
                raise ComplexError(
                    f"simplex {simplex_id!r}: {len(verts)} vertices for dimension {d}"
                )
            if len(set(verts)) != len(verts):
                raise RepeatedVertex(f"simplex {simplex_id!r} repeats a vertex")
            verts = tuple(sorted(verts))
            required = [verts[:i] + verts[i + 1 :] for i in range(d + 1)]
            if "faces" in raw and raw["faces"] is not None:
                given = [str(f) for f in raw["faces"]]
                if len(given) != d + 1:
                    raise BadFaceBinding(
                        f"simplex {simplex_id!r}: expected {d + 1} faces, got {len(given)}"
                    )
                slots: list[SimplexRef | None] = [None] * (d + 1)
                for face_id in given:
                    ref = id_map.get(face_id)
                    if ref is None:
                        raise BadFaceBinding(
                            f"simplex {simplex_id!r}: unknown face id {face_id!r}"
                        )
                    if ref.dim != d - 1:
                        raise BadFaceBinding(
                            f"simplex {simplex_id!r}: face {face_id!r} has dimension "
                            f"{ref.dim}, expected {d - 1}"
                        )
                    ftuple = tables[d - 1][ref.index].vertices
                    placed = False
                    for i, req in enumerate(required):
                        if slots[i] is None and req == ftuple:
                            slots[i] = ref
                            placed = True
                            break
                    if not placed:
                        raise BadFaceBinding(
                            f"simplex {simplex_id!r}: face {face_id!r} with vertices "
                            f"{ftuple} does not fill any remaining face slot"
                        )
                faces = tuple(slots)  # type: ignore[arg-type]
            else:
                faces = tuple(resolve_face(d - 1, req, simplex_id) for req in required)
            add_record(d, simplex_id, verts, faces)

    return Complex(n, tuple(tuple(t) for t in tables))


def from_json(obj: dict, *, create_missing_faces: bool = False) -> Complex:
    if not isinstance(obj, dict):
        raise ComplexError("complex document must be a JSON object")
    for field in ("n", "vertices", "simplices"):
        if field not in obj:
            raise ComplexError(f"complex document is missing {field!r}")
    return build(
        int(obj["n"]),
        obj["vertices"],
        obj["simplices"],
        create_missing_faces=create_missing_faces,
    )


def load_complex(path) -> Complex:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"{path}: {exc}") from None
    return from_json(obj)


def dump_complex(K: Complex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(K.to_json(), fh, indent=1)
        fh.write("\n")


def transfer_chain(src: Complex, chain: Chain, dst: Complex) -> Chain:
    """Re-express a chain of ``src`` in ``dst`` by simplex id."""
    return dst.chain(chain.dim, src.ids_of(chain))
