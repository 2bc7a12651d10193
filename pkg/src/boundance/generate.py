"""Deterministic fixture and random-complex generators.

Every family yields a JSON-ready document (the complex file format) so
that identical parameters and seed produce byte-identical files.
"""

from __future__ import annotations

import random
from itertools import combinations

from . import complexes
from .complexes import Complex

FAMILIES = ("sheets", "par-edges", "hollow-simplex", "tetra2", "tetra2-subdiv", "random")

_DIM_PREFIX = {1: "e", 2: "f", 3: "c", 4: "g"}


def _simplex_id(dim: int, verts: tuple[str, ...]) -> str:
    prefix = _DIM_PREFIX.get(dim, f"s{dim}-")
    if all(len(v) == 1 for v in verts):
        return prefix + "".join(verts)
    return prefix + "-".join(verts)


def _full_skeleton_doc(n: int, verts: list[str], top_tuples: list[tuple[str, ...]],
                       top_ids: list[str] | None = None) -> dict:
    """Document with the given top simplices and every face, explicit bindings."""
    needed: dict[int, list[tuple[str, ...]]] = {d: [] for d in range(1, n + 1)}
    seen: set[tuple[int, tuple[str, ...]]] = set()

    def visit(d: int, tup: tuple[str, ...]) -> None:
        if d < 1 or (d, tup) in seen:
            return
        seen.add((d, tup))
        for i in range(len(tup)):
            visit(d - 1, tup[:i] + tup[i + 1 :])
        needed[d].append(tup)

    for tup in top_tuples:
        for i in range(len(tup)):
            visit(n - 1, tup[:i] + tup[i + 1 :])
    simplices = []
    for d in range(1, n):
        for tup in sorted(needed[d]):
            simplices.append(
                {
                    "dim": d,
                    "id": _simplex_id(d, tup),
                    "vertices": list(tup),
                    "faces": [_simplex_id(d - 1, tup[:i] + tup[i + 1 :]) if d > 1 else tup[i]
                              for i in range(len(tup))],
                }
            )
    for j, tup in enumerate(top_tuples):
        simplices.append(
            {
                "dim": n,
                "id": top_ids[j] if top_ids else _simplex_id(n, tup),
                "vertices": list(tup),
                "faces": [_simplex_id(n - 1, tup[:i] + tup[i + 1 :]) if n > 1 else tup[i]
                          for i in range(len(tup))],
            }
        )
    return {"n": n, "vertices": verts, "simplices": simplices}


def sheets(k: int) -> dict:
    """k parallel triangles over one shared edge set; every edge has degree k."""
    if k < 1:
        raise ValueError("sheets needs k >= 1")
    verts = ["1", "2", "3"]
    doc = _full_skeleton_doc(2, verts, [("1", "2", "3")] * k, [f"T{i+1}" for i in range(k)])
    return doc


def par_edges(k: int) -> dict:
    """Two vertices joined by k parallel edges."""
    if k < 1:
        raise ValueError("par-edges needs k >= 1")
    simplices = [
        {"dim": 1, "id": f"p{i+1}", "vertices": ["1", "2"], "faces": ["1", "2"]}
        for i in range(k)
    ]
    return {"n": 1, "vertices": ["1", "2"], "simplices": simplices}


def hollow_simplex(n: int) -> dict:
    """Boundary of an (n+1)-simplex: the minimal triangulated n-sphere."""
    if n < 1:
        raise ValueError("hollow-simplex needs n >= 1")
    verts = [str(i + 1) for i in range(n + 2)]
    tops = list(combinations(verts, n + 1))
    return _full_skeleton_doc(n, verts, tops)


def tetra2() -> dict:
    """Two hollow tetrahedra glued along the triangle 123.

    Edges 12, 13, 23 get degree 3, every other edge degree 2; the
    triangle cycle e12+e13+e23 is exactly 3-boundant.
    """
    verts = ["1", "2", "3", "4", "5"]
    tris = [
        ("A", ("1", "2", "3")),
        ("B", ("1", "2", "4")),
        ("C", ("1", "3", "4")),
        ("D", ("2", "3", "4")),
        ("E", ("1", "2", "5")),
        ("F", ("1", "3", "5")),
        ("G", ("2", "3", "5")),
    ]
    doc = _full_skeleton_doc(2, verts, [t for _, t in tris], [name for name, _ in tris])
    return doc


def tetra2_subdiv() -> dict:
    """tetra2 with the triangle 234 stellarly subdivided at a new vertex 6."""
    verts = ["1", "2", "3", "4", "5", "6"]
    tris = [
        ("A", ("1", "2", "3")),
        ("B", ("1", "2", "4")),
        ("C", ("1", "3", "4")),
        ("D1", ("2", "3", "6")),
        ("D2", ("2", "4", "6")),
        ("D3", ("3", "4", "6")),
        ("E", ("1", "2", "5")),
        ("F", ("1", "3", "5")),
        ("G", ("2", "3", "5")),
    ]
    return _full_skeleton_doc(2, verts, [t for _, t in tris], [name for name, _ in tris])


def random_complex(
    n: int,
    v: int,
    density: float,
    seed: int,
    max_top: int | None = None,
    dup_prob: float = 0.1,
) -> dict:
    """Seeded random complex, closed under faces by construction.

    Top simplices are sampled tuple by tuple in lexicographic order (so
    the draw sequence, and hence the file, is a pure function of the
    parameters); a sampled tuple gains a parallel copy with probability
    ``dup_prob``.
    """
    if n < 1 or v < n + 1:
        raise ValueError("random complex needs n >= 1 and v >= n+1 vertices")
    if not 0 <= density <= 1:
        raise ValueError("density must be in [0, 1]")
    rng = random.Random(seed)
    verts = [str(i + 1) for i in range(v)]
    tops: list[tuple[str, ...]] = []
    for tup in combinations(verts, n + 1):
        if rng.random() < density:
            tops.append(tup)
            if rng.random() < dup_prob:
                tops.append(tup)
    if max_top is not None:
        tops = tops[:max_top]
    raw = [
        {"dim": n, "id": f"t{j}", "vertices": list(tup)}
        for j, tup in enumerate(tops)
    ]
    K = complexes.build(n, verts, raw, create_missing_faces=True)
    return K.to_json()


def family(name: str, **params) -> dict:
    """Dispatch by family name, as used by the CLI."""
    if name == "sheets":
        return sheets(int(params["k"]))
    if name == "par-edges":
        return par_edges(int(params["k"]))
    if name == "hollow-simplex":
        return hollow_simplex(int(params["n"]))
    if name == "tetra2":
        return tetra2()
    if name == "tetra2-subdiv":
        return tetra2_subdiv()
    if name == "random":
        return random_complex(
            int(params["n"]),
            int(params["v"]),
            float(params["density"]),
            int(params["seed"]),
            max_top=params.get("max_top"),
        )
    raise ValueError(f"unknown family {name!r}; choose from {FAMILIES}")


def build_family(name: str, **params) -> Complex:
    return complexes.from_json(family(name, **params))
