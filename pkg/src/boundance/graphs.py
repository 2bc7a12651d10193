"""Graph specialization: paths, edge connectivity, pair lists.

Graphs are complexes with n=1 (multigraphs allowed, loops rejected at
build time by the repeated-vertex rule).  The max-flow oracle shares
only the data model with the generic boundance machinery, so agreement
between the two is evidence rather than tautology.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import decide
from .complexes import Chain, Complex, SimplexRef


class NoPath(RuntimeError):
    """Raised when a guaranteed path cannot be extracted (self-check)."""


@dataclass(frozen=True)
class Path:
    """Alternating vertex/edge walk with pairwise distinct edges."""

    vertices: tuple[str, ...]
    edges: tuple[SimplexRef, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges


def _require_graph(K: Complex) -> None:
    if K.n != 1:
        raise ValueError(f"expected a graph (n=1), got n={K.n}")


def _vertex_index(K: Complex, v: str) -> int:
    ref = K.id_ref(v)
    if ref.dim != 0:
        raise ValueError(f"{v!r} is not a vertex")
    return ref.index


def check_path(K: Complex, p: Path) -> None:
    _require_graph(K)
    if len(p.vertices) != len(p.edges) + 1 or not p.vertices:
        raise ValueError("path must alternate t+1 vertices with t edges")
    if len(set(p.edges)) != len(p.edges):
        raise ValueError("path edges must be pairwise distinct")
    for v in p.vertices:
        _vertex_index(K, v)
    for i, e in enumerate(p.edges):
        if e.dim != 1:
            raise ValueError("path edges must be 1-simplices")
        ends = K.record(e).vertices
        if {p.vertices[i], p.vertices[i + 1]} != set(ends):
            raise ValueError(f"edge {K.record(e).id!r} does not join step {i}")


def path_to_chain(K: Complex, p: Path) -> Chain:
    """F2 sum of the path's edges; its boundary is the endpoint sum."""
    check_path(K, p)
    return K.chain_from_refs(1, p.edges)


def _support_adjacency(K: Complex, h: Chain) -> dict[str, list[tuple[int, str]]]:
    adj: dict[str, list[tuple[int, str]]] = {}
    for ref in h.refs():
        a, b = K.record(ref).vertices
        adj.setdefault(a, []).append((ref.index, b))
        adj.setdefault(b, []).append((ref.index, a))
    for lst in adj.values():
        lst.sort()
    return adj


def extract_path(K: Complex, h: Chain, u: str, v: str) -> Path:
    """An actual u-v path using only edges in h's support.

    Requires boundary(h) = u + v (empty when u = v, which yields the
    trivial path).  Among shortest paths the lexicographically smallest
    edge-index sequence is returned.
    """
    _require_graph(K)
    ui, vi = _vertex_index(K, u), _vertex_index(K, v)
    want = 0 if ui == vi else (1 << ui) | (1 << vi)
    if K.boundary(h).mask != want:
        raise ValueError("chain boundary does not match the endpoints")
    if u == v:
        return Path((u,), ())
    adj = _support_adjacency(K, h)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for _, y in adj.get(x, ()):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    if u not in dist:
        raise NoPath(f"no path from {u!r} to {v!r} inside the chain support")
    verts = [u]
    edges = []
    cur = u
    while cur != v:
        step = next(
            (edge, y) for edge, y in adj[cur] if dist.get(y, -1) == dist[cur] - 1
        )
        edges.append(SimplexRef(1, step[0]))
        cur = step[1]
        verts.append(cur)
    return Path(tuple(verts), tuple(edges))


def k_edge_connected_flow(K: Complex, u: str, v: str, k: int) -> bool:
    """Independent oracle: at least k pairwise edge-disjoint u-v paths.

    Unit-capacity augmenting paths on the undirected multigraph, stopping
    as soon as k augmentations succeed.
    """
    _require_graph(K)
    _vertex_index(K, u)
    _vertex_index(K, v)
    if u == v or k <= 0:
        return True
    incident: dict[str, list[tuple[int, str]]] = {}
    ends = []
    for ref in K.refs(1):
        a, b = K.record(ref).vertices
        ends.append((a, b))
        incident.setdefault(a, []).append((ref.index, b))
        incident.setdefault(b, []).append((ref.index, a))
    flow = [0] * K.size(1)  # +1 means flow from ends[e][0] to ends[e][1]
    value = 0
    while value < k:
        parent: dict[str, tuple[int, str]] = {}
        queue = deque([u])
        seen = {u}
        while queue and v not in seen:
            x = queue.popleft()
            for e, y in incident.get(x, ()):
                directed = flow[e] if x == ends[e][0] else -flow[e]
                if y not in seen and directed < 1:
                    seen.add(y)
                    parent[y] = (e, x)
                    queue.append(y)
        if v not in seen:
            return False
        cur = v
        while cur != u:
            e, x = parent[cur]
            flow[e] += 1 if x == ends[e][0] else -1
            cur = x
        value += 1
    return True


def pair_cycles(K: Complex, pairs: Sequence[tuple[str, str]]) -> list[Chain]:
    """0-cycles a + b for each vertex pair; a = a gives the trivial cycle."""
    _require_graph(K)
    out = []
    for a, b in pairs:
        ai, bi = _vertex_index(K, a), _vertex_index(K, b)
        mask = 0 if ai == bi else (1 << ai) | (1 << bi)
        out.append(K.chain_from_mask(0, mask))
    return out


def pairs_boundant(
    K: Complex, pairs: Sequence[tuple[str, str]], k: int, method: str = "primal"
) -> bool:
    """k-boundance of a pair list, via the generic cycle-list machinery."""
    return decide.is_k_boundant(K, pair_cycles(K, pairs), k, method)
