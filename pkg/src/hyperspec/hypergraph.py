"""k-uniform hypergraphs that may carry loops (edges with fewer than k vertices)."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, InputError
from .graph import Graph

ODD_BIPARTITE_CAP = 20


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on vertices ``0..n-1`` whose full edges have exactly ``k`` vertices.

    Each edge is stored as a sorted tuple. Edges with fewer than ``k``
    vertices are loops; a loop may be repeated (a base vertex with two loops
    blows up to the same half edge twice), full edges may not.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise InputError(f"edge cardinality k must be at least 2, got {self.k}")
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        edges = tuple(tuple(sorted(int(v) for v in e)) for e in self.edges)
        full = set()
        for e in edges:
            if not 1 <= len(e) <= self.k:
                raise InputError(f"edge {e} has size {len(e)}, expected 1..{self.k}")
            if len(set(e)) != len(e):
                raise InputError(f"edge {e} repeats a vertex")
            if e[0] < 0 or e[-1] >= self.n:
                raise InputError(f"edge {e} has a vertex out of range [0, {self.n})")
            if len(e) == self.k:
                if e in full:
                    raise InputError(f"duplicate edge {e}")
                full.add(e)
        object.__setattr__(self, "edges", edges)

    @property
    def full_edges(self) -> list[tuple[int, ...]]:
        return [e for e in self.edges if len(e) == self.k]

    @property
    def loop_edges(self) -> list[tuple[int, ...]]:
        return [e for e in self.edges if len(e) < self.k]

    def degrees(self) -> np.ndarray:
        """Loop-inclusive degree of every vertex."""
        d = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            d[list(e)] += 1
        return d

    @classmethod
    def from_graph(cls, G: Graph) -> "Hypergraph":
        """View a graph as a 2-uniform hypergraph (loops become singleton edges)."""
        loops = [(v,) for v, c in enumerate(G.loops) for _ in range(c)]
        return cls(G.n, 2, tuple(G.edges) + tuple(loops))


def h_degree(H: Hypergraph, v: int) -> int:
    if not 0 <= v < H.n:
        raise InputError(f"vertex {v} out of range [0, {H.n})")
    return sum(1 for e in H.edges if v in e)


def h_is_connected(H: Hypergraph) -> bool:
    """Connectivity by walks through shared edges (loops never join two vertices)."""
    if H.n < 1:
        raise InputError("connectivity is undefined for the empty hypergraph")
    incident: list[list[int]] = [[] for _ in range(H.n)]
    for j, e in enumerate(H.edges):
        for v in e:
            incident[v].append(j)
    seen_v = {0}
    seen_e = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for j in incident[v]:
            if j in seen_e:
                continue
            seen_e.add(j)
            for w in H.edges[j]:
                if w not in seen_v:
                    seen_v.add(w)
                    queue.append(w)
    return len(seen_v) == H.n


def is_odd_bipartite(H: Hypergraph, cap: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Exhaustively search for a bipartition meeting every edge oddly on both sides.

    Vertex 0 is pinned to ``V1`` and vertices are assigned in index order,
    ``V1`` first, so the first witness found is the lexicographically least
    side assignment. A partial assignment is abandoned as soon as an edge has
    all its vertices assigned with an even count in ``V1``.
    """
    cap = ODD_BIPARTITE_CAP if cap is None else cap
    if H.k % 2:
        raise InputError(f"odd-bipartiteness needs even k, got k={H.k}")
    if H.loop_edges:
        raise InputError("odd-bipartiteness is not defined for hypergraphs with loops")
    if H.n > cap:
        raise CapacityError(f"hypergraph has {H.n} vertices, above the odd-bipartite search cap of {cap}")
    if H.n == 0:
        return (), ()

    # edges become checkable once their largest vertex is assigned
    closing: list[list[int]] = [[] for _ in range(H.n)]
    masks = []
    for j, e in enumerate(H.edges):
        closing[e[-1]].append(j)
        masks.append(sum(1 << v for v in e))

    def extend(v: int, in_v2: int) -> int | None:
        # in_v2 holds the V2 membership bits of vertices 0..v-1
        if v == H.n:
            return in_v2
        for bit in (0, 1):
            if v == 0 and bit:
                break
            trial = in_v2 | (bit << v)
            if all((H.k - (masks[j] & trial).bit_count()) % 2 == 1 for j in closing[v]):
                found = extend(v + 1, trial)
                if found is not None:
                    return found
        return None

    witness = extend(0, 0)
    if witness is None:
        return None
    v1 = tuple(v for v in range(H.n) if not witness >> v & 1)
    v2 = tuple(v for v in range(H.n) if witness >> v & 1)
    return v1, v2


# hypergraph text format ------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse ``n k m`` followed by ``m`` lines of sorted edge vertices."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty hypergraph file")
    try:
        n, k, m = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise InputError("hypergraph header must be 'n k m' followed by edge lines") from None
    if len(edges) != m:
        raise InputError(f"header declares {m} edges but {len(edges)} lines follow")
    return Hypergraph(n, k, tuple(edges))


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.k} {len(H.edges)}"]
    lines.extend(" ".join(str(v) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str | os.PathLike) -> Hypergraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read hypergraph file {path}: {exc.strerror}") from None
    return parse_hypergraph(text)


def write_hypergraph(H: Hypergraph, path: str | os.PathLike) -> None:
    Path(path).write_text(format_hypergraph(H))


def hypergraph_from_edges(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    return Hypergraph(n, k, tuple(tuple(e) for e in edges))
