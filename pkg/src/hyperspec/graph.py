"""Simple undirected graphs with per-vertex loop counts.

Loops never appear in the edge set; each vertex carries a loop count instead,
so a vertex may hold several loops (the modified induced subgraph of a path
on three vertices puts two loops on the center). Loops add to the degree and
to the diagonal of the signless Laplacian but not to the adjacency matrix.

Matrices are returned as dense, exactly symmetric ``float64`` arrays.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, InputError

DEFAULT_CAP = 16
CAP_ENV_VAR = "HYPERSPEC_CAP"


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``.

    ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``; ``loops``
    has one nonnegative count per vertex. Use :meth:`from_edges` to build one
    from loosely formatted input.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    loops: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {(u, v)} is not a normalized pair in range [0, {self.n})")
            if (u, v) in seen:
                raise InputError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        if tuple(sorted(self.edges)) != tuple(self.edges):
            raise InputError("edges must be sorted; use Graph.from_edges")
        loops = self.loops if self.loops is not None else (0,) * self.n
        if len(loops) != self.n or any(c < 0 for c in loops):
            raise InputError("loops must give one nonnegative count per vertex")
        object.__setattr__(self, "loops", tuple(int(c) for c in loops))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = (), loops=None) -> "Graph":
        """Build a graph, normalizing pair order.

        A pair ``(v, v)`` adds one loop at ``v``. ``loops`` may be a sequence
        of per-vertex counts or a mapping ``vertex -> count``.
        """
        counts = [0] * n
        if isinstance(loops, dict):
            for v, c in loops.items():
                _check_vertex(n, v)
                counts[v] += int(c)
        elif loops is not None:
            if len(loops) != n:
                raise InputError("loops must give one count per vertex")
            counts = [int(c) for c in loops]
        pairs = []
        for u, v in edges:
            u, v = int(u), int(v)
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                counts[u] += 1
            else:
                pairs.append((min(u, v), max(u, v)))
        if len(set(pairs)) != len(pairs):
            dup = next(p for p in pairs if pairs.count(p) > 1)
            raise InputError(f"duplicate edge {dup}")
        return cls(n, tuple(sorted(pairs)), tuple(counts))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def has_loops(self) -> bool:
        return any(self.loops)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> np.ndarray:
        d = np.array(self.loops, dtype=np.int64)
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d


def _check_vertex(n: int, v: int) -> None:
    if not (0 <= v < n):
        raise InputError(f"vertex {v} out of range [0, {n})")


def degree(G: Graph, v: int) -> int:
    """Incident edges plus loops at ``v``."""
    _check_vertex(G.n, v)
    return int(G.degrees()[v])


def max_degree(G: Graph) -> int:
    return int(G.degrees().max()) if G.n else 0


def min_degree(G: Graph) -> int:
    return int(G.degrees().min()) if G.n else 0


def _component_of(adj: list[list[int]], start: int, allowed=None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(G: Graph) -> bool:
    """True iff every pair of vertices is joined by a walk.

    A single vertex counts as connected whatever its loops.
    """
    if G.n < 1:
        raise InputError("connectivity is undefined for the empty graph")
    return len(_component_of(G.neighbors(), 0)) == G.n


def is_bipartite(G: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Return a bipartition ``(V1, V2)`` with every edge crossing, or ``None``.

    Any loop makes the graph non-bipartite. Each component's smallest vertex
    goes to ``V1``.
    """
    if G.has_loops:
        return None
    adj = G.neighbors()
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    v1 = tuple(v for v in range(G.n) if side[v] == 0)
    v2 = tuple(v for v in range(G.n) if side[v] == 1)
    return v1, v2


def _normalize_subset(G: Graph, U: Iterable[int]) -> tuple[int, ...]:
    U = tuple(sorted(set(int(u) for u in U)))
    if not U:
        raise InputError("vertex subset must be nonempty")
    for u in U:
        _check_vertex(G.n, u)
    return U


def induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Subgraph induced by ``U``, relabelled to ``0..|U|-1`` in sorted order of ``U``."""
    U = _normalize_subset(G, U)
    index = {u: i for i, u in enumerate(U)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph(len(U), tuple(sorted(edges)), tuple(G.loops[u] for u in U))


def modified_induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Induced subgraph with compensating loops so every vertex keeps its degree in ``G``."""
    if G.has_loops:
        raise InputError("modified induced subgraphs are defined for loop-free graphs")
    U = _normalize_subset(G, U)
    H = induced_subgraph(G, U)
    full = G.degrees()
    sub = H.degrees()
    loops = tuple(int(full[u] - sub[i]) for i, u in enumerate(U))
    return Graph(H.n, H.edges, loops)


def resolve_cap(cap: int | None = None, default: int = DEFAULT_CAP) -> int:
    """Explicit cap, else the ``HYPERSPEC_CAP`` environment variable, else ``default``."""
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return default


def enumerate_connected_induced_vertex_sets(G: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All nonempty vertex sets inducing a connected subgraph.

    Sets are sorted tuples ordered by size, then lexicographically. Raises
    :class:`CapacityError` when ``G.n`` exceeds the cap.
    """
    cap = resolve_cap(cap)
    if G.n > cap:
        raise CapacityError(
            f"graph has {G.n} vertices, above the enumeration cap of {cap}; "
            f"raise it with --cap or the {CAP_ENV_VAR} environment variable"
        )
    nbr_mask = [0] * G.n
    for u, v in G.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u

    found = []
    for mask in range(1, 1 << G.n):
        low = mask & -mask
        reached = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = nbr_mask[bit.bit_length() - 1] & mask & ~reached
            reached |= new
            frontier |= new
        if reached == mask:
            found.append(tuple(v for v in range(G.n) if mask >> v & 1))
    found.sort(key=lambda U: (len(U), U))
    return found


def adjacency_matrix(G: Graph) -> np.ndarray:
    """0/1 adjacency matrix; loops leave the diagonal at zero."""
    M = np.zeros((G.n, G.n))
    for u, v in G.edges:
        M[u, v] = M[v, u] = 1.0
    return M


def signless_laplacian_matrix(G: Graph) -> np.ndarray:
    """``D + A`` with loop-inclusive degrees on the diagonal."""
    M = adjacency_matrix(G)
    M[np.diag_indices(G.n)] = G.degrees()
    return M


# edge-list text format --------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` then ``m`` lines ``u v`` (``v v`` is a loop)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
        pairs = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise InputError("graph file header must be 'n m' followed by 'u v' lines") from None
    if len(pairs) != m:
        raise InputError(f"header declares {m} edges but {len(pairs)} lines follow")
    if any(len(p) != 2 for p in pairs):
        raise InputError("each edge line must hold exactly two vertices")
    return Graph.from_edges(n, pairs)


def format_graph(G: Graph) -> str:
    lines = []
    for v, c in enumerate(G.loops):
        lines.extend([f"{v} {v}"] * c)
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join([f"{G.n} {len(lines)}", *lines]) + "\n"


def read_graph(path: str | os.PathLike) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc.strerror}") from None
    return parse_graph(text)


def write_graph(G: Graph, path: str | os.PathLike) -> None:
    Path(path).write_text(format_graph(G))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))
