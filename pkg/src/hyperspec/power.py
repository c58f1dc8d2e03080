"""Generalized power hypergraphs and the vector correspondence for s = k/2.

Vertex indexing is canonical: the s-set of base vertex ``v`` is
``v*s .. v*s + s - 1`` and the padding sets of base edges follow in sorted
edge order. The first vertex of each s-set is its designated representative,
the one that carries the sign of a lifted coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class PowerMap:
    """Correspondence between a base graph and its power ``G^{k,s}``."""

    k: int
    s: int
    half_sets: tuple[tuple[int, ...], ...]
    edge_sets: dict[tuple[int, int], tuple[int, ...]]
    n_vertices: int

    @property
    def is_half(self) -> bool:
        return 2 * self.s == self.k

    def representatives(self) -> np.ndarray:
        return np.array([hs[0] for hs in self.half_sets], dtype=np.int64)

    def to_json(self) -> dict:
        """Index ranges per base vertex and base edge, for the CLI sidecar."""
        return {
            "k": self.k,
            "s": self.s,
            "n_vertices": self.n_vertices,
            "vertices": {str(v): list(hs) for v, hs in enumerate(self.half_sets)},
            "edges": [
                {"edge": [u, v], "added": list(es)} for (u, v), es in sorted(self.edge_sets.items())
            ],
        }


def build_power(G: Graph, k: int, s: int) -> tuple[Hypergraph, PowerMap]:
    """Blow each vertex of ``G`` up into an s-set and pad each edge to k vertices.

    A base loop at ``u`` becomes a loop edge equal to the half edge of ``u``,
    which needs ``s == k/2``.
    """
    if k < 3:
        raise InputError(f"power hypergraphs need k >= 3, got k={k}")
    if not 1 <= s <= k / 2:
        raise InputError(f"blow-up size s must satisfy 1 <= s <= k/2, got s={s}, k={k}")
    if G.has_loops and 2 * s != k:
        raise InputError("base graphs with loops can only be blown up with s = k/2")

    half_sets = tuple(tuple(range(v * s, (v + 1) * s)) for v in range(G.n))
    pad = k - 2 * s
    nxt = G.n * s
    edge_sets = {}
    edges = []
    for u, v in G.edges:
        added = tuple(range(nxt, nxt + pad))
        nxt += pad
        edge_sets[(u, v)] = added
        edges.append(half_sets[u] + half_sets[v] + added)
    for u, count in enumerate(G.loops):
        edges.extend([half_sets[u]] * count)
    pm = PowerMap(k, s, half_sets, edge_sets, nxt)
    return Hypergraph(nxt, k, tuple(edges)), pm


def _require_half(pm: PowerMap) -> None:
    if not pm.is_half:
        raise InputError(f"vector lifting needs s = k/2, got k={pm.k}, s={pm.s}")


def lift_vector(x, pm: PowerMap) -> np.ndarray:
    """Spread each base coordinate over its half edge.

    Every vertex of the half edge gets ``|x_v|^(2/k)`` and the representative
    also takes the sign of ``x_v``, so the half edge's product is ``x_v``.
    """
    _require_half(pm)
    x = np.asarray(x, dtype=float)
    if x.shape != (len(pm.half_sets),):
        raise InputError(f"vector has shape {x.shape}, expected ({len(pm.half_sets)},)")
    mag = np.zeros_like(x)
    nz = x != 0
    mag[nz] = np.exp((2.0 / pm.k) * np.log(np.abs(x[nz])))
    X = np.zeros(pm.n_vertices)
    for v, hs in enumerate(pm.half_sets):
        X[list(hs)] = mag[v]
    X[pm.representatives()] *= np.sign(x)
    return X


def project_vector(X, pm: PowerMap) -> np.ndarray:
    """Base coordinate = product of the entries on its half edge."""
    _require_half(pm)
    X = np.asarray(X, dtype=float)
    if X.shape != (pm.n_vertices,):
        raise InputError(f"vector has shape {X.shape}, expected ({pm.n_vertices},)")
    return np.array([np.prod(X[list(hs)]) for hs in pm.half_sets])


def check_half_edge_modulus(X, pm: PowerMap, tol: float = 1e-9) -> np.ndarray:
    """Per base vertex: do all entries of its s-set share one modulus within ``tol``?"""
    X = np.abs(np.asarray(X, dtype=float))
    return np.array([np.ptp(X[list(hs)]) <= tol for hs in pm.half_sets], dtype=bool)
