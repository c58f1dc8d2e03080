"""Adjacency, Laplacian and signless Laplacian tensors as implicit operators.

Entries are never materialized. Because the adjacency entry ``1/(k-1)!`` is
spread over all orderings of an edge, ``(A x^{k-1})_v`` collapses to the sum
over edges ``e`` containing ``v`` of the product of ``x`` over ``e - {v}``.
Loop edges never enter the adjacency part; they only raise degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InputError
from .hypergraph import Hypergraph


class Kind(enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless-laplacian"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("_", "-"))
        except ValueError:
            raise InputError(f"unknown operator kind {value!r}") from None


@dataclass(frozen=True, eq=False)
class TensorOperator:
    """A hypergraph tensor of order ``host.k`` acting on real vectors.

    ``degree_override`` replaces the host's degrees on the diagonal; principal
    subtensors of L and Q use it to keep the degrees of the parent hypergraph.
    """

    host: Hypergraph
    kind: Kind = Kind.ADJACENCY
    degree_override: np.ndarray | None = None
    _edges: np.ndarray = field(init=False, repr=False, compare=False)
    _diag: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        full = sorted(self.host.full_edges)
        edges = np.array(full, dtype=np.int64).reshape(len(full), self.host.k)
        object.__setattr__(self, "_edges", edges)
        if self.degree_override is not None:
            diag = np.asarray(self.degree_override, dtype=float).copy()
            if diag.shape != (self.host.n,):
                raise InputError("degree_override needs one entry per host vertex")
        else:
            diag = self.host.degrees().astype(float)
        diag.setflags(write=False)
        object.__setattr__(self, "_diag", diag)

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def k(self) -> int:
        return self.host.k

    @property
    def degrees(self) -> np.ndarray:
        return self._diag

    def _check(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise InputError(f"vector has shape {x.shape}, operator dimension is {self.n}")
        return x

    def adjacency_part(self, x) -> np.ndarray:
        """``A x^{k-1}``: per vertex, sum over its edges of the product of the other entries."""
        x = self._check(x)
        E = self._edges
        if not len(E):
            return np.zeros(self.n)
        vals = x[E]
        ones = np.ones((len(E), 1))
        # exclusive products via prefix/suffix cumprods, exact with zeros present
        prefix = np.hstack([ones, np.cumprod(vals[:, :-1], axis=1)])
        suffix = np.hstack([np.cumprod(vals[:, :0:-1], axis=1)[:, ::-1], ones])
        return np.bincount(E.ravel(), weights=(prefix * suffix).ravel(), minlength=self.n)

    def apply(self, x) -> np.ndarray:
        """``T x^{k-1}``."""
        x = self._check(x)
        a = self.adjacency_part(x)
        if self.kind is Kind.ADJACENCY:
            return a
        dx = self._diag * x ** (self.k - 1)
        return dx - a if self.kind is Kind.LAPLACIAN else dx + a

    def form(self, x) -> float:
        """``T x^k`` summed edge by edge."""
        x = self._check(x)
        edge_sum = self.k * float(np.prod(x[self._edges], axis=1).sum()) if len(self._edges) else 0.0
        if self.kind is Kind.ADJACENCY:
            return edge_sum
        diag_sum = float(np.dot(self._diag, x**self.k))
        return diag_sum - edge_sum if self.kind is Kind.LAPLACIAN else diag_sum + edge_sum


def apply(T: TensorOperator, x) -> np.ndarray:
    return T.apply(x)


def form(T: TensorOperator, x) -> float:
    return T.form(x)


def residual(T: TensorOperator, lam: float, x) -> float:
    """Max-norm eigen-equation defect after scaling ``x`` to unit max-norm."""
    x = T._check(x)
    scale = np.max(np.abs(x)) if x.size else 0.0
    if scale == 0:
        raise InputError("residual of the zero vector is undefined")
    x = x / scale
    return float(np.max(np.abs(T.apply(x) - lam * x ** (T.k - 1))))


def principal_subtensor(T: TensorOperator, S) -> tuple[TensorOperator, tuple[int, ...]]:
    """Restrict ``T`` to the vertex set ``S``.

    Returns the operator, relabelled to ``0..|S|-1`` in sorted order, and the
    sorted ``S`` that gives the relabelling. Edges leaving ``S`` are dropped;
    for L and Q the diagonal keeps the parent's degrees.
    """
    S = tuple(sorted(set(int(v) for v in S)))
    if not S:
        raise InputError("principal subtensor needs a nonempty vertex set")
    if S[0] < 0 or S[-1] >= T.n:
        raise InputError("principal subtensor vertex out of range")
    index = {v: i for i, v in enumerate(S)}
    edges = tuple(tuple(index[v] for v in e) for e in T.host.edges if all(v in index for v in e))
    host = Hypergraph(len(S), T.k, edges)
    override = None if T.kind is Kind.ADJACENCY else T.degrees[list(S)]
    return TensorOperator(host, T.kind, override), S


def is_weakly_irreducible(T: TensorOperator) -> bool:
    """Strong connectivity of the digraph of positive off-diagonal entries."""
    if T.kind is Kind.LAPLACIAN:
        raise InputError("weak irreducibility is only defined here for nonnegative tensors")
    if T.n <= 1:
        return True
    E = T._edges
    if not len(E):
        return False
    rows, cols = [], []
    for i in range(T.k):
        for j in range(T.k):
            if i != j:
                rows.append(E[:, i])
                cols.append(E[:, j])
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(T.n, T.n))
    ncomp, _ = connected_components(graph, directed=True, connection="strong")
    return ncomp == 1
