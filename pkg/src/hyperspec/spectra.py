"""H-spectra of A and Q for G^{k,k/2}, assembled from matrix spectra of subgraphs.

The H-spectrum of ``A(G^{k,k/2})`` as a set is the union of the adjacency
spectra of the connected induced subgraphs of ``G``; for ``Q`` the modified
induced subgraphs (degrees restored by loops) take their place. Both sets
are independent of ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .eigen import DEDUP_TOL, SpectrumSet, nqz_spectral_radius, sym_eigen, sym_eigvals
from .errors import InputError, VerificationError
from .graph import (
    Graph,
    adjacency_matrix,
    enumerate_connected_induced_vertex_sets,
    induced_subgraph,
    modified_induced_subgraph,
    signless_laplacian_matrix,
)
from .power import build_power, lift_vector, project_vector
from .tensor import Kind, TensorOperator, residual

OPERATORS = (Kind.ADJACENCY, Kind.SIGNLESS_LAPLACIAN)


def _check_input(G: Graph, k: int) -> None:
    if G.has_loops:
        raise InputError("H-spectrum assembly needs a loop-free base graph")
    if k < 4 or k % 2:
        raise InputError(f"k must be even and at least 4, got k={k}")


def subgraph_matrix(G: Graph, U, kind) -> np.ndarray:
    """``A(G[U])`` or ``Q`` of the modified induced subgraph on ``U``."""
    kind = Kind.parse(kind)
    if kind is Kind.ADJACENCY:
        return adjacency_matrix(induced_subgraph(G, U))
    if kind is Kind.SIGNLESS_LAPLACIAN:
        return signless_laplacian_matrix(modified_induced_subgraph(G, U))
    raise InputError("only adjacency and signless Laplacian spectra can be assembled")


def merge_spectrum(candidates, tol: float = DEDUP_TOL) -> SpectrumSet:
    """Dedup ``(value, U)`` pairs into a :class:`SpectrumSet`.

    Values chained within ``tol`` of their predecessor form one cluster. A
    cluster is reported by its smallest witness (fewest vertices, then
    lexicographic) together with the value that witness produced.
    """
    ordered = sorted(candidates, key=lambda c: c[0])
    clusters: list[list] = []
    prev = None
    for value, U in ordered:
        if prev is None or value - prev > tol:
            clusters.append([])
        clusters[-1].append((float(value), U))
        prev = value
    values, witnesses = [], []
    for cluster in clusters:
        value, U = min(cluster, key=lambda c: (len(c[1]), c[1], c[0]))
        if values and value - values[-1] <= tol:
            continue
        values.append(value)
        witnesses.append(U)
    return SpectrumSet(values, tol, witnesses)


def h_spectrum(G: Graph, k: int, kind, cap: int | None = None, tol: float = DEDUP_TOL) -> SpectrumSet:
    kind = Kind.parse(kind)
    _check_input(G, k)
    candidates = []
    for U in enumerate_connected_induced_vertex_sets(G, cap):
        for lam in sym_eigvals(subgraph_matrix(G, U, kind)):
            candidates.append((float(lam), U))
    return merge_spectrum(candidates, tol)


def h_spectrum_adjacency(G: Graph, k: int, cap: int | None = None, tol: float = DEDUP_TOL) -> SpectrumSet:
    """H-eigenvalues of ``A(G^{k,k/2})`` as a set, with witness subgraphs."""
    return h_spectrum(G, k, Kind.ADJACENCY, cap, tol)


def h_spectrum_signless_laplacian(
    G: Graph, k: int, cap: int | None = None, tol: float = DEDUP_TOL
) -> SpectrumSet:
    """H-eigenvalues of ``Q(G^{k,k/2})`` as a set; a singleton ``{v}`` contributes ``d_v``."""
    return h_spectrum(G, k, Kind.SIGNLESS_LAPLACIAN, cap, tol)


def lamin_adjacency(G: Graph, k: int) -> float:
    """Least adjacency H-eigenvalue of ``G^{k,k/2}``; equals that of ``A(G)``."""
    _check_input(G, k)
    return float(sym_eigvals(adjacency_matrix(G))[0])


def lamin_signless_laplacian(G: Graph, k: int) -> float:
    _check_input(G, k)
    return float(sym_eigvals(signless_laplacian_matrix(G))[0])


def power_spectral_radius(G: Graph, k: int, kind, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Spectral radius of ``A`` or ``Q`` of ``G^{k,k/2}`` by NQZ, taken per component.

    A disconnected power is not weakly irreducible, so each component with an
    edge is iterated on its own; an isolated vertex contributes 0.
    """
    _check_input(G, k)
    kind = Kind.parse(kind)
    best = 0.0
    seen: set[int] = set()
    adj = G.neighbors()
    for root in range(G.n):
        if root in seen:
            continue
        comp, stack = {root}, [root]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if len(comp) == 1:
            continue
        H, _ = build_power(induced_subgraph(G, comp), k, k // 2)
        best = max(best, nqz_spectral_radius(TensorOperator(H, kind), tol=tol, max_iter=max_iter).lam)
    return best


@dataclass
class LiftCheck:
    operator: Kind
    U: tuple[int, ...]
    lam: float
    residual: float
    projection_error: float
    passed: bool


@dataclass
class LiftReport:
    k: int
    tol: float
    checks: list[LiftCheck] = field(default_factory=list)

    @property
    def failures(self) -> list[LiftCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def values(self, kind) -> list[float]:
        kind = Kind.parse(kind)
        return sorted({c.lam for c in self.checks if c.operator is kind})


def verify_lift_correspondence(
    G: Graph,
    k: int,
    tol: float = 1e-9,
    operators=OPERATORS,
    cap: int | None = None,
    raise_on_failure: bool = True,
    eigenpair_hook: Callable | None = None,
) -> LiftReport:
    """Lift every subgraph eigenpair to ``G^{k,k/2}`` and check it there.

    For each connected induced ``U`` and each eigenpair ``(lam, x)`` of the
    subgraph matrix, ``x`` is zero-extended to ``G``, lifted, and tested
    against the full tensor's eigen-equation. The lift is then projected back
    and must reproduce ``x`` on ``U`` (zero outside) and satisfy the matrix
    eigen-equation. ``eigenpair_hook(lam, x) -> (lam, x)`` may alter each
    pair before lifting; tests use it to inject faults.
    """
    _check_input(G, k)
    H, pm = build_power(G, k, k // 2)
    report = LiftReport(k, tol)
    sets = enumerate_connected_induced_vertex_sets(G, cap)
    for kind in operators:
        kind = Kind.parse(kind)
        T = TensorOperator(H, kind)
        for U in sets:
            M = subgraph_matrix(G, U, kind)
            for pair in sym_eigen(M):
                lam, xu = pair.lam, pair.vector
                if eigenpair_hook is not None:
                    lam, xu = eigenpair_hook(lam, xu)
                x = np.zeros(G.n)
                x[list(U)] = xu
                X = lift_vector(x, pm)
                res = residual(T, lam, X)
                back = project_vector(X, pm)
                proj_err = max(
                    float(np.max(np.abs(back - x))),
                    float(np.max(np.abs(M @ back[list(U)] - lam * back[list(U)]))),
                )
                report.checks.append(LiftCheck(kind, U, lam, res, proj_err, res <= tol and proj_err <= tol))
    if raise_on_failure and not report.passed:
        bad = ", ".join(f"({c.operator.value}, U={list(c.U)}, lam={c.lam:.12g})" for c in report.failures[:10])
        raise VerificationError(f"{len(report.failures)} lifted eigenpairs failed: {bad}", report)
    return report
