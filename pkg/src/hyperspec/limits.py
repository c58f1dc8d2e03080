"""Graph families and limit-point experiments for least adjacency H-eigenvalues."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath
import numpy as np
from scipy.optimize import bisect

from .eigen import sym_eigen, sym_eigvals
from .errors import InputError
from .graph import Graph, adjacency_matrix
from .power import build_power, lift_vector
from .tensor import Kind, TensorOperator, residual

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0
LIMIT_TARGET = math.sqrt(2.0 + math.sqrt(5.0))  # golden mean to the power 3/2


def gen_path(n: int) -> Graph:
    if n < 1:
        raise InputError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_caterpillar(pendants: Sequence[int]) -> Graph:
    """Path ``0..len-1`` with ``pendants[j]`` leaves hung on spine vertex ``j``.

    Leaves are numbered after the spine, in spine order.
    """
    if not pendants:
        raise InputError("caterpillar needs at least one spine vertex")
    if any(p < 0 for p in pendants):
        raise InputError("pendant counts must be nonnegative")
    spine = len(pendants)
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for j, count in enumerate(pendants):
        for _ in range(count):
            edges.append((j, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def gen_cycle_plus_pendant(n: int, allow_even: bool = False) -> Graph:
    """Cycle on ``1..n`` with the pendant vertex ``0`` attached to vertex ``1``."""
    if n < 3:
        raise InputError("the cycle needs at least three vertices")
    if n % 2 == 0 and not allow_even:
        raise InputError("cycle length must be odd (pass allow_even=True to explore even cycles)")
    edges = [(0, 1)] + [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph.from_edges(n + 1, edges)


def gen_opened_tree(m: int) -> Graph:
    """``C_{2m+1} + e`` with the cycle edge opposite the pendant, ``(m+1, m+2)``, removed."""
    G = gen_cycle_plus_pendant(2 * m + 1)
    return Graph.from_edges(G.n, [e for e in G.edges if e != (m + 1, m + 2)])


@dataclass(frozen=True)
class LimitSequence:
    n: int
    beta: float
    alpha: float
    target: float = LIMIT_TARGET


def _p(n: int, x: float) -> float:
    # x^{n+1} - (1 + x + ... + x^{n-1}) by Horner
    acc = 1.0
    for _ in range(n - 1):
        acc = acc * x + 1.0
    return x ** (n + 1) - acc


def beta_alpha(n: int, xtol: float = 1e-13) -> LimitSequence:
    """Positive root ``beta`` of ``x^{n+1} - (1 + ... + x^{n-1})`` and ``alpha = sqrt(beta) + 1/sqrt(beta)``."""
    if n < 1:
        raise InputError("sequence index must be at least 1")
    lo, hi = 1.0, 2.0
    f_lo, f_hi = _p(n, lo), _p(n, hi)
    if f_lo > 0 or f_hi <= 0:
        raise ArithmeticError(f"bracket [1, 2] does not isolate the root of P_{n}")
    beta = lo if f_lo == 0 else bisect(lambda x: _p(n, x), lo, hi, xtol=xtol)
    alpha = math.sqrt(beta) + 1.0 / math.sqrt(beta)
    return LimitSequence(n, beta, alpha)


def _folded_squares(m: int, closed: bool) -> tuple[list[int], list[int]]:
    """Diagonal and squared off-diagonal of ``A`` restricted to the reflection-symmetric subspace.

    Basis: ``v0``, ``v1``, then ``(v_j + v_{2m+3-j})/sqrt(2)`` for ``j = 2..m+1``.
    The least eigenvector of both ``C_{2m+1}+e`` and ``T_{2m+1}`` lies in this
    subspace, so the folded tridiagonal matrix has the same least eigenvalue.
    """
    diag = [0] * (m + 2)
    if closed:
        diag[-1] = 1  # the edge v_{m+1} v_{m+2} folds onto the diagonal
    sq = [1, 2] + [1] * (m - 1)
    return diag, sq


def _count_below(diag, sq, x) -> int:
    # Sturm count: negative pivots of the LDL^T factorization of (M - x I)
    count = 0
    d = diag[0] - x
    for i in range(len(diag)):
        if i:
            d = diag[i] - x - sq[i - 1] / d
        if d == 0:
            d = mpmath.mpf(2) ** (-4 * mpmath.mp.prec)
        if d < 0:
            count += 1
    return count


def certified_lamin(m: int, closed: bool, dps: int | None = None) -> mpmath.mpf:
    """Least adjacency eigenvalue of ``C_{2m+1}+e`` (``closed``) or ``T_{2m+1}`` to ``dps`` digits.

    Bisection on the Sturm count of the folded tridiagonal matrix, in
    ``mpmath`` arithmetic. The default precision scales with ``m`` so the
    exponentially small difference between the two graphs stays resolved.
    """
    dps = dps if dps is not None else 25 + m // 4
    diag, sq = _folded_squares(m, closed)
    with mpmath.workdps(dps + 10):
        lo, hi = mpmath.mpf(-3), mpmath.mpf(0)
        eps = mpmath.mpf(10) ** (-dps)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            if _count_below(diag, sq, mid) >= 1:
                hi = mid
            else:
                lo = mid
        return (lo + hi) / 2


@dataclass
class ExperimentRow:
    m: int
    lamin_T: float
    lamin_Ce: float
    gap: float
    target: float
    rho_T_above_2: bool
    bracket_float: bool
    difference: float | None = None
    bracket_certified: bool | None = None
    lift_residual: float | None = None

    def csv_fields(self) -> list:
        return [self.m, self.lamin_T, self.lamin_Ce, self.gap, self.target]


def convergence_experiment(
    m_max: int,
    m_min: int = 1,
    certify: bool = True,
    lift_check: Sequence[int] = (),
    k: int = 4,
) -> list[ExperimentRow]:
    """Least adjacency eigenvalues of ``C_{2m+1}+e`` against the opened tree ``T_{2m+1}``.

    ``lamin_T`` and ``lamin_Ce`` come from the Jacobi solver. ``bracket_float``
    tests ``lamin_T < lamin_Ce < lamin_T + 2/(2m+1)`` on those doubles; past
    ``m`` of about 60 the true difference drops below double resolution and
    the float test becomes meaningless. With ``certify`` the same bracket is
    decided on high-precision values (``difference`` is ``lamin_Ce - lamin_T``
    from that computation). For ``m`` in ``lift_check`` the least eigenvector
    of ``C_{2m+1}+e`` is lifted to the power hypergraph and its tensor
    residual stored.
    """
    if m_max < 1 or m_min < 1:
        raise InputError("m must be at least 1")
    rows = []
    for m in range(m_min, m_max + 1):
        Ce = gen_cycle_plus_pendant(2 * m + 1)
        T = gen_opened_tree(m)
        lt = float(sym_eigvals(adjacency_matrix(T))[0])
        lc = float(sym_eigvals(adjacency_matrix(Ce))[0])
        gap = 2.0 / (2 * m + 1)
        row = ExperimentRow(m, lt, lc, gap, -LIMIT_TARGET, -lt > 2.0, lt < lc < lt + gap)
        if certify:
            hp_t = certified_lamin(m, closed=False)
            hp_c = certified_lamin(m, closed=True)
            with mpmath.workdps(25 + m // 4):
                row.difference = float(hp_c - hp_t)
                row.bracket_certified = bool(hp_t < hp_c < hp_t + mpmath.mpf(2) / (2 * m + 1))
        if m in lift_check:
            row.lift_residual = least_eigenpair_lift_residual(Ce, k)
        rows.append(row)
    return rows


def least_eigenpair_lift_residual(G: Graph, k: int = 4) -> float:
    """Tensor residual on ``A(G^{k,k/2})`` of the lifted least eigenvector of ``A(G)``."""
    pair = sym_eigen(adjacency_matrix(G))[0]
    H, pm = build_power(G, k, k // 2)
    return residual(TensorOperator(H, Kind.ADJACENCY), pair.lam, lift_vector(pair.vector, pm))


def least_eigenvector(G: Graph) -> np.ndarray:
    """Least adjacency eigenvector, signed so vertex 0 is nonnegative."""
    x = sym_eigen(adjacency_matrix(G))[0].vector
    return -x if x[0] < 0 else x
