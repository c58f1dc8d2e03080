"""Eigensolvers: cyclic Jacobi for symmetric matrices, shifted NQZ power
iteration for nonnegative tensors, the single-edge characteristic equation,
and projected descent of the tensor form on the unit k-sphere."""

from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np
from scipy.optimize import bisect

from .errors import ConvergenceError, InputError
from .tensor import Kind, TensorOperator, is_weakly_irreducible, residual

JACOBI_TOL = 1e-12
BISECT_TOL = 1e-12
DEDUP_TOL = 1e-8
OUTPUT_ZERO = 1e-12


@dataclass
class EigenPair:
    lam: float
    vector: np.ndarray
    residual: float


def snap_zero(v: float, floor: float = OUTPUT_ZERO) -> float:
    """Rounding noise around zero (Jacobi leaves ~1e-17) is reported as exactly 0."""
    return 0.0 if abs(v) < floor else float(v)


@dataclass
class SpectrumSet:
    """Sorted real eigenvalues, distinct up to ``tol``, each with a witness vertex set."""

    values: list[float]
    tol: float = DEDUP_TOL
    provenance: list[tuple[int, ...]] = field(default_factory=list)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def min(self) -> float:
        return self.values[0]

    @property
    def max(self) -> float:
        return self.values[-1]

    def contains(self, value: float, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return any(abs(v - value) <= tol for v in self.values)

    def to_json(self, digits: int = 12) -> dict:
        return {
            "values": [float(f"{snap_zero(v):.{digits}g}") for v in self.values],
            "provenance": [list(U) for U in self.provenance],
        }


# dense symmetric matrices ---------------------------------------------------


@numba.njit(cache=True)
def _jacobi(a, v, want_vectors, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if np.sqrt(2.0 * off) <= tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - s * arq
                    a[r, q] = s * arp + c * arq
                for r in range(n):
                    apr = a[p, r]
                    aqr = a[q, r]
                    a[p, r] = c * apr - s * aqr
                    a[q, r] = s * apr + c * aqr
                a[p, q] = 0.0
                a[q, p] = 0.0
                if want_vectors:
                    for r in range(n):
                        vrp = v[r, p]
                        vrq = v[r, q]
                        v[r, p] = c * vrp - s * vrq
                        v[r, q] = s * vrp + c * vrq
    return -1


def _as_symmetric(M) -> np.ndarray:
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise InputError("matrix is not symmetric")
    return M


def _jacobi_diagonalize(M, want_vectors: bool, tol: float, max_sweeps: int = 100):
    a = _as_symmetric(M)
    n = a.shape[0]
    v = np.eye(n)
    if n > 1 and _jacobi(a, v, want_vectors, tol, max_sweeps) < 0:
        raise ConvergenceError(f"Jacobi sweeps did not reach off-diagonal norm {tol}")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def sym_eigvals(M, tol: float = JACOBI_TOL) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix (Jacobi, no vector accumulation)."""
    w, _ = _jacobi_diagonalize(M, False, tol)
    return w


def sym_eigen(M, tol: float = JACOBI_TOL) -> list[EigenPair]:
    """All eigenpairs of a symmetric matrix by cyclic Jacobi rotations.

    Eigenvalues come out ascending; vectors are orthonormal, with the sign
    fixed so the first entry of largest modulus is positive.
    """
    M = _as_symmetric(M)
    w, V = _jacobi_diagonalize(M, True, tol)
    pairs = []
    for i, lam in enumerate(w):
        x = V[:, i]
        pivot = np.argmax(np.abs(x) > np.max(np.abs(x)) - 1e-12)
        if x[pivot] < 0:
            x = -x
        res = float(np.max(np.abs(M @ x - lam * x))) if len(x) else 0.0
        pairs.append(EigenPair(float(lam), x, res))
    return pairs


# nonnegative tensors --------------------------------------------------------


def nqz_spectral_radius(
    T: TensorOperator,
    tol: float = 1e-10,
    max_iter: int = 100_000,
    x0=None,
    history: list | None = None,
) -> EigenPair:
    """Spectral radius and Perron vector of a weakly irreducible nonnegative tensor.

    Iterates on ``T + I``; the Collatz-Wielandt ratios ``(T x^{k-1})_v / x_v^{k-1}``
    bracket the radius and the loop stops once the bracket is narrower than
    ``tol``. Pass a list as ``history`` to collect the ``(low, high)`` brackets.
    """
    if T.kind is Kind.LAPLACIAN:
        raise InputError("NQZ iteration needs a nonnegative tensor")
    if not is_weakly_irreducible(T):
        raise InputError("NQZ iteration needs a weakly irreducible tensor")
    k = T.k
    x = np.ones(T.n) if x0 is None else np.asarray(x0, dtype=float).copy()
    if np.any(x <= 0):
        raise InputError("NQZ start vector must be strictly positive")
    x /= x.max()
    low = high = np.nan
    for _ in range(max_iter):
        xk = x ** (k - 1)
        y = T.apply(x) + xk
        ratio = y / xk
        low, high = ratio.min() - 1.0, ratio.max() - 1.0
        if history is not None:
            history.append((low, high))
        if high - low <= tol:
            lam = 0.5 * (low + high)
            return EigenPair(float(lam), x, residual(T, lam, x))
        x = y ** (1.0 / (k - 1))
        x /= x.max()
    raise ConvergenceError(
        f"NQZ iteration did not converge in {max_iter} steps; bracket [{low}, {high}]",
        bracket=(float(low), float(high)),
    )


def single_edge_eigenvalues(degrees) -> tuple[list[float], int | None]:
    """Real H-eigenvalues of ``D + A`` restricted to one k-edge with the given diagonal.

    Eigenvectors without zero entries force ``prod(lam - d_i) = 1``; eigenvectors
    with a zero entry force ``lam = d_j`` (possible only for ``k >= 3``). For
    even ``k`` a root yields a real eigenvector only when all ``lam - d_i``
    share a sign. Returns the sorted real H-eigenvalues and, when all degrees
    are equal, the number of non-real eigenvalues ``d + omega``, ``omega^k = 1``.
    """
    d = np.asarray(degrees, dtype=float)
    k = len(d)
    if k < 2:
        raise InputError("an edge needs at least two vertices")

    def f(lam):
        return float(np.prod(lam - d)) - 1.0

    lo, hi = d.min() - 1.0, d.max() + 1.0
    grid = np.unique(np.concatenate([np.linspace(lo, hi, 64 * k + 1), d]))
    fv = [f(t) for t in grid]
    roots = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], fv[:-1], fv[1:]):
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0:
            roots.append(bisect(f, a, b, xtol=BISECT_TOL))
    if fv[-1] == 0.0:
        roots.append(grid[-1])

    values = []
    for lam in roots:
        gaps = lam - d
        if k % 2 == 1 or np.all(gaps > 0) or np.all(gaps < 0):
            values.append(float(lam))
    if k >= 3:
        values.extend(float(v) for v in d)
    values.sort()
    distinct = []
    for v in values:
        if not distinct or v - distinct[-1] > BISECT_TOL * 10:
            distinct.append(v)

    n_complex = None
    if np.all(d == d[0]):
        n_complex = k - (2 if k % 2 == 0 else 1)
    return distinct, n_complex


def min_form_descent(
    T: TensorOperator, x0, tol: float = 1e-8, max_iter: int = 200_000
) -> EigenPair:
    """Locally minimize ``T x^k`` over the unit k-sphere by projected gradient steps.

    The stationarity condition on the sphere is the eigen-equation with
    ``lam = T x^k``, so the returned pair has residual at most ``tol``.
    This finds a local minimum only.
    """
    k = T.k
    if k % 2:
        raise InputError(f"form descent needs even k, got k={k}")
    x = np.asarray(x0, dtype=float).copy()
    norm = np.sum(x**k) ** (1.0 / k)
    if norm == 0:
        raise InputError("start vector must be nonzero")
    x /= norm
    f = T.form(x)
    g = T.apply(x) - f * x ** (k - 1)
    eta = 1.0
    for _ in range(max_iter):
        res = residual(T, f, x)
        if res <= tol:
            return EigenPair(float(f), x, res)
        gg = float(g @ g)
        # once f is flat to rounding, fall back to shrinking the gradient
        slack = 8 * np.finfo(float).eps * max(1.0, abs(f))
        while True:
            y = x - eta * g
            y /= np.sum(y**k) ** (1.0 / k)
            fy = T.form(y)
            gy = T.apply(y) - fy * y ** (k - 1)
            if fy <= f - 1e-4 * eta * k * gg or (fy <= f + slack and gy @ gy < gg):
                break
            eta *= 0.5
            if eta < 1e-18:
                raise ConvergenceError(f"line search stalled at residual {res:.3g}")
        x, f, g = y, fy, gy
        eta = min(eta * 2.0, 1e3)
    raise ConvergenceError(f"form descent did not converge in {max_iter} steps")
