import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_connected_graph
from hyperspec.eigen import (
    SpectrumSet,
    min_form_descent,
    nqz_spectral_radius,
    single_edge_eigenvalues,
    sym_eigen,
    sym_eigvals,
)
from hyperspec.errors import ConvergenceError, InputError
from hyperspec.graph import adjacency_matrix, signless_laplacian_matrix
from hyperspec.hypergraph import Hypergraph
from hyperspec.limits import gen_cycle, gen_path
from hyperspec.power import build_power
from hyperspec.tensor import Kind, TensorOperator, residual


def test_sym_eigen_examples():
    assert np.allclose(sym_eigvals([[0, 1], [1, 0]]), [-1, 1], atol=1e-14)
    assert np.allclose(sym_eigvals([[2, 0], [0, 1]]), [1, 2])
    pairs = sym_eigen(adjacency_matrix(gen_path(3)))
    assert np.allclose([p.lam for p in pairs], [-np.sqrt(2), 0, np.sqrt(2)], atol=1e-13)
    top = pairs[-1].vector
    assert np.allclose(top, [0.5, np.sqrt(0.5), 0.5], atol=1e-13)
    assert sym_eigvals(np.zeros((0, 0))).size == 0
    assert sym_eigvals([[3.5]]).tolist() == [3.5]


def test_sym_eigen_rejects_bad_input():
    with pytest.raises(InputError):
        sym_eigvals([[0, 1], [2, 0]])
    with pytest.raises(InputError):
        sym_eigvals(np.ones((2, 3)))


@settings(max_examples=40, deadline=None)
@given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10))
def test_two_by_two_closed_form(a, b, c):
    mid, rad = (a + c) / 2, np.hypot((a - c) / 2, b)
    assert np.allclose(sym_eigvals([[a, b], [b, c]]), [mid - rad, mid + rad], atol=1e-12 * (1 + rad))


def test_sym_eigen_matches_eigh(rng):
    for n in (1, 3, 8, 20, 45):
        B = rng.normal(size=(n, n))
        M = B + B.T
        pairs = sym_eigen(M)
        lam = np.array([p.lam for p in pairs])
        assert np.allclose(lam, np.linalg.eigvalsh(M), atol=1e-10)
        V = np.column_stack([p.vector for p in pairs])
        assert np.allclose(V.T @ V, np.eye(n), atol=1e-10)
        assert abs(lam.sum() - np.trace(M)) <= 1e-10 * max(1.0, np.abs(M).sum())
        assert max(p.residual for p in pairs) <= 1e-10 * max(1.0, np.abs(lam).max())


def test_sym_eigen_on_graph_matrices(rng):
    for _ in range(10):
        G = random_connected_graph(rng, n_max=10)
        for M in (adjacency_matrix(G), signless_laplacian_matrix(G)):
            assert np.allclose(sym_eigvals(M), np.linalg.eigvalsh(M), atol=1e-10)


def test_spectrum_set():
    S = SpectrumSet((-1.0, 0.0, 2.5), 1e-8, {"-1": [0, 1]})
    assert len(S) == 3 and S.min == -1.0 and S.max == 2.5
    assert S.contains(2.5 + 1e-9) and not S.contains(1.0)
    assert S.to_json()["values"] == [-1.0, 0.0, 2.5]


def test_nqz_examples():
    H, _ = build_power(gen_cycle(3), 4, 2)
    assert abs(nqz_spectral_radius(TensorOperator(H)).lam - 2.0) <= 1e-9
    edge = Hypergraph(4, 4, ((0, 1, 2, 3),))
    assert abs(nqz_spectral_radius(TensorOperator(edge)).lam - 1.0) <= 1e-9
    H, _ = build_power(gen_path(2), 4, 2)
    assert abs(nqz_spectral_radius(TensorOperator(H, Kind.SIGNLESS_LAPLACIAN)).lam - 2.0) <= 1e-9
    H, _ = build_power(gen_path(3), 6, 3)
    pair = nqz_spectral_radius(TensorOperator(H))
    assert abs(pair.lam - np.sqrt(2)) <= 1e-9 and pair.residual <= 1e-9


def test_nqz_reduces_to_matrix_for_k2(rng):
    for _ in range(10):
        G = random_connected_graph(rng, n_min=2, n_max=9)
        H = Hypergraph.from_graph(G)
        for kind, M in ((Kind.ADJACENCY, adjacency_matrix(G)), (Kind.SIGNLESS_LAPLACIAN, signless_laplacian_matrix(G))):
            rho = nqz_spectral_radius(TensorOperator(H, kind), tol=1e-11).lam
            assert abs(rho - np.linalg.eigvalsh(M)[-1]) <= 1e-9


def test_nqz_brackets_are_monotone(rng):
    G = random_connected_graph(rng, n_min=5, n_max=8)
    H, _ = build_power(G, 4, 2)
    history = []
    nqz_spectral_radius(TensorOperator(H, Kind.SIGNLESS_LAPLACIAN), x0=rng.uniform(0.1, 1.0, H.n), history=history)
    lows, highs = np.array(history).T
    assert np.all(np.diff(lows) >= -1e-12) and np.all(np.diff(highs) <= 1e-12)
    assert np.all(lows <= highs + 1e-15)


def test_nqz_errors():
    two = Hypergraph(8, 4, ((0, 1, 2, 3), (4, 5, 6, 7)))
    with pytest.raises(InputError):
        nqz_spectral_radius(TensorOperator(two))
    H, _ = build_power(gen_path(3), 4, 2)
    with pytest.raises(InputError):
        nqz_spectral_radius(TensorOperator(H, Kind.LAPLACIAN))
    with pytest.raises(InputError):
        nqz_spectral_radius(TensorOperator(H), x0=np.r_[0.0, np.ones(H.n - 1)])
    with pytest.raises(ConvergenceError) as info:
        nqz_spectral_radius(TensorOperator(H), x0=np.linspace(0.1, 1.0, H.n), max_iter=2)
    low, high = info.value.bracket
    assert low <= np.sqrt(2) <= high


def _single_edge_vector(d, lam):
    k = len(d)
    gaps = lam - np.asarray(d, dtype=float)
    x = np.sign(gaps) * np.abs(gaps) ** (-1.0 / k)
    if k % 2 == 0 and np.all(gaps < 0):
        x[0] = -x[0]
    return x


@pytest.mark.parametrize(
    "degrees",
    [[1, 1, 1, 1], [0, 0, 0, 0], [2, 1, 1, 1], [1, 1, 1], [3, 1, 2], [2, 2, 1, 1, 1, 1], [1, 1]],
)
def test_single_edge_against_polynomial_roots(degrees):
    d = np.asarray(degrees, dtype=float)
    k = len(d)
    values, n_complex = single_edge_eigenvalues(d)
    coeffs = np.poly(d)
    coeffs[-1] -= 1.0
    real = sorted(r.real for r in np.roots(coeffs) if abs(r.imag) <= 1e-7)
    expected = [r for r in real if k % 2 or np.all(r - d > 0) or np.all(r - d < 0)]
    if k >= 3:
        expected += list(d)
    expected = np.unique(np.round(expected, 9))
    assert np.allclose(values, expected, atol=1e-8)

    op = TensorOperator(Hypergraph(k, k, (tuple(range(k)),)), Kind.SIGNLESS_LAPLACIAN, degree_override=d)
    for lam in values:
        if np.any(np.isclose(lam, d)):
            j = int(np.argmin(np.abs(lam - d)))
            x = np.eye(k)[j]
        else:
            x = _single_edge_vector(d, lam)
        assert residual(op, lam, x) <= 1e-8
    if np.all(d == d[0]):
        assert n_complex == (k - 2 if k % 2 == 0 else k - 1)
    else:
        assert n_complex is None


def test_single_edge_examples():
    values, n_complex = single_edge_eigenvalues([1, 1, 1, 1])
    assert np.allclose(values, [0, 1, 2]) and n_complex == 2
    values, _ = single_edge_eigenvalues([0, 0, 0, 0])
    assert np.allclose(values, [-1, 0, 1])
    with pytest.raises(InputError):
        single_edge_eigenvalues([1])


def test_form_descent_finds_stationary_points(rng):
    H, _ = build_power(gen_cycle(3), 4, 2)
    T = TensorOperator(H)
    for _ in range(5):
        pair = min_form_descent(T, rng.normal(size=H.n))
        assert pair.residual <= 1e-8
        assert pair.lam >= -1.0 - 1e-8
    edge = TensorOperator(Hypergraph(4, 4, ((0, 1, 2, 3),)))
    pair = min_form_descent(edge, [1.0, 1.0, 1.0, -1.0])
    assert abs(pair.lam + 1.0) <= 1e-8


def test_form_descent_errors():
    odd = TensorOperator(Hypergraph(3, 3, ((0, 1, 2),)))
    with pytest.raises(InputError):
        min_form_descent(odd, np.ones(3))
    H, _ = build_power(gen_path(2), 4, 2)
    with pytest.raises(InputError):
        min_form_descent(TensorOperator(H), np.zeros(H.n))
