import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rel_fro
from test_decomposition import check_decomposition
from projssa import signals
from projssa.decomposition import COLUMN_PROJECTION, ROW_PROJECTION, SVD, svd_expand
from projssa.errors import DegreeTooLarge, DimensionMismatch, EmptyBasis, SSAError
from projssa.projection import (
    ProjectionBasis,
    ProjectionSpec,
    keeps_matrix,
    orthonormalize,
    pi_both,
    pi_col,
    pi_row,
    polynomial_basis,
    proj_ssa,
    proj_ssa_decompose,
    project_cols,
    project_rows,
)
from projssa.reconstruction import reconstruct_trend
from projssa.series import embed, hankelize


def trajectory_bases(x, L):
    """Orthonormal bases of the column and row spaces of the trajectory matrix."""
    triples = svd_expand(embed(x, L), rank_tol=1e-10)
    col = ProjectionBasis(np.column_stack([t.left for t in triples]))
    row = ProjectionBasis(np.column_stack([t.right for t in triples]))
    return col, row


# --- bases -------------------------------------------------------------------

def test_polynomial_basis_degree0():
    b = polynomial_basis(3, 0)
    np.testing.assert_allclose(b.vectors[:, 0], np.ones(3) / np.sqrt(3), rtol=1e-15)


def test_polynomial_basis_degree1():
    b = polynomial_basis(3, 1)
    np.testing.assert_allclose(b.vectors[:, 0], np.ones(3) / np.sqrt(3), atol=1e-15)
    np.testing.assert_allclose(b.vectors[:, 1], np.array([-1, 0, 1]) / np.sqrt(2), atol=1e-15)


def test_polynomial_basis_full_space(rng):
    b = polynomial_basis(5, 4)
    assert b.count == 5
    v = rng.normal(size=5)
    np.testing.assert_allclose(b.project(v), v, atol=1e-13)


@pytest.mark.parametrize("M,d", [(10, 3), (100, 3), (100, 20), (40, 39)])
def test_polynomial_basis_orthonormal_and_spans_monomials(M, d):
    b = polynomial_basis(M, d)
    np.testing.assert_allclose(b.vectors.T @ b.vectors, np.eye(d + 1), atol=1e-12)
    n = np.arange(1, M + 1) / M
    for j in range(min(d, 6) + 1):
        mono = n ** j
        assert np.linalg.norm(b.project(mono) - mono) <= 1e-10 * np.linalg.norm(mono)


def test_polynomial_basis_degree_too_large():
    with pytest.raises(DegreeTooLarge):
        polynomial_basis(4, 4)


def test_orthonormalize_examples():
    np.testing.assert_allclose(orthonormalize([(2, 0), (0, 3)]).vectors, np.eye(2))
    b = orthonormalize([(1, 1), (2, 2)])
    assert b.count == 1 and b.dropped == 1
    np.testing.assert_allclose(b.vectors[:, 0], np.ones(2) / np.sqrt(2))
    b = orthonormalize([(1, 2, 3), (1, 1, 1)])
    assert b.count == 2
    np.testing.assert_allclose(b.vectors[:, 0], np.array([1, 2, 3]) / np.sqrt(14), rtol=1e-15)
    # hand Gram-Schmidt: (1,1,1) - 6/14 (1,2,3) = (8,2,-4)/14
    np.testing.assert_allclose(b.vectors[:, 1], np.array([4, 1, -2]) / np.sqrt(21), atol=1e-15)


def test_orthonormalize_errors():
    with pytest.raises(EmptyBasis):
        orthonormalize([])
    with pytest.raises(EmptyBasis):
        orthonormalize([(0.0, 0.0)])
    with pytest.raises(DimensionMismatch):
        orthonormalize([(1.0, 0.0), (1.0, 0.0, 0.0)])


def test_basis_rejects_non_orthonormal():
    with pytest.raises(SSAError):
        ProjectionBasis(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_spec_needs_a_basis():
    with pytest.raises(EmptyBasis):
        ProjectionSpec()


# --- projectors ----------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(st.integers(2, 15), st.integers(2, 15), st.data())
def test_projector_laws(L, K, data):
    seed = data.draw(st.integers(0, 2**32 - 1))
    r = np.random.default_rng(seed)
    q = data.draw(st.integers(1, K))
    p = data.draw(st.integers(1, L))
    row = orthonormalize(list(r.normal(size=(q, K))))
    col = orthonormalize(list(r.normal(size=(p, L))))
    a, b = r.normal(size=(L, K)), r.normal(size=(L, K))
    scale = np.linalg.norm(a) * np.linalg.norm(b)
    for proj in (lambda m: pi_row(m, row), lambda m: pi_col(m, col)):
        pa = proj(a)
        assert rel_fro(proj(pa), pa) <= 1e-10 if np.linalg.norm(pa) else True
        assert abs(np.sum(pa * b) - np.sum(a * proj(b))) <= 1e-10 * scale
    commutator = pi_col(pi_row(a, row), col) - pi_row(pi_col(a, col), row)
    assert np.linalg.norm(commutator) <= 1e-10 * np.linalg.norm(a)
    spec = ProjectionSpec(row, col)
    alt = pi_row(a, row) + pi_col(a, col) - pi_col(pi_row(a, row), col)
    assert rel_fro(pi_both(a, spec), alt) <= 1e-10


def test_project_rows_examples():
    L, K = 4, 6
    x = np.full((L, K), 2.5)
    c, triples = project_rows(x, polynomial_basis(K, 0))
    np.testing.assert_allclose(c, x, rtol=1e-14)
    assert len(triples) == 1 and triples[0].kind == ROW_PROJECTION
    assert triples[0].magnitude == pytest.approx(np.sqrt(L * K) * 2.5, rel=1e-14)

    y = np.tile([1.0, -1.0, 2.0, -2.0, 0.5, -0.5], (L, 1))
    c, triples = project_rows(y, polynomial_basis(K, 0))
    assert np.all(c == 0) and triples[0].magnitude == 0
    assert np.all(triples[0].left == 0)

    n = np.arange(1.0, 30.0)
    traj = embed(n, 10)
    c, _ = project_rows(traj, polynomial_basis(traj.shape[1], 1))
    assert rel_fro(c, traj) <= 1e-10


def test_project_cols_examples():
    L, K = 5, 3
    x = np.outer(np.arange(1.0, L + 1), [1.0, -2.0, 0.5])
    c, triples = project_cols(x, orthonormalize([np.arange(1.0, L + 1)]))
    np.testing.assert_allclose(c, x, rtol=1e-14)
    assert triples[0].kind == COLUMN_PROJECTION

    y = np.outer([1.0, -1.0, 1.0, -1.0, 0.0], [1.0, 2.0, 3.0])
    c, triples = project_cols(y, polynomial_basis(L, 0))
    assert np.abs(c).max() <= 1e-15 and triples[0].magnitude <= 1e-15

    x = 3.0 ** np.arange(1, 16)
    traj = embed(x, 6)
    c, _ = project_cols(traj, orthonormalize([3.0 ** np.arange(1, 7)]))
    assert rel_fro(c, traj) <= 1e-10


def test_projection_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        project_rows(np.ones((3, 4)), polynomial_basis(3, 0))
    with pytest.raises(DimensionMismatch):
        project_cols(np.ones((3, 4)), polynomial_basis(4, 0))
    with pytest.raises(DimensionMismatch):
        proj_ssa_decompose(np.arange(10.0), 4, ProjectionSpec(polynomial_basis(4, 0)))


# --- decomposition -------------------------------------------------------------

def test_projssa11_separates_linear_trend(n199):
    x = (n199 - 100) + np.sin(2 * np.pi * 0.05 * n199)
    d = proj_ssa(x, 100, 1, 1)
    assert d.kinds[:2] == [ROW_PROJECTION, COLUMN_PROJECTION]
    assert set(d.kinds[2:]) == {SVD}
    trend = hankelize(d.grouped([1, 2]))
    assert np.max(np.abs(trend - (n199 - 100))) <= 1e-8
    check_decomposition(d, x)


def test_constant_series_projssa10():
    x = np.full(30, -4.0)
    d = proj_ssa(x, 12, 1, 0)
    assert len(d) == 1 and d.kinds == [ROW_PROJECTION]


def test_modulated_cosine_double_projection():
    n = np.arange(1, 60)
    x = (0.5 * n + 1) * np.cos(2 * np.pi * n / 10)
    col, row = trajectory_bases(np.cos(2 * np.pi * n / 10), 20)
    spec = ProjectionSpec(row, col)
    assert keeps_matrix(spec, embed(x, 20)) <= 1e-10
    d = proj_ssa_decompose(x, 20, spec)
    assert set(d.kinds) == {ROW_PROJECTION, COLUMN_PROJECTION}


@pytest.mark.parametrize("q,p", [(1, 1), (2, 0), (0, 2), (2, 2), (4, 0), (3, 1)])
def test_cross_kind_orthogonality(q, p, n199, rng):
    x = 0.0001 * n199 ** 3 + np.sin(2 * np.pi * 0.037 * n199 + 0.3) + rng.normal(size=199)
    d = proj_ssa(x, 100, q, p)
    assert (d.q, d.p) == (q, p)
    check_decomposition(d, x)


def test_order_is_row_first(rng):
    x = rng.normal(size=40)
    d = proj_ssa(x, 15, 2, 3)
    assert d.kinds[:5] == [ROW_PROJECTION] * 2 + [COLUMN_PROJECTION] * 3


def test_zero_series_keeps_projection_triples():
    d = proj_ssa(np.zeros(20), 8, 1, 1)
    assert len(d) == 2 and np.all(d.magnitudes == 0)


# --- keeps-matrix, the theorem and its corollaries ----------------------------------

def test_keeps_matrix_zero():
    assert keeps_matrix(ProjectionSpec.polynomial(1, 1, 5, 6), np.zeros((5, 6))) == 0.0


def test_keeps_matrix_sinusoid_with_whole_periods(n199):
    # a sine over whole periods has zero row and column sums, so pi_both(X) = 0
    traj = embed(np.sin(2 * np.pi * 0.05 * n199), 100)
    spec = ProjectionSpec.polynomial(1, 1, 100, 100)
    assert np.abs(traj.sum(axis=0)).max() < 1e-12 and np.abs(traj.sum(axis=1)).max() < 1e-12
    assert keeps_matrix(spec, traj) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("m,k", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 3), (2, 2)])
def test_corollary_polynomials(m, k, rng):
    N, L = 80, 35
    K = N - L + 1
    t = np.linspace(-1, 1, N)
    x = np.polynomial.polynomial.polyval(t, rng.normal(size=m + k + 2))
    spec = ProjectionSpec(polynomial_basis(K, m), polynomial_basis(L, k))
    assert keeps_matrix(spec, embed(x, L)) <= 1e-8
    # one more degree breaks it
    x_hi = x + np.polynomial.polynomial.polyval(t, np.eye(m + k + 3)[-1])
    assert keeps_matrix(spec, embed(x_hi, L)) > 1e-4


def _root_series(roots_mults, N, rng):
    """Series with the given {root: multiplicity} and random amplitude polynomials."""
    n = np.arange(1, N + 1)
    t = n / N
    x = np.zeros(N)
    for (rho, omega), mult in roots_mults.items():
        if mult == 0:
            continue
        c = rng.normal(size=mult)
        c[-1] = np.sign(c[-1]) * (abs(c[-1]) + 0.5)
        amp = np.polynomial.polynomial.polyval(t, c)
        if omega == 0:
            x += amp * rho ** n
        else:
            x += amp * rho ** n * np.sin(2 * np.pi * omega * n + rng.uniform(0, 2 * np.pi))
    return x


ROOTS = [(1.0, 0.0), (1.04, 0.0), (0.96, 0.0), (1.0, 0.08), (1.01, 0.21)]


def root_space_basis(mults, dim):
    """Orthonormalized vectors (j**k mu**j), j = 0..dim-1, for the given multiplicities."""
    j = np.arange(dim) / dim
    vecs = []
    for (rho, omega), mult in zip(ROOTS, mults):
        for k in range(mult):
            if omega == 0:
                vecs.append(j ** k * rho ** (j * dim))
            else:
                z = j ** k * (rho * np.exp(2j * np.pi * omega)) ** (j * dim)
                vecs += [z.real, z.imag]
    return orthonormalize(vecs, tol=1e-13)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=5, max_size=5),
       st.lists(st.integers(0, 2), min_size=5, max_size=5),
       st.integers(0, 2**32 - 1))
def test_theorem_randomized(d1, d2, seed):
    """pi_both keeps X iff every root multiplicity fits d1 + d2."""
    if sum(d1) == 0 or sum(d2) == 0:
        return
    r = np.random.default_rng(seed)
    N, L = 90, 40
    col = root_space_basis(d1, L)
    row = root_space_basis(d2, N - L + 1)
    assert col.count == sum(d1 + [m for m, (_, w) in zip(d1, ROOTS) if w])
    spec = ProjectionSpec(row, col)
    budget = [a + b for a, b in zip(d1, d2)]
    x = _root_series(dict(zip(ROOTS, budget)), N, r)
    assert keeps_matrix(spec, embed(x, L)) <= 1e-7
    # a root outside the allowed set, at a comparable scale
    n = np.arange(1, N + 1)
    outside = np.sin(2 * np.pi * 0.33 * n + r.uniform(0, 2 * np.pi))
    x_bad = x + outside * np.linalg.norm(x) / np.linalg.norm(outside)
    assert keeps_matrix(spec, embed(x_bad, L)) > 0.01


def test_theorem_multiplicity_overflow():
    """Double centering keeps linear series but not the quadratic n**2."""
    n = np.arange(1.0, 80.0)
    spec = ProjectionSpec.polynomial(1, 1, 30, 50)
    assert keeps_matrix(spec, embed(3 * n - 7, 30)) <= 1e-12
    assert keeps_matrix(spec, embed(n ** 2, 30)) > 0.01
    # exponential root: multiplicity 1 + 1 allowed, 3 is not
    mu = 1.02
    col = orthonormalize([mu ** np.arange(30)])
    row = orthonormalize([mu ** np.arange(50)])
    spec = ProjectionSpec(row, col)
    assert keeps_matrix(spec, embed((2 * n + 1) * mu ** n, 30)) <= 1e-10
    assert keeps_matrix(spec, embed((n / 40) ** 2 * mu ** n, 30)) > 0.01


def test_trajectory_bases_cross_check():
    # column space of a linear series: span of constants and the index
    col, row = trajectory_bases(np.arange(1.0, 41.0), 15)
    assert col.count == 2 and row.count == 2
    poly = polynomial_basis(15, 1).vectors
    np.testing.assert_allclose(col.vectors @ col.vectors.T, poly @ poly.T, atol=1e-12)


def test_separability_by_row_projection():
    # rows of both trajectory matrices are whole periods at different frequencies
    N, L = 60, 21
    K = N - L + 1
    n = np.arange(1, N + 1)
    x1 = 2 * np.cos(2 * np.pi * n * 2 / K)
    x2 = np.sin(2 * np.pi * n * 5 / K) + 0.7
    _, row = trajectory_bases(x1, L)
    _, row2 = trajectory_bases(x2, L)
    assert np.abs(row.vectors.T @ row2.vectors).max() < 1e-10
    d = proj_ssa_decompose(x1 + x2, L, ProjectionSpec(row_basis=row))
    np.testing.assert_allclose(reconstruct_trend(d), x1, atol=1e-8)


def test_separability_by_column_projection():
    N, L = 60, 20
    n = np.arange(1, N + 1)
    x1 = np.cos(2 * np.pi * n * 3 / L) * 1.5
    x2 = np.cos(2 * np.pi * n * 7 / L + 1.0)
    col, _ = trajectory_bases(x1, L)
    d = proj_ssa_decompose(x1 + x2, L, ProjectionSpec(col_basis=col))
    np.testing.assert_allclose(reconstruct_trend(d), x1, atol=1e-8)


def test_separability_by_double_projection():
    # x1 = (an+b) y with y a sinusoid; x2 orthogonal to y in rows and columns
    N, L = 119, 60
    n = np.arange(1, N + 1)
    y = np.cos(2 * np.pi * n / 12)
    x1 = (0.05 * n - 1) * y
    x2 = np.cos(2 * np.pi * n / 5)
    col, row = trajectory_bases(y, L)
    d = proj_ssa_decompose(x1 + x2, L, ProjectionSpec(row, col))
    np.testing.assert_allclose(reconstruct_trend(d), x1, atol=1e-8)
