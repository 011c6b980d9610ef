"""Projection bases, row/column/double projectors and SSA with projection.

The decomposition produced here starts with ``q`` row-projection triples,
followed by ``p`` column-projection triples, followed by the SVD of what
is left. The row projector is always applied first; the resulting
elementary matrices are mutually orthogonal in the Frobenius inner product.
"""

from dataclasses import dataclass

import numpy as np

from .decomposition import (
    COLUMN_PROJECTION,
    DEFAULT_RANK_TOL,
    ROW_PROJECTION,
    Decomposition,
    Eigentriple,
    svd_expand,
)
from .errors import DegreeTooLarge, DimensionMismatch, EmptyBasis, NonFiniteInput, SSAError
from .series import as_series, check_window, embed

DEPENDENCE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ProjectionBasis:
    """Orthonormal vectors stored as the columns of a ``dim x count`` array.

    ``dropped`` counts input vectors that were discarded as linearly
    dependent when the basis was built by :func:`orthonormalize`.
    """

    vectors: np.ndarray
    dropped: int = 0

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=float)
        if v.ndim != 2:
            raise DimensionMismatch(f"basis array must be 2-D, got shape {v.shape}")
        if v.shape[1] > v.shape[0]:
            raise DimensionMismatch(
                f"{v.shape[1]} basis vectors cannot be independent in dimension {v.shape[0]}")
        gram = v.T @ v
        if not np.allclose(gram, np.eye(v.shape[1]), rtol=0.0, atol=1e-10):
            raise SSAError("basis vectors are not orthonormal; use orthonormalize()")
        object.__setattr__(self, "vectors", v)

    @property
    def dim(self):
        return self.vectors.shape[0]

    @property
    def count(self):
        return self.vectors.shape[1]

    def project(self, v):
        """Orthogonal projection of a vector (or the columns of an array)."""
        return self.vectors @ (self.vectors.T @ v)


def _gram_schmidt_step(basis_cols, w):
    # two passes of classical Gram-Schmidt keep orthogonality at round-off level
    for _ in range(2):
        if basis_cols:
            q = np.column_stack(basis_cols)
            w = w - q @ (q.T @ w)
    return w


def orthonormalize(raw_vectors, tol=DEPENDENCE_TOL):
    """Orthonormal basis of the span of ``raw_vectors`` (a sequence of vectors).

    Vectors are processed in order; one whose remainder after removing the
    span of its predecessors has norm at most ``tol`` times its own norm is
    dropped.

    >>> orthonormalize([(1, 1), (2, 2)]).vectors.ravel() * np.sqrt(2)
    array([1., 1.])
    """
    raw = [np.asarray(v, dtype=float) for v in raw_vectors]
    if not raw:
        raise EmptyBasis("no vectors given")
    dim = raw[0].shape
    if len(dim) != 1 or any(v.shape != dim for v in raw):
        raise DimensionMismatch("basis vectors must be 1-D and of equal length")
    if not all(np.all(np.isfinite(v)) for v in raw):
        raise NonFiniteInput("basis vectors contain NaN or infinite values")
    cols = []
    dropped = 0
    for v in raw:
        norm = np.linalg.norm(v)
        w = _gram_schmidt_step(cols, v)
        wn = np.linalg.norm(w)
        if norm == 0.0 or wn <= tol * norm:
            dropped += 1
            continue
        cols.append(w / wn)
    if not cols:
        raise EmptyBasis("all input vectors are zero")
    return ProjectionBasis(np.column_stack(cols), dropped=dropped)


def polynomial_basis(dim, degree):
    """Orthonormal basis of polynomials of degree ``<= degree`` sampled at ``1..dim``.

    The vectors are discrete Gram polynomials: the first is the normalized
    constant vector, each subsequent one raises the degree by one and has a
    positive leading coefficient. They are generated on the index grid
    rescaled to [-1, 1] by multiplying the previous vector by the grid and
    reorthogonalizing, which stays well conditioned for any degree.
    """
    dim, degree = int(dim), int(degree)
    if degree < 0:
        raise DegreeTooLarge(f"degree must be nonnegative, got {degree}")
    if degree >= dim:
        raise DegreeTooLarge(f"degree {degree} needs more than {dim} points")
    t = np.linspace(-1.0, 1.0, dim) if dim > 1 else np.zeros(1)
    cols = [np.full(dim, 1.0 / np.sqrt(dim))]
    for _ in range(degree):
        w = _gram_schmidt_step(cols, t * cols[-1])
        cols.append(w / np.linalg.norm(w))
    return ProjectionBasis(np.column_stack(cols))


@dataclass(frozen=True, eq=False)
class ProjectionSpec:
    """Row basis (vectors of length K) and/or column basis (length L).

    A missing basis stands for the zero projector.
    """

    row_basis: ProjectionBasis = None
    col_basis: ProjectionBasis = None

    def __post_init__(self):
        if self.row_basis is None and self.col_basis is None:
            raise EmptyBasis("a projection spec needs a row basis, a column basis or both")

    @property
    def q(self):
        return 0 if self.row_basis is None else self.row_basis.count

    @property
    def p(self):
        return 0 if self.col_basis is None else self.col_basis.count

    @classmethod
    def polynomial(cls, q, p, window, K):
        """Bases of ProjSSA(q, p): rows on degree ``q-1``, columns on degree ``p-1``."""
        if q < 0 or p < 0:
            raise DegreeTooLarge("projection counts must be nonnegative")
        row = polynomial_basis(K, q - 1) if q > 0 else None
        col = polynomial_basis(window, p - 1) if p > 0 else None
        return cls(row, col)

    def check_shape(self, shape):
        rows, cols = shape
        if self.row_basis is not None and self.row_basis.dim != cols:
            raise DimensionMismatch(
                f"row basis has dimension {self.row_basis.dim}, matrix has K={cols} columns")
        if self.col_basis is not None and self.col_basis.dim != rows:
            raise DimensionMismatch(
                f"column basis has dimension {self.col_basis.dim}, matrix has L={rows} rows")


def pi_row(matrix, basis):
    """Project every row of ``matrix`` onto the span of ``basis``."""
    a = np.asarray(matrix, dtype=float)
    if basis is None:
        return np.zeros_like(a)
    if basis.dim != a.shape[1]:
        raise DimensionMismatch(f"row basis dimension {basis.dim} != {a.shape[1]} columns")
    q = basis.vectors
    return (a @ q) @ q.T


def pi_col(matrix, basis):
    """Project every column of ``matrix`` onto the span of ``basis``."""
    a = np.asarray(matrix, dtype=float)
    if basis is None:
        return np.zeros_like(a)
    if basis.dim != a.shape[0]:
        raise DimensionMismatch(f"column basis dimension {basis.dim} != {a.shape[0]} rows")
    p = basis.vectors
    return p @ (p.T @ a)


def pi_both(matrix, spec):
    """Double projection: row projection, then column projection of the rest."""
    a = np.asarray(matrix, dtype=float)
    spec.check_shape(a.shape)
    c = pi_row(a, spec.row_basis)
    return c + pi_col(a - c, spec.col_basis)


def keeps_matrix(spec, matrix):
    """Relative Frobenius distance ``|pi_both(X) - X| / |X|`` (0 for a zero matrix)."""
    a = np.asarray(matrix, dtype=float)
    norm = np.linalg.norm(a)
    if norm == 0.0:
        spec.check_shape(a.shape)
        return 0.0
    return float(np.linalg.norm(pi_both(a, spec) - a) / norm)


def _projection_triples(products, basis_vectors, kind):
    triples = []
    for i in range(basis_vectors.shape[1]):
        col = products[:, i]
        sigma = float(np.linalg.norm(col))
        other = col / sigma if sigma > 0.0 else np.zeros_like(col)
        fixed = basis_vectors[:, i].copy()
        if kind == ROW_PROJECTION:
            triples.append(Eigentriple(sigma, other, fixed, kind))
        else:
            triples.append(Eigentriple(sigma, fixed, other, kind))
    return triples


def project_rows(matrix, basis):
    """Row projection ``C = X Q Q^T`` and its ``q`` eigentriples.

    Triple ``i`` is ``(|X Q_i|, X Q_i / |X Q_i|, Q_i)``, with a zero left
    vector when ``X Q_i = 0``.
    """
    a = np.asarray(matrix, dtype=float)
    if basis.dim != a.shape[1]:
        raise DimensionMismatch(f"row basis dimension {basis.dim} != K={a.shape[1]}")
    xq = a @ basis.vectors
    return xq @ basis.vectors.T, _projection_triples(xq, basis.vectors, ROW_PROJECTION)


def project_cols(matrix, basis):
    """Column projection ``C = P P^T X`` and its ``p`` eigentriples.

    Triple ``i`` is ``(|X^T P_i|, P_i, X^T P_i / |X^T P_i|)``.
    """
    a = np.asarray(matrix, dtype=float)
    if basis.dim != a.shape[0]:
        raise DimensionMismatch(f"column basis dimension {basis.dim} != L={a.shape[0]}")
    xtp = a.T @ basis.vectors
    return basis.vectors @ xtp.T, _projection_triples(xtp, basis.vectors, COLUMN_PROJECTION)


def proj_ssa_decompose(series, window, spec, rank_tol=DEFAULT_RANK_TOL):
    """Decompose the trajectory matrix of ``series`` by SSA with projection.

    The residual SVD drops singular values below ``rank_tol`` times the
    Frobenius norm of the full trajectory matrix, so a residual that is
    round-off noise yields no SVD triples.
    """
    x = as_series(series)
    window = check_window(x.size, window)
    traj = embed(x, window)
    spec.check_shape(traj.shape)
    triples = []
    rest = traj
    if spec.row_basis is not None:
        c, tr = project_rows(rest, spec.row_basis)
        rest = rest - c
        triples += tr
    if spec.col_basis is not None:
        c, tr = project_cols(rest, spec.col_basis)
        rest = rest - c
        triples += tr
    triples += svd_expand(rest, rank_tol, scale=np.linalg.norm(traj))
    return Decomposition(tuple(triples), x.size, window, q=spec.q, p=spec.p)


def proj_ssa(series, window, q, p, rank_tol=DEFAULT_RANK_TOL):
    """ProjSSA(q, p): polynomial projections of degrees ``q-1`` (rows) and ``p-1`` (columns)."""
    x = as_series(series)
    window = check_window(x.size, window)
    spec = ProjectionSpec.polynomial(q, p, window, x.size - window + 1)
    return proj_ssa_decompose(x, window, spec, rank_tol)
