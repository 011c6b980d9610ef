"""Eigentriples, SVD expansion of trajectory matrices and Basic SSA."""

from dataclasses import dataclass, field

import numpy as np

from .errors import IndexOutOfRange, NonFiniteInput
from .series import as_series, check_window, embed

ROW_PROJECTION = "row-projection"
COLUMN_PROJECTION = "column-projection"
SVD = "svd"
KINDS = (ROW_PROJECTION, COLUMN_PROJECTION, SVD)

DEFAULT_RANK_TOL = 1e-9
# singular values closer than this (relative) are ordered by their left vectors
_TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Eigentriple:
    """One rank-one component ``magnitude * left @ right.T``.

    ``kind`` records where the component came from: the row projection,
    the column projection or the SVD of the residual.
    """

    magnitude: float
    left: np.ndarray
    right: np.ndarray
    kind: str = SVD

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown eigentriple kind {self.kind!r}")
        if self.magnitude < 0:
            raise ValueError("eigentriple magnitude must be nonnegative")

    @property
    def matrix(self):
        return self.magnitude * np.outer(self.left, self.right)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Ordered eigentriples of a trajectory matrix.

    Triples ``1..q`` come from the row projection, ``q+1..q+p`` from the
    column projection, the rest from the SVD of the residual. Public
    indices into a decomposition (``elementary``, ``grouped``) are 1-based
    to match the usual ET1, ET2, ... numbering.
    """

    triples: tuple
    length: int
    window: int
    q: int = 0
    p: int = 0
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def K(self):
        return self.length - self.window + 1

    @property
    def n_special(self):
        """Number of projection triples, ``q + p``."""
        return self.q + self.p

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __getitem__(self, i):
        return self.triples[i]

    @property
    def magnitudes(self):
        return np.array([t.magnitude for t in self.triples])

    @property
    def kinds(self):
        return [t.kind for t in self.triples]

    @property
    def U(self):
        """Left vectors as columns of an L x d array."""
        if "U" not in self._cache:
            self._cache["U"] = _stack([t.left for t in self.triples], self.window)
        return self._cache["U"]

    @property
    def V(self):
        """Right vectors as columns of a K x d array."""
        if "V" not in self._cache:
            self._cache["V"] = _stack([t.right for t in self.triples], self.K)
        return self._cache["V"]

    def elementary(self, index):
        """Elementary matrix of the 1-based triple ``index``."""
        self._check_indices([index])
        return self.triples[index - 1].matrix

    def grouped(self, indices):
        """Sum of the elementary matrices with the given 1-based indices."""
        idx = self._check_indices(indices)
        if idx.size == 0:
            return np.zeros((self.window, self.K))
        return (self.U[:, idx] * self.magnitudes[idx]) @ self.V[:, idx].T

    def _check_indices(self, indices):
        idx = np.asarray(sorted(int(i) for i in indices), dtype=int)
        if idx.size and (idx[0] < 1 or idx[-1] > len(self.triples)):
            raise IndexOutOfRange(
                f"eigentriple indices must lie in 1..{len(self.triples)}, got {list(map(int, indices))}")
        return idx - 1


def _stack(vectors, dim):
    if not vectors:
        return np.zeros((dim, 0))
    return np.column_stack(vectors)


def svd_expand(matrix, rank_tol=DEFAULT_RANK_TOL, scale=None):
    """Expand ``matrix`` into SVD eigentriples sorted by magnitude.

    Singular values below ``rank_tol * scale`` are discarded; ``scale``
    defaults to the largest singular value of ``matrix``. Each left vector
    is oriented so that its largest-magnitude entry (first one on ties) is
    positive and the right vector follows. Equal singular values are
    ordered by their left vectors, lexicographically descending.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFiniteInput("matrix contains NaN or infinite values")
    if a.size == 0:
        return []
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    ref = s[0] if scale is None else float(scale)
    if ref <= 0.0:
        return []
    keep = int(np.count_nonzero(s > rank_tol * ref))
    u, s, v = u[:, :keep].copy(), s[:keep], vt[:keep].T.copy()
    for i in range(keep):
        pivot = np.argmax(np.abs(u[:, i]))
        if u[pivot, i] < 0:
            u[:, i] = -u[:, i]
            v[:, i] = -v[:, i]
    order = _tie_order(s, u)
    return [Eigentriple(float(s[i]), u[:, i], v[:, i], SVD) for i in order]


def _tie_order(s, u):
    order = []
    start = 0
    while start < len(s):
        stop = start + 1
        while stop < len(s) and s[start] - s[stop] <= _TIE_TOL * s[start]:
            stop += 1
        block = list(range(start, stop))
        if len(block) > 1:
            block.sort(key=lambda i: tuple(u[:, i]), reverse=True)
        order.extend(block)
        start = stop
    return order


def basic_ssa_decompose(series, window, rank_tol=DEFAULT_RANK_TOL):
    """Embedding and SVD steps of Basic SSA."""
    x = as_series(series)
    window = check_window(x.size, window)
    triples = svd_expand(embed(x, window), rank_tol)
    return Decomposition(tuple(triples), x.size, window)


def contributions(decomposition):
    """Share ``magnitude_i**2 / sum_j magnitude_j**2`` of each triple.

    Returns an empty array when every magnitude is zero.
    """
    sq = decomposition.magnitudes ** 2
    total = sq.sum()
    if total == 0.0:
        return np.zeros(0)
    return sq / total
