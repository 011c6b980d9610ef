"""Series container helpers, the embedding operator and diagonal averaging.

Series are plain 1-D float arrays. Formulas in docstrings use 1-based
indices ``x_1, ..., x_N``; arrays are 0-based as usual.
"""

import numpy as np

from .errors import InvalidSeries, LengthMismatch, NonFiniteInput, WindowOutOfRange

MIN_LENGTH = 3


def as_series(values, min_length=MIN_LENGTH):
    """Validate ``values`` and return them as a 1-D float array."""
    x = np.asarray(values, dtype=float)
    if x.ndim != 1:
        raise InvalidSeries(f"series must be one-dimensional, got shape {x.shape}")
    if x.size < min_length:
        raise InvalidSeries(f"series length {x.size} is below the minimum {min_length}")
    if not np.all(np.isfinite(x)):
        raise NonFiniteInput("series contains NaN or infinite values")
    return x


def check_window(n, window):
    if int(window) != window:
        raise WindowOutOfRange(f"window L={window} is not an integer")
    if not 1 < window < n:
        raise WindowOutOfRange(f"window L={window} must satisfy 1 < L < N={n}")
    return int(window)


def embed(series, window):
    """Return the L x K trajectory (Hankel) matrix of ``series``.

    Entry ``(i, j)`` (1-based) equals ``x_{i+j-1}``; ``K = N - L + 1``.

    >>> embed([1, 2, 3, 4, 5], 3)
    array([[1., 2., 3.],
           [2., 3., 4.],
           [3., 4., 5.]])
    """
    x = as_series(series)
    window = check_window(x.size, window)
    return np.lib.stride_tricks.sliding_window_view(x, window).T.copy()


def hankelize(matrix):
    """Diagonal averaging: map an L x K matrix to a series of length L + K - 1.

    Element ``n`` of the result is the mean of all entries with
    ``i + j - 1 = n``. Antidiagonal sums are accumulated row by row in
    increasing ``i`` so the result is reproducible bit for bit.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or min(a.shape) < 1:
        raise LengthMismatch(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    rows, cols = a.shape
    total = np.zeros(rows + cols - 1)
    counts = np.zeros(rows + cols - 1)
    for i in range(rows):
        total[i:i + cols] += a[i]
        counts[i:i + cols] += 1.0
    return total / counts


def hankel_projection(matrix):
    """Frobenius-orthogonal projection of a matrix onto Hankel matrices."""
    a = np.asarray(matrix, dtype=float)
    x = hankelize(a)
    return np.lib.stride_tricks.sliding_window_view(x, a.shape[0]).T.copy()


def rmse(estimates, truth):
    """Root-mean-square error of an ensemble of estimates against ``truth``.

    ``estimates`` is a single series or an ``(M, N)`` array of M estimates.
    Squared errors are summed replication by replication, then over time.
    """
    t = np.asarray(truth, dtype=float)
    est = np.asarray(estimates, dtype=float)
    if est.ndim == 1:
        est = est[np.newaxis, :]
    if t.ndim != 1 or est.ndim != 2 or est.shape[1] != t.size:
        raise LengthMismatch(
            f"estimates of shape {est.shape} do not match truth of length {t.size}")
    total = 0.0
    for row in est:
        total += float(np.sum((row - t) ** 2))
    return float(np.sqrt(total / est.size))
