"""Polynomial least squares in the time index ``n = 1..N``."""

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DegreeTooLarge
from .series import as_series


@dataclass(frozen=True, eq=False)
class PolyFit:
    """Least-squares polynomial ``sum_j coefficients[j] * n**j``.

    The fit is computed in the scaled variable ``t = (n - center) / scale``
    and ``scaled_coefficients`` are kept for evaluation, which is better
    conditioned than evaluating the power form directly.
    """

    degree: int
    coefficients: np.ndarray
    fit_length: int
    scaled_coefficients: np.ndarray
    center: float
    scale: float

    def __call__(self, n):
        t = (np.asarray(n, dtype=float) - self.center) / self.scale
        return np.polynomial.polynomial.polyval(t, self.scaled_coefficients)


def _grid(length):
    center = (length + 1) / 2.0
    scale = (length - 1) / 2.0 if length > 1 else 1.0
    return center, scale


def polyfit(series, degree):
    """Fit a polynomial of ``degree`` to ``series`` by Householder QR."""
    x = as_series(series, min_length=1)
    degree = int(degree)
    if degree < 0 or degree + 1 > x.size:
        raise DegreeTooLarge(f"degree {degree} cannot be fitted to {x.size} points")
    center, scale = _grid(x.size)
    t = (np.arange(1, x.size + 1) - center) / scale
    design = np.vander(t, degree + 1, increasing=True)
    q, r = np.linalg.qr(design)
    b = np.linalg.solve(r, q.T @ x)
    # expand sum_k b_k ((n - c)/h)**k in powers of n
    coef = np.zeros(degree + 1)
    for k, bk in enumerate(b):
        for j in range(k + 1):
            coef[j] += bk * comb(k, j) * (-center) ** (k - j) / scale ** k
    return PolyFit(degree, coef, x.size, b, center, scale)


def evaluate(fit, length):
    """Values of ``fit`` at ``n = 1..length`` (may extend past the fitted range)."""
    return fit(np.arange(1, int(length) + 1))


def refit(trend, degree):
    """Least-squares polynomial approximation of a reconstructed trend."""
    x = as_series(trend, min_length=1)
    return evaluate(polyfit(x, degree), x.size)
