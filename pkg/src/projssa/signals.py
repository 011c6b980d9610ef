"""Series governed by linear recurrence relations, and seeded Gaussian noise.

A series of finite rank is a sum of terms ``A(n) * mu**n`` over its
characteristic roots ``mu``, where ``A`` is a polynomial of degree below
the root's multiplicity. Complex roots come in conjugate pairs and are
given once, as ``rho * exp(2j*pi*omega)`` with ``0 < omega < 0.5``; the
pair contributes ``A(n) * rho**n * sin(2*pi*omega*n + phase)``. Time runs
over ``n = 1..N``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidLrr, InvalidRootSpec, InvalidSeries
from .series import as_series, check_window, embed


@dataclass(frozen=True)
class Root:
    """One characteristic root (or conjugate pair) with its amplitude polynomial.

    ``coefficients[j]`` multiplies ``n**j``; there must be at most
    ``multiplicity`` of them.
    """

    modulus: float = 1.0
    frequency: float = 0.0
    multiplicity: int = 1
    coefficients: tuple = (1.0,)
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))
        if not self.modulus > 0:
            raise InvalidRootSpec(f"root modulus must be positive, got {self.modulus}")
        if not 0.0 <= self.frequency <= 0.5:
            raise InvalidRootSpec(f"frequency must lie in [0, 0.5], got {self.frequency}")
        if self.multiplicity < 1:
            raise InvalidRootSpec(f"multiplicity must be at least 1, got {self.multiplicity}")
        if not 1 <= len(self.coefficients) <= self.multiplicity:
            raise InvalidRootSpec(
                f"need 1..{self.multiplicity} coefficients, got {len(self.coefficients)}")

    @property
    def is_complex(self):
        return 0.0 < self.frequency < 0.5

    @property
    def dimension(self):
        return self.multiplicity * (2 if self.is_complex else 1)

    @property
    def roots(self):
        """Expanded complex roots, each repeated by multiplicity."""
        if self.is_complex:
            mu = self.modulus * np.exp(2j * np.pi * self.frequency)
            base = [mu, np.conj(mu)]
        else:
            base = [self.modulus if self.frequency == 0.0 else -self.modulus]
        return [complex(m) for m in base for _ in range(self.multiplicity)]

    def values(self, n):
        n = np.asarray(n, dtype=float)
        amp = np.zeros_like(n)
        for j, c in enumerate(self.coefficients):
            amp = amp + c * n ** j
        if self.frequency == 0.0:
            base = self.modulus ** n
        elif self.frequency == 0.5:
            base = (-self.modulus) ** n
        else:
            base = self.modulus ** n * np.sin(2 * np.pi * self.frequency * n + self.phase)
        return amp * base


def polynomial(coefficients):
    """Root 1 carrying the polynomial ``sum_j coefficients[j] * n**j``."""
    coefficients = tuple(coefficients)
    return Root(1.0, 0.0, len(coefficients), coefficients)


def linear(a, b):
    """The series ``a*n + b``."""
    return polynomial((b, a))


def sine(amplitude, frequency, phase=0.0):
    """``amplitude * sin(2*pi*frequency*n + phase)`` for ``0 < frequency < 0.5``."""
    return Root(1.0, frequency, 1, (amplitude,), phase)


def exponential(scale, rate):
    """``scale * rate**n`` for ``rate > 0``."""
    return Root(rate, 0.0, 1, (scale,))


class RootSpec(tuple):
    """A tuple of :class:`Root` terms whose sum defines a series."""

    def __new__(cls, roots=()):
        roots = tuple(roots)
        if not all(isinstance(r, Root) for r in roots):
            raise InvalidRootSpec("RootSpec accepts Root instances only")
        return super().__new__(cls, roots)

    @property
    def dimension(self):
        return sum(r.dimension for r in self)

    @property
    def roots(self):
        return [mu for r in self for mu in r.roots]


def generate(spec, length):
    """Evaluate the terms of ``spec`` at ``n = 1..length``."""
    if length < 1:
        raise InvalidSeries(f"length must be positive, got {length}")
    n = np.arange(1, int(length) + 1, dtype=float)
    out = np.zeros(n.size)
    for root in RootSpec(spec):
        out += root.values(n)
    return out


def lrr_from_roots(roots):
    """Coefficients ``a_1..a_r`` of the recurrence with the given characteristic roots.

    The characteristic polynomial is ``mu**r - sum_k a_k mu**(r-k)``.
    """
    poly = np.poly(np.asarray(roots, dtype=complex))
    return -np.real(poly[1:])


def apply_lrr(coefficients, initial, length):
    """Continue ``initial`` by ``s[i+r] = sum_k a_k s[i+r-k]`` up to ``length`` terms."""
    a = np.asarray(coefficients, dtype=float)
    r = a.size
    if r == 0 or a[-1] == 0.0:
        raise InvalidLrr("the last recurrence coefficient must be nonzero")
    init = np.asarray(initial, dtype=float)
    if init.size != r:
        raise InvalidLrr(f"need {r} initial values, got {init.size}")
    if length < r:
        raise InvalidLrr(f"length {length} is shorter than the recurrence order {r}")
    s = np.empty(int(length))
    s[:r] = init
    for i in range(r, s.size):
        # a_1 multiplies the most recent value
        s[i] = np.dot(a, s[i - 1::-1][:r])
    return s


def lrr_residual(series, coefficients):
    """Largest ``|s[i+r] - sum_k a_k s[i+r-k]|`` relative to ``max |s|``."""
    s = np.asarray(series, dtype=float)
    a = np.asarray(coefficients, dtype=float)
    r = a.size
    lagged = np.lib.stride_tricks.sliding_window_view(s, r + 1)
    pred = lagged[:, r - 1::-1] @ a
    return float(np.max(np.abs(lagged[:, r] - pred)) / np.max(np.abs(s)))


def empirical_lrank(series, window, tol=1e-8):
    """Numerical rank of the L-trajectory matrix at relative tolerance ``tol``."""
    x = as_series(series)
    window = check_window(x.size, window)
    s = np.linalg.svd(embed(x, window), compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def uniform_stream(count, seed):
    """``count`` uniforms in (0, 1] from the raw PCG64 stream seeded by ``seed``.

    Each value is ``((w >> 11) + 1) * 2**-53`` for a raw 64-bit output ``w``.
    """
    raw = np.random.PCG64(int(seed)).random_raw(int(count))
    return ((raw >> np.uint64(11)).astype(float) + 1.0) * 2.0 ** -53


def gaussian_noise(length, sigma=1.0, seed=0):
    """White Gaussian noise with standard deviation ``sigma``.

    Uniform pairs ``(u1, u2)`` from :func:`uniform_stream` are mapped by the
    Box-Muller transform to ``r*cos(2*pi*u2), r*sin(2*pi*u2)`` with
    ``r = sqrt(-2 log u1)``; outputs are interleaved in that order.
    Only the raw PCG64 bit stream is used, so results do not depend on
    numpy's own normal sampler.
    """
    if sigma < 0:
        raise InvalidSeries(f"sigma must be nonnegative, got {sigma}")
    length = int(length)
    pairs = (length + 1) // 2
    u = uniform_stream(2 * pairs, seed).reshape(pairs, 2)
    r = np.sqrt(-2.0 * np.log(u[:, 0]))
    z = np.empty((pairs, 2))
    z[:, 0] = r * np.cos(2 * np.pi * u[:, 1])
    z[:, 1] = r * np.sin(2 * np.pi * u[:, 1])
    return sigma * z.ravel()[:length]
