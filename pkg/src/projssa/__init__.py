"""Singular spectrum analysis with projection.

Basic SSA and its variant that first projects the rows and/or columns of
the trajectory matrix onto given subspaces (typically polynomials, for
trend extraction), plus the polynomial least-squares baseline and a Monte
Carlo harness comparing the two.

>>> import numpy as np
>>> from projssa import proj_ssa, reconstruct_trend
>>> n = np.arange(1, 200)
>>> x = (n - 100) + np.sin(2 * np.pi * 0.05 * n)
>>> trend = reconstruct_trend(proj_ssa(x, 100, q=1, p=1))
>>> bool(np.max(np.abs(trend - (n - 100))) < 1e-8)
True
"""

from .bench import ExperimentConfig, ExperimentResult, Method, Trend, load_config, run_experiment
from .decomposition import (
    Decomposition,
    Eigentriple,
    basic_ssa_decompose,
    contributions,
    svd_expand,
)
from .errors import SSAError
from .projection import (
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
from .reconstruction import Grouping, augment_trend_group, reconstruct, reconstruct_trend
from .regression import PolyFit, evaluate, polyfit, refit
from .series import as_series, embed, hankelize, rmse
from .signals import (
    Root,
    RootSpec,
    apply_lrr,
    empirical_lrank,
    gaussian_noise,
    generate,
)

__version__ = "0.1.0"
