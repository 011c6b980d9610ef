"""Independent oracles shared by the tests."""

import numpy as np

# PASS/FAIL lines from the acceptance gate, echoed in the terminal summary
ACCEPTANCE_REPORT = []


def trajectory_bruteforce(x, L):
    """Trajectory matrix built entry by entry, independent of ``embed``."""
    K = len(x) - L + 1
    return np.array([[x[i + j] for j in range(K)] for i in range(L)], dtype=float)


def hankelize_bruteforce(a):
    rows, cols = a.shape
    sums, counts = {}, {}
    for i in range(rows):
        for j in range(cols):
            sums[i + j] = sums.get(i + j, 0.0) + a[i, j]
            counts[i + j] = counts.get(i + j, 0) + 1
    return np.array([sums[k] / counts[k] for k in range(rows + cols - 1)])


def rel_fro(a, b):
    return np.linalg.norm(a - b) / max(np.linalg.norm(b), 1e-300)


