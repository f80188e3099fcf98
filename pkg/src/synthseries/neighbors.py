"""Exact k-nearest-row search over a feature matrix.

Shared by the lag-vector and window resamplers. Distances are Euclidean,
computed blockwise so an 8760-row year never materializes the full n x n
matrix at once. Ties are broken by ascending row index (stable sort),
which keeps pool construction deterministic.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from .errors import ConfigError

_BLOCK_ROWS = 512


def nearest_rows(
    matrix: np.ndarray,
    k: int,
    include_self: bool,
    *,
    too_large: type[ConfigError] = ConfigError,
) -> tuple[np.ndarray, np.ndarray]:
    """Per row, the k nearest rows of ``matrix`` and their distances.

    Returns ``(indices, distances)``, both shaped (n, k), each row sorted by
    non-decreasing distance with ties broken by smaller row index. When
    ``include_self`` the first entry of row i is i itself at distance 0.
    """
    m = np.asarray(matrix, dtype=float)
    n = m.shape[0]
    limit = n if include_self else n - 1
    if k < 1 or k > limit:
        raise too_large(f"k={k} out of range [1, {limit}] for {n} rows (include_self={include_self})")

    indices = np.empty((n, k), dtype=np.intp)
    distances = np.empty((n, k), dtype=float)
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        d = cdist(m[start:stop], m)
        rows = np.arange(start, stop)
        # exact self-distance is 0 by construction; pin it so include_self
        # ordering does not depend on floating-point noise
        d[np.arange(stop - start), rows] = 0.0 if include_self else np.inf
        order = np.argsort(d, axis=1, kind="stable")[:, :k]
        indices[start:stop] = order
        distances[start:stop] = np.take_along_axis(d, order, axis=1)
    if include_self:
        # guarantee the self row leads its own list even among exact duplicates
        for i in range(n):
            if indices[i, 0] != i:
                pos = np.nonzero(indices[i] == i)[0]
                # if self was tied out of the list entirely (k exact
                # duplicates with smaller indices), displace the last one
                j = int(pos[0]) if pos.size else k - 1
                indices[i, 1 : j + 1] = indices[i, 0:j]
                indices[i, 0] = i
                distances[i, 1 : j + 1] = distances[i, 0:j]
                distances[i, 0] = 0.0
    return indices, distances
