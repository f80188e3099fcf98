"""Symmetric block bootstrap.

Each point i carries a window of 1+2*sash observations centered on it
(circular at both ends). A pool of the p most similar windows is kept per
point; generation draws one pool member per point, uniformly by default,
and emits its focal (center) value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .ensemble import Ensemble, run_batch
from .errors import InvalidSash, PTooLarge
from .kernels import ResamplingKernel, uniform_kernel
from .neighbors import nearest_rows
from .series import HourlySeries


@dataclass(frozen=True)
class WindowMatrix:
    """Row i is the symmetric window around point i; center column = source[i]."""

    windows: np.ndarray  # (n, 1 + 2*sash)
    sash: int

    @property
    def width(self) -> int:
        return int(self.windows.shape[1])


@dataclass(frozen=True)
class WindowPools:
    """Per point, the p window indices nearest its own window."""

    indices: np.ndarray  # (n, p) intp
    distances: np.ndarray
    include_self: bool

    @property
    def p(self) -> int:
        return int(self.indices.shape[1])


def build_windows(source: HourlySeries, sash: int) -> WindowMatrix:
    n = len(source)
    if sash < 1 or 1 + 2 * sash > n:
        raise InvalidSash(f"sash {sash} invalid: need 1 <= sash and 1+2*sash <= {n}")
    vals = source.values
    offsets = (np.arange(n)[:, None] + np.arange(-sash, sash + 1)[None, :]) % n
    return WindowMatrix(vals[offsets], sash)


def find_window_pools(windows: WindowMatrix, p: int, include_self: bool = True) -> WindowPools:
    idx, dist = nearest_rows(windows.windows, p, include_self, too_large=PTooLarge)
    return WindowPools(idx, dist, include_self)


def _sample(source: HourlySeries, pools: WindowPools, kernel: ResamplingKernel, rng: np.random.Generator) -> np.ndarray:
    n = len(source)
    ranks = rng.choice(pools.p, size=n, p=kernel.probabilities)
    return source.values[pools.indices[np.arange(n), ranks]]


def generate_sbb(
    source: HourlySeries,
    sash: int,
    p: int,
    include_self: bool = True,
    seed: int = 0,
    kernel: ResamplingKernel | None = None,
    pools: WindowPools | None = None,
) -> HourlySeries:
    """One synthetic series; uniform pool selection unless a kernel is given."""
    kernel = kernel or uniform_kernel(p)
    if pools is None:
        pools = find_window_pools(build_windows(source, sash), p, include_self)
    rng = np.random.default_rng(seed)
    return HourlySeries(_sample(source, pools, kernel, rng), label=f"{source.label}_sbb")


def generate_sbb_batch(
    source: HourlySeries,
    sash: int,
    p: int,
    B: int,
    master_seed: int,
    include_self: bool = True,
    kernel: ResamplingKernel | None = None,
    threads: int = 1,
) -> Ensemble:
    """B independent series; same child-seed scheme as the NNLB batch."""
    kernel = kernel or uniform_kernel(p)
    pools = find_window_pools(build_windows(source, sash), p, include_self)
    config: dict[str, Any] = {
        "sash": sash,
        "p": p,
        "kernel": kernel.name,
        "include_self": include_self,
        "B": B,
    }
    return run_batch(
        lambda rng: _sample(source, pools, kernel, rng),
        source,
        "sbb",
        config,
        B,
        master_seed,
        threads=threads,
    )
