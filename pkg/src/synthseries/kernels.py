"""Resampling kernels: probability mass over neighbor ranks 1..k."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError


@dataclass(frozen=True)
class ResamplingKernel:
    """Probabilities over ranks j = 1..k (index 0 is the nearest neighbor)."""

    probabilities: np.ndarray
    name: str = "custom"

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=float)
        if p.ndim != 1 or p.size < 1 or np.any(p < 0):
            raise ConfigError("kernel probabilities must be a non-negative 1-D vector")
        if abs(p.sum() - 1.0) > 1e-12:
            raise ConfigError(f"kernel probabilities sum to {p.sum()!r}, not 1")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "probabilities", p)

    @property
    def k(self) -> int:
        return int(self.probabilities.size)


def harmonic_kernel(k: int) -> ResamplingKernel:
    """Mass (1/j) / H_k on rank j, H_k the k-th harmonic number."""
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    j = np.arange(1, k + 1, dtype=float)
    w = 1.0 / j
    return ResamplingKernel(w / w.sum(), name="harmonic")


def uniform_kernel(k: int) -> ResamplingKernel:
    """Equal mass 1/k on every rank."""
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    return ResamplingKernel(np.full(k, 1.0 / k), name="uniform")


def make_kernel(name: str, k: int) -> ResamplingKernel:
    if name == "harmonic":
        return harmonic_kernel(k)
    if name == "uniform":
        return uniform_kernel(k)
    raise ConfigError(f"unknown kernel {name!r} (choose harmonic or uniform)")
