"""Ensembles of synthetic series with full reproducibility provenance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .errors import ConfigError, IOErrorSS
from .series import HourlySeries, load_csv, write_csv

MANIFEST_NAME = "manifest.json"


def child_seed(master_seed: int, series_index: int) -> int:
    """Deterministic per-series seed.

    Mixing function: ``SeedSequence([master_seed, series_index])`` from
    numpy, reduced to a single 128-bit state word. Fixed for the life of
    the file format; two runs with equal master seeds derive identical
    children regardless of generation order or thread count.
    """
    ss = np.random.SeedSequence([int(master_seed), int(series_index)])
    return int(ss.generate_state(2, dtype=np.uint64).view(np.void).tobytes().hex(), 16)


def child_rng(master_seed: int, series_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(master_seed), int(series_index)]))


@dataclass(frozen=True)
class Ensemble:
    """B synthetic series plus the provenance needed to regenerate them."""

    series: tuple[HourlySeries, ...]
    method: str
    config: dict[str, Any]
    master_seed: int
    source_checksum: str
    child_seeds: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.series) < 1:
            raise ConfigError("ensemble must contain at least one series")

    def __len__(self) -> int:
        return len(self.series)

    def means(self) -> np.ndarray:
        return np.array([s.values.mean() for s in self.series])

    def save(self, directory: str | Path) -> Path:
        """Write one CSV per series plus a JSON manifest."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        width = max(4, len(str(len(self.series) - 1)))
        names = []
        for b, s in enumerate(self.series):
            name = f"series_{b:0{width}d}.csv"
            write_csv(s, directory / name)
            names.append(name)
        manifest = {
            "method": self.method,
            "config": self.config,
            "master_seed": self.master_seed,
            "source_checksum": self.source_checksum,
            "child_seeds": [str(c) for c in self.child_seeds],
            "series_files": names,
            "series_checksums": [s.checksum() for s in self.series],
        }
        (directory / MANIFEST_NAME).write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return directory

    @classmethod
    def load(cls, directory: str | Path) -> "Ensemble":
        directory = Path(directory)
        manifest_path = directory / MANIFEST_NAME
        if not manifest_path.exists():
            raise IOErrorSS(f"no {MANIFEST_NAME} in {directory}")
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        series = tuple(load_csv(directory / name) for name in manifest["series_files"])
        return cls(
            series=series,
            method=manifest["method"],
            config=manifest["config"],
            master_seed=int(manifest["master_seed"]),
            source_checksum=manifest["source_checksum"],
            child_seeds=tuple(int(c) for c in manifest.get("child_seeds", [])),
        )


def run_batch(
    generate_one,
    source: HourlySeries,
    method: str,
    config: dict[str, Any],
    B: int,
    master_seed: int,
    threads: int = 1,
) -> Ensemble:
    """Generate B series, each from its own child seed.

    ``generate_one(rng) -> np.ndarray`` must depend only on the supplied
    RNG, so results are independent of execution order and thread count.
    """
    if B < 1:
        raise ConfigError(f"B must be >= 1, got {B}")

    def one(b: int) -> HourlySeries:
        rng = child_rng(master_seed, b)
        return HourlySeries(generate_one(rng), label=f"{source.label}_{method}_{b}")

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            series: Sequence[HourlySeries] = list(pool.map(one, range(B)))
    else:
        series = [one(b) for b in range(B)]
    return Ensemble(
        series=tuple(series),
        method=method,
        config=config,
        master_seed=master_seed,
        source_checksum=source.checksum(),
        child_seeds=tuple(child_seed(master_seed, b) for b in range(B)),
    )
